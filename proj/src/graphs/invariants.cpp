#include "cellres/graphs/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "cellres/error.hpp"
#include "cellres/graphs/hermite.hpp"

namespace cellres::graphs {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

IntPolynomial2 y_power(std::size_t e) { return IntPolynomial2::monomial(1, 0, static_cast<int>(e)); }

// Vertex v merged into u and removed; higher vertices shift down by one.
Multigraph merge_vertices(const Multigraph& g, std::size_t u, std::size_t v) {
  auto relabel = [&](std::size_t w) {
    if (w == v) w = u;
    return w > v ? w - 1 : w;
  };
  Multigraph out;
  out.vertices = g.vertices - 1;
  for (const auto& [a, b] : g.edges) out.add_edge(relabel(a), relabel(b));
  return out;
}

bool joined(const Multigraph& g, std::size_t u, std::size_t v) {
  std::vector<std::vector<std::size_t>> adj(g.vertices);
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(g.vertices, false);
  std::vector<std::size_t> stack{u};
  seen[u] = true;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    if (x == v) return true;
    for (auto y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  return false;
}

// Simple underlying graph as adjacency bitmasks.
std::vector<std::uint32_t> adjacency_masks(const Multigraph& g) {
  std::vector<std::uint32_t> adj(g.vertices, 0);
  for (const auto& [u, v] : g.edges) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  return adj;
}

void require_connected(const Multigraph& g) {
  if (!is_connected(g)) throw Disconnected();
}

std::optional<std::size_t> complete_order(const Multigraph& g) {
  if (!is_simple(g)) return std::nullopt;
  if (g.edges.size() != g.vertices * (g.vertices - 1) / 2) return std::nullopt;
  return g.vertices;
}

std::optional<std::pair<std::size_t, std::size_t>> bipartite_parts(const Multigraph& g) {
  if (!is_simple(g) || !is_connected(g) || g.vertices < 2) return std::nullopt;
  std::vector<int> side(g.vertices, -1);
  std::vector<std::vector<std::size_t>> adj(g.vertices);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  side[0] = 0;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (auto y : adj[x]) {
      if (side[y] == -1) {
        side[y] = 1 - side[x];
        stack.push_back(y);
      } else if (side[y] == side[x]) {
        return std::nullopt;
      }
    }
  }
  const auto m = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
  const std::size_t n = g.vertices - m;
  if (g.edges.size() != m * n) return std::nullopt;
  return std::make_pair(m, n);
}

}  // namespace

std::vector<std::uint32_t> graph_key(const Multigraph& g) {
  std::vector<std::size_t> degree(g.vertices, 0);
  for (const auto& [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  std::vector<std::size_t> compact(g.vertices, g.vertices);
  std::size_t active = 0;
  for (std::size_t v = 0; v < g.vertices; ++v)
    if (degree[v] > 0) compact[v] = active++;
  std::vector<std::vector<std::size_t>> adj(active);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges) {
    edges.emplace_back(compact[u], compact[v]);
    adj[compact[u]].push_back(compact[v]);
    adj[compact[v]].push_back(compact[u]);
  }

  std::vector<std::size_t> color(active);
  for (std::size_t v = 0; v < active; ++v) color[v] = adj[v].size();
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<std::size_t>> signature(active);
    for (std::size_t v = 0; v < active; ++v) {
      signature[v].push_back(color[v]);
      std::vector<std::size_t> around;
      for (auto w : adj[v]) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    auto distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < active; ++v)
      color[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                                          distinct.begin());
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }

  std::vector<std::size_t> order(active);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return color[a] < color[b]; });
  std::vector<std::size_t> position(active);
  for (std::size_t i = 0; i < active; ++i) position[order[i]] = i;
  for (auto& [u, v] : edges) {
    u = position[u];
    v = position[v];
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::uint32_t> key{static_cast<std::uint32_t>(active)};
  for (const auto& [u, v] : edges) {
    key.push_back(static_cast<std::uint32_t>(u));
    key.push_back(static_cast<std::uint32_t>(v));
  }
  return key;
}

IntPolynomial2 TutteCalculator::operator()(const Multigraph& g) {
  const auto loops = static_cast<std::size_t>(
      std::count_if(g.edges.begin(), g.edges.end(), [](const Edge& e) { return e.first == e.second; }));
  return y_power(loops) * loopless(without_loops(g));
}

IntPolynomial2 TutteCalculator::loopless(const Multigraph& g) {
  if (g.edges.empty()) return 1;
  auto key = graph_key(g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const auto [u, v] = g.edges.front();
  Multigraph rest;
  rest.vertices = g.vertices;
  std::size_t multiplicity = 0;
  for (const auto& [a, b] : g.edges) {
    if ((a == u && b == v) || (a == v && b == u)) {
      ++multiplicity;
    } else {
      rest.add_edge(a, b);
    }
  }
  IntPolynomial2 parallel_part;  // 1 + y + ... + y^{k-1}
  for (std::size_t j = 0; j < multiplicity; ++j) parallel_part += y_power(j);
  const IntPolynomial2 contracted = loopless(merge_vertices(rest, std::min(u, v), std::max(u, v)));

  IntPolynomial2 result;
  if (joined(rest, u, v)) {
    result = loopless(rest) + parallel_part * contracted;
  } else {
    result = (parallel_part - 1 + IntPolynomial2::x()) * contracted;
  }
  memo_.emplace(std::move(key), result);
  return result;
}

IntPolynomial2 tutte(const Multigraph& g) { return TutteCalculator{}(g); }

BigInt count_rooted_acyclic_orientations(const Multigraph& g, std::size_t source) {
  if (g.vertices > 32 || source >= g.vertices) throw InvalidArgument("orientation count needs at most 32 vertices");
  if (has_loops(g)) return 0;
  std::vector<Edge> simple;
  const auto adj = adjacency_masks(g);
  for (std::size_t u = 0; u < g.vertices; ++u)
    for (std::size_t v = u + 1; v < g.vertices; ++v)
      if ((adj[u] >> v) & 1U) simple.emplace_back(u, v);
  if (simple.size() > 30) throw InvalidArgument("orientation count supports at most 30 distinct edges");

  const std::size_t d = g.vertices;
  const std::uint32_t all = d == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << d) - 1;
  std::uint64_t count = 0;
  std::vector<std::uint32_t> incoming(d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << simple.size()); ++mask) {
    std::fill(incoming.begin(), incoming.end(), 0);
    for (std::size_t e = 0; e < simple.size(); ++e) {
      const auto [a, b] = simple[e];
      if ((mask >> e) & 1U) {
        incoming[a] |= std::uint32_t{1} << b;
      } else {
        incoming[b] |= std::uint32_t{1} << a;
      }
    }
    bool ok = incoming[source] == 0;
    for (std::size_t v = 0; v < d && ok; ++v)
      if (v != source && incoming[v] == 0) ok = false;
    if (!ok) continue;
    // Peel off vertices with no incoming edge from the remaining ones.
    std::uint32_t remaining = all;
    bool progress = true;
    while (remaining != 0 && progress) {
      progress = false;
      for (std::size_t v = 0; v < d; ++v) {
        if (((remaining >> v) & 1U) && (incoming[v] & remaining) == 0) {
          remaining &= ~(std::uint32_t{1} << v);
          progress = true;
        }
      }
    }
    if (remaining == 0) ++count;
  }
  return BigInt(static_cast<unsigned long>(count));
}

BigInt count_order_classes(const Multigraph& g) {
  if (g.vertices > 8) throw InvalidArgument("order classes support at most 8 vertices");
  if (has_loops(g)) return 0;
  const std::size_t d = g.vertices;
  const auto adj = adjacency_masks(g);
  auto encode = [](const std::vector<std::uint8_t>& p) {
    std::uint32_t code = 0;
    for (auto x : p) code = code * 8 + x;
    return code;
  };
  std::vector<std::uint8_t> perm(d);
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  std::unordered_map<std::uint32_t, std::size_t> index;
  std::vector<std::vector<std::uint8_t>> perms;
  do {
    index.emplace(encode(perm), perms.size());
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::size_t> parent(perms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, const std::vector<std::uint8_t>& q) {
    parent[find(a)] = find(index.at(encode(q)));
  };
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const auto& p = perms[i];
    for (std::size_t j = 0; j + 1 < d; ++j) {
      if ((adj[p[j]] >> p[j + 1]) & 1U) continue;
      auto q = p;
      std::swap(q[j], q[j + 1]);
      unite(i, q);
    }
    auto shifted = p;
    std::rotate(shifted.begin(), shifted.begin() + 1, shifted.end());
    unite(i, shifted);
  }
  std::size_t classes = 0;
  for (std::size_t i = 0; i < perms.size(); ++i) classes += find(i) == i;
  return BigInt(static_cast<unsigned long>(classes));
}

BigInt mu(const Multigraph& g, MuMethod method) {
  require_connected(g);
  switch (method) {
    case MuMethod::Tutte:
      return tutte(g).evaluate(1, 0);
    case MuMethod::Orientations:
      return count_rooted_acyclic_orientations(g, 0);
    case MuMethod::OrderClasses:
      return count_order_classes(g);
  }
  throw InvalidArgument("unknown method");
}

namespace {

// Signed forest count: sum over acyclic edge subsets F of (-1)^{d-|F|-1}.
BigInt forest_sum(const Multigraph& g) {
  const std::size_t d = g.vertices;
  std::vector<Edge> edges;
  for (const auto& e : g.edges)
    if (e.first != e.second) edges.push_back(e);
  std::vector<std::size_t> comp(d);
  std::iota(comp.begin(), comp.end(), 0);
  long long total = 0;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t next, std::size_t size) {
    total += ((d - size - 1) % 2 == 0) ? 1 : -1;
    for (std::size_t e = next; e < edges.size(); ++e) {
      const auto a = comp[edges[e].first];
      const auto b = comp[edges[e].second];
      if (a == b) continue;
      const auto saved = comp;
      for (auto& c : comp)
        if (c == b) c = a;
      walk(e + 1, size + 1);
      comp = saved;
    }
  };
  walk(0, 0);
  return BigInt(static_cast<long>(total));
}

}  // namespace

BigInt mu_perp(const Multigraph& g, MuPerpMethod method) {
  require_connected(g);
  switch (method) {
    case MuPerpMethod::Tutte:
      return tutte(g).evaluate(0, 1);
    case MuPerpMethod::Forests:
      return forest_sum(g);
    case MuPerpMethod::ClosedForm:
      if (auto m = complete_order(g)) {
        if (*m == 1) return 1;
        return mu_perp_complete(static_cast<int>(*m));
      }
      if (auto parts = bipartite_parts(g)) {
        return mu_perp_bipartite(static_cast<int>(parts->first), static_cast<int>(parts->second));
      }
      throw InvalidArgument("no closed form is known for this graph");
  }
  throw InvalidArgument("unknown method");
}

}  // namespace cellres::graphs
