#include "cellres/graphs/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "cellres/core/text.hpp"
#include "cellres/error.hpp"

namespace cellres::graphs {

namespace {

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Component representative of every vertex, using only the edges in `s`.
std::vector<std::size_t> components(const Multigraph& g, core::ElementSet s) {
  std::vector<std::size_t> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!core::contains(s, e)) continue;
    parent[find(parent, g.edges[e].first)] = find(parent, g.edges[e].second);
  }
  for (std::size_t v = 0; v < g.vertices; ++v) find(parent, v);
  for (std::size_t v = 0; v < g.vertices; ++v) parent[v] = find(parent, v);
  return parent;
}

void require_edge_budget(const Multigraph& g) {
  if (g.edges.size() > 64) throw InvalidArgument("graphs with more than 64 edges are not supported");
}

std::size_t parse_size(const std::string& text, const std::string& family) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(0, "malformed graph family '" + family + "'");
  return std::stoul(text);
}

}  // namespace

Multigraph parse_graph(std::istream& in) {
  const auto lines = core::read_token_lines(in);
  if (lines.empty()) throw ParseError(0, "empty graph input");
  const auto& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0] != "p") {
    throw ParseError(header.number, "expected 'p <vertices>'");
  }
  const long d = core::parse_long(header.tokens[1], header.number);
  if (d < 1) throw ParseError(header.number, "vertex count must be positive");
  Multigraph g;
  g.vertices = static_cast<std::size_t>(d);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 3 || line.tokens[0] != "e") throw ParseError(line.number, "expected 'e <u> <v>'");
    const long u = core::parse_long(line.tokens[1], line.number);
    const long v = core::parse_long(line.tokens[2], line.number);
    if (u < 1 || v < 1 || u > d || v > d) throw ParseError(line.number, "vertex out of range");
    g.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  return g;
}

Multigraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_graph(in);
}

Multigraph parse_family(const std::string& family) {
  const auto colon = family.find(':');
  if (colon == std::string::npos) throw ParseError(0, "malformed graph family '" + family + "'");
  const std::string name = family.substr(0, colon);
  const std::string args = family.substr(colon + 1);
  if (name == "Km") return complete_graph(std::max<std::size_t>(1, parse_size(args, family)));
  if (name == "Cn") {
    const auto n = parse_size(args, family);
    if (n < 1) throw ParseError(0, "cycle length must be positive");
    return cycle_graph(n);
  }
  if (name == "Kmn") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw ParseError(0, "malformed graph family '" + family + "'");
    const auto m = parse_size(args.substr(0, comma), family);
    const auto n = parse_size(args.substr(comma + 1), family);
    if (m < 1 || n < 1) throw ParseError(0, "both parts must be nonempty");
    return complete_bipartite(m, n);
  }
  throw ParseError(0, "unknown graph family '" + name + "'");
}

Multigraph complete_graph(std::size_t m) {
  Multigraph g;
  g.vertices = m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) g.add_edge(i, j);
  return g;
}

Multigraph complete_bipartite(std::size_t m, std::size_t n) {
  Multigraph g;
  g.vertices = m + n;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g.add_edge(i, m + j);
      g.edge_labels.push_back(std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return g;
}

Multigraph cycle_graph(std::size_t n) {
  Multigraph g;
  g.vertices = n;
  if (n == 1) {
    g.add_edge(0, 0);
    return g;
  }
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph path_graph(std::size_t n) {
  Multigraph g;
  g.vertices = n;
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph rooted_complete(std::size_t n, std::size_t k) {
  Multigraph g = complete_graph(n);
  g.vertices = n + 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < k; ++c) g.add_edge(i, n);
  return g;
}

Multigraph rooted_bipartite(std::size_t m, std::size_t n, std::size_t k, std::size_t l) {
  Multigraph g = complete_bipartite(m, n);
  g.edge_labels.clear();
  const std::size_t root = m + n;
  g.vertices = root + 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < k; ++c) g.add_edge(i, root);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < l; ++c) g.add_edge(m + j, root);
  return g;
}

bool is_connected(const Multigraph& g) {
  if (g.vertices == 0) return false;
  std::vector<std::vector<std::size_t>> adj(g.vertices);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(g.vertices, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (auto y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == g.vertices;
}

bool has_loops(const Multigraph& g) {
  return std::any_of(g.edges.begin(), g.edges.end(), [](const auto& e) { return e.first == e.second; });
}

bool is_simple(const Multigraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : g.edges) {
    if (u == v) return false;
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) return false;
  }
  return true;
}

std::vector<std::size_t> isthmuses(const Multigraph& g) {
  require_edge_budget(g);
  const core::ElementSet all = core::full_set(g.edges.size());
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    if (u == v) continue;
    const auto comp = components(g, all & ~core::singleton(e));
    if (comp[u] != comp[v]) out.push_back(e);
  }
  return out;
}

bool is_isthmus_free(const Multigraph& g, core::ElementSet s) {
  for (auto e : core::elements(s)) {
    const auto [u, v] = g.edges[e];
    if (u == v) continue;
    const auto comp = components(g, s & ~core::singleton(e));
    if (comp[u] != comp[v]) return false;
  }
  return true;
}

Multigraph contract(const Multigraph& g, core::ElementSet s) {
  require_edge_budget(g);
  const auto comp = components(g, s);
  std::vector<std::size_t> index(g.vertices, g.vertices);
  Multigraph out;
  for (std::size_t v = 0; v < g.vertices; ++v)
    if (index[comp[v]] == g.vertices) index[comp[v]] = out.vertices++;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (core::contains(s, e)) continue;
    out.add_edge(index[comp[g.edges[e].first]], index[comp[g.edges[e].second]]);
    if (!g.edge_labels.empty()) out.edge_labels.push_back(g.edge_labels[e]);
  }
  return out;
}

Multigraph delete_edges(const Multigraph& g, core::ElementSet s) {
  Multigraph out;
  out.vertices = g.vertices;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (e < 64 && core::contains(s, e)) continue;
    out.edges.push_back(g.edges[e]);
    if (!g.edge_labels.empty()) out.edge_labels.push_back(g.edge_labels[e]);
  }
  return out;
}

Multigraph without_loops(const Multigraph& g) {
  Multigraph out;
  out.vertices = g.vertices;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].first == g.edges[e].second) continue;
    out.edges.push_back(g.edges[e]);
    if (!g.edge_labels.empty()) out.edge_labels.push_back(g.edge_labels[e]);
  }
  return out;
}

std::vector<Multigraph> connected_simple_graphs(std::size_t d) {
  if (d == 0 || d > 6) throw InvalidArgument("graph enumeration supports 1 to 6 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<std::size_t>> pair_index(d, std::vector<std::size_t>(d));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    pair_index[pairs[p].first][pairs[p].second] = p;
    pair_index[pairs[p].second][pairs[p].first] = p;
  }

  std::set<std::uint32_t> seen;
  std::vector<Multigraph> out;
  const std::uint32_t total = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    Multigraph g;
    g.vertices = d;
    std::vector<std::size_t> degree(d, 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((mask >> p) & 1U) {
        g.add_edge(pairs[p].first, pairs[p].second);
        ++degree[pairs[p].first];
        ++degree[pairs[p].second];
      }
    }
    if (!is_connected(g)) continue;
    // Canonical code: smallest relabeled edge mask over relabelings that list
    // vertices by descending degree.
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return degree[a] > degree[b]; });
    std::uint32_t best = ~std::uint32_t{0};
    auto try_order = [&](const std::vector<std::size_t>& ord) {
      std::vector<std::size_t> position(d);
      for (std::size_t i = 0; i < d; ++i) position[ord[i]] = i;
      std::uint32_t code = 0;
      for (const auto& [u, v] : g.edges) code |= std::uint32_t{1} << pair_index[position[u]][position[v]];
      best = std::min(best, code);
    };
    // Permute within blocks of equal degree.
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < d;) {
      std::size_t j = i;
      while (j < d && degree[order[j]] == degree[order[i]]) ++j;
      blocks.emplace_back(i, j);
      i = j;
    }
    std::function<void(std::size_t)> permute = [&](std::size_t b) {
      if (b == blocks.size()) {
        try_order(order);
        return;
      }
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      std::sort(first, last);
      do {
        permute(b + 1);
      } while (std::next_permutation(first, last));
    };
    permute(0);
    if (seen.insert(best).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace cellres::graphs
