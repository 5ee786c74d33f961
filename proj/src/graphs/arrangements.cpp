#include "cellres/graphs/arrangements.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "cellres/error.hpp"
#include "cellres/graphs/invariants.hpp"

namespace cellres::graphs {

using core::IntPolynomial1;
using core::RationalMatrix;

namespace {

arrangement::Arrangement central(const RationalMatrix& rows) {
  std::vector<arrangement::Hyperplane> hyperplanes;
  for (std::size_t i = 0; i < rows.rows(); ++i) hyperplanes.push_back({rows.row(i), 0});
  return arrangement::Arrangement(rows.cols(), std::move(hyperplanes));
}

}  // namespace

RationalMatrix graphic_matrix(const Multigraph& g) {
  if (!is_connected(g)) throw Disconnected();
  const std::size_t last = g.vertices - 1;
  RationalMatrix m(g.edges.size(), last);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    if (u != last) m(e, u) += 1;
    if (v != last) m(e, v) -= 1;
  }
  return m;
}

RationalMatrix cographic_matrix(const Multigraph& g) {
  if (!is_connected(g)) throw Disconnected();
  if (auto bridges = isthmuses(g); !bridges.empty()) throw HasIsthmus(bridges.front());

  // Breadth-first tree; parent_edge[v] is the tree edge into v.
  const std::size_t none = g.edges.size();
  std::vector<std::vector<std::size_t>> incident(g.vertices);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].first].push_back(e);
    if (g.edges[e].second != g.edges[e].first) incident[g.edges[e].second].push_back(e);
  }
  std::vector<std::size_t> parent_edge(g.vertices, none), depth(g.vertices, 0);
  std::vector<bool> seen(g.vertices, false), in_tree(g.edges.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto e : incident[x]) {
      const auto y = g.edges[e].first == x ? g.edges[e].second : g.edges[e].first;
      if (seen[y]) continue;
      seen[y] = true;
      parent_edge[y] = e;
      depth[y] = depth[x] + 1;
      in_tree[e] = true;
      queue.push_back(y);
    }
  }
  auto parent = [&](std::size_t v) {
    const auto e = parent_edge[v];
    return g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
  };

  std::vector<std::size_t> cotree;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (!in_tree[e]) cotree.push_back(e);
  RationalMatrix m(g.edges.size(), cotree.size());
  for (std::size_t c = 0; c < cotree.size(); ++c) {
    const auto f = cotree[c];
    m(f, c) = 1;
    // Walk back from the head of f to its tail along the tree.
    std::size_t a = g.edges[f].second;  // current end of the walk from the head
    std::size_t b = g.edges[f].first;   // tail, reached from the other side
    std::vector<std::pair<std::size_t, int>> from_head, from_tail;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        const auto e = parent_edge[a];
        // Traversed from a to its parent.
        from_head.emplace_back(e, g.edges[e].first == a ? 1 : -1);
        a = parent(a);
      } else {
        const auto e = parent_edge[b];
        // Traversed from parent(b) to b.
        from_tail.emplace_back(e, g.edges[e].second == b ? 1 : -1);
        b = parent(b);
      }
    }
    for (const auto& [e, s] : from_head) m(e, c) += s;
    for (const auto& [e, s] : from_tail) m(e, c) += s;
  }
  return m;
}

arrangement::Arrangement graphic_arrangement(const Multigraph& g) {
  if (has_loops(g)) throw InvalidArgument("loops have no graphic hyperplane");
  if (g.vertices < 2) throw InvalidArgument("the graphic arrangement needs at least two vertices");
  return central(graphic_matrix(g));
}

arrangement::Arrangement cographic_arrangement(const Multigraph& g) {
  const auto m = cographic_matrix(g);
  if (m.cols() == 0) throw InvalidArgument("the cographic arrangement of a forest is empty");
  return central(m);
}

std::vector<std::vector<std::size_t>> connected_partitions(const Multigraph& g) {
  const std::size_t d = g.vertices;
  if (d > 20) throw InvalidArgument("connected partitions support at most 20 vertices");
  std::vector<std::uint32_t> adj(d, 0);
  for (const auto& [u, v] : g.edges) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> block(d, d);

  // Grows connected blocks containing `seed` inside `available`: `chosen`
  // is the current block, `frontier` holds vertices that may still join and
  // `excluded` those rejected on this branch.
  std::function<void(std::uint32_t, std::size_t)> place;
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t, std::size_t)> grow =
      [&](std::uint32_t available, std::uint32_t chosen, std::uint32_t frontier, std::uint32_t excluded,
          std::size_t label) {
        if (frontier == 0) {
          for (std::size_t v = 0; v < d; ++v)
            if ((chosen >> v) & 1U) block[v] = label;
          place(available & ~chosen, label + 1);
          return;
        }
        const auto v = static_cast<std::size_t>(std::countr_zero(frontier));
        const std::uint32_t bit = std::uint32_t{1} << v;
        grow(available, chosen, frontier & ~bit, excluded | bit, label);
        const std::uint32_t added = chosen | bit;
        grow(available, added, (frontier | adj[v]) & available & ~added & ~excluded, excluded, label);
      };
  place = [&](std::uint32_t available, std::size_t label) {
    if (available == 0) {
      out.push_back(block);
      return;
    }
    const auto seed = static_cast<std::size_t>(std::countr_zero(available));
    const std::uint32_t bit = std::uint32_t{1} << seed;
    grow(available, bit, adj[seed] & available & ~bit, 0, label);
  };
  place(d == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << d) - 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

IntPolynomial1 cochar_graphic(const Multigraph& g) {
  if (!is_connected(g)) throw Disconnected();
  if (!is_simple(g)) throw InvalidArgument("cochar_graphic expects a simple graph");
  TutteCalculator tutte_of;
  IntPolynomial1 out;
  for (const auto& partition : connected_partitions(g)) {
    const std::size_t parts = *std::max_element(partition.begin(), partition.end()) + 1;
    Multigraph quotient;
    quotient.vertices = parts;
    for (const auto& [u, v] : g.edges)
      if (partition[u] != partition[v]) quotient.add_edge(partition[u], partition[v]);
    out += IntPolynomial1::monomial(tutte_of(quotient).evaluate(1, 0), static_cast<int>(parts - 1));
  }
  return out;
}

namespace {

class CographicRecursion {
 public:
  IntPolynomial1 operator()(const Multigraph& g) {
    IntPolynomial1 factor(1);
    const IntPolynomial1 one_plus_q = IntPolynomial1(1) + IntPolynomial1::variable();
    for (const auto& [u, v] : g.edges)
      if (u == v) factor = factor * one_plus_q;
    Multigraph core = without_loops(g);
    core::ElementSet bridges = 0;
    for (auto e : isthmuses(core)) bridges |= core::singleton(e);
    core = delete_edges(core, bridges);
    return factor * reduced(core);
  }

 private:
  // Loopless and isthmus-free input.
  IntPolynomial1 reduced(const Multigraph& g) {
    if (g.edges.empty()) return 1;
    auto key = graph_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const std::size_t e = 0;
    IntPolynomial1 result = (*this)(delete_edges(g, core::singleton(e)));
    IntPolynomial1 cycle_terms;
    for (auto cycle : cycles_through(g, e)) cycle_terms += (*this)(contract(g, cycle));
    result += IntPolynomial1::variable() * cycle_terms;
    memo_.emplace(std::move(key), result);
    return result;
  }

  // Edge sets of the cycles containing edge e: e plus a simple path from its
  // head back to its tail.
  static std::vector<core::ElementSet> cycles_through(const Multigraph& g, std::size_t e) {
    std::vector<std::vector<std::size_t>> incident(g.vertices);
    for (std::size_t f = 0; f < g.edges.size(); ++f) {
      if (f == e) continue;
      incident[g.edges[f].first].push_back(f);
      incident[g.edges[f].second].push_back(f);
    }
    const auto target = g.edges[e].first;
    std::vector<core::ElementSet> out;
    std::vector<bool> visited(g.vertices, false);
    std::function<void(std::size_t, core::ElementSet)> walk = [&](std::size_t x, core::ElementSet used) {
      if (x == target) {
        out.push_back(used | core::singleton(e));
        return;
      }
      visited[x] = true;
      for (auto f : incident[x]) {
        const auto y = g.edges[f].first == x ? g.edges[f].second : g.edges[f].first;
        if (!visited[y]) walk(y, used | core::singleton(f));
      }
      visited[x] = false;
    };
    walk(g.edges[e].second, 0);
    return out;
  }

  std::map<std::vector<std::uint32_t>, IntPolynomial1> memo_;
};

}  // namespace

IntPolynomial1 cochar_cographic(const Multigraph& g) {
  if (g.edges.size() > 64) throw InvalidArgument("graphs with more than 64 edges are not supported");
  return CographicRecursion{}(g);
}

resolution::FiniteLattice isthmus_free_lattice(const Multigraph& g) {
  if (g.edges.size() > 24) throw InvalidArgument("the isthmus-free lattice supports at most 24 edges");
  std::vector<core::ElementSet> sets;
  const core::ElementSet total = core::ElementSet{1} << g.edges.size();
  for (core::ElementSet s = 0; s < total; ++s)
    if (is_isthmus_free(g, s)) sets.push_back(s);
  std::stable_sort(sets.begin(), sets.end(), [](auto a, auto b) {
    return core::cardinality(a) > core::cardinality(b);
  });
  return resolution::FiniteLattice::from_sets(std::move(sets), true);
}

}  // namespace cellres::graphs
