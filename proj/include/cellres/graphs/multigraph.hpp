#ifndef CELLRES_GRAPHS_MULTIGRAPH_HPP
#define CELLRES_GRAPHS_MULTIGRAPH_HPP

#include <cstddef>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "cellres/core/matroid.hpp"

namespace cellres::graphs {

/// An undirected graph on vertices 0..vertices-1 with loops and parallel
/// edges.  Edge e joins edges[e].first and edges[e].second; the pair order
/// is the orientation used wherever one is needed.
struct Multigraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Optional display labels, one per edge ("11", "12", ... for K_{m,n}).
  std::vector<std::string> edge_labels;

  std::size_t edge_count() const { return edges.size(); }
  void add_edge(std::size_t u, std::size_t v) { edges.emplace_back(u, v); }
};

/// Reads "p <d>" followed by "e u v" lines (1-based).  Throws ParseError.
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph_string(const std::string& text);
Multigraph read_graph_file(const std::string& path);
/// "Km:5", "Kmn:3,3" or "Cn:6".  Throws ParseError.
Multigraph parse_family(const std::string& family);

Multigraph complete_graph(std::size_t m);
/// Parts {0..m-1} and {m..m+n-1}; edges ordered (i, j) row by row.
Multigraph complete_bipartite(std::size_t m, std::size_t n);
Multigraph cycle_graph(std::size_t n);
Multigraph path_graph(std::size_t n);
/// K_n plus a root joined to every other vertex by k parallel edges.
Multigraph rooted_complete(std::size_t n, std::size_t k);
/// K_{m,n} plus a vertex joined by k edges to each vertex of the first part
/// and by l edges to each vertex of the second part.
Multigraph rooted_bipartite(std::size_t m, std::size_t n, std::size_t k, std::size_t l);

bool is_connected(const Multigraph& g);
bool has_loops(const Multigraph& g);
/// No loops and no parallel edges.
bool is_simple(const Multigraph& g);
/// Edges whose removal disconnects their endpoints.
std::vector<std::size_t> isthmuses(const Multigraph& g);
/// Whether the edge subset `s` (bitmask over edge indices) has no isthmus
/// within the subgraph it spans.
bool is_isthmus_free(const Multigraph& g, core::ElementSet s);

/// Identifies the endpoints of every edge in `s`; those edges disappear,
/// other edges between identified vertices become loops.  Vertices are
/// renumbered in increasing order of their smallest original member.
Multigraph contract(const Multigraph& g, core::ElementSet s);
Multigraph delete_edges(const Multigraph& g, core::ElementSet s);
Multigraph without_loops(const Multigraph& g);

/// All connected simple graphs on d vertices up to isomorphism, as edge
/// lists; d <= 6.
std::vector<Multigraph> connected_simple_graphs(std::size_t d);

}  // namespace cellres::graphs

#endif  // CELLRES_GRAPHS_MULTIGRAPH_HPP
