#ifndef CELLRES_GRAPHS_ARRANGEMENTS_HPP
#define CELLRES_GRAPHS_ARRANGEMENTS_HPP

#include <vector>

#include "cellres/arrangement/arrangement.hpp"
#include "cellres/core/polynomial.hpp"
#include "cellres/graphs/multigraph.hpp"
#include "cellres/resolution/lattice.hpp"

namespace cellres::graphs {

/// Rows e_u - e_v for each edge (u, v), in the coordinates of R^{d-1}
/// obtained by setting e_{d} = 0 (vertex d is the last vertex).  Throws
/// Disconnected.
core::RationalMatrix graphic_matrix(const Multigraph& g);

/// Row e lists the coordinates of edge e in the fundamental-cycle basis of
/// a breadth-first spanning tree from vertex 1 (one column per non-tree
/// edge, in edge order).  Throws Disconnected and HasIsthmus.
core::RationalMatrix cographic_matrix(const Multigraph& g);

/// Central arrangements with all offsets zero.  graphic_arrangement also
/// rejects loops (zero normals) with InvalidArgument.
arrangement::Arrangement graphic_arrangement(const Multigraph& g);
arrangement::Arrangement cographic_arrangement(const Multigraph& g);

/// Partitions of the vertex set whose blocks induce connected subgraphs,
/// each as a block index per vertex.  Blocks are numbered by first vertex.
std::vector<std::vector<std::size_t>> connected_partitions(const Multigraph& g);

/// Sum of mu(G / pi) q^{|pi| - 1} over connected partitions pi.  Throws
/// Disconnected, and InvalidArgument for graphs that are not simple.
core::IntPolynomial1 cochar_graphic(const Multigraph& g);

/// Deletion and cycle-contraction recursion through one edge; each loop
/// contributes a factor 1 + q and isthmuses are dropped.
core::IntPolynomial1 cochar_cographic(const Multigraph& g);

/// Isthmus-free edge subsets ordered by reverse inclusion; sets() holds the
/// subsets.  At most 24 edges.
resolution::FiniteLattice isthmus_free_lattice(const Multigraph& g);

}  // namespace cellres::graphs

#endif  // CELLRES_GRAPHS_ARRANGEMENTS_HPP
