#ifndef CELLRES_GRAPHS_INVARIANTS_HPP
#define CELLRES_GRAPHS_INVARIANTS_HPP

#include <map>
#include <string>
#include <vector>

#include "cellres/core/polynomial.hpp"
#include "cellres/graphs/multigraph.hpp"

namespace cellres::graphs {

using core::BigInt;
using core::IntPolynomial1;
using core::IntPolynomial2;

/// A relabeling-invariant-enough key for memo tables: vertices are ordered
/// by iterated degree refinement (ties by index) and the key lists the
/// relabeled edge multiset, so equal keys always mean isomorphic graphs.
/// Isolated vertices are dropped.
std::vector<std::uint32_t> graph_key(const Multigraph& g);

/// Deletion-contraction on parallel classes, memoized on graph_key.  One
/// instance can be reused across related graphs to share the memo.
class TutteCalculator {
 public:
  IntPolynomial2 operator()(const Multigraph& g);

 private:
  IntPolynomial2 loopless(const Multigraph& g);
  std::map<std::vector<std::uint32_t>, IntPolynomial2> memo_;
};

/// Tutte polynomial T_G(x, y).
IntPolynomial2 tutte(const Multigraph& g);

enum class MuMethod { Tutte, Orientations, OrderClasses };
enum class MuPerpMethod { Tutte, Forests, ClosedForm };

/// Moebius invariant.  Throws Disconnected; graphs with loops give 0.
BigInt mu(const Multigraph& g, MuMethod method);
/// Acyclic orientations in which every vertex is reachable from `source`.
BigInt count_rooted_acyclic_orientations(const Multigraph& g, std::size_t source);
/// Classes of vertex orderings under swaps of adjacent non-neighbours and
/// cyclic shifts.
BigInt count_order_classes(const Multigraph& g);

/// Moebius coinvariant.  Throws Disconnected.  ClosedForm applies to
/// complete and complete bipartite graphs only (InvalidArgument otherwise).
BigInt mu_perp(const Multigraph& g, MuPerpMethod method);

}  // namespace cellres::graphs

#endif  // CELLRES_GRAPHS_INVARIANTS_HPP
