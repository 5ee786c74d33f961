#ifndef CELLRES_RESOLUTION_LATTICE_HPP
#define CELLRES_RESOLUTION_LATTICE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "cellres/core/matroid.hpp"
#include "cellres/core/polynomial.hpp"

namespace cellres::resolution {

using core::BigInt;
using core::ElementSet;

/// A finite poset with a unique bottom and top, stored as a dense order
/// relation plus cover lists.  Elements are 0..size()-1.
class FiniteLattice {
 public:
  /// `leq(a, b)` must be a partial order.  Throws NotGraded when there is no
  /// unique bottom or top.
  FiniteLattice(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq);

  /// Subsets ordered by inclusion, or by reverse inclusion when `reverse`.
  static FiniteLattice from_sets(std::vector<ElementSet> sets, bool reverse = false);

  std::size_t size() const { return size_; }
  bool leq(std::size_t a, std::size_t b) const { return (up_[a][b / 64] >> (b % 64)) & 1U; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_[x]; }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_[x]; }

  /// Every cover raises the rank by one and all maximal chains have the same
  /// length.
  bool is_graded() const { return graded_; }
  /// Length of a chain from the bottom; throws NotGraded for ungraded posets.
  std::size_t rank(std::size_t x) const;
  std::size_t rank() const { return rank(top_); }
  std::vector<std::size_t> atoms() const { return upper_[bottom_]; }
  /// Every element is the least upper bound of the atoms below it.
  bool is_atomic() const;

  /// The subsets this lattice was built from, if any.
  const std::vector<ElementSet>& sets() const { return sets_; }

  FiniteLattice dual() const;

 private:
  FiniteLattice() = default;
  void finish();

  std::size_t size_ = 0;
  std::vector<std::vector<std::uint64_t>> up_;  // up_[a] has bit b iff a <= b
  std::vector<std::vector<std::size_t>> upper_, lower_;
  std::vector<std::size_t> rank_;
  std::size_t bottom_ = 0, top_ = 0;
  bool graded_ = false;
  std::vector<ElementSet> sets_;
};

/// mu(a, b); throws NotComparable unless a <= b.
BigInt mobius(const FiniteLattice& l, std::size_t a, std::size_t b);
/// mu(x, top) for every element x.
std::vector<BigInt> mobius_to_top(const FiniteLattice& l);

/// beta_i = sum of |mu(F, top)| over elements of corank i, for i = 0..rank.
/// Throws NotGraded unless the lattice is graded and atomic.
std::vector<BigInt> stanley_betti(const FiniteLattice& l);
core::IntPolynomial1 cochar(const FiniteLattice& l);

/// Flats of a matroid ordered by inclusion; sets() holds the flats.
FiniteLattice flat_lattice(const core::RowMatroid& m);

}  // namespace cellres::resolution

#endif  // CELLRES_RESOLUTION_LATTICE_HPP
