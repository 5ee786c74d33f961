#ifndef CELLRES_CORE_MATROID_HPP
#define CELLRES_CORE_MATROID_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "cellres/core/matrix.hpp"

namespace cellres::core {

/// Subsets of a ground set of at most 64 elements.
using ElementSet = std::uint64_t;

inline ElementSet singleton(std::size_t e) { return ElementSet{1} << e; }
inline bool contains(ElementSet s, std::size_t e) { return ((s >> e) & 1U) != 0; }
inline std::size_t cardinality(ElementSet s) { return static_cast<std::size_t>(std::popcount(s)); }
inline ElementSet full_set(std::size_t n) { return n >= 64 ? ~ElementSet{0} : singleton(n) - 1; }
std::vector<std::size_t> elements(ElementSet s);
ElementSet to_set(const std::vector<std::size_t>& elems);

/// Calls fn on every k-subset of {0..n-1}, as an increasing index list.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn);

/// The linear matroid of a list of rational vectors (the rows of a matrix).
/// Ranks are cached per subset; the cache makes instances unsuitable for
/// sharing across threads.
class RowMatroid {
 public:
  explicit RowMatroid(RationalMatrix rows);

  std::size_t size() const { return rows_.rows(); }
  std::size_t dimension() const { return rows_.cols(); }
  const RationalMatrix& rows() const { return rows_; }

  std::size_t rank(ElementSet s) const;
  std::size_t rank() const { return rank(full_set(size())); }
  ElementSet closure(ElementSet s) const;
  bool is_flat(ElementSet s) const { return closure(s) == s; }
  bool is_independent(ElementSet s) const { return rank(s) == cardinality(s); }

  /// All bases, in lexicographic order of their sorted index lists.
  std::vector<ElementSet> bases() const;

 private:
  RationalMatrix rows_;
  mutable std::unordered_map<ElementSet, std::size_t> cache_;
};

}  // namespace cellres::core

#endif  // CELLRES_CORE_MATROID_HPP
