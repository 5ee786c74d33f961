#include "cellres/core/matroid.hpp"

namespace cellres::core {

std::vector<std::size_t> elements(ElementSet s) {
  std::vector<std::size_t> out;
  out.reserve(cardinality(s));
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

ElementSet to_set(const std::vector<std::size_t>& elems) {
  ElementSet s = 0;
  for (auto e : elems) s |= singleton(e);
  return s;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RowMatroid::RowMatroid(RationalMatrix rows) : rows_(std::move(rows)) {}

std::size_t RowMatroid::rank(ElementSet s) const {
  if (s == 0) return 0;
  if (auto it = cache_.find(s); it != cache_.end()) return it->second;
  const auto idx = elements(s);
  const std::size_t r = core::rank(rows_.select_rows(idx));
  cache_.emplace(s, r);
  return r;
}

ElementSet RowMatroid::closure(ElementSet s) const {
  const std::size_t r = rank(s);
  ElementSet out = s;
  for (std::size_t e = 0; e < size(); ++e) {
    if (contains(s, e)) continue;
    if (rank(s | singleton(e)) == r) out |= singleton(e);
  }
  return out;
}

std::vector<ElementSet> RowMatroid::bases() const {
  std::vector<ElementSet> out;
  const std::size_t r = rank();
  for_each_combination(size(), r, [&](const std::vector<std::size_t>& idx) {
    const ElementSet s = to_set(idx);
    if (rank(s) == r) out.push_back(s);
  });
  return out;
}

}  // namespace cellres::core
