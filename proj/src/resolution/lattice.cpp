#include "cellres/resolution/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cellres/error.hpp"

namespace cellres::resolution {

FiniteLattice::FiniteLattice(std::size_t size,
                             const std::function<bool(std::size_t, std::size_t)>& leq)
    : size_(size) {
  const std::size_t words = (size + 63) / 64;
  up_.assign(size, std::vector<std::uint64_t>(words, 0));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (a == b || leq(a, b)) up_[a][b / 64] |= std::uint64_t{1} << (b % 64);
  finish();
}

FiniteLattice FiniteLattice::from_sets(std::vector<ElementSet> sets, bool reverse) {
  FiniteLattice l(sets.size(), [&](std::size_t a, std::size_t b) {
    return reverse ? (sets[b] & ~sets[a]) == 0 : (sets[a] & ~sets[b]) == 0;
  });
  l.sets_ = std::move(sets);
  return l;
}

void FiniteLattice::finish() {
  if (size_ == 0) throw NotGraded("empty poset");
  std::vector<std::size_t> bottoms, tops;
  for (std::size_t x = 0; x < size_; ++x) {
    bool is_bottom = true, is_top = true;
    for (std::size_t y = 0; y < size_; ++y) {
      is_bottom = is_bottom && leq(x, y);
      is_top = is_top && leq(y, x);
    }
    if (is_bottom) bottoms.push_back(x);
    if (is_top) tops.push_back(x);
  }
  if (bottoms.size() != 1 || tops.size() != 1) throw NotGraded("poset lacks a unique bottom or top");
  bottom_ = bottoms.front();
  top_ = tops.front();

  const std::size_t words = up_.empty() ? 0 : up_.front().size();
  std::vector<std::vector<std::uint64_t>> down(size_, std::vector<std::uint64_t>(words, 0));
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b)
      if (leq(a, b)) down[b][a / 64] |= std::uint64_t{1} << (a % 64);

  upper_.assign(size_, {});
  lower_.assign(size_, {});
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (a == b || !leq(a, b)) continue;
      // a is covered by b when [a, b] contains nothing but a and b.
      std::size_t between = 0;
      for (std::size_t w = 0; w < words; ++w) between += std::popcount(up_[a][w] & down[b][w]);
      if (between == 2) {
        upper_[a].push_back(b);
        lower_[b].push_back(a);
      }
    }
  }

  rank_.assign(size_, 0);
  std::vector<bool> seen(size_, false);
  std::deque<std::size_t> queue{bottom_};
  seen[bottom_] = true;
  graded_ = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (auto y : upper_[x]) {
      if (!seen[y]) {
        seen[y] = true;
        rank_[y] = rank_[x] + 1;
        queue.push_back(y);
      }
    }
  }
  for (std::size_t x = 0; x < size_ && graded_; ++x)
    for (auto y : upper_[x])
      if (rank_[y] != rank_[x] + 1) graded_ = false;
}

std::size_t FiniteLattice::rank(std::size_t x) const {
  if (!graded_) throw NotGraded("poset is not graded");
  return rank_[x];
}

bool FiniteLattice::is_atomic() const {
  const auto at = atoms();
  for (std::size_t x = 0; x < size_; ++x) {
    if (x == bottom_) continue;
    std::vector<std::size_t> below;
    for (auto a : at)
      if (leq(a, x)) below.push_back(a);
    // x must be the unique minimal upper bound of the atoms below it.
    for (std::size_t y = 0; y < size_; ++y) {
      if (y == x) continue;
      const bool bound = std::all_of(below.begin(), below.end(), [&](auto a) { return leq(a, y); });
      if (bound && !leq(x, y)) return false;
    }
  }
  return true;
}

FiniteLattice FiniteLattice::dual() const {
  FiniteLattice d(size_, [&](std::size_t a, std::size_t b) { return leq(b, a); });
  d.sets_ = sets_;
  return d;
}

std::vector<BigInt> mobius_to_top(const FiniteLattice& l) {
  std::vector<std::size_t> order(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) order[i] = i;
  // Larger up-sets come first in a linear extension read from the top down.
  std::vector<std::size_t> above(l.size(), 0);
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = 0; y < l.size(); ++y) above[x] += l.leq(x, y);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return above[a] < above[b]; });
  std::vector<BigInt> mu(l.size(), 0);
  for (auto x : order) {
    if (x == l.top()) {
      mu[x] = 1;
      continue;
    }
    BigInt s = 0;
    for (std::size_t y = 0; y < l.size(); ++y)
      if (y != x && l.leq(x, y)) s += mu[y];
    mu[x] = -s;
  }
  return mu;
}

BigInt mobius(const FiniteLattice& l, std::size_t a, std::size_t b) {
  if (!l.leq(a, b)) throw NotComparable();
  std::vector<std::size_t> interval;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.leq(a, x) && l.leq(x, b)) interval.push_back(x);
  std::vector<std::size_t> below(l.size(), 0);
  for (auto x : interval)
    for (auto y : interval) below[x] += l.leq(y, x);
  std::sort(interval.begin(), interval.end(), [&](auto x, auto y) { return below[x] < below[y]; });
  std::vector<BigInt> mu(l.size(), 0);
  for (auto x : interval) {
    if (x == a) {
      mu[x] = 1;
      continue;
    }
    BigInt s = 0;
    for (auto y : interval)
      if (y != x && l.leq(y, x)) s += mu[y];
    mu[x] = -s;
  }
  return mu[b];
}

std::vector<BigInt> stanley_betti(const FiniteLattice& l) {
  if (!l.is_graded()) throw NotGraded("lattice is not graded");
  if (!l.is_atomic()) throw NotGraded("lattice is not atomic");
  const std::size_t r = l.rank();
  const auto mu = mobius_to_top(l);
  std::vector<BigInt> beta(r + 1, 0);
  for (std::size_t x = 0; x < l.size(); ++x) beta[r - l.rank(x)] += abs(mu[x]);
  return beta;
}

core::IntPolynomial1 cochar(const FiniteLattice& l) { return core::IntPolynomial1(stanley_betti(l)); }

FiniteLattice flat_lattice(const core::RowMatroid& m) {
  std::set<ElementSet> flats;
  std::deque<ElementSet> queue{m.closure(0)};
  flats.insert(queue.front());
  while (!queue.empty()) {
    const ElementSet f = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (core::contains(f, e)) continue;
      const ElementSet g = m.closure(f | core::singleton(e));
      if (flats.insert(g).second) queue.push_back(g);
    }
  }
  std::vector<ElementSet> sorted(flats.begin(), flats.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](ElementSet a, ElementSet b) {
    return m.rank(a) < m.rank(b);
  });
  return FiniteLattice::from_sets(std::move(sorted));
}

}  // namespace cellres::resolution
