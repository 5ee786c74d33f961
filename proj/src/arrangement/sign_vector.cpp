#include "cellres/arrangement/sign_vector.hpp"

namespace cellres::arrangement {

void SignVector::set(std::size_t e, int s) {
  const ElementSet bit = core::singleton(e);
  plus_ &= ~bit;
  minus_ &= ~bit;
  if (s > 0) plus_ |= bit;
  if (s < 0) minus_ |= bit;
}

SignVector SignVector::compose(const SignVector& other) const {
  const ElementSet free = ~support();
  return {size_, plus_ | (other.plus_ & free), minus_ | (other.minus_ & free)};
}

std::string SignVector::to_string(bool distinguished_last) const {
  std::string s;
  for (std::size_t e = 0; e < size_; ++e) {
    if (distinguished_last && e + 1 == size_ && size_ > 0) s += '|';
    const int v = (*this)[e];
    s += v > 0 ? '+' : (v < 0 ? '-' : '0');
  }
  return s;
}

bool lex_less(const SignVector& a, const SignVector& b) {
  const ElementSet diff = (a.plus() ^ b.plus()) | (a.minus() ^ b.minus());
  if (diff == 0) return a.size() < b.size();
  const std::size_t e = static_cast<std::size_t>(std::countr_zero(diff));
  auto rank = [e](const SignVector& v) {
    const int s = v[e];
    return s == 0 ? 0 : (s > 0 ? 1 : 2);
  };
  return rank(a) < rank(b);
}

}  // namespace cellres::arrangement
