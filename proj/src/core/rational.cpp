#include "cellres/core/rational.hpp"

#include <cctype>

namespace cellres::core {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_text(text)) return std::nullopt;
    return Rational(BigInt(strip_plus(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_text(num) || den.empty() || den[0] == '-' || den[0] == '+' ||
      !is_integer_text(den)) {
    return std::nullopt;
  }
  BigInt d(strip_plus(den));
  if (d == 0) return std::nullopt;
  Rational r(BigInt(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

int sign(const Rational& r) { return sgn(r); }

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<BigInt> primitive_integer_vector(const RationalVector& v) {
  BigInt lcm_den = 1;
  for (const auto& x : v) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    lcm_den = l;
  }
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt z = x.get_num() * (lcm_den / x.get_den());
    BigInt ng;
    mpz_gcd(ng.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    g = ng;
    out.push_back(z);
  }
  if (g != 0 && g != 1) {
    for (auto& z : out) z /= g;
  }
  return out;
}

std::optional<std::uint64_t> reduce_mod(const Rational& r, std::uint64_t p) {
  const BigInt bp(static_cast<unsigned long>(p));
  BigInt den = r.get_den() % bp;
  if (den == 0) return std::nullopt;
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), bp.get_mpz_t());
  BigInt num = r.get_num() % bp;
  if (num < 0) num += bp;
  BigInt v = (num * inv) % bp;
  return static_cast<std::uint64_t>(v.get_ui());
}

}  // namespace cellres::core
