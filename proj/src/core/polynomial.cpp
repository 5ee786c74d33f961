#include "cellres/core/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace cellres::core {

namespace {

std::string term_text(const BigInt& c, const std::string& monomial, bool first) {
  std::string out;
  BigInt mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += mag.get_str();
  } else {
    if (mag != 1) out += mag.get_str() + "*";
    out += monomial;
  }
  return out;
}

std::string power(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

IntPolynomial1::IntPolynomial1(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial1::IntPolynomial1(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

IntPolynomial1 IntPolynomial1::monomial(const BigInt& c, int exponent) {
  std::vector<BigInt> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return IntPolynomial1(std::move(v));
}

void IntPolynomial1::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial1::coefficient(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

BigInt IntPolynomial1::leading_coefficient() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

BigInt IntPolynomial1::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial1& IntPolynomial1::operator+=(const IntPolynomial1& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial1& IntPolynomial1::operator-=(const IntPolynomial1& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial1 operator*(const IntPolynomial1& a, const IntPolynomial1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial1(std::move(out));
}

IntPolynomial1 operator*(const BigInt& c, const IntPolynomial1& p) {
  std::vector<BigInt> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return IntPolynomial1(std::move(out));
}

std::string IntPolynomial1::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    out += term_text(coeffs_[i], power(var, static_cast<int>(i)), first);
    first = false;
  }
  return out;
}

IntPolynomial2::IntPolynomial2(long constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

IntPolynomial2 IntPolynomial2::monomial(const BigInt& c, int ex, int ey) {
  IntPolynomial2 p;
  p.add_term({ex, ey}, c);
  return p;
}

void IntPolynomial2::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt IntPolynomial2::coefficient(int ex, int ey) const {
  auto it = terms_.find({ex, ey});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int IntPolynomial2::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

BigInt IntPolynomial2::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt acc = 0;
  for (const auto& [e, c] : terms_) {
    BigInt px, py;
    mpz_pow_ui(px.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e.first));
    mpz_pow_ui(py.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(e.second));
    acc += c * px * py;
  }
  return acc;
}

IntPolynomial2 IntPolynomial2::swapped() const {
  IntPolynomial2 p;
  for (const auto& [e, c] : terms_) p.terms_[{e.second, e.first}] = c;
  return p;
}

IntPolynomial2& IntPolynomial2::operator+=(const IntPolynomial2& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

IntPolynomial2& IntPolynomial2::operator-=(const IntPolynomial2& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial2 operator*(const IntPolynomial2& a, const IntPolynomial2& b) {
  IntPolynomial2 p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      p.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return p;
}

IntPolynomial2 operator*(const BigInt& c, const IntPolynomial2& q) {
  IntPolynomial2 p;
  for (const auto& [e, v] : q.terms_) p.add_term(e, c * v);
  return p;
}

std::string IntPolynomial2::to_string(const std::string& xvar, const std::string& yvar) const {
  if (is_zero()) return "0";
  std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    std::string mono = power(xvar, e.first);
    const std::string ypart = power(yvar, e.second);
    if (!mono.empty() && !ypart.empty()) mono += "*";
    mono += ypart;
    out += term_text(c, mono, first);
    first = false;
  }
  return out;
}

}  // namespace cellres::core
