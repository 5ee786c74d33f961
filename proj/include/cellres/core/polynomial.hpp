#ifndef CELLRES_CORE_POLYNOMIAL_HPP
#define CELLRES_CORE_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cellres/core/rational.hpp"

namespace cellres::core {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients.  The coefficient vector never ends in a zero, so the zero
/// polynomial has an empty vector and degree -1.
class IntPolynomial1 {
 public:
  IntPolynomial1() = default;
  explicit IntPolynomial1(std::vector<BigInt> coefficients);
  IntPolynomial1(long constant);  // NOLINT: integers promote to constants

  static IntPolynomial1 monomial(const BigInt& c, int exponent);
  static IntPolynomial1 variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(int exponent) const;
  BigInt leading_coefficient() const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;

  IntPolynomial1& operator+=(const IntPolynomial1& other);
  IntPolynomial1& operator-=(const IntPolynomial1& other);
  friend IntPolynomial1 operator+(IntPolynomial1 a, const IntPolynomial1& b) { return a += b; }
  friend IntPolynomial1 operator-(IntPolynomial1 a, const IntPolynomial1& b) { return a -= b; }
  friend IntPolynomial1 operator*(const IntPolynomial1& a, const IntPolynomial1& b);
  friend IntPolynomial1 operator*(const BigInt& c, const IntPolynomial1& p);
  friend IntPolynomial1 operator*(long c, const IntPolynomial1& p) { return BigInt(c) * p; }
  friend bool operator==(const IntPolynomial1&, const IntPolynomial1&) = default;

  /// "1 + 15*q + 48*q^2", lowest degree first; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Sparse bivariate integer polynomial keyed by (exponent of x, exponent of y).
class IntPolynomial2 {
 public:
  using Exponents = std::pair<int, int>;

  IntPolynomial2() = default;
  IntPolynomial2(long constant);  // NOLINT

  static IntPolynomial2 monomial(const BigInt& c, int ex, int ey);
  static IntPolynomial2 x() { return monomial(1, 1, 0); }
  static IntPolynomial2 y() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int ex, int ey) const;
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  int total_degree() const;

  BigInt evaluate(const BigInt& x, const BigInt& y) const;
  /// p(y, x).
  IntPolynomial2 swapped() const;

  IntPolynomial2& operator+=(const IntPolynomial2& other);
  IntPolynomial2& operator-=(const IntPolynomial2& other);
  friend IntPolynomial2 operator+(IntPolynomial2 a, const IntPolynomial2& b) { return a += b; }
  friend IntPolynomial2 operator-(IntPolynomial2 a, const IntPolynomial2& b) { return a -= b; }
  friend IntPolynomial2 operator*(const IntPolynomial2& a, const IntPolynomial2& b);
  friend IntPolynomial2 operator*(const BigInt& c, const IntPolynomial2& p);
  friend IntPolynomial2 operator*(long c, const IntPolynomial2& p) { return BigInt(c) * p; }
  friend bool operator==(const IntPolynomial2&, const IntPolynomial2&) = default;

  /// Graded by total degree, then by descending power of x: "1 + x + x^2*y".
  std::string to_string(const std::string& xvar = "x", const std::string& yvar = "y") const;

 private:
  void add_term(const Exponents& e, const BigInt& c);
  std::map<Exponents, BigInt> terms_;
};

}  // namespace cellres::core

#endif  // CELLRES_CORE_POLYNOMIAL_HPP
