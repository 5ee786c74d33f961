#ifndef CELLRES_CORE_MATRIX_HPP
#define CELLRES_CORE_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cellres/core/rational.hpp"

namespace cellres::core {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// All rows must have the same length; an empty list gives a 0 x cols matrix.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalMatrix transpose() const;
  RationalMatrix select_rows(std::span<const std::size_t> indices) const;
  RationalMatrix select_cols(std::span<const std::size_t> indices) const;
  RationalVector apply(const RationalVector& x) const;
  RationalMatrix operator*(const RationalMatrix& other) const;

  bool is_zero() const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row, in order.
RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}.  One vector per free column of rref(m), with a 1
/// in that column and 0 in every other free column, so the basis is
/// canonical for the row space of m.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

Rational determinant(RationalMatrix m);

inline constexpr std::uint64_t kLargePrime = 2147483647ULL;  // 2^31 - 1

/// Rank over GF(p) of a dense rows x cols matrix whose entries are already
/// reduced mod p.  The buffer is consumed.
std::size_t rank_mod_p(std::vector<std::uint64_t> entries, std::size_t rows, std::size_t cols,
                       std::uint64_t p);

/// Rank of a rational matrix over GF(p); nullopt if some denominator is
/// divisible by p.
std::optional<std::size_t> rank_mod_p(const RationalMatrix& m, std::uint64_t p);

}  // namespace cellres::core

#endif  // CELLRES_CORE_MATRIX_HPP
