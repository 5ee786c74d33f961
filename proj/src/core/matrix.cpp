#include "cellres/core/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cellres::core {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> indices) const {
  RationalMatrix s(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(indices[i], j);
  return s;
}

RationalMatrix RationalMatrix::select_cols(std::span<const std::size_t> indices) const {
  RationalMatrix s(rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) s(i, j) = (*this)(i, indices[j]);
  return s;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
  RationalVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in product");
  RationalMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const RationalMatrix& m) {
  // Forward elimination only; rref would also clear above the pivots.
  RationalMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  const RationalMatrix e = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -e(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  const RationalMatrix e = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = e(i, m.cols());
  return x;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1U) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
    b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
    e >>= 1U;
  }
  return r;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                       std::uint64_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const std::uint64_t inv = pow_mod(a[r * cols + c], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t x = a[i * cols + c];
      if (x == 0) continue;
      const std::uint64_t f = (x * inv) % p;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = (f * a[r * cols + j]) % p;
        a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
      }
    }
    ++r;
  }
  return r;
}

std::optional<std::size_t> rank_mod_p(const RationalMatrix& m, std::uint64_t p) {
  std::vector<std::uint64_t> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto v = reduce_mod(m(i, j), p);
      if (!v) return std::nullopt;
      a[i * m.cols() + j] = *v;
    }
  return rank_mod_p(std::move(a), m.rows(), m.cols(), p);
}

}  // namespace cellres::core
