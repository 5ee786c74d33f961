#include "cellres/graphs/hermite.hpp"

#include <functional>
#include <map>
#include <tuple>

#include "cellres/error.hpp"

namespace cellres::graphs {

using core::IntPolynomial1;
using core::IntPolynomial2;

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(int n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt power(const BigInt& base, int exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

void require_index(int n) {
  if (n < -1) throw InvalidArgument("Hermite index must be at least -1");
}

}  // namespace

IntPolynomial1 hermite(int n) {
  require_index(n);
  if (n == -1) return {};
  IntPolynomial1 previous;  // H_{-1}
  IntPolynomial1 current(1);
  for (int i = 0; i < n; ++i) {
    IntPolynomial1 next = IntPolynomial1::variable() * current + static_cast<long>(i) * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

IntPolynomial1 hermite_explicit(int n) {
  require_index(n);
  if (n == -1) return {};
  IntPolynomial1 out;
  BigInt double_factorial = 1;  // (2k-1)!!
  for (int k = 0; 2 * k <= n; ++k) {
    if (k > 0) double_factorial *= 2 * k - 1;
    out += IntPolynomial1::monomial(binomial(n, 2 * k) * double_factorial, n - 2 * k);
  }
  return out;
}

IntPolynomial2 hermite2(int m, int n) {
  require_index(m);
  require_index(n);
  if (m == -1 || n == -1) return {};
  // Row by row in the first index: table[j] holds H_{i, j}.
  std::vector<IntPolynomial2> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int j = 1; j <= n; ++j) row[static_cast<std::size_t>(j)] = IntPolynomial2::y() * row[static_cast<std::size_t>(j - 1)];
  for (int i = 1; i <= m; ++i) {
    std::vector<IntPolynomial2> next(row.size());
    for (int j = 0; j <= n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      next[uj] = IntPolynomial2::x() * row[uj];
      if (j > 0) next[uj] += static_cast<long>(j) * row[uj - 1];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(n)];
}

IntPolynomial2 hermite2_explicit(int m, int n) {
  require_index(m);
  require_index(n);
  if (m == -1 || n == -1) return {};
  IntPolynomial2 out;
  for (int k = 0; k <= std::min(m, n); ++k) {
    out += IntPolynomial2::monomial(binomial(m, k) * binomial(n, k) * factorial(k), m - k, n - k);
  }
  return out;
}

BigInt mu_perp_complete(int m) {
  if (m < 2) throw InvalidArgument("the closed form for K_m needs m >= 2");
  return BigInt(m - 2) * hermite(m - 3).evaluate(m - 1);
}

BigInt mu_nk(int n, int k) {
  if (n < 0 || k < 1) throw InvalidArgument("mu_n^(k) needs n >= 0 and k >= 1");
  const BigInt at = n + k - 1;
  return hermite(n).evaluate(at) - BigInt(n) * hermite(n - 1).evaluate(at);
}

BigInt mu_nk_recurrence(int n, int k) {
  if (n < 0 || k < 1) throw InvalidArgument("mu_n^(k) needs n >= 0 and k >= 1");
  std::map<std::pair<int, int>, BigInt> memo;
  std::function<BigInt(int, int)> rec = [&](int nn, int kk) -> BigInt {
    if (nn == 0) return 1;
    auto it = memo.find({nn, kk});
    if (it != memo.end()) return it->second;
    // A cycle through the root edge of length 2 or of length l >= 3.
    BigInt total = BigInt(kk - 1) * rec(nn - 1, kk + 1);
    BigInt choices = kk;
    for (int l = 3; l <= nn + 1; ++l) {
      choices *= nn - l + 2;
      total += choices * rec(nn - l + 1, kk + l - 1);
    }
    memo.emplace(std::make_pair(nn, kk), total);
    return total;
  };
  return rec(n, k);
}

BigInt mu_perp_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("the closed form for K_{m,n} needs m, n >= 1");
  return BigInt(m - 1) * BigInt(n - 1) * hermite2(m - 2, n - 2).evaluate(n - 1, m - 1);
}

BigInt mu_mnkl(int m, int n, int k, int l) {
  if (m < 0 || n < 0 || k < 0 || l < 0) throw InvalidArgument("mu_{m,n}^{(k,l)} needs nonnegative arguments");
  const BigInt p = n + k - 1;
  const BigInt q = m + l - 1;
  return hermite2(m, n).evaluate(p, q) - BigInt(m) * BigInt(n) * hermite2(m - 1, n - 1).evaluate(p, q);
}

BigInt mu_mnkl_alternative(int m, int n, int k, int l) {
  if (m < 0 || n < 0 || k < 0 || l < 0) throw InvalidArgument("mu_{m,n}^{(k,l)} needs nonnegative arguments");
  const BigInt p = n + k - 1;
  const BigInt q = m + l - 1;
  BigInt total = 0;
  for (int r = 0; r <= std::min(m, n); ++r) {
    total += BigInt(1 - r) * binomial(m, r) * binomial(n, r) * factorial(r) * power(p, m - r) * power(q, n - r);
  }
  return total;
}

}  // namespace cellres::graphs
