#ifndef CELLRES_GRAPHS_HERMITE_HPP
#define CELLRES_GRAPHS_HERMITE_HPP

#include "cellres/core/polynomial.hpp"

namespace cellres::graphs {

using core::BigInt;

/// Matching polynomial of K_n built from H_{n+1} = x H_n + n H_{n-1};
/// H_{-1} = 0 and H_0 = 1.  Throws InvalidArgument for n < -1.
core::IntPolynomial1 hermite(int n);
/// The same polynomial from the count of k-edge matchings, C(n,2k) (2k-1)!!.
core::IntPolynomial1 hermite_explicit(int n);

/// Bipartite matching polynomial of K_{m,n} built from
/// H_{m,n} = x H_{m-1,n} + n H_{m-1,n-1}; zero when m or n is -1.
core::IntPolynomial2 hermite2(int m, int n);
/// Sum over k of C(m,k) C(n,k) k! x^{m-k} y^{n-k}.
core::IntPolynomial2 hermite2_explicit(int m, int n);

/// Coinvariant of K_m as (m-2) H_{m-3}(m-1), m >= 2.
BigInt mu_perp_complete(int m);
/// Coinvariant of K_n plus a root joined by k edges to each vertex, as
/// H_n(n+k-1) - n H_{n-1}(n+k-1); n >= 0, k >= 1.
BigInt mu_nk(int n, int k);
/// The same number from the cycle recursion through a root edge, starting
/// at mu_0^{(k)} = 1.
BigInt mu_nk_recurrence(int n, int k);

/// Coinvariant of K_{m,n} as (m-1)(n-1) H_{m-2,n-2}(n-1, m-1), m, n >= 1.
BigInt mu_perp_bipartite(int m, int n);
/// Coinvariant of K_{m,n} with an extra vertex joined k times to the first
/// part and l times to the second, from bipartite Hermite values.
BigInt mu_mnkl(int m, int n, int k, int l);
/// The same number as a single alternating sum over matching sizes r.
BigInt mu_mnkl_alternative(int m, int n, int k, int l);

}  // namespace cellres::graphs

#endif  // CELLRES_GRAPHS_HERMITE_HPP
