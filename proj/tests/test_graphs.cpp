#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "cellres/error.hpp"
#include "cellres/graphs/arrangements.hpp"
#include "cellres/graphs/hermite.hpp"
#include "cellres/graphs/invariants.hpp"
#include "cellres/graphs/multigraph.hpp"
#include "cellres/resolution/lattice.hpp"
#include "cellres/toric/toric.hpp"

using namespace cellres;
using namespace cellres::graphs;
using core::BigInt;
using core::IntPolynomial1;
using core::IntPolynomial2;

namespace {

IntPolynomial1 poly(std::vector<long> coefficients) {
  std::vector<BigInt> c(coefficients.begin(), coefficients.end());
  return IntPolynomial1(std::move(c));
}

IntPolynomial1 lattice_cochar(const resolution::FiniteLattice& l) { return resolution::cochar(l); }

IntPolynomial1 toric_polynomial(const core::RationalMatrix& b) {
  const auto f = toric::toric_fvector(b, toric::generic_w(b));
  std::vector<BigInt> c;
  for (auto x : f) c.emplace_back(static_cast<unsigned long>(x));
  return IntPolynomial1(std::move(c));
}

BigInt factorial(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("graph input") {
  const auto g = parse_graph_string("# triangle with a loop\np 3\ne 1 2\ne 2 3\ne 3 1\ne 2 2\n");
  CHECK(g.vertices == 3);
  CHECK(g.edge_count() == 4);
  CHECK(has_loops(g));
  CHECK_FALSE(is_simple(g));
  try {
    parse_graph_string("p 3\ne 1 4\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph_string("q 3\n"), ParseError);
  CHECK(parse_family("Km:5").edge_count() == 10);
  CHECK(parse_family("Kmn:3,3").edge_count() == 9);
  CHECK(parse_family("Kmn:3,3").edge_labels.front() == "11");
  CHECK(parse_family("Cn:6").edge_count() == 6);
  CHECK_THROWS_AS(parse_family("Petersen:1"), ParseError);
  CHECK_THROWS_AS(parse_family("Kmn:3"), ParseError);
  const auto k4 = read_graph_file(std::string(CELLRES_DATA_DIR) + "/k4.graph");
  CHECK(k4.edge_count() == 6);
  CHECK(is_connected(k4));
}

TEST_CASE("tutte polynomials") {
  Multigraph edge;
  edge.vertices = 2;
  edge.add_edge(0, 1);
  CHECK(tutte(edge) == IntPolynomial2::x());
  Multigraph loop;
  loop.vertices = 1;
  loop.add_edge(0, 0);
  CHECK(tutte(loop) == IntPolynomial2::y());

  const auto k4 = tutte(complete_graph(4));
  CHECK(k4.to_string() == "2*x + 2*y + 3*x^2 + 4*x*y + 3*y^2 + x^3 + y^3");
  CHECK(k4.evaluate(1, 0) == 6);
  CHECK(k4.evaluate(0, 1) == 6);
  CHECK(k4.evaluate(1, 1) == 16);  // spanning trees

  // Deletion and contraction of every ordinary edge.
  for (const auto& g : {complete_graph(4), cycle_graph(5), complete_bipartite(3, 3), rooted_complete(3, 2)}) {
    const auto bridges = isthmuses(g);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.edges[e].first == g.edges[e].second) continue;
      if (std::find(bridges.begin(), bridges.end(), e) != bridges.end()) continue;
      CHECK(tutte(g) == tutte(delete_edges(g, core::singleton(e))) + tutte(contract(g, core::singleton(e))));
    }
  }

  // Relabeling does not change the polynomial or the memo key's meaning.
  auto shuffled = complete_bipartite(2, 3);
  for (auto& [u, v] : shuffled.edges) {
    u = 4 - u;
    v = 4 - v;
  }
  CHECK(tutte(shuffled) == tutte(complete_bipartite(2, 3)));
}

TEST_CASE("moebius invariant by three methods") {
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto g = complete_graph(d);
    const BigInt expected = factorial(static_cast<long>(d) - 1);
    CHECK(mu(g, MuMethod::Tutte) == expected);
    CHECK(mu(g, MuMethod::Orientations) == expected);
    CHECK(mu(g, MuMethod::OrderClasses) == expected);
  }
  CHECK(mu(path_graph(5), MuMethod::Orientations) == 1);
  CHECK(mu(path_graph(5), MuMethod::OrderClasses) == 1);
  CHECK(mu(cycle_graph(4), MuMethod::Orientations) == 3);
  CHECK(mu(cycle_graph(4), MuMethod::Tutte) == 3);

  auto looped = complete_graph(3);
  looped.add_edge(1, 1);
  CHECK(mu(looped, MuMethod::Tutte) == 0);
  CHECK(mu(looped, MuMethod::Orientations) == 0);
  CHECK(mu(looped, MuMethod::OrderClasses) == 0);

  Multigraph split;
  split.vertices = 3;
  split.add_edge(0, 1);
  CHECK_THROWS_AS(mu(split, MuMethod::Tutte), Disconnected);
  CHECK_THROWS_AS(mu_perp(split, MuPerpMethod::Forests), Disconnected);
}

TEST_CASE("method agreement on all small connected graphs") {
  const std::size_t expected_counts[] = {0, 1, 1, 2, 6, 21, 112};
  for (std::size_t d = 1; d <= 6; ++d) {
    const auto family = connected_simple_graphs(d);
    CHECK(family.size() == expected_counts[d]);
    for (const auto& g : family) {
      const auto by_tutte = mu(g, MuMethod::Tutte);
      CHECK(mu(g, MuMethod::Orientations) == by_tutte);
      CHECK(mu(g, MuMethod::OrderClasses) == by_tutte);
      CHECK(mu_perp(g, MuPerpMethod::Forests) == mu_perp(g, MuPerpMethod::Tutte));
      if (d <= 4) {
        for (std::size_t source = 1; source < d; ++source)
          CHECK(count_rooted_acyclic_orientations(g, source) == by_tutte);
      }
    }
  }
}

TEST_CASE("moebius coinvariant") {
  CHECK(mu_perp(complete_graph(2), MuPerpMethod::Tutte) == 0);
  CHECK(mu_perp(complete_graph(5), MuPerpMethod::Tutte) == 51);
  CHECK(mu_perp(complete_graph(5), MuPerpMethod::Forests) == 51);
  CHECK(mu_perp(complete_bipartite(3, 3), MuPerpMethod::Tutte) == 20);
  CHECK(mu_perp(complete_bipartite(3, 3), MuPerpMethod::ClosedForm) == 20);
  CHECK_THROWS_AS(mu_perp(cycle_graph(5), MuPerpMethod::ClosedForm), InvalidArgument);

  const long table[] = {0, 1, 6, 51, 560, 7575, 122052, 2285353, 48803904};
  for (int m = 2; m <= 10; ++m) CHECK(mu_perp_complete(m) == table[m - 2]);
  for (int m = 2; m <= 8; ++m) {
    const auto g = complete_graph(static_cast<std::size_t>(m));
    CHECK(mu_perp(g, MuPerpMethod::Tutte) == mu_perp_complete(m));
    CHECK(mu_perp(g, MuPerpMethod::Forests) == mu_perp_complete(m));
    CHECK(mu_perp(g, MuPerpMethod::ClosedForm) == mu_perp_complete(m));
  }
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const auto g = complete_bipartite(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
      CHECK(mu_perp_bipartite(m, n) == tutte(g).evaluate(0, 1));
    }
  }
  CHECK(mu_perp_bipartite(2, 2) == 1);
  for (int m = 1; m <= 6; ++m) CHECK(mu_perp_bipartite(m, 1) == 0);
}

TEST_CASE("hermite polynomials") {
  CHECK(hermite(-1).is_zero());
  CHECK(hermite(0) == IntPolynomial1(1));
  CHECK(hermite(2).to_string("x") == "1 + x^2");
  CHECK(hermite(3).to_string("x") == "3*x + x^3");
  for (int n = -1; n <= 30; ++n) CHECK(hermite(n) == hermite_explicit(n));
  CHECK_THROWS_AS(hermite(-2), InvalidArgument);

  CHECK(hermite2(1, 1).to_string() == "1 + x*y");
  CHECK(hermite2(1, 1).evaluate(2, 2) == 5);
  CHECK(hermite2(3, 0) == IntPolynomial2::monomial(1, 3, 0));
  CHECK(hermite2(0, 2) == IntPolynomial2::monomial(1, 0, 2));
  const auto x = IntPolynomial2::x();
  const auto y = IntPolynomial2::y();
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      const auto h = hermite2(m, n);
      CHECK(h == hermite2_explicit(m, n));
      CHECK(h == hermite2(n, m).swapped());
      if (m >= 1) CHECK(h == x * hermite2(m - 1, n) + static_cast<long>(n) * hermite2(m - 1, n - 1));
      if (n >= 1) CHECK(h == y * hermite2(m, n - 1) + static_cast<long>(m) * hermite2(m - 1, n - 1));
    }
  }
}

TEST_CASE("rooted families and their closed forms") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 1; k <= 4; ++k) CHECK(mu_nk(n, k) == mu_nk_recurrence(n, k));
  for (int m = 2; m <= 10; ++m) CHECK(mu_perp_complete(m) == mu_nk(m - 1, 1));
  for (int n = 0; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const auto g = rooted_complete(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
      CHECK(tutte(g).evaluate(0, 1) == mu_nk(n, k));
    }
  }
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) CHECK(mu_mnkl(m, n, k, l) == mu_mnkl_alternative(m, n, k, l));
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= 2; ++k) {
        for (int l = 1; l <= 2; ++l) {
          const auto g = rooted_bipartite(static_cast<std::size_t>(m), static_cast<std::size_t>(n),
                                          static_cast<std::size_t>(k), static_cast<std::size_t>(l));
          CHECK(tutte(g).evaluate(0, 1) == mu_mnkl(m, n, k, l));
        }
      }
    }
  }
  for (int m = 1; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n) CHECK(mu_perp_bipartite(m, n) == mu_mnkl(m, n - 1, 1, 0));
}

TEST_CASE("graphic and cographic arrangements") {
  CHECK(graphic_arrangement(complete_graph(3)).size() == 3);
  CHECK(graphic_arrangement(complete_graph(3)).dim() == 2);
  const auto k4 = graphic_matrix(complete_graph(4));
  CHECK(k4.rows() == 6);
  CHECK(k4.cols() == 3);
  CHECK(toric::is_unimodular(k4));

  const auto k33 = complete_bipartite(3, 3);
  const auto cographic = cographic_matrix(k33);
  CHECK(cographic.rows() == 9);
  CHECK(cographic.cols() == 4);
  CHECK(toric::is_unimodular(cographic));
  CHECK(cographic_arrangement(k33).dim() == 4);

  // Columns are cycles: the signed incidence matrix kills them.
  for (const auto& g : {k33, complete_graph(5), rooted_complete(3, 2)}) {
    const auto c = cographic_matrix(g);
    core::RationalMatrix incidence(g.vertices, g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      incidence(g.edges[e].first, e) += 1;
      incidence(g.edges[e].second, e) -= 1;
    }
    CHECK((incidence * c).is_zero());
    CHECK(core::rank(c) == g.edge_count() - g.vertices + 1);
  }

  CHECK_THROWS_AS(cographic_matrix(path_graph(3)), HasIsthmus);
  Multigraph split;
  split.vertices = 2;
  CHECK_THROWS_AS(graphic_matrix(split), Disconnected);
}

TEST_CASE("cocharacteristic polynomials of graphic arrangements") {
  CHECK(connected_partitions(complete_graph(4)).size() == 15);
  CHECK(connected_partitions(path_graph(3)).size() == 4);
  CHECK(cochar_graphic(complete_graph(3)) == poly({1, 3, 2}));
  CHECK(cochar_graphic(complete_graph(4)) == poly({1, 7, 12, 6}));
  const IntPolynomial1 one_plus_q = poly({1, 1});
  IntPolynomial1 power(1);
  for (std::size_t d = 1; d <= 5; ++d) {
    CHECK(cochar_graphic(path_graph(d)) == power);
    power = power * one_plus_q;
  }
  for (const auto& g : {complete_graph(3), complete_graph(4), cycle_graph(4), cycle_graph(5)}) {
    const auto psi = cochar_graphic(g);
    CHECK(psi == lattice_cochar(resolution::flat_lattice(core::RowMatroid(graphic_matrix(g)))));
    CHECK(psi == toric_polynomial(graphic_matrix(g)));
    CHECK(psi.leading_coefficient() == mu(g, MuMethod::Tutte));
  }
  // i! S(d, i+1) for the complete graphs.
  CHECK(cochar_graphic(complete_graph(5)) == poly({1, 15, 50, 60, 24}));
}

TEST_CASE("cocharacteristic polynomials of cographic arrangements") {
  const auto k33 = complete_bipartite(3, 3);
  const auto expected = poly({1, 15, 48, 54, 20});
  CHECK(cochar_cographic(k33) == expected);
  CHECK(lattice_cochar(isthmus_free_lattice(k33)) == expected);
  CHECK(toric_polynomial(cographic_matrix(k33)) == expected);

  for (std::size_t n = 2; n <= 6; ++n) CHECK(cochar_cographic(cycle_graph(n)) == poly({1, 1}));
  CHECK(cochar_cographic(path_graph(4)) == IntPolynomial1(1));

  for (const auto& g : {complete_graph(4), rooted_complete(2, 2), complete_bipartite(2, 3)}) {
    const auto psi = cochar_cographic(g);
    CHECK(psi == lattice_cochar(isthmus_free_lattice(g)));
    CHECK(psi == lattice_cochar(resolution::flat_lattice(core::RowMatroid(cographic_matrix(g)))));
    CHECK(psi == toric_polynomial(cographic_matrix(g)));
    CHECK(psi.leading_coefficient() == mu_perp(g, MuPerpMethod::Tutte));
  }

  // Each loop is a coloop of the cographic matroid.
  auto looped = complete_graph(3);
  looped.add_edge(0, 0);
  CHECK(cochar_cographic(looped) == poly({1, 1}) * poly({1, 1}));
  CHECK(lattice_cochar(isthmus_free_lattice(looped)) == cochar_cographic(looped));
}
