#include <catch_amalgamated.hpp>

#include "cellres/arrangement/arrangement.hpp"
#include "cellres/error.hpp"
#include "cellres/ideals/ideal.hpp"
#include "cellres/resolution/complex.hpp"
#include "cellres/resolution/lattice.hpp"
#include "test_support.hpp"

using namespace cellres;
using namespace cellres::resolution;
using core::BigInt;
using core::RationalMatrix;
using testing::kFourLines;
using testing::mono;

namespace {

RationalMatrix graphic_rows(std::size_t vertices, const std::vector<std::pair<int, int>>& edges) {
  RationalMatrix m(edges.size(), vertices - 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    if (a < static_cast<int>(vertices)) m(e, a - 1) += 1;
    if (b < static_cast<int>(vertices)) m(e, b - 1) -= 1;
  }
  return m;
}

RationalMatrix k4_rows() { return graphic_rows(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }
RationalMatrix triangle_rows() { return graphic_rows(3, {{1, 2}, {1, 3}, {2, 3}}); }

LabeledComplex four_lines_complex(bool with_y) {
  const auto a = arrangement::parse_arrangement_string(kFourLines);
  const auto u = with_y ? ideals::Universe::xy_vars(4) : ideals::Universe::x_vars(4);
  return labeled_bounded_complex(arrangement::bounded_complex(a), u);
}

std::vector<std::size_t> as_sizes(const std::vector<BigInt>& v) {
  std::vector<std::size_t> out;
  for (const auto& b : v) out.push_back(b.get_ui());
  return out;
}

// One-step complex R <- R(-x1) with the given differential entry.
GradedChainComplex single_step(long entry) {
  const auto u = ideals::Universe::x_vars(1);
  GradedChainComplex c;
  c.universe = u;
  c.degrees = {{Monomial(1)}, {mono(u, "x1")}};
  c.differentials = {RationalMatrix(0, 1), RationalMatrix(1, 1)};
  c.differentials[1](0, 0) = entry;
  return c;
}

}  // namespace

TEST_CASE("four-line arrangement bounded complex resolves both ideals") {
  for (bool with_y : {false, true}) {
    const auto c = four_lines_complex(with_y);
    CHECK(diamonds_hold(c));
    const auto chain = cellular_complex(c);
    CHECK(chain.lowest == -1);
    CHECK(chain.ranks() == std::vector<std::size_t>{1, 4, 5, 2});
    CHECK(differentials_compose_to_zero(chain));
    CHECK(degrees_compatible(chain));
    CHECK(multidegrees_distinct(chain) == with_y);
    const auto report = verify_cellular_resolution(c);
    CHECK(report.exact);
    CHECK(report.minimal);
    CHECK(is_minimal(chain));
    CHECK(report.betti == std::vector<std::size_t>{4, 5, 2});
    CHECK_FALSE(report.witness);
  }
}

TEST_CASE("euler numerator of the cellular complex is the hilbert numerator") {
  const auto a = arrangement::parse_arrangement_string(kFourLines);
  const auto b = arrangement::bounded_complex(a);
  const auto u = ideals::Universe::xy_vars(4);
  const auto chain = cellular_complex(labeled_bounded_complex(b, u));
  CHECK(euler_numerator(chain).to_string() == ideals::hilbert_numerator(b, u).to_string());
}

TEST_CASE("incidence signs on small complexes") {
  const auto u = ideals::Universe::x_vars(4);
  SECTION("a single edge") {
    CellPoset p{u, {-1, 0, 0, 1}, {{}, {0}, {0}, {1, 2}},
                {Monomial(4), mono(u, "x1"), mono(u, "x2"), mono(u, "x1x2")}};
    const auto c = incidence_signs(p);
    REQUIRE(c.cells[3].facets.size() == 2);
    CHECK(c.cells[3].facets[0].second * c.cells[3].facets[1].second == -1);
    CHECK(diamonds_hold(c));
  }
  SECTION("a square") {
    // vertices 1..4, edges 5=12, 6=23, 7=34, 8=41, face 9
    CellPoset p{u,
                {-1, 0, 0, 0, 0, 1, 1, 1, 1, 2},
                {{}, {0}, {0}, {0}, {0}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6, 7, 8}},
                {}};
    const char* names[] = {"x1x2", "x2x3", "x3x4", "x4x1"};
    p.labels.push_back(Monomial(4));
    for (auto n : names) p.labels.push_back(mono(u, n));
    for (std::size_t c = 5; c < 10; ++c) {
      Monomial l(4);
      for (auto f : p.facets[c]) l = l.lcm(p.labels[f]);
      p.labels.push_back(l);
    }
    const auto c = incidence_signs(p);
    CHECK(diamonds_hold(c));
    CHECK(differentials_compose_to_zero(cellular_complex(c)));
    const auto report = verify_cellular_resolution(c);
    CHECK(report.exact);
    CHECK(report.minimal);
    CHECK(report.betti == std::vector<std::size_t>{4, 4, 1});
  }
  SECTION("a ridge in three facets is rejected") {
    CellPoset p{u, {-1, 0, 0, 0, 1, 1, 1, 2}, {{}, {0}, {0}, {0}, {1, 2}, {2, 3}, {1, 3}, {4, 5}}, {}};
    p.labels.assign(8, Monomial(4));
    CHECK_THROWS_AS(incidence_signs(p), NonOrientableCell);
  }
}

TEST_CASE("exact but not minimal, and inexact with a witness") {
  const auto u = ideals::Universe::x_vars(1);
  CellPoset p{u, {-1, 0, 0, 1}, {{}, {0}, {0}, {1, 2}},
              {Monomial(1), mono(u, "x1"), mono(u, "x1"), mono(u, "x1")}};
  const auto c = incidence_signs(p);
  const auto report = verify_cellular_resolution(c);
  CHECK(report.exact);
  CHECK_FALSE(report.minimal);
  CHECK_FALSE(multidegrees_distinct(cellular_complex(c)));

  auto broken = four_lines_complex(true);
  std::size_t top = 0;
  for (std::size_t i = 0; i < broken.cells.size(); ++i)
    if (broken.cells[i].dim == 2) top = i;
  const Monomial removed_label = broken.cells[top].label;
  broken.cells.erase(broken.cells.begin() + static_cast<std::ptrdiff_t>(top));
  const auto bad = verify_cellular_resolution(broken);
  CHECK_FALSE(bad.exact);
  REQUIRE(bad.witness);
  CHECK(bad.witness->divides(removed_label));
}

TEST_CASE("the fast modular path falls back to exact ranks") {
  CHECK(verify_graded_exactness(single_step(1)));
  CHECK(verify_graded_exactness(single_step(2147483647L)));
  CHECK(verify_graded_exactness(single_step(2)));
  ExactnessOptions sentinel;
  sentinel.torsion_sentinel = true;
  CHECK_FALSE(verify_graded_exactness(single_step(2), nullptr, sentinel));
  Monomial witness;
  CHECK_FALSE(verify_graded_exactness(single_step(0), &witness));
  CHECK(witness == mono(ideals::Universe::x_vars(1), "x1"));
}

TEST_CASE("essential subcomplexes") {
  const auto c = four_lines_complex(true);
  CHECK(essential_subcomplex(c, Monomial(8)).cells.size() == 1);
  Monomial all(8);
  for (const auto& cell : c.cells) all = all.lcm(cell.label);
  const auto whole = essential_subcomplex(c, all);
  CHECK(whole.cells.size() == c.cells.size());
  CHECK(whole.fvector() == c.fvector());
  for (const auto& cell : c.cells) {
    if (cell.dim < 0) continue;
    const auto sub = essential_subcomplex(c, cell.label);
    CHECK(verify_cellular_resolution(sub).exact);
  }
}

TEST_CASE("lattices and mobius values") {
  const auto pi3 = flat_lattice(core::RowMatroid(triangle_rows()));
  CHECK(pi3.size() == 5);
  CHECK(pi3.rank() == 2);
  CHECK(mobius(pi3, pi3.bottom(), pi3.top()) == 2);
  CHECK(pi3.is_atomic());
  CHECK_THROWS_AS(mobius(pi3, pi3.atoms()[0], pi3.atoms()[1]), NotComparable);

  const auto pi4 = flat_lattice(core::RowMatroid(k4_rows()));
  CHECK(pi4.size() == 15);
  CHECK(mobius(pi4, pi4.bottom(), pi4.top()) == -6);
  CHECK(cochar(pi4).to_string() == "1 + 7*q + 12*q^2 + 6*q^3");
  CHECK(as_sizes(stanley_betti(pi4)) == std::vector<std::size_t>{1, 7, 12, 6});

  FiniteLattice two(2, [](std::size_t a, std::size_t b) { return a <= b; });
  CHECK(as_sizes(stanley_betti(two)) == std::vector<std::size_t>{1, 1});

  // bottom 0, two chains 0<1<3 and 0<2<4<3 of different lengths
  FiniteLattice pentagon(5, [](std::size_t a, std::size_t b) {
    if (a == b || a == 0 || b == 3) return true;
    return a == 2 && b == 4;
  });
  CHECK_FALSE(pentagon.is_graded());
  CHECK_THROWS_AS(pentagon.rank(), NotGraded);
  CHECK_THROWS_AS(stanley_betti(pentagon), NotGraded);
}

TEST_CASE("the complex Z(P) on matroid posets") {
  SECTION("K4") {
    const auto u = ideals::Universe::x_vars(6);
    const auto p = matroid_poset(core::RowMatroid(k4_rows()), u);
    const auto z = zp_resolution(p);
    CHECK(z.lowest == 0);
    CHECK(z.ranks() == std::vector<std::size_t>{1, 7, 12, 6});
    CHECK(z.ranks() == as_sizes(stanley_betti(flat_lattice(core::RowMatroid(k4_rows())))));
    CHECK(differentials_compose_to_zero(z));
    CHECK(verify_graded_exactness(z));
    CHECK(is_minimal(z));
  }
  SECTION("U(2,3)") {
    RationalMatrix rows(3, 2);
    rows(0, 0) = 1;
    rows(1, 1) = 1;
    rows(2, 0) = 1;
    rows(2, 1) = 1;
    const auto z = zp_resolution(matroid_poset(core::RowMatroid(rows), ideals::Universe::x_vars(3)));
    CHECK(z.ranks() == std::vector<std::size_t>{1, 3, 2});
    CHECK(verify_graded_exactness(z));
  }
  SECTION("a rank one poset") {
    const auto u = ideals::Universe::x_vars(1);
    FiniteLattice two(2, [](std::size_t a, std::size_t b) { return a <= b; });
    const auto z = zp_resolution(LabeledPoset(two, u, {mono(u, "x1")}));
    CHECK(z.ranks() == std::vector<std::size_t>{1, 1});
    CHECK(z.differentials[1](0, 0) == 1);
    CHECK(verify_graded_exactness(z));
  }
  SECTION("repeated atom labels are rejected") {
    const auto u = ideals::Universe::x_vars(2);
    const auto pi3 = flat_lattice(core::RowMatroid(triangle_rows()));
    CHECK_THROWS_AS(LabeledPoset(pi3, u, {mono(u, "x1"), mono(u, "x1"), mono(u, "x2")}), NotComplete);
  }
}

TEST_CASE("three routes to the Betti numbers agree") {
  SECTION("four lines") {
    const auto a = arrangement::parse_arrangement_string(kFourLines);
    const auto r = arrangement::homogenize(a);
    const core::RowMatroid m(r.rows);
    const auto lattice = flat_lattice(m);
    CHECK(abs(mobius(lattice, lattice.bottom(), lattice.top())) == 2);
    CHECK(as_sizes(stanley_betti(lattice)) == std::vector<std::size_t>{1, 4, 5, 2});
    const auto u = ideals::Universe::x_vars(4);
    const auto z = zp_resolution(matroid_poset(m, u));
    CHECK(z.ranks() == std::vector<std::size_t>{1, 4, 5, 2});
    CHECK(verify_graded_exactness(z));
    const auto gens = ideals::matroid_ideal(a).generators();
    CHECK(std::is_permutation(gens.begin(), gens.end(), z.degrees[1].begin(), z.degrees[1].end()));
    CHECK(four_lines_complex(false).fvector() == std::vector<std::size_t>{4, 5, 2});
  }
  SECTION("K4 with a generic affine slice") {
    arrangement::AffineRealization r{k4_rows(), {1, 4, 16}};
    REQUIRE(arrangement::general_position_g(r));
    const auto b = arrangement::bounded_complex(r);
    const auto c = labeled_bounded_complex(b, ideals::Universe::xy_vars(6));
    const auto chain = cellular_complex(c);
    CHECK(chain.ranks() == std::vector<std::size_t>{1, 7, 12, 6});
    const auto report = verify_cellular_resolution(c);
    CHECK(report.exact);
    CHECK(report.minimal);
    CHECK(multidegrees_distinct(chain));
    const auto xc = labeled_bounded_complex(b, ideals::Universe::x_vars(6));
    CHECK(verify_cellular_resolution(xc).exact);
    CHECK(euler_numerator(chain).to_string() ==
          ideals::hilbert_numerator(b, ideals::Universe::xy_vars(6)).to_string());
  }
}
