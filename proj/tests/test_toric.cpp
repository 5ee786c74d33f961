#include <catch_amalgamated.hpp>

#include <set>

#include "cellres/arrangement/arrangement.hpp"
#include "cellres/error.hpp"
#include "cellres/graphs/arrangements.hpp"
#include "cellres/graphs/multigraph.hpp"
#include "cellres/ideals/ideal.hpp"
#include "cellres/toric/toric.hpp"
#include "test_support.hpp"

using namespace cellres;
using namespace cellres::toric;
using testing::kFourLines;
using testing::mono;

namespace {

RationalMatrix k33_matrix() { return read_matrix_file(std::string(CELLRES_DATA_DIR) + "/k33-cographic.mat"); }

ideals::Universe k33_universe() {
  return ideals::Universe::xy_vars(9, {"11", "12", "13", "21", "22", "23", "31", "32", "33"});
}

long alternating_sum(const std::vector<std::size_t>& f) {
  long s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * static_cast<long>(f[i]);
  return s;
}

// Edge subsets of a graph that form a single cycle, or a minimal edge cut.
std::size_t count_cycles(const graphs::Multigraph& g) {
  std::size_t count = 0;
  for (core::ElementSet s = 1; s < (core::ElementSet{1} << g.edge_count()); ++s) {
    std::vector<int> degree(g.vertices, 0);
    for (auto e : core::elements(s)) {
      ++degree[g.edges[e].first];
      ++degree[g.edges[e].second];
    }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 0 && d != 2; })) continue;
    const auto sub = graphs::delete_edges(g, core::full_set(g.edge_count()) & ~s);
    const auto contracted = graphs::contract(sub, s);
    // A 2-regular edge set is one cycle when it touches a single component.
    std::size_t touched = 0;
    std::vector<bool> seen(contracted.vertices, false);
    auto comp = graphs::contract(g, s);
    (void)comp;
    graphs::Multigraph only;
    only.vertices = g.vertices;
    for (auto e : core::elements(s)) only.edges.push_back(g.edges[e]);
    const auto collapsed = graphs::contract(only, core::full_set(only.edge_count()));
    touched = collapsed.vertices - static_cast<std::size_t>(std::count(degree.begin(), degree.end(), 0));
    if (touched == 1) ++count;
  }
  return count;
}

std::size_t count_bonds(const graphs::Multigraph& g) {
  std::size_t count = 0;
  for (std::uint32_t side = 1; side + 1 < (std::uint32_t{1} << g.vertices); ++side) {
    if (!(side & 1U)) continue;  // each cut once: vertex 1 on the chosen side
    auto induced_connected = [&](std::uint32_t part) {
      graphs::Multigraph h;
      std::vector<std::size_t> index(g.vertices, g.vertices);
      for (std::size_t v = 0; v < g.vertices; ++v)
        if ((part >> v) & 1U) index[v] = h.vertices++;
      for (const auto& [u, v] : g.edges)
        if (((part >> u) & 1U) && ((part >> v) & 1U)) h.add_edge(index[u], index[v]);
      return graphs::is_connected(h);
    };
    const std::uint32_t other = ((std::uint32_t{1} << g.vertices) - 1) & ~side;
    if (induced_connected(side) && induced_connected(other)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("matrix input") {
  const auto b = k33_matrix();
  CHECK(b.rows() == 9);
  CHECK(b.cols() == 4);
  CHECK_THROWS_AS(parse_matrix_string("2 2\n1 0\n"), ParseError);
  try {
    parse_matrix_string("2 2\n1 0\n0 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(k33_matrix()));
  CHECK(is_unimodular(RationalMatrix::identity(3)));
  CHECK_FALSE(is_unimodular(parse_matrix_string("1 1\n2\n")));
  CHECK_FALSE(is_unimodular(parse_matrix_string("2 2\n1 1\n1 -1\n")));
  CHECK_FALSE(is_unimodular(parse_matrix_string("2 2\n1 0\n2 0\n")));  // rank 1
}

TEST_CASE("signed circuits") {
  const auto b = k33_matrix();
  CHECK(signed_circuits(b).size() == 15);
  CHECK(lawrence_generators(b, k33_universe()).size() == 15);
  for (const auto& c : signed_circuits(b)) {
    REQUIRE_FALSE(c.positive.empty());
    CHECK(c.positive.front() < (c.negative.empty() ? 99 : c.negative.front()));
  }

  CHECK(row_circuits(RationalMatrix::identity(4)).empty());
  const auto pair = row_circuits(parse_matrix_string("2 1\n1\n1\n"));
  REQUIRE(pair.size() == 1);
  CHECK(pair.front().to_string() == "{1+,2-}");

  // Graphic rows depend along cycles; cographic rows along bonds.
  const auto k4 = graphs::complete_graph(4);
  const auto k33 = graphs::complete_bipartite(3, 3);
  CHECK(count_cycles(k4) == 7);
  CHECK(count_cycles(k33) == 15);
  CHECK(row_circuits(graphs::graphic_matrix(k4)).size() == count_cycles(k4));
  CHECK(row_circuits(graphs::cographic_matrix(k33)).size() == count_bonds(k33));
  CHECK(row_circuits(b).size() == count_bonds(k33));
  CHECK(signed_circuits(graphs::graphic_matrix(k4)).size() == count_bonds(k4));
  CHECK(signed_circuits(graphs::cographic_matrix(k33)).size() == count_cycles(k33));

  const auto u = k33_universe();
  const auto gens = lawrence_generators(b, u);
  CHECK(to_string(gens.front(), u) == "x11y12y21x22 - y11x12x21y22");
}

TEST_CASE("toric f-vectors") {
  const auto k3 = graphs::graphic_matrix(graphs::complete_graph(3));
  const auto f3 = toric_fvector(k3, generic_w(k3));
  CHECK(f3 == std::vector<std::size_t>{1, 3, 2});
  CHECK(alternating_sum(f3) == 0);

  const auto b = k33_matrix();
  const auto f = toric_fvector(b, generic_w(b));
  CHECK(f == std::vector<std::size_t>{1, 15, 48, 54, 20});
  CHECK(alternating_sum(f) == 0);

  CHECK(toric_fvector(parse_matrix_string("1 1\n1\n"), {1}) == std::vector<std::size_t>{1, 1});

  CHECK_THROWS_AS(toric_fvector(parse_matrix_string("1 1\n2\n"), {1}), InvalidArgument);
  try {
    toric_fvector(b, {1, 1, 1, 1});
    FAIL("expected a genericity failure");
  } catch (const GenericityFailure& e) {
    CHECK(e.flat() == std::vector<std::size_t>{0, 4, 8});
  }
  CHECK(generic_w(b) == RationalVector{1, 2, 4, 8});
  CHECK(generic_w(b, 5) == RationalVector{1, 5, 25, 125});

  for (const auto& g : {graphs::complete_graph(4), graphs::cycle_graph(5), graphs::complete_bipartite(2, 3)}) {
    for (const auto& m : {graphs::graphic_matrix(g), graphs::cographic_matrix(g)}) {
      CHECK(alternating_sum(toric_fvector(m, generic_w(m))) == 0);
    }
  }
}

TEST_CASE("initial ideals") {
  const auto b = k33_matrix();
  const auto u = k33_universe();
  const auto ideal = initial_ideal(b, generic_w(b), u);
  CHECK(ideal.generators().size() == 15);
  CHECK(ideals::prime_decomposition_oriented({b, generic_w(b)}, u).size() == 81);

  // The displayed initial ideal, written with x variables before y variables.
  const char* displayed[] = {
      "x11x22y12y21",     "x11x23y13y21",     "x11x32y12y31",     "x11x33y13y31",     "x12x23y13y22",
      "x12x33y13y32",     "x21x32y22y31",     "x21x33y23y31",     "x22x33y23y32",     "x11x22x33y13y21y32",
      "x11x22x33y12y23y31", "x11x23x32y13y22y31", "x12x21x33y11y23y32", "x12x21x33y13y22y31", "x13x21x32y12y23y31"};
  std::set<ideals::Monomial> expected;
  for (auto text : displayed) expected.insert(mono(u, text));
  std::set<ideals::Monomial> actual(ideal.generators().begin(), ideal.generators().end());
  CHECK(actual == expected);

  const auto a = arrangement::parse_arrangement_string(kFourLines);
  const auto h = arrangement::homogenize(a);
  CHECK(initial_ideal(h.rows, h.g, ideals::Universe::xy_vars(4)).to_string() ==
        ideals::oriented_ideal(a).to_string());

  const auto pair = parse_matrix_string("2 1\n1\n1\n");
  CHECK(initial_ideal(pair, {1}, ideals::Universe::xy_vars(2)).to_string() == "<x1x2>");
  CHECK_THROWS_AS(initial_ideal(b, {1, 1, 1, 1}, u), GenericityFailure);
}
