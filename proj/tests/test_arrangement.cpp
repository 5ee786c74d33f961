#include <catch_amalgamated.hpp>

#include "cellres/arrangement/arrangement.hpp"
#include "cellres/error.hpp"

using namespace cellres;
using namespace cellres::arrangement;

namespace {

const char* kFourLines = "2 4\n0 1 0\n-1 1 0\n1 0 0\n1 1 100\n";

SignVector sv(const std::string& s) {
  SignVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v.set(i, s[i] == '+' ? 1 : (s[i] == '-' ? -1 : 0));
  return v;
}

}  // namespace

TEST_CASE("sign vector operations") {
  const SignVector x = sv("+0-0");
  const SignVector y = sv("-+0+");
  CHECK(x.compose(y) == sv("++-+"));
  CHECK(x.separation(y) == 0b0001);
  CHECK(sv("0+00").conforms_to(sv("++0-")));
  CHECK_FALSE(sv("0-00").conforms_to(sv("++0-")));
  CHECK(lex_less(sv("00"), sv("0+")));
  CHECK(lex_less(sv("0+"), sv("0-")));
  CHECK(lex_less(sv("+-"), sv("-0")));
  CHECK(sv("0-+0+").to_string() == "0-+0|+");
  CHECK((-x) == sv("-0+0"));
}

TEST_CASE("parsing reports line numbers") {
  CHECK_THROWS_AS(parse_arrangement_string("2 1\n1 x 0\n"), ParseError);
  try {
    parse_arrangement_string("# comment\n2 2\n1 0 0\n0 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_arrangement_string("2 1\n1 0 0\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_arrangement_string("1 1\n0 3\n"), InvalidArgument);
  const auto a = parse_arrangement_string("1 1\n1/2 -3/4\n");
  CHECK(a[0].offset == Rational(-3, 4));
}

TEST_CASE("vertices of the four-line example") {
  const auto a = parse_arrangement_string(kFourLines);
  const auto vs = vertices(a);
  REQUIRE(vs.size() == 4);
  std::vector<std::pair<RationalVector, std::string>> got;
  for (const auto& v : vs) got.emplace_back(v.point, v.sign.to_string());
  CHECK(got[0] == std::make_pair(RationalVector{0, 0}, std::string("000-|+")));
  CHECK(got[1] == std::make_pair(RationalVector{100, 0}, std::string("0-+0|+")));
  CHECK(got[2] == std::make_pair(RationalVector{50, 50}, std::string("+0+0|+")));
  CHECK(got[3] == std::make_pair(RationalVector{0, 100}, std::string("++00|+")));
}

TEST_CASE("vertex edge cases") {
  CHECK(vertices(parse_arrangement_string("1 1\n1 0\n")).size() == 1);
  CHECK(vertices(parse_arrangement_string("2 3\n1 0 0\n1 0 1\n0 1 0\n")).size() == 2);
  // Two parallel lines do not span the dual plane and are refused outright.
  CHECK_THROWS_AS(parse_arrangement_string("2 2\n1 0 0\n1 0 1\n"), InvalidArgument);
}

TEST_CASE("cocircuits") {
  const auto a = parse_arrangement_string(kFourLines);
  const auto cocs = cocircuits(a);
  for (const auto& c : cocs) CHECK(std::find(cocs.begin(), cocs.end(), -c) != cocs.end());
  CHECK(std::find(cocs.begin(), cocs.end(), sv("0-+0+")) != cocs.end());
  std::size_t with_g = 0;
  for (const auto& c : cocs) with_g += c[4] == 1;
  CHECK(with_g == 4);

  const auto line = cocircuits(parse_arrangement_string("1 1\n1 0\n"));
  CHECK(line.size() == 4);
  CHECK(std::find(line.begin(), line.end(), sv("+0")) != line.end());
  CHECK(std::find(line.begin(), line.end(), sv("0+")) != line.end());
}

TEST_CASE("covector closure and axioms") {
  const auto a = parse_arrangement_string(kFourLines);
  const auto l = covector_closure(homogenize(a));
  CHECK(check_covector_axioms(l));

  const auto empty = covector_closure({}, 3, 2);
  CHECK(empty.covectors().size() == 1);
  CHECK(check_covector_axioms(empty));

  CovectorSet broken(2, 1, {SignVector(2), sv("+0")});
  CHECK_FALSE(check_covector_axioms(broken));
  CovectorSet no_elimination(2, 1, {SignVector(2), sv("++"), sv("--"), sv("+-"), sv("-+")});
  CHECK_FALSE(check_covector_axioms(no_elimination));

  std::size_t bounded = 0;
  for (const auto& c : bounded_complex(a).cells) bounded += c.sign[4] == 1;
  CHECK(bounded == 11);
}

TEST_CASE("bounded complex of the four-line example") {
  const auto bc = bounded_complex(parse_arrangement_string(kFourLines));
  CHECK(bc.fvector() == std::vector<std::size_t>{4, 5, 2});
  for (const auto& c : bc.cells) {
    if (c.dim == 1) CHECK(c.facets.size() == 2);
  }
  std::vector<std::string> regions;
  for (const auto& c : bc.cells)
    if (c.dim == 2) regions.push_back(c.sign.to_string());
  CHECK(regions == std::vector<std::string>{"+++-|+", "+-+-|+"});
  // Two parallel lines in the plane: no vertex exists.
  AffineRealization strip{RationalMatrix::from_rows({{1, 0, 0}, {1, 0, -1}}), {0, 0, 1}};
  CHECK_THROWS_AS(bounded_complex(strip), EmptyBoundedComplex);
}

TEST_CASE("general position of g") {
  CHECK(general_position_g(parse_arrangement_string(kFourLines)));
  const auto parallel = parse_arrangement_string("2 3\n1 0 0\n1 0 1\n0 1 0\n");
  CHECK_FALSE(general_position_g(parallel));
  CHECK(nongeneric_flat(homogenize(parallel)) == std::vector<std::size_t>{0, 1});
  // A central arrangement: all hyperplanes meet, so g avoids every flat.
  CHECK(general_position_g(parse_arrangement_string("2 3\n1 0 0\n0 1 0\n1 1 0\n")));
}

TEST_CASE("restriction and contraction") {
  const auto a = parse_arrangement_string(kFourLines);
  const auto r = homogenize(a);
  const auto l = covector_closure(r);
  const auto same = restrict(l, 0b11111);
  CHECK(same.covectors() == l.covectors());

  const auto only_g = restrict(l, 0b10000);
  CHECK(only_g.covectors() == std::vector<SignVector>{sv("0"), sv("+"), sv("-")});

  const auto on_h3 = contract(l, 0b00100);
  const auto induced = covector_closure(restrict_to_hyperplane(r, 2));
  CHECK(on_h3.covectors() == induced.covectors());
  CHECK(on_h3.g() == 3);
}
