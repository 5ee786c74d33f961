#include "cellres/toric/toric.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cellres/arrangement/arrangement.hpp"
#include "cellres/core/matroid.hpp"
#include "cellres/core/text.hpp"
#include "cellres/error.hpp"

namespace cellres::toric {

using core::Rational;

namespace {

SignedCircuit normalized(const RationalVector& v) {
  SignedCircuit c;
  int flip = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    int s = core::sign(v[i]);
    if (s == 0) continue;
    if (flip == 0) flip = s;
    (s * flip > 0 ? c.positive : c.negative).push_back(i);
  }
  return c;
}

// A kernel vector u of each (d-1)-subset of rows of rank d-1, with b u.
struct ImageCocircuit {
  RationalVector direction;
  RationalVector image;
};

std::vector<ImageCocircuit> image_cocircuits(const RationalMatrix& b) {
  const std::size_t d = b.cols();
  core::RowMatroid m(b);
  if (m.rank(core::full_set(b.rows())) != d) throw InvalidArgument("matrix must have full column rank");
  std::set<core::ElementSet> seen_flats;
  std::vector<ImageCocircuit> out;
  core::for_each_combination(b.rows(), d - 1, [&](const std::vector<std::size_t>& idx) {
    const core::ElementSet s = core::to_set(idx);
    if (m.rank(s) != d - 1) return;
    const core::ElementSet flat = m.closure(s);
    if (!seen_flats.insert(flat).second) return;
    const auto kernel = core::kernel_basis(b.select_rows(idx));
    ImageCocircuit c{kernel.front(), b.apply(kernel.front())};
    out.push_back(std::move(c));
  });
  return out;
}

ideals::Monomial term(const std::vector<core::BigInt>& v, const ideals::Universe& u, bool positive_on_x) {
  const std::size_t n = v.size();
  ideals::Monomial m(u.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<std::uint16_t>(core::BigInt(abs(v[i])).get_ui());
    if (v[i] > 0) m.set(positive_on_x ? u.x(i) : u.y(i), e);
    if (v[i] < 0) m.set(positive_on_x ? u.y(i) : u.x(i), e);
  }
  return m;
}

void require_xy(const RationalMatrix& b, const ideals::Universe& u) {
  if (!u.has_y() || u.ground_size() != b.rows()) throw InvalidArgument("variable universe does not match the matrix");
}

}  // namespace

RationalMatrix parse_matrix(std::istream& in) {
  const auto lines = core::read_token_lines(in);
  if (lines.empty()) throw ParseError(0, "empty matrix input");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError(header.number, "expected 'n d'");
  const long n = core::parse_long(header.tokens[0], header.number);
  const long d = core::parse_long(header.tokens[1], header.number);
  if (n < 1 || d < 1) throw ParseError(header.number, "matrix dimensions must be positive");
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " matrix rows");
  }
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto& line = lines[i + 1];
    if (line.tokens.size() != m.cols()) {
      throw ParseError(line.number, "expected " + std::to_string(d) + " entries");
    }
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = core::parse_long(line.tokens[j], line.number);
  }
  return m;
}

RationalMatrix parse_matrix_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

RationalMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_matrix(in);
}

bool is_unimodular(const RationalMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j).get_den() != 1) return false;
  if (core::rank(b) != b.cols()) return false;
  bool ok = true;
  core::for_each_combination(b.rows(), b.cols(), [&](const std::vector<std::size_t>& idx) {
    if (!ok) return;
    const Rational det = core::determinant(b.select_rows(idx));
    if (det != 0 && det != 1 && det != -1) ok = false;
  });
  return ok;
}

std::string SignedCircuit::to_string() const {
  std::vector<std::pair<std::size_t, char>> entries;
  for (auto i : positive) entries.emplace_back(i, '+');
  for (auto i : negative) entries.emplace_back(i, '-');
  std::sort(entries.begin(), entries.end());
  std::string s = "{";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(entries[k].first + 1) + entries[k].second;
  }
  return s + "}";
}

std::vector<SignedCircuit> signed_circuits(const RationalMatrix& b) {
  std::vector<SignedCircuit> out;
  for (const auto& c : image_cocircuits(b)) out.push_back(normalized(c.image));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedCircuit> row_circuits(const RationalMatrix& b) {
  std::set<SignedCircuit> out;
  for (const auto& c : arrangement::circuits(b)) {
    RationalVector v(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i];
    out.insert(normalized(v));
  }
  return {out.begin(), out.end()};
}

std::vector<Binomial> lawrence_generators(const RationalMatrix& b, const ideals::Universe& xy_universe) {
  require_xy(b, xy_universe);
  std::vector<std::pair<SignedCircuit, Binomial>> out;
  for (const auto& c : image_cocircuits(b)) {
    auto v = core::primitive_integer_vector(c.image);
    const auto first = std::find_if(v.begin(), v.end(), [](const core::BigInt& x) { return x != 0; });
    if (*first < 0)
      for (auto& x : v) x = -x;
    out.emplace_back(normalized(c.image), Binomial{term(v, xy_universe, true), term(v, xy_universe, false)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
  std::vector<Binomial> binomials;
  for (auto& [c, bin] : out) binomials.push_back(std::move(bin));
  return binomials;
}

std::string to_string(const Binomial& binomial, const ideals::Universe& xy_universe) {
  return ideals::to_string(binomial.plus, xy_universe) + " - " + ideals::to_string(binomial.minus, xy_universe);
}

void require_generic(const RationalMatrix& b, const RationalVector& w) {
  if (w.size() != b.cols()) throw InvalidArgument("w must have one entry per column");
  if (core::rank(b) != b.cols()) throw InvalidArgument("matrix must have full column rank");
  if (auto flat = arrangement::nongeneric_flat({b, w})) throw GenericityFailure(*flat);
}

RationalVector generic_w(const RationalMatrix& b, long start) {
  if (core::rank(b) != b.cols()) throw InvalidArgument("matrix must have full column rank");
  if (start < 1) throw InvalidArgument("the search for w starts at t >= 1");
  for (long t = start;; ++t) {
    RationalVector w(b.cols());
    Rational power = 1;
    for (auto& x : w) {
      x = power;
      power *= t;
    }
    if (!arrangement::nongeneric_flat({b, w})) return w;
  }
}

std::vector<std::size_t> toric_fvector(const RationalMatrix& b, const RationalVector& w) {
  if (!is_unimodular(b)) throw InvalidArgument("matrix is not unimodular");
  require_generic(b, w);
  std::vector<std::size_t> f{1};
  const auto bounded = arrangement::bounded_complex(arrangement::AffineRealization{b, w}).fvector();
  f.insert(f.end(), bounded.begin(), bounded.end());
  return f;
}

ideals::MonomialIdeal initial_ideal(const RationalMatrix& b, const RationalVector& w,
                                    const ideals::Universe& xy_universe) {
  require_xy(b, xy_universe);
  require_generic(b, w);
  auto ideal = ideals::oriented_ideal(arrangement::AffineRealization{b, w}, xy_universe);
  for (const auto& c : image_cocircuits(b)) {
    auto v = core::primitive_integer_vector(c.image);
    const bool forward = core::dot(w, c.direction) > 0;
    if (!ideal.contains(term(v, xy_universe, forward))) {
      throw Error("leading term of a Lawrence generator is missing from the initial ideal");
    }
  }
  return ideal;
}

}  // namespace cellres::toric
