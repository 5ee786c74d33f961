#include "cellres/arrangement/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "cellres/core/matroid.hpp"
#include "cellres/core/text.hpp"
#include "cellres/error.hpp"

namespace cellres::arrangement {

using core::contains;
using core::for_each_combination;
using core::full_set;
using core::singleton;

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)) {
  if (dim_ == 0) throw InvalidArgument("arrangement dimension must be positive");
  if (hyperplanes_.size() > 63) throw InvalidArgument("at most 63 hyperplanes are supported");
  RationalMatrix normals(hyperplanes_.size(), dim_);
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    const auto& h = hyperplanes_[i];
    if (h.normal.size() != dim_) {
      throw InvalidArgument("hyperplane " + std::to_string(i + 1) + " has the wrong dimension");
    }
    bool zero = true;
    for (std::size_t j = 0; j < dim_; ++j) {
      normals(i, j) = h.normal[j];
      zero = zero && h.normal[j] == 0;
    }
    if (zero) throw InvalidArgument("hyperplane " + std::to_string(i + 1) + " has a zero normal");
  }
  if (core::rank(normals) != dim_) {
    throw InvalidArgument("the normals do not span the dual space");
  }
}

Arrangement parse_arrangement(std::istream& in) {
  const auto lines = core::read_token_lines(in);
  if (lines.empty()) throw ParseError(0, "empty arrangement input");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError(header.number, "expected header 'd n'");
  const long d = core::parse_long(header.tokens[0], header.number);
  const long n = core::parse_long(header.tokens[1], header.number);
  if (d <= 0 || n < 0) throw ParseError(header.number, "header values out of range");
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    const std::size_t where = lines.size() > static_cast<std::size_t>(n) + 1
                                  ? lines[static_cast<std::size_t>(n) + 1].number
                                  : 0;
    throw ParseError(where, "expected " + std::to_string(n) + " hyperplane lines, found " +
                                std::to_string(lines.size() - 1));
  }
  std::vector<Hyperplane> hs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != static_cast<std::size_t>(d) + 1) {
      throw ParseError(line.number, "expected " + std::to_string(d + 1) + " rationals");
    }
    Hyperplane h;
    for (std::size_t j = 0; j < line.tokens.size(); ++j) {
      auto v = core::parse_rational(line.tokens[j]);
      if (!v) throw ParseError(line.number, "malformed rational '" + line.tokens[j] + "'");
      if (j + 1 < line.tokens.size()) {
        h.normal.push_back(*v);
      } else {
        h.offset = *v;
      }
    }
    hs.push_back(std::move(h));
  }
  return Arrangement(static_cast<std::size_t>(d), std::move(hs));
}

Arrangement parse_arrangement_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_arrangement(ss);
}

Arrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_arrangement(in);
}

RationalMatrix AffineRealization::with_g() const {
  RationalMatrix m(rows.rows() + 1, rows.cols());
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) m(i, j) = rows(i, j);
  for (std::size_t j = 0; j < rows.cols(); ++j) m(rows.rows(), j) = g[j];
  return m;
}

AffineRealization homogenize(const Arrangement& a) {
  const std::size_t d = a.dim();
  AffineRealization r{RationalMatrix(a.size(), d + 1), RationalVector(d + 1)};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) r.rows(i, j) = a[i].normal[j];
    r.rows(i, d) = -a[i].offset;
  }
  r.g[d] = 1;
  return r;
}

namespace {

SignVector signs_of(const RationalMatrix& vectors, const RationalVector& u) {
  SignVector s(vectors.rows());
  const RationalVector values = vectors.apply(u);
  for (std::size_t i = 0; i < values.size(); ++i) s.set(i, core::sign(values[i]));
  return s;
}

}  // namespace

std::vector<Vertex> vertices(const Arrangement& a) {
  const std::size_t d = a.dim();
  RationalMatrix normals(a.size(), d);
  RationalVector offsets(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) normals(i, j) = a[i].normal[j];
    offsets[i] = a[i].offset;
  }
  std::set<SignVector, SignVectorLess> seen;
  std::vector<Vertex> out;
  for_each_combination(a.size(), d, [&](const std::vector<std::size_t>& idx) {
    const RationalMatrix sub = normals.select_rows(idx);
    if (core::rank(sub) != d) return;
    RationalVector b;
    for (auto i : idx) b.push_back(offsets[i]);
    const auto point = core::solve(sub, b);
    SignVector s(a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      s.set(i, core::sign(core::dot(a[i].normal, *point) - offsets[i]));
    }
    s.set(a.size(), 1);
    if (seen.insert(s).second) out.push_back({*point, s});
  });
  std::sort(out.begin(), out.end(),
            [](const Vertex& x, const Vertex& y) { return lex_less(x.sign, y.sign); });
  return out;
}

std::vector<SignVector> cocircuits(const AffineRealization& r) {
  const RationalMatrix all = r.with_g();
  const std::size_t dim = r.ambient_dim();
  if (core::rank(all) != dim) {
    throw InvalidArgument("the rows together with g must span the ambient space");
  }
  std::set<SignVector, SignVectorLess> found;
  for_each_combination(all.rows(), dim - 1, [&](const std::vector<std::size_t>& idx) {
    const RationalMatrix sub = all.select_rows(idx);
    if (idx.size() != core::rank(sub)) return;
    auto kernel = core::kernel_basis(sub);
    if (kernel.size() != 1) return;
    const SignVector s = signs_of(all, kernel.front());
    found.insert(s);
    found.insert(-s);
  });
  return {found.begin(), found.end()};
}

std::vector<SignVector> cocircuits(const Arrangement& a) { return cocircuits(homogenize(a)); }

std::vector<SignVector> circuits(const RationalMatrix& vectors) {
  const std::size_t n = vectors.rows();
  const std::size_t r = core::rank(vectors);
  std::set<SignVector, SignVectorLess> found;
  for (std::size_t k = 1; k <= std::min(n, r + 1); ++k) {
    for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
      const auto kernel = core::kernel_basis(vectors.select_rows(idx).transpose());
      if (kernel.size() != 1) return;
      SignVector s(n);
      for (std::size_t j = 0; j < idx.size(); ++j) {
        const int sg = core::sign(kernel.front()[j]);
        if (sg == 0) return;
        s.set(idx[j], sg);
      }
      found.insert(s);
      found.insert(-s);
    });
  }
  return {found.begin(), found.end()};
}

CovectorSet::CovectorSet(std::size_t size, std::size_t g, std::vector<SignVector> covectors)
    : size_(size), g_(g), covectors_(std::move(covectors)) {
  std::sort(covectors_.begin(), covectors_.end(), lex_less);
  covectors_.erase(std::unique(covectors_.begin(), covectors_.end()), covectors_.end());
}

bool CovectorSet::contains(const SignVector& x) const {
  return std::binary_search(covectors_.begin(), covectors_.end(), x, lex_less);
}

CovectorSet covector_closure(const std::vector<SignVector>& cocs, std::size_t size, std::size_t g) {
  std::unordered_set<SignVector, SignVectorHash> all;
  all.insert(SignVector(size));
  std::vector<SignVector> frontier;
  for (const auto& c : cocs) {
    if (all.insert(c).second) frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<SignVector> next;
    for (const auto& x : frontier) {
      for (const auto& c : cocs) {
        if ((c.support() & ~x.support()) == 0) continue;
        SignVector y = x.compose(c);
        if (all.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return CovectorSet(size, g, {all.begin(), all.end()});
}

CovectorSet covector_closure(const AffineRealization& r) {
  return covector_closure(cocircuits(r), r.size() + 1, r.g_index());
}

bool check_covector_axioms(const CovectorSet& l) {
  const auto& cov = l.covectors();
  if (!l.contains(SignVector(l.size()))) return false;
  for (const auto& x : cov) {
    if (!l.contains(-x)) return false;
  }
  for (const auto& x : cov)
    for (const auto& y : cov)
      if (!l.contains(x.compose(y))) return false;

  std::vector<std::vector<const SignVector*>> vanishing(l.size());
  for (const auto& z : cov)
    for (std::size_t e = 0; e < l.size(); ++e)
      if (z[e] == 0) vanishing[e].push_back(&z);

  const ElementSet ground = full_set(l.size());
  for (const auto& x : cov) {
    for (const auto& y : cov) {
      const ElementSet sep = x.separation(y);
      if (sep == 0) continue;
      const SignVector xy = x.compose(y);
      const ElementSet fixed = ground & ~sep;
      for (auto e : core::elements(sep)) {
        bool ok = false;
        for (const SignVector* z : vanishing[e]) {
          if ((z->plus() & fixed) == (xy.plus() & fixed) &&
              (z->minus() & fixed) == (xy.minus() & fixed)) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

namespace {

ElementSet compress(ElementSet bits, ElementSet keep) {
  ElementSet out = 0;
  std::size_t pos = 0;
  for (auto e : core::elements(keep)) {
    if (contains(bits, e)) out |= singleton(pos);
    ++pos;
  }
  return out;
}

SignVector compress(const SignVector& v, ElementSet keep) {
  return {core::cardinality(keep), compress(v.plus(), keep), compress(v.minus(), keep)};
}

}  // namespace

CovectorSet restrict(const CovectorSet& l, ElementSet keep) {
  keep &= full_set(l.size());
  if (!contains(keep, l.g())) throw InvalidArgument("restriction must keep g");
  std::vector<SignVector> out;
  for (const auto& x : l.covectors()) out.push_back(compress(x, keep));
  const std::size_t g = core::cardinality(keep & (singleton(l.g()) - 1));
  return CovectorSet(core::cardinality(keep), g, std::move(out));
}

CovectorSet contract(const CovectorSet& l, ElementSet zero_out) {
  zero_out &= full_set(l.size());
  if (contains(zero_out, l.g())) throw InvalidArgument("contraction must not remove g");
  const ElementSet keep = full_set(l.size()) & ~zero_out;
  std::vector<SignVector> out;
  for (const auto& x : l.covectors()) {
    if ((x.support() & zero_out) == 0) out.push_back(compress(x, keep));
  }
  const std::size_t g = core::cardinality(keep & (singleton(l.g()) - 1));
  return CovectorSet(core::cardinality(keep), g, std::move(out));
}

AffineRealization restrict_to_hyperplane(const AffineRealization& r, std::size_t i) {
  const std::size_t skip[] = {i};
  const RationalMatrix basis_rows = RationalMatrix::from_rows(
      core::kernel_basis(r.rows.select_rows(skip)), r.ambient_dim());
  const RationalMatrix coords = basis_rows.transpose();  // ambient x (dim-1)
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < r.size(); ++j)
    if (j != i) others.push_back(j);
  AffineRealization out;
  out.rows = r.rows.select_rows(others) * coords;
  out.g = coords.transpose().apply(r.g);
  return out;
}

std::vector<std::size_t> BoundedComplex::fvector() const {
  std::vector<std::size_t> f;
  for (const auto& c : cells) {
    const auto d = static_cast<std::size_t>(c.dim);
    if (f.size() <= d) f.resize(d + 1);
    ++f[d];
  }
  return f;
}

std::size_t BoundedComplex::dimension() const {
  return cells.empty() ? 0 : static_cast<std::size_t>(cells.back().dim);
}

BoundedComplex bounded_complex(const AffineRealization& r) {
  const std::size_t n = r.size();
  const std::size_t g = r.g_index();
  if (core::rank(r.with_g()) != r.ambient_dim()) throw EmptyBoundedComplex();
  const auto cocs = cocircuits(r);
  std::vector<SignVector> at_infinity;
  for (const auto& c : cocs)
    if (c[g] == 0) at_infinity.push_back(c);
  const CovectorSet all = covector_closure(cocs, n + 1, g);

  core::RowMatroid matroid(r.rows);
  const ElementSet rows_mask = full_set(n);
  const auto dim = static_cast<int>(r.ambient_dim());

  BoundedComplex bc;
  bc.ground_size = n;
  for (const auto& x : all.covectors()) {
    if (x[g] != 1) continue;
    const bool bounded = std::none_of(at_infinity.begin(), at_infinity.end(),
                                      [&](const SignVector& c) { return c.conforms_to(x); });
    if (!bounded) continue;
    const int cell_dim = dim - 1 - static_cast<int>(matroid.rank(x.zero_set() & rows_mask));
    bc.cells.push_back({x, cell_dim, {}});
  }
  if (bc.cells.empty()) throw EmptyBoundedComplex();
  std::stable_sort(bc.cells.begin(), bc.cells.end(),
                   [](const BoundedCell& a, const BoundedCell& b) { return a.dim < b.dim; });
  for (std::size_t i = 0; i < bc.cells.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (bc.cells[j].dim + 1 == bc.cells[i].dim && bc.cells[j].sign.conforms_to(bc.cells[i].sign)) {
        bc.cells[i].facets.push_back(j);
      }
    }
  }
  return bc;
}

BoundedComplex bounded_complex(const Arrangement& a) { return bounded_complex(homogenize(a)); }

std::optional<std::vector<std::size_t>> nongeneric_flat(const AffineRealization& r) {
  core::RowMatroid rows(r.rows);
  const RationalMatrix all = r.with_g();
  core::RowMatroid with_g(all);
  const std::size_t k = std::min(r.ambient_dim() - 1, rows.rank());
  const ElementSet g_bit = singleton(r.g_index());
  std::optional<std::vector<std::size_t>> bad;
  for_each_combination(r.size(), k, [&](const std::vector<std::size_t>& idx) {
    if (bad) return;
    const ElementSet s = core::to_set(idx);
    if (rows.rank(s) != k) return;
    if (with_g.rank(s | g_bit) == k) bad = core::elements(rows.closure(s));
  });
  return bad;
}

bool general_position_g(const AffineRealization& r) { return !nongeneric_flat(r).has_value(); }

bool general_position_g(const Arrangement& a) { return general_position_g(homogenize(a)); }

}  // namespace cellres::arrangement
