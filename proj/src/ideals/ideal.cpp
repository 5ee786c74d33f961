#include "cellres/ideals/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cellres/core/matroid.hpp"
#include "cellres/error.hpp"

namespace cellres::ideals {

using arrangement::AffineRealization;
using arrangement::SignVector;

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    // Divisors have no larger degree, so they already sit in `out`.
    const bool redundant =
        std::any_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

Monomial specialize_monomial(const Monomial& m, const Universe& u) {
  const std::size_t n = u.ground_size();
  Monomial out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, static_cast<std::uint16_t>(m[i] + m[n + i]));
  return out;
}

void require_universe(const Universe& u, std::size_t n, bool with_y) {
  if (u.ground_size() != n || u.has_y() != with_y) {
    throw InvalidArgument("variable universe does not match the arrangement");
  }
}

}  // namespace

MonomialIdeal::MonomialIdeal(Universe universe, std::vector<Monomial> generators)
    : universe_(std::move(universe)), gens_(minimalize(std::move(generators))) {
  for (const auto& g : gens_) {
    if (g.nvars() != universe_.size()) throw InvalidArgument("generator outside the universe");
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

std::string MonomialIdeal::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += ideals::to_string(gens_[i], universe_);
  }
  return s + ">";
}

std::string MonomialPrime::to_string(const Universe& u) const {
  std::vector<std::size_t> ordered;
  for (auto v : u.display_order())
    if (std::binary_search(variables.begin(), variables.end(), v)) ordered.push_back(v);
  std::string s = "<";
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (i) s += ", ";
    s += u.name(ordered[i]);
  }
  return s + ">";
}

Monomial label_x(const SignVector& z, std::size_t n) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i)
    if (z[i] != 0) m.set(i, 1);
  return m;
}

Monomial label_xy(const SignVector& z, std::size_t n) {
  Monomial m(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i] > 0) m.set(i, 1);
    if (z[i] < 0) m.set(n + i, 1);
  }
  return m;
}

namespace {

std::vector<SignVector> vertex_signs(const AffineRealization& r) {
  std::vector<SignVector> out;
  for (const auto& c : arrangement::cocircuits(r))
    if (c[r.g_index()] > 0) out.push_back(c);
  if (out.empty()) throw EmptyBoundedComplex();
  return out;
}

}  // namespace

MonomialIdeal matroid_ideal(const AffineRealization& r, const Universe& x_universe) {
  require_universe(x_universe, r.size(), false);
  std::vector<Monomial> gens;
  for (const auto& v : vertex_signs(r)) gens.push_back(label_x(v, r.size()));
  return MonomialIdeal(x_universe, std::move(gens));
}

MonomialIdeal oriented_ideal(const AffineRealization& r, const Universe& xy_universe) {
  require_universe(xy_universe, r.size(), true);
  std::vector<Monomial> gens;
  for (const auto& v : vertex_signs(r)) gens.push_back(label_xy(v, r.size()));
  return MonomialIdeal(xy_universe, std::move(gens));
}

MonomialIdeal matroid_ideal(const arrangement::Arrangement& a) {
  return matroid_ideal(arrangement::homogenize(a), Universe::x_vars(a.size()));
}

MonomialIdeal oriented_ideal(const arrangement::Arrangement& a) {
  return oriented_ideal(arrangement::homogenize(a), Universe::xy_vars(a.size()));
}

MonomialIdeal specialize(const MonomialIdeal& ideal) {
  const Universe& u = ideal.universe();
  if (!u.has_y()) return ideal;
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(specialize_monomial(g, u));
  return MonomialIdeal(u.x_part(), std::move(gens));
}

std::vector<MonomialPrime> prime_decomposition_oriented(const AffineRealization& r,
                                                        const Universe& xy_universe) {
  require_universe(xy_universe, r.size(), true);
  if (auto flat = arrangement::nongeneric_flat(r)) throw NotGeneralPosition(*flat);
  const std::size_t n = r.size();
  const std::size_t g = r.g_index();
  std::set<MonomialPrime> primes;
  for (const auto& c : arrangement::circuits(r.with_g())) {
    if (c[g] >= 0) continue;
    MonomialPrime p;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] > 0) p.variables.push_back(xy_universe.x(i));
      if (c[i] < 0) p.variables.push_back(xy_universe.y(i));
    }
    std::sort(p.variables.begin(), p.variables.end());
    primes.insert(std::move(p));
  }
  return {primes.begin(), primes.end()};
}

std::vector<MonomialPrime> basis_decomposition(const AffineRealization& r,
                                               const Universe& x_universe) {
  require_universe(x_universe, r.size(), false);
  core::RowMatroid m(r.rows);
  std::vector<MonomialPrime> out;
  for (auto b : m.bases()) out.push_back({core::elements(b)});
  std::sort(out.begin(), out.end());
  return out;
}

MonomialPrime specialize(const MonomialPrime& p, const Universe& xy_universe) {
  std::set<std::size_t> vars;
  for (auto v : p.variables) vars.insert(xy_universe.element_of(v));
  return {{vars.begin(), vars.end()}};
}

MonomialIdeal intersect_primes(const std::vector<MonomialPrime>& primes, const Universe& u) {
  std::vector<Monomial> current{Monomial(u.size())};
  for (const auto& p : primes) {
    std::vector<Monomial> next;
    for (const auto& m : current) {
      const bool inside = std::any_of(p.variables.begin(), p.variables.end(),
                                      [&](std::size_t v) { return m[v] > 0; });
      if (inside) {
        next.push_back(m);
        continue;
      }
      for (auto v : p.variables) {
        Monomial t = m;
        t.set(v, 1);
        next.push_back(std::move(t));
      }
    }
    current = minimalize(std::move(next));
  }
  return MonomialIdeal(u, std::move(current));
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw NotSquarefree();
  using core::ElementSet;
  std::vector<ElementSet> covers{0};
  for (const auto& g : ideal.generators()) {
    const ElementSet s = g.support_mask();
    std::set<ElementSet> next;
    for (auto c : covers) {
      if (c & s) {
        next.insert(c);
        continue;
      }
      for (auto v : core::elements(s)) next.insert(c | core::singleton(v));
    }
    std::vector<ElementSet> sorted(next.begin(), next.end());
    std::sort(sorted.begin(), sorted.end(),
              [](ElementSet a, ElementSet b) { return core::cardinality(a) < core::cardinality(b); });
    covers.clear();
    for (auto c : sorted) {
      const bool redundant =
          std::any_of(covers.begin(), covers.end(), [&](ElementSet k) { return (k & ~c) == 0; });
      if (!redundant) covers.push_back(c);
    }
  }
  std::vector<MonomialPrime> out;
  for (auto c : covers) out.push_back({core::elements(c)});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_matroid_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw NotSquarefree();
  const auto& gens = ideal.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const Monomial l = gens[a].lcm(gens[b]);
      for (std::size_t v = 0; v < l.nvars(); ++v) {
        if (gens[a][v] == 0 || gens[b][v] == 0) continue;
        Monomial q = l;
        q.set(v, 0);
        if (!ideal.contains(q)) return false;
      }
    }
  }
  return true;
}

std::string MonomialSum::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const core::BigInt mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += ideals::to_string(m, universe);
    }
  }
  return s;
}

MonomialSum hilbert_numerator(const arrangement::BoundedComplex& b, const Universe& xy_universe) {
  require_universe(xy_universe, b.ground_size, true);
  std::map<Monomial, core::BigInt> acc;
  acc[Monomial(xy_universe.size())] += 1;
  for (const auto& cell : b.cells) {
    const Monomial m = label_xy(cell.sign, b.ground_size);
    acc[m] += (cell.dim % 2 == 0) ? -1 : 1;
  }
  MonomialSum sum{xy_universe, {}};
  for (auto& [m, c] : acc)
    if (c != 0) sum.terms.emplace_back(m, c);
  std::sort(sum.terms.begin(), sum.terms.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  return sum;
}

}  // namespace cellres::ideals
