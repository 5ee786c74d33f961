#include "cellres/resolution/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cellres/error.hpp"

namespace cellres::resolution {

using core::RationalMatrix;
using core::RationalVector;

std::vector<std::size_t> LabeledComplex::fvector() const {
  std::vector<std::size_t> f;
  for (const auto& c : cells) {
    if (c.dim < 0) continue;
    const auto d = static_cast<std::size_t>(c.dim);
    if (f.size() <= d) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

CellPoset bounded_cell_poset(const arrangement::BoundedComplex& b, const Universe& u) {
  if (u.ground_size() != b.ground_size) {
    throw InvalidArgument("variable universe does not match the bounded complex");
  }
  CellPoset p;
  p.universe = u;
  p.dims.push_back(-1);
  p.facets.emplace_back();
  p.labels.emplace_back(u.size());
  for (const auto& cell : b.cells) {
    p.dims.push_back(cell.dim);
    if (cell.dim == 0) {
      p.facets.push_back({0});
      p.labels.push_back(u.has_y() ? ideals::label_xy(cell.sign, b.ground_size)
                                   : ideals::label_x(cell.sign, b.ground_size));
      continue;
    }
    std::vector<std::size_t> facets;
    Monomial label(u.size());
    for (auto f : cell.facets) {
      facets.push_back(f + 1);
      label = label.lcm(p.labels[f + 1]);
    }
    p.facets.push_back(std::move(facets));
    p.labels.push_back(std::move(label));
  }
  return p;
}

LabeledComplex incidence_signs(const CellPoset& p) {
  LabeledComplex out;
  out.universe = p.universe;
  out.cells.resize(p.dims.size());
  for (std::size_t c = 0; c < p.dims.size(); ++c) {
    auto& cell = out.cells[c];
    cell.dim = p.dims[c];
    cell.label = p.labels[c];
    const auto& facets = p.facets[c];
    if (facets.empty()) {
      if (cell.dim >= 0) throw NonOrientableCell(c);
      continue;
    }
    if (cell.dim == 0) {
      if (facets.size() != 1) throw NonOrientableCell(c);
      cell.facets.emplace_back(facets.front(), 1);
      continue;
    }
    // ridge -> (position of facet within `facets`, sign of facet over ridge)
    std::map<std::size_t, std::vector<std::pair<std::size_t, int>>> ridges;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      const auto& f = out.cells[facets[i]];
      if (f.dim != cell.dim - 1) throw NonOrientableCell(c);
      for (const auto& [r, s] : f.facets) ridges[r].emplace_back(i, s);
    }
    std::vector<std::vector<std::pair<std::size_t, int>>> links(facets.size());
    for (const auto& [r, users] : ridges) {
      if (users.size() != 2) throw NonOrientableCell(c);
      const int product = users[0].second * users[1].second;
      links[users[0].first].emplace_back(users[1].first, product);
      links[users[1].first].emplace_back(users[0].first, product);
    }
    std::vector<int> sign(facets.size(), 0);
    sign[0] = 1;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (const auto& [j, product] : links[i]) {
        const int want = -sign[i] * product;
        if (sign[j] == 0) {
          sign[j] = want;
          stack.push_back(j);
        } else if (sign[j] != want) {
          throw NonOrientableCell(c);
        }
      }
    }
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (sign[i] == 0) throw NonOrientableCell(c);
      cell.facets.emplace_back(facets[i], sign[i]);
    }
  }
  return out;
}

LabeledComplex labeled_bounded_complex(const arrangement::BoundedComplex& b, const Universe& u) {
  return incidence_signs(bounded_cell_poset(b, u));
}

bool diamonds_hold(const LabeledComplex& c) {
  for (const auto& cell : c.cells) {
    std::map<std::size_t, std::pair<int, int>> through;  // ridge -> (count, signed sum)
    for (const auto& [f, s1] : cell.facets) {
      for (const auto& [r, s2] : c.cells[f].facets) {
        auto& entry = through[r];
        ++entry.first;
        entry.second += s1 * s2;
      }
    }
    for (const auto& [r, entry] : through)
      if (entry.first != 2 || entry.second != 0) return false;
  }
  return true;
}

LabeledComplex essential_subcomplex(const LabeledComplex& c, const Monomial& m) {
  std::vector<std::size_t> new_index(c.cells.size(), c.cells.size());
  LabeledComplex out;
  out.universe = c.universe;
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    if (!c.cells[i].label.divides(m)) continue;
    new_index[i] = out.cells.size();
    LabeledCell cell{c.cells[i].dim, c.cells[i].label, {}};
    for (const auto& [f, s] : c.cells[i].facets) cell.facets.emplace_back(new_index[f], s);
    out.cells.push_back(std::move(cell));
  }
  return out;
}

std::vector<std::size_t> GradedChainComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& level : degrees) r.push_back(level.size());
  return r;
}

GradedChainComplex cellular_complex(const LabeledComplex& c) {
  GradedChainComplex out;
  out.universe = c.universe;
  out.lowest = -1;
  int top = -1;
  for (const auto& cell : c.cells) top = std::max(top, cell.dim);
  const auto levels = static_cast<std::size_t>(top + 2);
  out.degrees.resize(levels);
  std::vector<std::size_t> position(c.cells.size());
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    auto& level = out.degrees[static_cast<std::size_t>(c.cells[i].dim + 1)];
    position[i] = level.size();
    level.push_back(c.cells[i].label);
  }
  out.differentials.emplace_back(0, out.degrees[0].size());
  for (std::size_t k = 1; k < levels; ++k) {
    out.differentials.emplace_back(out.degrees[k - 1].size(), out.degrees[k].size());
  }
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    const auto k = static_cast<std::size_t>(c.cells[i].dim + 1);
    for (const auto& [f, s] : c.cells[i].facets) out.differentials[k](position[f], position[i]) = s;
  }
  return out;
}

bool differentials_compose_to_zero(const GradedChainComplex& c) {
  for (std::size_t k = 2; k < c.differentials.size(); ++k) {
    if (!(c.differentials[k - 1] * c.differentials[k]).is_zero()) return false;
  }
  return true;
}

namespace {

template <typename Pred>
bool all_entries(const GradedChainComplex& c, Pred pred) {
  for (std::size_t k = 1; k < c.differentials.size(); ++k) {
    const auto& d = c.differentials[k];
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (d(i, j) != 0 && !pred(c.degrees[k - 1][i], c.degrees[k][j])) return false;
  }
  return true;
}

// Ranks of the restricted differentials, over GF(p) when p != 0 (nullopt if
// some entry cannot be reduced) and over Q otherwise.
std::optional<std::vector<std::size_t>> strand_ranks(const GradedChainComplex& c,
                                                     const std::vector<std::vector<std::size_t>>& sel,
                                                     std::uint64_t p) {
  std::vector<std::size_t> ranks(c.degrees.size() + 1, 0);
  for (std::size_t k = 1; k < c.degrees.size(); ++k) {
    const auto& rows = sel[k - 1];
    const auto& cols = sel[k];
    if (rows.empty() || cols.empty()) continue;
    const auto& d = c.differentials[k];
    if (p == 0) {
      ranks[k] = core::rank(d.select_rows(rows).select_cols(cols));
      continue;
    }
    std::vector<std::uint64_t> entries(rows.size() * cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& v = d(rows[i], cols[j]);
        if (v == 0) continue;
        auto r = core::reduce_mod(v, p);
        if (!r) return std::nullopt;
        entries[i * cols.size() + j] = *r;
      }
    }
    ranks[k] = core::rank_mod_p(std::move(entries), rows.size(), cols.size(), p);
  }
  return ranks;
}

bool strand_exact(const std::vector<std::vector<std::size_t>>& sel, const std::vector<std::size_t>& ranks) {
  for (std::size_t k = 0; k < sel.size(); ++k) {
    if (sel[k].size() != ranks[k] + ranks[k + 1]) return false;
  }
  return true;
}

}  // namespace

bool degrees_compatible(const GradedChainComplex& c) {
  return all_entries(c, [](const Monomial& target, const Monomial& source) { return target.divides(source); });
}

bool is_minimal(const GradedChainComplex& c) {
  return all_entries(c, [](const Monomial& target, const Monomial& source) { return target != source; });
}

bool verify_graded_exactness(const GradedChainComplex& c, Monomial* witness,
                             const ExactnessOptions& options) {
  if (!differentials_compose_to_zero(c) || !degrees_compatible(c)) {
    if (witness) *witness = Monomial(c.universe.size());
    return false;
  }
  if (c.degrees.size() < 2) return c.degrees.empty();
  for (const auto& m : ideals::lcm_lattice(c.degrees[1])) {
    std::vector<std::vector<std::size_t>> sel(c.degrees.size());
    for (std::size_t k = 0; k < c.degrees.size(); ++k)
      for (std::size_t i = 0; i < c.degrees[k].size(); ++i)
        if (c.degrees[k][i].divides(m)) sel[k].push_back(i);

    // Exactness mod p forces exactness over Q: ranks can only drop mod p,
    // while rank d_k + rank d_{k+1} never exceeds the level size.
    auto fast = strand_ranks(c, sel, core::kLargePrime);
    bool exact = fast && strand_exact(sel, *fast);
    if (!exact) exact = strand_exact(sel, *strand_ranks(c, sel, 0));
    if (exact && options.torsion_sentinel) {
      for (std::uint64_t p : {2ULL, 3ULL}) {
        auto small = strand_ranks(c, sel, p);
        if (small && !strand_exact(sel, *small)) exact = false;
      }
    }
    if (!exact) {
      if (witness) *witness = m;
      return false;
    }
  }
  return true;
}

bool multidegrees_distinct(const GradedChainComplex& c) {
  for (const auto& level : c.degrees) {
    std::set<Monomial> seen(level.begin(), level.end());
    if (seen.size() != level.size()) return false;
  }
  return true;
}

ideals::MonomialSum euler_numerator(const GradedChainComplex& c) {
  std::map<Monomial, core::BigInt> acc;
  for (std::size_t k = 0; k < c.degrees.size(); ++k)
    for (const auto& m : c.degrees[k]) acc[m] += (k % 2 == 0) ? 1 : -1;
  ideals::MonomialSum sum{c.universe, {}};
  for (auto& [m, v] : acc)
    if (v != 0) sum.terms.emplace_back(m, v);
  std::sort(sum.terms.begin(), sum.terms.end(),
            [](const auto& a, const auto& b) { return ideals::canonical_less(a.first, b.first); });
  return sum;
}

ResolutionReport verify_cellular_resolution(const LabeledComplex& c, const ExactnessOptions& options) {
  ResolutionReport report;
  Monomial witness;
  report.exact = verify_graded_exactness(cellular_complex(c), &witness, options);
  if (!report.exact) report.witness = witness;
  report.minimal = true;
  for (const auto& cell : c.cells)
    for (const auto& [f, s] : cell.facets)
      if (c.cells[f].label == cell.label) report.minimal = false;
  report.betti = c.fvector();
  return report;
}

LabeledPoset::LabeledPoset(FiniteLattice lattice, Universe universe, std::vector<Monomial> atom_labels)
    : lattice_(std::move(lattice)), universe_(std::move(universe)) {
  const auto& l = lattice_;
  const auto atoms = l.atoms();
  if (atom_labels.size() != atoms.size()) throw InvalidArgument("one label per atom is required");
  labels_.assign(l.size(), Monomial(universe_.size()));
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (l.leq(atoms[i], x)) labels_[x] = labels_[x].lcm(atom_labels[i]);

  std::set<Monomial> distinct(labels_.begin(), labels_.end());
  if (distinct.size() != labels_.size()) throw NotComplete("two poset elements share a label");
  for (const auto& a : ideals::lcm_lattice(atom_labels)) {
    std::vector<std::size_t> below;
    for (std::size_t x = 0; x < l.size(); ++x)
      if (labels_[x].divides(a)) below.push_back(x);
    std::size_t maximal = 0;
    for (auto x : below) {
      const bool is_max = std::none_of(below.begin(), below.end(),
                                       [&](std::size_t y) { return y != x && l.leq(x, y); });
      maximal += is_max;
    }
    if (maximal != 1) {
      throw NotComplete("degree " + ideals::to_string(a, universe_) + " has no unique maximal element");
    }
  }
}

LabeledPoset matroid_poset(const core::RowMatroid& m, const Universe& x_universe) {
  FiniteLattice flats = flat_lattice(m).dual();
  std::vector<Monomial> labels;
  for (auto h : flats.atoms()) {
    Monomial label(x_universe.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (!core::contains(flats.sets()[h], i)) label.set(i, 1);
    labels.push_back(std::move(label));
  }
  return LabeledPoset(std::move(flats), x_universe, std::move(labels));
}

namespace {

using Chain = std::vector<std::size_t>;

struct CycleSpace {
  std::vector<Chain> chains;             // maximal chains of the open interval, descending
  std::map<Chain, std::size_t> index;    // chain -> position in `chains`
  std::vector<RationalVector> basis;     // canonical basis of the top cycles
  std::vector<std::size_t> free_columns; // coordinates are read off here
};

class ChainBuilder {
 public:
  explicit ChainBuilder(const FiniteLattice& l) : l_(l) {}

  // Maximal chains [y, ..., atom] of the interval (bottom, y].
  const std::vector<Chain>& down_from(std::size_t y) {
    auto it = memo_.find(y);
    if (it != memo_.end()) return it->second;
    std::vector<Chain> out;
    for (auto z : l_.lower_covers(y)) {
      if (z == l_.bottom()) {
        out.push_back({y});
        continue;
      }
      for (const auto& tail : down_from(z)) {
        Chain c{y};
        c.insert(c.end(), tail.begin(), tail.end());
        out.push_back(std::move(c));
      }
    }
    return memo_.emplace(y, std::move(out)).first->second;
  }

  std::vector<Chain> open_interval(std::size_t x) {
    std::vector<Chain> out;
    for (auto y : l_.lower_covers(x)) {
      if (y == l_.bottom()) return {Chain{}};
      const auto& part = down_from(y);
      out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const FiniteLattice& l_;
  std::map<std::size_t, std::vector<Chain>> memo_;
};

CycleSpace top_cycles(ChainBuilder& builder, std::size_t x) {
  CycleSpace cs;
  cs.chains = builder.open_interval(x);
  for (std::size_t i = 0; i < cs.chains.size(); ++i) cs.index[cs.chains[i]] = i;
  std::map<Chain, std::size_t> faces;
  std::vector<std::tuple<std::size_t, std::size_t, int>> entries;
  for (std::size_t i = 0; i < cs.chains.size(); ++i) {
    const auto& c = cs.chains[i];
    for (std::size_t j = 0; j < c.size(); ++j) {
      Chain face = c;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      const auto pos = faces.emplace(face, faces.size()).first->second;
      entries.emplace_back(pos, i, j % 2 == 0 ? 1 : -1);
    }
  }
  RationalMatrix boundary(faces.size(), cs.chains.size());
  for (const auto& [r, col, s] : entries) boundary(r, col) += s;
  cs.basis = core::kernel_basis(boundary);
  std::vector<std::size_t> pivots;
  core::rref(boundary, &pivots);
  for (std::size_t col = 0; col < cs.chains.size(); ++col)
    if (!std::binary_search(pivots.begin(), pivots.end(), col)) cs.free_columns.push_back(col);
  return cs;
}

}  // namespace

GradedChainComplex zp_resolution(const LabeledPoset& p) {
  const auto& l = p.lattice();
  const std::size_t top_rank = l.rank();
  GradedChainComplex out;
  out.universe = p.universe();
  out.lowest = 0;
  out.degrees.resize(top_rank + 1);

  std::vector<std::vector<std::size_t>> by_rank(top_rank + 1);
  for (std::size_t x = 0; x < l.size(); ++x) by_rank[l.rank(x)].push_back(x);

  ChainBuilder builder(l);
  std::map<std::size_t, CycleSpace> spaces;
  std::vector<std::size_t> offset(l.size(), 0);  // first basis index of x within its level
  out.degrees[0].push_back(p.label(l.bottom()));
  for (std::size_t k = 1; k <= top_rank; ++k) {
    for (auto x : by_rank[k]) {
      CycleSpace cs = top_cycles(builder, x);
      offset[x] = out.degrees[k].size();
      for (std::size_t b = 0; b < cs.basis.size(); ++b) out.degrees[k].push_back(p.label(x));
      spaces.emplace(x, std::move(cs));
    }
  }

  out.differentials.emplace_back(0, out.degrees[0].size());
  for (std::size_t k = 1; k <= top_rank; ++k) {
    RationalMatrix d(out.degrees[k - 1].size(), out.degrees[k].size());
    for (auto x : by_rank[k]) {
      const auto& cs = spaces.at(x);
      for (std::size_t b = 0; b < cs.basis.size(); ++b) {
        const std::size_t col = offset[x] + b;
        const auto& z = cs.basis[b];
        if (k == 1) {
          d(0, col) = z[0];
          continue;
        }
        std::map<std::size_t, RationalVector> image;
        for (std::size_t i = 0; i < cs.chains.size(); ++i) {
          if (z[i] == 0) continue;
          const auto& chain = cs.chains[i];
          const std::size_t y = chain.front();
          const auto& target = spaces.at(y);
          auto& w = image[y];
          if (w.empty()) w.assign(target.chains.size(), 0);
          const Chain tail(chain.begin() + 1, chain.end());
          w[target.index.at(tail)] += z[i];
        }
        for (const auto& [y, w] : image) {
          const auto& target = spaces.at(y);
          RationalVector rebuilt(w.size());
          for (std::size_t j = 0; j < target.free_columns.size(); ++j) {
            const auto& coord = w[target.free_columns[j]];
            d(offset[y] + j, col) = coord;
            if (coord == 0) continue;
            for (std::size_t t = 0; t < w.size(); ++t) rebuilt[t] += coord * target.basis[j][t];
          }
          if (rebuilt != w) throw Error("image of a top cycle is not a cycle of the lower interval");
        }
      }
    }
    out.differentials.push_back(std::move(d));
  }
  return out;
}

}  // namespace cellres::resolution
