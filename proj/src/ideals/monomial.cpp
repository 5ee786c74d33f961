#include "cellres/ideals/monomial.hpp"

#include <algorithm>
#include <set>

#include "cellres/error.hpp"

namespace cellres::ideals {

namespace {

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  }
  if (labels.size() != n) throw InvalidArgument("label count does not match the ground set");
  return labels;
}

}  // namespace

Universe Universe::x_vars(std::size_t n, std::vector<std::string> labels) {
  Universe u;
  u.labels_ = default_labels(n, std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    u.names_.push_back("x" + u.labels_[i]);
    u.display_.push_back(i);
  }
  return u;
}

Universe Universe::xy_vars(std::size_t n, std::vector<std::string> labels) {
  Universe u;
  u.has_y_ = true;
  u.labels_ = default_labels(n, std::move(labels));
  for (std::size_t i = 0; i < n; ++i) u.names_.push_back("x" + u.labels_[i]);
  for (std::size_t i = 0; i < n; ++i) u.names_.push_back("y" + u.labels_[i]);
  for (std::size_t i = 0; i < n; ++i) {
    u.display_.push_back(i);
    u.display_.push_back(n + i);
  }
  return u;
}

Monomial Monomial::from_support(std::size_t nvars, const std::vector<std::size_t>& vars) {
  Monomial m(nvars);
  for (auto v : vars) m.exps_[v] = 1;
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i]) s.push_back(i);
  return s;
}

core::ElementSet Monomial::support_mask() const {
  if (exps_.size() > 64) throw InvalidArgument("support masks need at most 64 variables");
  core::ElementSet s = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i]) s |= core::singleton(i);
  return s;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    m.exps_[i] = static_cast<std::uint16_t>(exps_[i] + other.exps_[i]);
  return m;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

std::string to_string(const Monomial& m, const Universe& u) {
  std::string s;
  for (auto v : u.display_order()) {
    if (v >= m.nvars() || m[v] == 0) continue;
    s += u.name(v);
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

std::vector<Monomial> lcm_lattice(const std::vector<Monomial>& gens) {
  std::set<Monomial> all(gens.begin(), gens.end());
  std::vector<Monomial> frontier(all.begin(), all.end());
  const std::vector<Monomial> base = frontier;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      for (const auto& g : base) {
        Monomial l = m.lcm(g);
        if (all.insert(l).second) next.push_back(std::move(l));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace cellres::ideals
