#ifndef CELLRES_IDEALS_MONOMIAL_HPP
#define CELLRES_IDEALS_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cellres/core/matroid.hpp"

namespace cellres::ideals {

/// The ordered list of variable names a monomial is written over.
///
/// The x-universe of a ground set of size n has x_i at index i.  The
/// xy-universe additionally has y_i at index n + i.  Element labels default
/// to "1".."n"; graph-indexed variables use labels such as "11" or "23".
class Universe {
 public:
  Universe() = default;
  static Universe x_vars(std::size_t n, std::vector<std::string> labels = {});
  static Universe xy_vars(std::size_t n, std::vector<std::string> labels = {});

  std::size_t size() const { return names_.size(); }
  std::size_t ground_size() const { return labels_.size(); }
  bool has_y() const { return has_y_; }
  const std::string& name(std::size_t var) const { return names_[var]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t x(std::size_t element) const { return element; }
  std::size_t y(std::size_t element) const { return labels_.size() + element; }
  /// The ground-set element a variable belongs to.
  std::size_t element_of(std::size_t var) const { return var % labels_.size(); }

  /// Variable order used for printing: by element, x before y.
  const std::vector<std::size_t>& display_order() const { return display_; }

  /// The x-universe on the same element labels.
  Universe x_part() const { return x_vars(ground_size(), labels_); }

  friend bool operator==(const Universe& a, const Universe& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> names_;
  std::vector<std::size_t> display_;
  bool has_y_ = false;
};

/// A monomial as a dense exponent vector over some universe.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exponents) : exps_(std::move(exponents)) {}
  static Monomial from_support(std::size_t nvars, const std::vector<std::size_t>& vars);

  std::size_t nvars() const { return exps_.size(); }
  std::uint16_t operator[](std::size_t var) const { return exps_[var]; }
  void set(std::size_t var, std::uint16_t e) { exps_[var] = e; }
  const std::vector<std::uint16_t>& exponents() const { return exps_; }

  unsigned degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  std::vector<std::size_t> support() const;
  /// Bit mask of the support; the universe must have at most 64 variables.
  core::ElementSet support_mask() const;

  Monomial lcm(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint16_t> exps_;
};

/// Ascending total degree, then descending exponent vector, so that x1x2
/// comes before x1x3.
bool canonical_less(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m, const Universe& u);

/// All lcms of nonempty subsets of `gens`, sorted canonically.
std::vector<Monomial> lcm_lattice(const std::vector<Monomial>& gens);

}  // namespace cellres::ideals

#endif  // CELLRES_IDEALS_MONOMIAL_HPP
