#ifndef CELLRES_IDEALS_IDEAL_HPP
#define CELLRES_IDEALS_IDEAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "cellres/arrangement/arrangement.hpp"
#include "cellres/core/rational.hpp"
#include "cellres/ideals/monomial.hpp"

namespace cellres::ideals {

/// A monomial ideal stored by its minimal generators in canonical order.
class MonomialIdeal {
 public:
  MonomialIdeal(Universe universe, std::vector<Monomial> generators);

  const Universe& universe() const { return universe_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool contains(const Monomial& m) const;
  bool is_squarefree() const;
  /// "<y4, x1x2, x1x3, y2x3>"
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  Universe universe_;
  std::vector<Monomial> gens_;
};

/// The prime ideal generated by a set of variables.
struct MonomialPrime {
  std::vector<std::size_t> variables;  // sorted indices into the universe
  std::string to_string(const Universe& u) const;
  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;
};

/// Labels of a sign vector on the first `n` elements (g is ignored).
/// label_xy uses x_i for + and y_i for -; label_x uses x_i for both.
Monomial label_x(const arrangement::SignVector& z, std::size_t n);
Monomial label_xy(const arrangement::SignVector& z, std::size_t n);

/// Generated by the labels of the vertices (cocircuits with g = +).
MonomialIdeal matroid_ideal(const arrangement::AffineRealization& r, const Universe& x_universe);
MonomialIdeal oriented_ideal(const arrangement::AffineRealization& r, const Universe& xy_universe);
MonomialIdeal matroid_ideal(const arrangement::Arrangement& a);
MonomialIdeal oriented_ideal(const arrangement::Arrangement& a);

/// Substitutes y_i -> x_i and minimalizes.
MonomialIdeal specialize(const MonomialIdeal& ideal);

/// One prime per signed circuit C of rows plus g with g in C^-.  Throws
/// NotGeneralPosition carrying the offending flat.
std::vector<MonomialPrime> prime_decomposition_oriented(const arrangement::AffineRealization& r,
                                                        const Universe& xy_universe);
/// <x_i : i in B> for every basis B of the rows.
std::vector<MonomialPrime> basis_decomposition(const arrangement::AffineRealization& r,
                                               const Universe& x_universe);
/// The prime with every y_i replaced by x_i, over the x-universe.
MonomialPrime specialize(const MonomialPrime& p, const Universe& xy_universe);

MonomialIdeal intersect_primes(const std::vector<MonomialPrime>& primes, const Universe& u);

/// Minimal primes of a squarefree ideal, as minimal transversals of the
/// generator supports.  At most 64 variables.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);

/// The exchange characterization: for generators m1, m2 sharing x_i,
/// lcm(m1, m2) / x_i lies in the ideal.  Throws NotSquarefree.
bool is_matroid_ideal(const MonomialIdeal& ideal);

/// A formal integer combination of monomials.
struct MonomialSum {
  Universe universe;
  std::vector<std::pair<Monomial, core::BigInt>> terms;  // canonical order, nonzero
  std::string to_string() const;
};

/// sum over bounded cells Z of (-1)^(dim Z + 1) m_xy(Z), plus 1 for the
/// empty cell.
MonomialSum hilbert_numerator(const arrangement::BoundedComplex& b, const Universe& xy_universe);

}  // namespace cellres::ideals

#endif  // CELLRES_IDEALS_IDEAL_HPP
