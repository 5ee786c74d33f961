#ifndef CELLRES_TORIC_TORIC_HPP
#define CELLRES_TORIC_TORIC_HPP

#include <compare>
#include <istream>
#include <string>
#include <vector>

#include "cellres/core/matrix.hpp"
#include "cellres/ideals/ideal.hpp"
#include "cellres/ideals/monomial.hpp"

namespace cellres::toric {

using core::RationalMatrix;
using core::RationalVector;

/// Reads "n d" followed by n rows of d integers; '#' lines are comments.
/// Throws ParseError.
RationalMatrix parse_matrix(std::istream& in);
RationalMatrix parse_matrix_string(const std::string& text);
RationalMatrix read_matrix_file(const std::string& path);

/// Integer entries, rank equal to the column count, and every maximal minor
/// in {-1, 0, 1}.
bool is_unimodular(const RationalMatrix& b);

/// A sign pattern on the row indices, normalized so that the smallest index
/// in the support is positive.
struct SignedCircuit {
  std::vector<std::size_t> positive;
  std::vector<std::size_t> negative;

  /// "{1+,2-}" with 1-based indices.
  std::string to_string() const;
  friend auto operator<=>(const SignedCircuit&, const SignedCircuit&) = default;
};

/// Minimal-support vectors of the image of b (the sign patterns of the
/// lattice vectors defining the Lawrence ideal), one per sign class.
std::vector<SignedCircuit> signed_circuits(const RationalMatrix& b);
/// Minimal linear dependencies among the rows of b, one per sign class.
std::vector<SignedCircuit> row_circuits(const RationalMatrix& b);

/// The binomial x^{v+} y^{v-} - y^{v+} x^{v-} of a primitive image vector v.
struct Binomial {
  ideals::Monomial plus;
  ideals::Monomial minus;
};

/// One binomial per signed circuit, in the order of signed_circuits.
std::vector<Binomial> lawrence_generators(const RationalMatrix& b, const ideals::Universe& xy_universe);
std::string to_string(const Binomial& binomial, const ideals::Universe& xy_universe);

/// Throws GenericityFailure (with the rows cutting out the offending line)
/// when w is orthogonal to a one-dimensional flat of b, and InvalidArgument
/// when b does not have full column rank or w has the wrong length.
void require_generic(const RationalMatrix& b, const RationalVector& w);
/// First generic w among (1, t, t^2, ...) for t = start, start + 1, ...
RationalVector generic_w(const RationalMatrix& b, long start = 2);

/// f_0, ..., f_d of the toric arrangement: 1 followed by the f-vector of
/// the bounded complex of b cut by {w . v = 1}.  Throws InvalidArgument
/// unless b is unimodular, and GenericityFailure.
std::vector<std::size_t> toric_fvector(const RationalMatrix& b, const RationalVector& w);

/// The oriented matroid ideal of b cut by {w . v = 1}.  Every Lawrence
/// generator's leading term (the one whose image vector is positive on w)
/// is checked to lie in it.  Throws GenericityFailure.
ideals::MonomialIdeal initial_ideal(const RationalMatrix& b, const RationalVector& w,
                                    const ideals::Universe& xy_universe);

}  // namespace cellres::toric

#endif  // CELLRES_TORIC_TORIC_HPP
