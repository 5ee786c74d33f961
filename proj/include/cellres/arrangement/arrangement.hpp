#ifndef CELLRES_ARRANGEMENT_ARRANGEMENT_HPP
#define CELLRES_ARRANGEMENT_ARRANGEMENT_HPP

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "cellres/arrangement/sign_vector.hpp"
#include "cellres/core/matrix.hpp"

namespace cellres::arrangement {

using core::Rational;
using core::RationalMatrix;
using core::RationalVector;

/// The affine hyperplane {v : normal . v = offset}.
struct Hyperplane {
  RationalVector normal;
  Rational offset;
};

/// An ordered list of affine hyperplanes in R^d whose normals span the dual
/// space.  Construction rejects zero normals and non-spanning families with
/// InvalidArgument.
class Arrangement {
 public:
  Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hyperplanes_;
};

/// Reads the text format "d n" followed by n lines of d+1 rationals.  Lines
/// starting with '#' and blank lines are skipped.  Throws ParseError.
Arrangement parse_arrangement(std::istream& in);
Arrangement parse_arrangement_string(const std::string& text);
Arrangement read_arrangement_file(const std::string& path);

/// A central arrangement of n hyperplanes in R^D together with an extra
/// linear functional g.  The elements of the oriented matroid are the n rows
/// followed by g (element index n).  An affine arrangement in R^d becomes the
/// rows (h_i, -c_i) in R^{d+1} with g = e_{d+1}; a central arrangement cut by
/// the affine hyperplane {w . v = 1} is simply rows = normals, g = w.
struct AffineRealization {
  RationalMatrix rows;
  RationalVector g;

  std::size_t size() const { return rows.rows(); }
  std::size_t ambient_dim() const { return rows.cols(); }
  std::size_t g_index() const { return rows.rows(); }
  /// Rows followed by g.
  RationalMatrix with_g() const;
};

AffineRealization homogenize(const Arrangement& a);

struct Vertex {
  RationalVector point;
  SignVector sign;
};

/// Points lying on hyperplanes whose normals span R^d, with their sign
/// vectors (g entry +), sorted by sign vector.
std::vector<Vertex> vertices(const Arrangement& a);

/// Signed cocircuits of the rows together with g, closed under negation and
/// sorted lexicographically.
std::vector<SignVector> cocircuits(const AffineRealization& r);
std::vector<SignVector> cocircuits(const Arrangement& a);

/// Signed circuits (minimal linear dependencies) among the rows of
/// `vectors`, both signs of each, sorted lexicographically.
std::vector<SignVector> circuits(const RationalMatrix& vectors);

/// A set of covectors on the ground set {0..size-1}; `g` is the index of the
/// distinguished element.
class CovectorSet {
 public:
  CovectorSet(std::size_t size, std::size_t g, std::vector<SignVector> covectors);

  std::size_t size() const { return size_; }
  std::size_t g() const { return g_; }
  /// Sorted lexicographically, without duplicates.
  const std::vector<SignVector>& covectors() const { return covectors_; }
  bool contains(const SignVector& x) const;

 private:
  std::size_t size_;
  std::size_t g_;
  std::vector<SignVector> covectors_;
};

/// Smallest set containing 0 and `cocs` that is closed under composition.
CovectorSet covector_closure(const std::vector<SignVector>& cocs, std::size_t size, std::size_t g);
CovectorSet covector_closure(const AffineRealization& r);

/// Zero, symmetry, composition and elimination, all checked exhaustively.
bool check_covector_axioms(const CovectorSet& l);

/// Keeps only the coordinates in `keep` (which must contain g); indices are
/// renumbered in increasing order.
CovectorSet restrict(const CovectorSet& l, ElementSet keep);
/// Keeps covectors vanishing on `zero_out` (which must not contain g) and
/// drops those coordinates.
CovectorSet contract(const CovectorSet& l, ElementSet zero_out);

/// The realization induced on the hyperplane with row index `i`; the
/// remaining rows keep their relative order.
AffineRealization restrict_to_hyperplane(const AffineRealization& r, std::size_t i);

struct BoundedCell {
  SignVector sign;
  int dim;
  /// Indices of the cells of dimension dim-1 below this one.
  std::vector<std::size_t> facets;
};

/// Bounded covectors ordered by (dimension, sign vector), with their cover
/// relations.
struct BoundedComplex {
  std::size_t ground_size = 0;  // number of rows, excluding g
  std::vector<BoundedCell> cells;
  std::vector<std::size_t> fvector() const;
  std::size_t dimension() const;
};

/// Throws EmptyBoundedComplex when no bounded cell exists.
BoundedComplex bounded_complex(const AffineRealization& r);
BoundedComplex bounded_complex(const Arrangement& a);

/// A flat of the rows whose span contains g, or nullopt when g is in
/// general position.  The flat is reported as sorted 0-based row indices.
std::optional<std::vector<std::size_t>> nongeneric_flat(const AffineRealization& r);
bool general_position_g(const AffineRealization& r);
bool general_position_g(const Arrangement& a);

}  // namespace cellres::arrangement

#endif  // CELLRES_ARRANGEMENT_ARRANGEMENT_HPP
