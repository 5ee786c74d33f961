#ifndef CELLRES_RESOLUTION_COMPLEX_HPP
#define CELLRES_RESOLUTION_COMPLEX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cellres/arrangement/arrangement.hpp"
#include "cellres/core/matrix.hpp"
#include "cellres/ideals/ideal.hpp"
#include "cellres/ideals/monomial.hpp"
#include "cellres/resolution/lattice.hpp"

namespace cellres::resolution {

using ideals::Monomial;
using ideals::Universe;

/// The face poset of a regular cell complex without orientations.  Cell 0
/// is the empty cell of dimension -1; every vertex has it as its only facet.
struct CellPoset {
  Universe universe;
  std::vector<int> dims;
  std::vector<std::vector<std::size_t>> facets;
  std::vector<Monomial> labels;
};

struct LabeledCell {
  int dim;
  Monomial label;
  std::vector<std::pair<std::size_t, int>> facets;  // (cell index, incidence sign)
};

/// A cell complex with monomial labels and signed incidences.  Cell 0 is the
/// empty cell with label 1.
struct LabeledComplex {
  Universe universe;
  std::vector<LabeledCell> cells;

  /// Number of cells per dimension 0, 1, ...
  std::vector<std::size_t> fvector() const;
};

/// Vertex labels are label_x or label_xy of the vertex sign vectors
/// (depending on whether the universe has y variables); every other cell
/// gets the lcm of the labels of the vertices below it.
CellPoset bounded_cell_poset(const arrangement::BoundedComplex& b, const Universe& u);

/// Seeds one facet per cell with +1 and propagates across shared ridges so
/// that every diamond has sign product -1.  Throws NonOrientableCell.
LabeledComplex incidence_signs(const CellPoset& p);

/// bounded_cell_poset followed by incidence_signs.
LabeledComplex labeled_bounded_complex(const arrangement::BoundedComplex& b, const Universe& u);

/// Every interval of length two has exactly two middle elements and its two
/// sign products cancel.
bool diamonds_hold(const LabeledComplex& c);

/// Cells whose labels divide m, with inherited signs.
LabeledComplex essential_subcomplex(const LabeledComplex& c, const Monomial& m);

/// A complex of free modules: level k sits in homological degree
/// lowest + k and carries one monomial degree per basis element;
/// differentials[k] maps level k to level k-1 (differentials[0] is empty).
struct GradedChainComplex {
  Universe universe;
  int lowest = 0;
  std::vector<std::vector<Monomial>> degrees;
  std::vector<core::RationalMatrix> differentials;

  std::vector<std::size_t> ranks() const;
};

/// Chain complex of a labeled complex; level 0 is the empty cell (the ring).
GradedChainComplex cellular_complex(const LabeledComplex& c);

bool differentials_compose_to_zero(const GradedChainComplex& c);
/// The degree of the target of every nonzero entry divides that of its source.
bool degrees_compatible(const GradedChainComplex& c);
/// No nonzero entry joins basis elements of equal degree.
bool is_minimal(const GradedChainComplex& c);

struct ExactnessOptions {
  /// Additionally require exactness over GF(2) and GF(3).
  bool torsion_sentinel = false;
};

/// Checks the strand of every monomial in the lcm lattice of the level-1
/// degrees.  On failure `witness` receives the offending monomial.
bool verify_graded_exactness(const GradedChainComplex& c, Monomial* witness = nullptr,
                             const ExactnessOptions& options = {});

/// Per-level count of basis elements of each multidegree never exceeds one.
bool multidegrees_distinct(const GradedChainComplex& c);

/// The alternating sum of basis degrees, sign (-1)^k on level k.
ideals::MonomialSum euler_numerator(const GradedChainComplex& c);

struct ResolutionReport {
  bool exact = false;
  bool minimal = false;
  std::vector<std::size_t> betti;  // cells per dimension 0, 1, ...
  std::optional<Monomial> witness;
};

ResolutionReport verify_cellular_resolution(const LabeledComplex& c,
                                            const ExactnessOptions& options = {});

/// A lattice whose atoms carry monomials; every other element is labeled by
/// the lcm of the atoms below it and the bottom by 1.
class LabeledPoset {
 public:
  /// Throws NotComplete unless the labels are distinct and every lcm-lattice
  /// degree has a unique maximal element below it.
  LabeledPoset(FiniteLattice lattice, Universe universe, std::vector<Monomial> atom_labels);

  const FiniteLattice& lattice() const { return lattice_; }
  const Universe& universe() const { return universe_; }
  const Monomial& label(std::size_t x) const { return labels_[x]; }

 private:
  FiniteLattice lattice_;
  Universe universe_;
  std::vector<Monomial> labels_;
};

/// Dual of the flat lattice of `m`; the atom of each hyperplane H is
/// labeled by the product of x_i over i not in H.
LabeledPoset matroid_poset(const core::RowMatroid& m, const Universe& x_universe);

/// The complex Z(P): level k holds a canonical basis of the top cycles of the
/// open interval below each element of rank k.
GradedChainComplex zp_resolution(const LabeledPoset& p);

}  // namespace cellres::resolution

#endif  // CELLRES_RESOLUTION_COMPLEX_HPP
