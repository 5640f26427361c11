#ifndef CRYSTAL_BFIELD_HPP
#define CRYSTAL_BFIELD_HPP

#include "crystal/charsub.hpp"

namespace crystal {

/// A B-field on a datum, taken modulo K.
struct BFieldClass {
  CharDatum base;
  VectorFq b;
};

/// K̃ in Ṽ ⊗ GF(p^N), coordinates ordered (V; v, w).
struct ExtendedDatum {
  HyperbolicExtension extension;
  Subspace ktilde;

  VectorFq v() const;
  VectorFq w() const;
};

/// B − φ(B) ∈ K + φ(K).
bool valid_bfield(const VectorFq& b, const CharDatum& d);

/// Rows form an F_p-basis of the valid B-fields in V ⊗ GF(p^N).
MatrixFq valid_bfield_space(const CharDatum& d);

/// Equality of classes: b − b' ∈ K.
bool same_class(const BFieldClass& x, const BFieldClass& y);

/// Canonical representative of the class (B reduced modulo K).
BFieldClass canonical(const BFieldClass& bc);

/// K̃ = ⟨x_j + (x_j·B)v, w + B + (B²/2)v⟩ for a basis x_j of K. Throws
/// InvalidBField if B is not valid.
ExtendedDatum extend_by_bfield(const BFieldClass& bc);

/// K = (K̃ ∩ v^⊥)/v and B from the element of K̃ with w-coordinate 1,
/// reduced modulo K. Throws DistinguishedVectorInside if v ∈ K̃.
BFieldClass restrict_datum(const ExtendedDatum& ed);

/// The isometry v ↦ λv, w ↦ λ⁻¹w fixing V, applied to K̃. Throws ZeroLambda.
ExtendedDatum power_twist(const ExtendedDatum& ed, const Zp& lambda);

/// The conditions that put K̃ in the image of extend_by_bfield.
struct RangeReport {
  bool characteristic = false;
  bool v_outside = false;
  bool restricts_to_base = false;
  bool ok() const { return characteristic && v_outside && restricts_to_base; }
};
RangeReport check_range(const ExtendedDatum& ed, const CharDatum& base);

}  // namespace crystal

#endif  // CRYSTAL_BFIELD_HPP
