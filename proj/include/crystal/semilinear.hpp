#ifndef CRYSTAL_SEMILINEAR_HPP
#define CRYSTAL_SEMILINEAR_HPP

#include "crystal/quadspace.hpp"

namespace crystal {

/// Embed an F_p matrix entrywise into GF(p^N).
MatrixFq lift(const Field& field, const MatrixZp& m);

/// A subspace of V ⊗ GF(p^N), held as the reduced row echelon form of its
/// spanning rows. Two subspaces are equal iff the matrices are identical.
class Subspace {
 public:
  Subspace(QuadraticSpace ambient, Field field, const MatrixFq& spanning_rows);

  static Subspace zero(QuadraticSpace ambient, Field field);
  static Subspace full(QuadraticSpace ambient, Field field);

  const QuadraticSpace& ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  int field_degree() const { return field_->degree; }
  ContextFq context() const { return ContextFq{field_}; }

  const MatrixFq& basis() const { return basis_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }
  Eigen::Index dim() const { return basis_.rows(); }

  bool contains(const VectorFq& v) const;
  /// Canonical representative of v modulo this subspace.
  VectorFq reduce(const VectorFq& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  QuadraticSpace ambient_;
  Field field_;
  MatrixFq basis_;
  std::vector<Eigen::Index> pivots_;
};

/// Throws AmbientMismatch unless both live in the same V ⊗ GF(p^N).
void require_same_ambient(const Subspace& s, const Subspace& t);

/// The bilinear form extended to GF(p^N): x^T G y.
Fq pair(const Subspace& where, const VectorFq& x, const VectorFq& y);
MatrixFq gram_over(const QuadraticSpace& v, const Field& field);

/// φ^k(S) for φ = id ⊗ σ; negative k applies the inverse.
Subspace apply_phi(const Subspace& s, int k = 1);
VectorFq apply_phi(const VectorFq& v, int k = 1);

Subspace subspace_sum(const Subspace& s, const Subspace& t);
Subspace subspace_intersect(const Subspace& s, const Subspace& t);

/// Orthogonal complement with respect to the bilinear form.
Subspace orthogonal(const Subspace& s);

bool is_totally_isotropic(const Subspace& s);

/// Fixed points of x ↦ M·σ(x) on GF(p^N)^n, found by solving the F_p-linear
/// system on the flattened space F_p^(nN). Rows form an F_p-basis, in reduced
/// echelon form in the flattened coordinates. Throws SingularOperator if M is
/// not invertible.
MatrixFq fixed_points(const MatrixFq& m);

}  // namespace crystal

#endif  // CRYSTAL_SEMILINEAR_HPP
