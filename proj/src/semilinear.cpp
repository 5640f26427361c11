#include "crystal/semilinear.hpp"

namespace crystal {

MatrixFq lift(const Field& field, const MatrixZp& m) {
  MatrixFq out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Fq::from_int(field, m(i, j).value());
  return out;
}

Subspace::Subspace(QuadraticSpace ambient, Field field, const MatrixFq& spanning_rows)
    : ambient_(std::move(ambient)), field_(std::move(field)) {
  if (field_->p != ambient_.p()) throw Error(ErrorKind::FieldMismatch, "field and ambient space differ in p");
  if (spanning_rows.cols() != ambient_.dim() && spanning_rows.rows() != 0)
    throw Error(ErrorKind::AmbientMismatch, "spanning rows have the wrong length");
  if (spanning_rows.rows() == 0) {
    basis_ = MatrixFq(0, ambient_.dim());
    return;
  }
  Echelon<Fq> e = row_reduce(context(), spanning_rows);
  basis_ = std::move(e.reduced);
  pivots_ = std::move(e.pivots);
}

Subspace Subspace::zero(QuadraticSpace ambient, Field field) {
  const Eigen::Index n = ambient.dim();
  return Subspace(std::move(ambient), std::move(field), MatrixFq(0, n));
}

Subspace Subspace::full(QuadraticSpace ambient, Field field) {
  const Eigen::Index n = ambient.dim();
  const ContextFq ctx{field};
  return Subspace(std::move(ambient), field, identity(ctx, n));
}

VectorFq Subspace::reduce(const VectorFq& v) const {
  if (v.size() != ambient_.dim()) throw Error(ErrorKind::AmbientMismatch, "vector has the wrong length");
  RowVector<Fq> row = bind(context(), v.transpose());
  return reduce_modulo(basis_, pivots_, row).transpose();
}

bool Subspace::contains(const VectorFq& v) const { return is_zero_matrix(reduce(v)); }

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && same_field(a.field_, b.field_) && a.basis_.rows() == b.basis_.rows() &&
         a.basis_ == b.basis_;
}

void require_same_ambient(const Subspace& s, const Subspace& t) {
  if (!(s.ambient() == t.ambient()) || !same_field(s.field(), t.field()))
    throw Error(ErrorKind::AmbientMismatch, "subspaces live in different spaces");
}

MatrixFq gram_over(const QuadraticSpace& v, const Field& field) { return lift(field, v.gram()); }

Fq pair(const Subspace& where, const VectorFq& x, const VectorFq& y) {
  const MatrixFq g = gram_over(where.ambient(), where.field());
  return bind(where.context(), (x.transpose() * g * y)(0, 0));
}

Subspace apply_phi(const Subspace& s, int k) {
  return Subspace(s.ambient(), s.field(), frobenius(s.basis(), k));
}

VectorFq apply_phi(const VectorFq& v, int k) { return frobenius(v, k); }

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t);
  MatrixFq stacked(s.dim() + t.dim(), s.ambient().dim());
  if (s.dim()) stacked.topRows(s.dim()) = s.basis();
  if (t.dim()) stacked.bottomRows(t.dim()) = t.basis();
  return Subspace(s.ambient(), s.field(), stacked);
}

Subspace subspace_intersect(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t);
  const ContextFq ctx = s.context();
  const Eigen::Index n = s.ambient().dim();
  // S ∩ T is cut out by the annihilators of S and T together.
  const MatrixFq ann_s = s.dim() ? kernel(ctx, s.basis()) : identity(ctx, n);
  const MatrixFq ann_t = t.dim() ? kernel(ctx, t.basis()) : identity(ctx, n);
  MatrixFq stacked(ann_s.rows() + ann_t.rows(), n);
  if (ann_s.rows()) stacked.topRows(ann_s.rows()) = ann_s;
  if (ann_t.rows()) stacked.bottomRows(ann_t.rows()) = ann_t;
  if (stacked.rows() == 0) return Subspace::full(s.ambient(), s.field());
  return Subspace(s.ambient(), s.field(), kernel(ctx, stacked));
}

Subspace orthogonal(const Subspace& s) {
  const ContextFq ctx = s.context();
  if (s.dim() == 0) return Subspace::full(s.ambient(), s.field());
  const MatrixFq constraints = bind(ctx, s.basis() * gram_over(s.ambient(), s.field()));
  return Subspace(s.ambient(), s.field(), kernel(ctx, constraints));
}

bool is_totally_isotropic(const Subspace& s) {
  if (s.dim() == 0) return true;
  return is_zero_matrix(s.basis() * gram_over(s.ambient(), s.field()) * s.basis().transpose());
}

MatrixFq fixed_points(const MatrixFq& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw Error(ErrorKind::InvalidArgument, "operator must be square");
  Field field;
  for (Eigen::Index i = 0; i < m.rows() && !field; ++i)
    for (Eigen::Index j = 0; j < m.cols() && !field; ++j)
      if (m(i, j).bound()) field = m(i, j).field();
  if (!field) throw Error(ErrorKind::InvalidArgument, "operator has no field context");
  const ContextFq ctx{field};
  const MatrixFq op = bind(ctx, m);
  if (!try_inverse(ctx, op)) throw Error(ErrorKind::SingularOperator, "semilinear operator is not invertible");

  const Eigen::Index n = op.rows();
  const int big = field->degree;
  const int p = field->p;
  const Eigen::Index flat = n * big;
  MatrixZp system(flat, flat);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (int j = 0; j < big; ++j) {
      VectorFq u = VectorFq::Constant(n, ctx.zero());
      std::vector<std::int32_t> unit(big, 0);
      unit[j] = 1;
      u(i) = Fq(field, unit);
      const VectorFq image = bind(ctx, op * frobenius(u) - u);
      for (Eigen::Index r = 0; r < n; ++r)
        for (int c = 0; c < big; ++c) system(r * big + c, i * big + j) = Zp(image(r).coeffs()[c], p);
    }
  }
  const MatrixZp flat_kernel = kernel(ContextZp{p}, system);
  MatrixFq out(flat_kernel.rows(), n);
  for (Eigen::Index k = 0; k < flat_kernel.rows(); ++k) {
    for (Eigen::Index r = 0; r < n; ++r) {
      std::vector<std::int32_t> coeffs(big);
      for (int c = 0; c < big; ++c) coeffs[c] = static_cast<std::int32_t>(flat_kernel(k, r * big + c).value());
      out(k, r) = Fq(field, std::move(coeffs));
    }
  }
  return out;
}

}  // namespace crystal
