#include "crystal/bfield.hpp"

namespace crystal {

VectorFq ExtendedDatum::v() const {
  const ContextFq ctx = ktilde.context();
  VectorFq out = VectorFq::Constant(extension.extended.dim(), ctx.zero());
  out(extension.v_index) = ctx.one();
  return out;
}

VectorFq ExtendedDatum::w() const {
  const ContextFq ctx = ktilde.context();
  VectorFq out = VectorFq::Constant(extension.extended.dim(), ctx.zero());
  out(extension.w_index) = ctx.one();
  return out;
}

namespace {

void require_vector(const VectorFq& b, const CharDatum& d) {
  if (b.size() != d.space().dim()) throw Error(ErrorKind::AmbientMismatch, "B has the wrong length");
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (b(i).bound() && !same_field(b(i).field(), d.field()))
      throw Error(ErrorKind::AmbientMismatch, "B lives over a different field");
}

}  // namespace

bool valid_bfield(const VectorFq& b, const CharDatum& d) {
  require_vector(b, d);
  const ContextFq ctx = d.k().context();
  const VectorFq bb = bind(ctx, b);
  const Subspace target = subspace_sum(d.k(), apply_phi(d.k()));
  return target.contains(bind(ctx, bb - apply_phi(bb)));
}

MatrixFq valid_bfield_space(const CharDatum& d) {
  const ContextFq ctx = d.k().context();
  const Field& field = d.field();
  const int big = field->degree;
  const int p = field->p;
  const Eigen::Index n = d.space().dim();
  const Subspace target = subspace_sum(d.k(), apply_phi(d.k()));
  const MatrixFq annihilator = kernel(ctx, target.basis());  // rows y with y·x = 0 on the target
  const Eigen::Index c = annihilator.rows();
  if (c == 0) {
    // Every B is valid: the F_p-basis of GF(p^N)^n.
    MatrixFq out = zeros(ctx, n * big, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (int j = 0; j < big; ++j) out(i * big + j, i) = pow(Fq::generator(field), j);
    return out;
  }
  MatrixZp system(c * big, n * big);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (int j = 0; j < big; ++j) {
      VectorFq u = VectorFq::Constant(n, ctx.zero());
      u(i) = pow(Fq::generator(field), j);
      const VectorFq image = bind(ctx, annihilator * (u - apply_phi(u)));
      for (Eigen::Index r = 0; r < c; ++r)
        for (int k = 0; k < big; ++k) system(r * big + k, i * big + j) = Zp(image(r).coeffs()[k], p);
    }
  }
  const MatrixZp flat = kernel(ContextZp{p}, system);
  MatrixFq out(flat.rows(), n);
  for (Eigen::Index k = 0; k < flat.rows(); ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      std::vector<std::int32_t> coeffs(big);
      for (int j = 0; j < big; ++j) coeffs[j] = static_cast<std::int32_t>(flat(k, i * big + j).value());
      out(k, i) = Fq(field, std::move(coeffs));
    }
  }
  return out;
}

bool same_class(const BFieldClass& x, const BFieldClass& y) {
  if (!(x.base == y.base)) return false;
  const ContextFq ctx = x.base.k().context();
  return x.base.k().contains(bind(ctx, x.b - y.b));
}

BFieldClass canonical(const BFieldClass& bc) {
  require_vector(bc.b, bc.base);
  return BFieldClass{bc.base, bc.base.k().reduce(bind(bc.base.k().context(), bc.b))};
}

ExtendedDatum extend_by_bfield(const BFieldClass& bc) {
  const CharDatum& d = bc.base;
  if (!valid_bfield(bc.b, d)) throw Error(ErrorKind::InvalidBField, "B − φ(B) is not in K + φ(K)");
  const ContextFq ctx = d.k().context();
  const Field& field = d.field();
  HyperbolicExtension ext = hyperbolic_extend(d.space());
  const Eigen::Index n = d.space().dim();
  const MatrixFq g = gram_over(d.space(), field);
  const VectorFq b = bind(ctx, bc.b);
  const Fq half = inverse(ctx.from_int(2));

  const MatrixFq& k = d.k().basis();
  MatrixFq rows = zeros(ctx, k.rows() + 1, n + 2);
  const VectorFq kb = bind(ctx, k * g * b);  // x_j·B
  for (Eigen::Index j = 0; j < k.rows(); ++j) {
    rows.row(j).head(n) = k.row(j);
    rows(j, ext.v_index) = kb(j);
  }
  rows.row(k.rows()).head(n) = b.transpose();
  rows(k.rows(), ext.v_index) = bind(ctx, (b.transpose() * g * b)(0, 0)) * half;
  rows(k.rows(), ext.w_index) = ctx.one();
  Subspace ktilde(ext.extended, field, rows);
  return ExtendedDatum{std::move(ext), std::move(ktilde)};
}

namespace {

// (K̃ ∩ v^⊥)/v as a subspace of the base, or nullopt if v ∈ K̃.
std::optional<Subspace> quotient_part(const ExtendedDatum& ed) {
  if (ed.ktilde.contains(ed.v())) return std::nullopt;
  const QuadraticSpace& base = ed.extension.base;
  const Subspace vline(ed.extension.extended, ed.ktilde.field(), MatrixFq(ed.v().transpose()));
  const Subspace inside = subspace_intersect(ed.ktilde, orthogonal(vline));
  MatrixFq projected = inside.basis().leftCols(base.dim());
  return Subspace(base, ed.ktilde.field(), projected);
}

}  // namespace

BFieldClass restrict_datum(const ExtendedDatum& ed) {
  const std::optional<Subspace> k = quotient_part(ed);
  if (!k) throw Error(ErrorKind::DistinguishedVectorInside, "v lies in K̃");
  const ContextFq ctx = ed.ktilde.context();
  const Eigen::Index n = ed.extension.base.dim();
  const MatrixFq& rows = ed.ktilde.basis();
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    const Fq wc = rows(r, ed.extension.w_index);
    if (is_zero(wc)) continue;
    const VectorFq b = bind(ctx, rows.row(r).head(n).transpose() * inverse(wc));
    CharDatum base(*k);
    VectorFq rep = base.k().reduce(b);
    return BFieldClass{std::move(base), std::move(rep)};
  }
  throw Error(ErrorKind::InvalidArgument, "K̃ has no element with w-coordinate 1");
}

ExtendedDatum power_twist(const ExtendedDatum& ed, const Zp& lambda) {
  const int p = ed.extension.base.p();
  const Zp l = bind(ContextZp{p}, lambda);
  if (is_zero(l)) throw Error(ErrorKind::ZeroLambda, "lambda must be a unit");
  const ContextFq ctx = ed.ktilde.context();
  MatrixFq rows = ed.ktilde.basis();
  const Fq scale_v = Fq::from_zp(ctx.field, l);
  const Fq scale_w = Fq::from_zp(ctx.field, inverse(l));
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    rows(r, ed.extension.v_index) *= scale_v;
    rows(r, ed.extension.w_index) *= scale_w;
  }
  return ExtendedDatum{ed.extension, Subspace(ed.extension.extended, ed.ktilde.field(), rows)};
}

RangeReport check_range(const ExtendedDatum& ed, const CharDatum& base) {
  RangeReport r;
  r.characteristic = validate(ed.ktilde, ed.extension.extended).is_characteristic;
  const std::optional<Subspace> k = quotient_part(ed);
  r.v_outside = k.has_value();
  r.restricts_to_base = k && *k == base.k();
  return r;
}

}  // namespace crystal
