#include "crystal/charsub.hpp"

#include <numeric>

namespace crystal {

ValidationReport validate(const Subspace& k, const QuadraticSpace& v) {
  if (!(k.ambient() == v)) throw Error(ErrorKind::AmbientMismatch, "K does not live in V ⊗ GF(p^N)");
  ValidationReport r;
  r.sigma0 = v.sigma0();
  r.dim_k = k.dim();
  r.totally_isotropic = is_totally_isotropic(k);
  r.dim_k_plus_phi_k = subspace_sum(k, apply_phi(k)).dim();
  r.is_characteristic = r.dim_k == r.sigma0 && r.totally_isotropic && r.dim_k_plus_phi_k == r.sigma0 + 1;

  // The chain K ⊆ K + φK ⊆ … grows strictly until it stabilises, so 2σ0
  // steps reach the limit.
  Subspace span = k;
  Subspace image = k;
  for (int i = 0; i < 2 * r.sigma0 && span.dim() < v.dim(); ++i) {
    image = apply_phi(image);
    Subspace next = subspace_sum(span, image);
    if (next.dim() == span.dim()) break;
    span = std::move(next);
  }
  r.dim_phi_span = span.dim();
  r.is_strict = r.is_characteristic && r.dim_phi_span == v.dim();
  return r;
}

int artin_invariant(const CharDatum& d) {
  const ValidationReport r = validate(d);
  if (!r.is_characteristic) throw Error(ErrorKind::NotCharacteristic, "datum is not characteristic");
  return static_cast<int>(r.dim_k);
}

Subspace canonical_line(const CharDatum& d) {
  if (!validate(d).is_strict) throw Error(ErrorKind::NotStrict, "K is not strictly characteristic");
  Subspace line = d.k();
  for (int j = 1; j < d.sigma0(); ++j) line = subspace_intersect(line, apply_phi(d.k(), j));
  if (line.dim() != 1)
    throw Error(ErrorKind::NotStrict, "canonical line has dimension " + std::to_string(line.dim()));
  return line;
}

namespace {

std::uint64_t root_count(int p, int sigma0, std::uint64_t budget) {
  std::uint64_t d = 1;
  for (int i = 0; i < sigma0; ++i) {
    if (d > budget / static_cast<std::uint64_t>(p))
      throw Error(ErrorKind::BudgetExceeded, "p^sigma0 + 1 exceeds the root-of-unity budget");
    d *= static_cast<std::uint64_t>(p);
  }
  return d + 1;
}

}  // namespace

OgusBasis ogus_basis(const CharDatum& d, std::uint64_t budget) {
  const Subspace line = canonical_line(d);
  const ContextFq ctx = d.k().context();
  const int s0 = d.sigma0();
  const Eigen::Index n = 2 * s0;
  const MatrixFq g = gram_over(d.space(), d.field());

  const VectorFq generator = line.basis().row(0).transpose();
  const Fq beta = bind(ctx, (generator.transpose() * g * apply_phi(generator, s0))(0, 0));
  if (is_zero(beta)) throw Error(ErrorKind::ModelInconsistent, "e·φ^σ0(e) vanishes on the canonical line");
  const std::uint64_t order = root_count(d.space().p(), s0, budget);
  const std::vector<Fq> roots = nth_roots(inverse(beta), order, budget);
  if (roots.empty())
    throw Error(ErrorKind::RootUnavailable,
                "normalisation root not in GF(p^" + std::to_string(d.field()->degree) + "); enlarge the field");

  OgusBasis out;
  out.scale = roots.front();
  out.e = MatrixFq(n, n);
  VectorFq cur = bind(ctx, out.scale * generator);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.e.row(i) = cur.transpose();
    cur = apply_phi(cur);
  }
  const VectorFq next = cur;  // e_(2σ0+1) = φ(e_2σ0)
  if (!try_inverse(ctx, out.e)) throw Error(ErrorKind::NotStrict, "φ-iterates of e do not span");
  out.gram = bind(ctx, out.e * g * out.e.transpose());
  for (int i = 1; i < s0; ++i) out.a.push_back(out.gram(0, s0 + i));

  const LinearSolution<Fq> coords = solve_linear(ctx, MatrixFq(out.e.transpose()), next);
  if (!coords.consistent) throw Error(ErrorKind::ModelInconsistent, "φ(e_2σ0) is outside the span of the basis");
  for (int i = 0; i < s0; ++i) {
    out.lambda.push_back(coords.particular(i));
    out.mu.push_back(coords.particular(s0 + i));
  }
  return out;
}

MatrixFq structure_gram(const Field& field, int sigma0, std::span<const Fq> a) {
  if (static_cast<int>(a.size()) != sigma0 - 1)
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(sigma0 - 1) + " structure constants");
  const ContextFq ctx{field};
  const Eigen::Index n = 2 * sigma0;
  MatrixFq g = zeros(ctx, n, n);
  for (int i = 0; i < sigma0; ++i) {
    for (int j = i; j < sigma0; ++j) {
      const Fq entry = j == i ? ctx.one() : frobenius(bind(ctx, a[j - i - 1]), i);
      g(i, sigma0 + j) = entry;
      g(sigma0 + j, i) = entry;
    }
  }
  return g;
}

Field constants_field(int p, std::span<const Fq> a) {
  Field field;
  for (const Fq& x : a) {
    if (!x.bound()) continue;
    if (x.field()->p != p) throw Error(ErrorKind::FieldMismatch, "structure constant has the wrong characteristic");
    if (field && !same_field(field, x.field()))
      throw Error(ErrorKind::FieldMismatch, "structure constants live in different fields");
    field = x.field();
  }
  return field ? field : prime_field(p);
}

StructureModel structure_model(int p, int sigma0, std::span<const Fq> a) {
  if (sigma0 < 1 || sigma0 > 11) throw Error(ErrorKind::InvalidArgument, "sigma0 must lie in 1..11");
  const Field field = constants_field(p, a);
  const ContextFq ctx{field};
  const Eigen::Index n = 2 * sigma0;
  StructureModel model;
  model.field = field;
  model.gram = structure_gram(field, sigma0, a);

  // Unknown y = φ(e_2σ0) in the basis e. Rows: y·e_k = σ(e_2σ0·e_(k−1)) for
  // k = 2..2σ0, then μ_1 = 0.
  MatrixFq system = zeros(ctx, n, n);
  VectorFq rhs = VectorFq::Constant(n, ctx.zero());
  for (Eigen::Index k = 1; k < n; ++k) {
    system.row(k - 1) = model.gram.col(k).transpose();
    rhs(k - 1) = frobenius(model.gram(n - 1, k - 1));
  }
  system(n - 1, sigma0) = ctx.one();
  const LinearSolution<Fq> sol = solve_linear(ctx, system, rhs);
  if (!sol.consistent || sol.kernel.rows() != 0)
    throw Error(ErrorKind::ModelInconsistent, "φ(e_2σ0) is not determined by the pairing constraints");
  const VectorFq y = sol.particular;
  for (int i = 0; i < sigma0; ++i) {
    model.lambda.push_back(y(i));
    model.mu.push_back(y(sigma0 + i));
  }
  if (!is_one(model.lambda[0])) throw Error(ErrorKind::ModelInconsistent, "solved λ_1 is not 1");
  if (!is_zero(bind(ctx, (y.transpose() * model.gram * y)(0, 0))))
    throw Error(ErrorKind::ModelInconsistent, "φ(e_2σ0) is not isotropic");

  model.frobenius = zeros(ctx, n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) model.frobenius(i + 1, i) = ctx.one();
  model.frobenius.col(n - 1) = y;
  return model;
}

namespace {

MatrixFq embed_matrix(const FieldEmbedding& emb, const MatrixFq& m) {
  return m.unaryExpr([&](const Fq& x) { return emb(x); }).eval();
}

// Multiplicative order of a matrix, or 0 if it exceeds `cap`.
int matrix_order(const ContextFq& ctx, const MatrixFq& m, int cap) {
  const MatrixFq id = identity(ctx, m.rows());
  MatrixFq power = m;
  for (int r = 1; r <= cap; ++r) {
    if (power == id) return r;
    power = bind(ctx, power * m);
  }
  return 0;
}

}  // namespace

CharDatum from_structure_constants(int p, int sigma0, std::span<const Fq> a, const DescentOptions& options) {
  const StructureModel model = structure_model(p, sigma0, a);
  const int n = model.field->degree;
  const Eigen::Index dim = 2 * sigma0;
  const int cap = options.cap_factor * n;

  // φ^n acts on e-coordinates as the matrix F σ(F) … σ^(n−1)(F); GF(p^N)
  // carries a full F_p-structure once φ^N is the identity there.
  const ContextFq small_ctx{model.field};
  MatrixFq norm = model.frobenius;
  for (int j = 1; j < n; ++j) norm = bind(small_ctx, norm * frobenius(model.frobenius, j));
  const int order = matrix_order(small_ctx, norm, std::max(1, cap / n));
  if (order == 0)
    throw Error(ErrorKind::DescentFailed, "φ^n has order beyond the field-degree cap " + std::to_string(cap));
  const int big_n = options.include_root_field ? std::lcm(n * order, 2 * sigma0) : n * order;
  if (big_n > cap)
    throw Error(ErrorKind::DescentFailed,
                "descent needs GF(p^" + std::to_string(big_n) + "), beyond the cap " + std::to_string(cap));

  const Field field = make_extension(p, big_n);
  const FieldEmbedding emb(model.field, field);
  const ContextFq ctx{field};
  const MatrixFq gram = embed_matrix(emb, model.gram);
  const MatrixFq frob = embed_matrix(emb, model.frobenius);

  const MatrixFq rational = fixed_points(frob);  // rows: F_p-basis in e-coordinates
  if (rational.rows() != dim)
    throw Error(ErrorKind::DescentFailed, "fixed space has dimension " + std::to_string(rational.rows()));

  const MatrixFq gram_v = bind(ctx, rational * gram * rational.transpose());
  MatrixZp gram_zp(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (!gram_v(i, j).in_prime_field())
        throw Error(ErrorKind::ModelInconsistent, "form is not F_p-valued on the fixed points");
      gram_zp(i, j) = gram_v(i, j).prime_part();
    }
  }
  QuadraticSpace v(p, gram_zp);
  if (!is_non_neutral(v)) throw Error(ErrorKind::ModelInconsistent, "recovered form is neutral");

  // Row u in e-coordinates is c · rational in V-coordinates.
  const MatrixFq to_v = inverse(ctx, rational);
  const MatrixFq top = to_v.topRows(sigma0);  // ⟨e_1 … e_σ0⟩ = φ^(σ0−1)(K)
  Subspace k(v, field, frobenius(top, -(sigma0 - 1)));
  CharDatum datum(std::move(k));
  if (!validate(datum).is_strict)
    throw Error(ErrorKind::ModelInconsistent, "reconstructed K is not strictly characteristic");
  return datum;
}

}  // namespace crystal
