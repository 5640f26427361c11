#include "crystal/orthogroup.hpp"

namespace crystal {

namespace {

std::uint64_t mu_order(int p, int sigma0, std::uint64_t budget) {
  std::uint64_t d = 1;
  for (int i = 0; i < sigma0; ++i) {
    if (d > budget / static_cast<std::uint64_t>(p))
      throw Error(ErrorKind::BudgetExceeded, "p^sigma0 + 1 exceeds the enumeration budget");
    d *= static_cast<std::uint64_t>(p);
  }
  if (d + 1 > budget) throw Error(ErrorKind::BudgetExceeded, "p^sigma0 + 1 exceeds the enumeration budget");
  return d + 1;
}

bool admissible(int m, int sigma0) { return m >= 1 && sigma0 % m == 0 && (sigma0 / m) % 2 == 1; }

bool pattern_allows(const std::vector<bool>& nonzero, int m) {
  for (std::size_t i = 1; i <= nonzero.size(); ++i)
    if (i % (2 * static_cast<std::size_t>(m)) != 0 && nonzero[i - 1]) return false;
  return true;
}

std::vector<bool> pattern_of(std::span<const Fq> a) {
  std::vector<bool> out;
  for (const Fq& x : a) out.push_back(x.bound() ? !is_zero(x) : x.literal() != 0);
  return out;
}

}  // namespace

int m_invariant(const std::vector<bool>& nonzero, int sigma0) {
  if (sigma0 < 1 || static_cast<int>(nonzero.size()) != sigma0 - 1)
    throw Error(ErrorKind::InvalidArgument, "expected sigma0 - 1 structure constants");
  for (int m = sigma0; m >= 1; --m)
    if (admissible(m, sigma0) && pattern_allows(nonzero, m)) return m;
  return 0;
}

int m_invariant(std::span<const Fq> a, int sigma0) { return m_invariant(pattern_of(a), sigma0); }

BigInt ortho_group_order(const CharDatum& d) {
  const OgusBasis b = ogus_basis(d);
  return boost::multiprecision::pow(BigInt(d.space().p()), m_invariant(b.a, d.sigma0())) + 1;
}

std::optional<OrthoElement> diagonal_automorphism(const Fq& zeta, const CharDatum& d, const OgusBasis& basis) {
  const ContextFq ctx = d.k().context();
  const Eigen::Index n = d.space().dim();
  const int p = d.space().p();
  OrthoElement el;
  el.zeta = bind(ctx, zeta);
  el.diagonal = VectorFq(n);
  Fq power = el.zeta;
  for (Eigen::Index i = 0; i < n; ++i) {
    el.diagonal(i) = power;
    power = frobenius(power);
  }
  // x = Eᵀ c for e-coordinates c.
  const MatrixFq et = basis.e.transpose();
  const MatrixFq g = bind(ctx, et * el.diagonal.asDiagonal() * inverse(ctx, et));
  el.matrix = MatrixZp(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!g(i, j).in_prime_field()) return std::nullopt;
      el.matrix(i, j) = g(i, j).prime_part();
    }
  }
  const ContextZp zctx{p};
  if (!(bind(zctx, el.matrix.transpose() * d.space().gram() * el.matrix) == d.space().gram())) return std::nullopt;
  const Subspace image(d.space(), d.field(), bind(ctx, d.k().basis() * g.transpose()));
  if (!(image == d.k())) return std::nullopt;
  return el;
}

std::vector<OrthoElement> ortho_group_elements(const CharDatum& d, std::uint64_t budget) {
  const std::uint64_t order = mu_order(d.space().p(), d.sigma0(), budget);
  const Field& field = d.field();
  if ((boost::multiprecision::pow(BigInt(field->p), field->degree) - 1) % order != 0)
    throw Error(ErrorKind::RootFieldTooSmall, "GF(p^" + std::to_string(field->degree) + ") does not contain μ_" +
                                                  std::to_string(order));
  const OgusBasis basis = ogus_basis(d, budget);
  std::vector<OrthoElement> out;
  for (const Fq& zeta : roots_of_unity(field, order, budget))
    if (auto el = diagonal_automorphism(zeta, d, basis)) out.push_back(std::move(*el));
  return out;
}

bool zeta_in_image(const Fq& zeta, const CharDatum& d) {
  const int p = d.space().p();
  const int s0 = d.sigma0();
  const std::uint64_t full = mu_order(p, s0, UINT64_MAX);
  if (is_zero(zeta) || !is_one(pow(zeta, BigInt(full))))
    throw Error(ErrorKind::InvalidArgument, "zeta is not a (p^sigma0 + 1)-th root of unity");
  const OgusBasis basis = ogus_basis(d);
  const std::uint64_t order = order_dividing(zeta, full);
  std::uint64_t pm = 1;
  for (int m = 1; m <= s0; ++m) {
    pm *= static_cast<std::uint64_t>(p);
    if (pm + 1 == order && admissible(m, s0)) return pattern_allows(pattern_of(basis.a), m);
  }
  return diagonal_automorphism(zeta, d, basis).has_value();
}

}  // namespace crystal
