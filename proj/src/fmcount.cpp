#include "crystal/fmcount.hpp"

#include <numeric>
#include <unordered_map>

namespace crystal {

BigInt count_fm_formula(int p, int sigma0, int m) {
  using boost::multiprecision::pow;
  if (sigma0 < 1 || sigma0 > 11) throw Error(ErrorKind::InvalidArgument, "sigma0 must lie in 1..11");
  if (m < 0 || m > sigma0) throw Error(ErrorKind::InvalidM, "m must lie in 0..sigma0");
  const BigInt top = pow(BigInt(p), sigma0) + 1;
  const BigInt group = pow(BigInt(p), m) + 1;
  if (top % group != 0)
    throw Error(ErrorKind::InvalidM, "p^m + 1 does not divide p^sigma0 + 1 for m = " + std::to_string(m));
  BigInt count = top / group * (pow(BigInt(p), sigma0 - 1) - 1);
  if (sigma0 <= 10) count += 1;
  return count;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

OrbitCount orbit_count(const CharDatum& d, std::uint64_t budget) {
  const QuadraticSpace& v = d.space();
  const std::vector<VectorZp> iso = enumerate_isotropic(v, budget);
  const std::vector<OrthoElement> group = ortho_group_elements(d);
  std::unordered_map<std::uint64_t, std::size_t> position;
  for (std::size_t i = 0; i < iso.size(); ++i) position.emplace(lex_index(iso[i], v.p()), i);

  OrbitCount out;
  UnionFind uf(iso.size());
  const ContextZp ctx = v.context();
  const MatrixZp id = identity(ctx, v.dim());
  for (const OrthoElement& g : group) {
    const bool is_identity = g.matrix == id;
    for (std::size_t i = 0; i < iso.size(); ++i) {
      const VectorZp image = bind(ctx, g.matrix * iso[i]);
      const auto it = position.find(lex_index(image, v.p()));
      if (it == position.end()) throw Error(ErrorKind::ModelInconsistent, "automorphism leaves I(V)");
      if (!is_identity && it->second == i) out.action_free = false;
      uf.unite(i, it->second);
    }
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < iso.size(); ++i) roots += uf.find(i) == i;
  out.orbits = roots;
  return out;
}

bool verify_free_action(const CharDatum& d, std::uint64_t budget) { return orbit_count(d, budget).action_free; }

PartnerCountReport count_fm_from_constants(int p, int sigma0, const std::vector<bool>& nonzero) {
  PartnerCountReport r;
  r.p = p;
  r.sigma0 = sigma0;
  r.m = m_invariant(nonzero, sigma0);
  r.formula_count = count_fm_formula(p, sigma0, r.m);
  r.isotropic_count = isotropic_count_formula(p, sigma0);
  r.group_order = boost::multiprecision::pow(BigInt(p), r.m) + 1;
  return r;
}

PartnerCountReport count_fm_partners(const CharDatum& d, const CountOptions& options) {
  const OgusBasis basis = ogus_basis(d);
  std::vector<bool> nonzero;
  for (const Fq& a : basis.a) nonzero.push_back(!is_zero(a));
  PartnerCountReport r = count_fm_from_constants(d.space().p(), d.sigma0(), nonzero);
  if (!options.brute_force) return r;

  const OrbitCount oc = orbit_count(d, options.budget);
  r.orbit_count = oc.orbits;
  r.action_free = oc.action_free;
  r.bruteforce_count = oc.orbits + (r.sigma0 <= 10 ? 1 : 0);
  return r;
}

}  // namespace crystal
