#include "fixtures.hpp"
#include "../oracles.hpp"

using namespace crystal;
using namespace fixture;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

// a' = ζ^(1+p^(σ0+i)) a for some ζ ∈ μ_(p^σ0+1), with a embedded in the datum's field.
bool equal_up_to_rescaling(const CharDatum& d, const std::vector<Fq>& recovered, const std::vector<Fq>& given) {
  const int p = d.space().p(), s0 = d.sigma0();
  const Field src = constants_field(p, given);
  const FieldEmbedding emb(src, d.field());
  const BigInt order = boost::multiprecision::pow(BigInt(p), s0) + 1;
  for (const Fq& z : roots_of_unity(d.field(), static_cast<std::uint64_t>(order))) {
    bool all = true;
    for (int i = 1; i < s0; ++i) {
      const Fq a = emb(bind(ContextFq{src}, given[i - 1]));
      all &= pow(z, boost::multiprecision::pow(BigInt(p), s0 + i) + 1) * recovered[i - 1] == a;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validate: the GF(9) plane example") {
  const CharDatum d = plane_datum();
  const ValidationReport r = validate(d);
  CHECK(r.totally_isotropic);
  CHECK(r.is_characteristic);
  CHECK(r.is_strict);
  CHECK(r.sigma0 == 1);
}

TEST_CASE("validate: rational lines and the zero subspace are not characteristic") {
  const QuadraticSpace v = standard_space(3, 1);
  for (int c = 0; c < 3; ++c) {
    MatrixFq k(1, 2);
    k << Fq::one(gf9()), Fq::from_int(gf9(), c);
    const ValidationReport r = validate(Subspace(v, gf9(), k), v);
    CHECK_FALSE(r.is_characteristic);
    CHECK_FALSE(r.totally_isotropic);
    CHECK(r.dim_k_plus_phi_k == 1);
  }
  const ValidationReport z = validate(Subspace::zero(v, gf9()), v);
  CHECK_FALSE(z.is_characteristic);
  CHECK(kind_of([&] { validate(Subspace::zero(v, gf9()), standard_space(3, 2)); }) == ErrorKind::AmbientMismatch);
}

TEST_CASE("artin invariant") {
  CHECK(artin_invariant(plane_datum()) == 1);
  CHECK(artin_invariant(datum(3, 2, {1})) == 2);
  CHECK(artin_invariant(datum(3, 3, {0, 0})) == 3);
  CHECK(kind_of([] { artin_invariant(CharDatum(Subspace::zero(standard_space(3, 1), gf9()))); }) ==
        ErrorKind::NotCharacteristic);
}

TEST_CASE("canonical line") {
  const CharDatum plane = plane_datum();
  CHECK(canonical_line(plane) == plane.k());
  for (const CharDatum& d : {datum(3, 2, {1}), datum(3, 3, {0, 2}), datum(5, 3, {1, 1})}) {
    const Subspace line = canonical_line(d);
    CHECK(line.dim() == 1);
    for (int j = 0; j < d.sigma0(); ++j) CHECK(subspace_intersect(line, apply_phi(d.k(), j)) == line);
  }
  MatrixFq k(1, 2);
  k << Fq::one(gf9()), Fq::zero(gf9());
  CHECK(kind_of([&] { canonical_line(CharDatum(Subspace(standard_space(3, 1), gf9(), k))); }) ==
        ErrorKind::NotStrict);
}

TEST_CASE("ogus basis of the plane example") {
  const CharDatum d = plane_datum();
  const OgusBasis b = ogus_basis(d);
  CHECK(b.a.empty());
  CHECK(is_one(b.lambda[0]));
  CHECK(is_zero(b.mu[0]));
  CHECK(is_one(b.gram(0, 1)));
  // Unnormalised e = (1, t) has e·φ(e) = 2, so the scale solves c^4 = 2.
  CHECK(pow(b.scale, BigInt(4)) == Fq::from_int(gf9(), 2));
  CHECK(b.scale == nth_roots(Fq::from_int(gf9(), 2), 4).front());
  for (Eigen::Index i = 0; i + 1 < b.e.rows(); ++i) CHECK(b.e.row(i + 1) == frobenius(b.e.row(i)));
}

TEST_CASE("ogus basis matches the block Gram form") {
  for (const CharDatum& d : {datum(3, 2, {1}), datum(3, 3, {1, 2}), datum(5, 2, {0}), datum(5, 3, {0, 2})}) {
    const OgusBasis b = ogus_basis(d);
    CHECK(b.gram == structure_gram(d.field(), d.sigma0(), b.a));
    CHECK(is_one(b.lambda[0]));
    CHECK(is_zero(b.mu[0]));
    CHECK(is_one(pair(d.k(), b.e.row(0).transpose(), apply_phi(VectorFq(b.e.row(0).transpose()), d.sigma0()))));
  }
}

TEST_CASE("structure model solves for phi(e_2sigma0)") {
  const StructureModel m = structure_model(3, 3, std::vector<Fq>{Fq(1), Fq(2)});
  CHECK(is_one(m.lambda[0]));
  CHECK(is_zero(m.mu[0]));
  // φ(e_i)·φ(e_j) = σ(e_i·e_j) for the companion matrix F.
  const ContextFq ctx{m.field};
  const MatrixFq lhs = bind(ctx, m.frobenius.transpose() * m.gram * m.frobenius);
  CHECK(lhs == frobenius(m.gram));
  CHECK(kind_of([] { structure_model(3, 2, std::vector<Fq>{}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("from_structure_constants: sigma0 = 1 is the plane example up to isometry") {
  const CharDatum built = datum(3, 1, {});
  const CharDatum plane = plane_datum();
  REQUIRE(built.field()->degree == 2);
  CHECK(validate(built).is_strict);
  // Search every F_3-linear map between the two planes.
  const auto gp = oracle::to_int(plane.space().gram());
  const auto gb = oracle::to_int(built.space().gram());
  int isometries = 0, matching = 0;
  for (const auto& flat : oracle::all_vectors(3, 4)) {
    const oracle::IntMatrix h{{flat[0], flat[1]}, {flat[2], flat[3]}};  // columns
    bool iso = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) iso &= oracle::form(gb, h[i], h[j], 3) == oracle::mod(gp[i][j], 3);
    if (!iso) continue;
    ++isometries;
    const MatrixFq hm = lift(gf9(), oracle::to_matrix(h, 3));
    const Subspace image(built.space(), gf9(), bind(ContextFq{gf9()}, plane.k().basis() * hm.transpose()));
    matching += image == built.k();
  }
  CHECK(isometries == 8);
  CHECK(matching > 0);
}

TEST_CASE("from_structure_constants: examples and round trip") {
  CHECK(m_invariant(ogus_basis(datum(3, 2, {0})).a, 2) == 2);
  CHECK(m_invariant(ogus_basis(datum(3, 2, {1})).a, 2) == 0);
  for (const MatrixCase& c : standard_matrix()) {
    CAPTURE(c.p);
    CAPTURE(c.sigma0);
    CAPTURE(c.pattern);
    const CharDatum d = datum(c.p, c.sigma0, c.a);
    CHECK(validate(d).is_strict);
    CHECK(verify_non_neutral(d.space()));
    const OgusBasis b = ogus_basis(d);
    std::vector<Fq> given;
    for (int x : c.a) given.push_back(Fq(x));
    for (std::size_t i = 0; i < given.size(); ++i) CHECK(is_zero(b.a[i]) == (c.a[i] % c.p == 0));
    CHECK(equal_up_to_rescaling(d, b.a, given));
  }
}

TEST_CASE("from_structure_constants over GF(9)") {
  const std::vector<Fq> a{t9()};
  const CharDatum d = from_structure_constants(3, 2, a);
  CHECK(d.field()->degree % 2 == 0);
  CHECK(validate(d).is_strict);
  const OgusBasis b = ogus_basis(d);
  CHECK_FALSE(is_zero(b.a[0]));
  CHECK(equal_up_to_rescaling(d, b.a, a));
}

TEST_CASE("descent cap") {
  CHECK(kind_of([] { from_structure_constants(3, 2, std::vector<Fq>{Fq(1)}, DescentOptions{2}); }) ==
        ErrorKind::DescentFailed);
  CHECK(kind_of([] { from_structure_constants(5, 3, std::vector<Fq>{Fq(1), Fq(3)}); }) == ErrorKind::DescentFailed);
}
