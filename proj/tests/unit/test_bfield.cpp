#include "fixtures.hpp"
#include "../oracles.hpp"

#include <set>

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

VectorFq zero_vec(const CharDatum& d) { return VectorFq::Constant(d.space().dim(), Fq::zero(d.field())); }

}  // namespace

TEST_CASE("valid_bfield examples") {
  const CharDatum plane = plane_datum();
  CHECK(valid_bfield(zero_vec(plane), plane));
  CHECK(valid_bfield(plane.k().basis().row(0).transpose(), plane));
  for (std::uint64_t i = 0; i < 81; ++i)
    CHECK(valid_bfield(vec({Fq::from_index(gf9(), i / 9), Fq::from_index(gf9(), i % 9)}), plane));
  CHECK(valid_bfield_space(plane).rows() == 4);

  const CharDatum d = datum(3, 2, {1});
  CHECK(valid_bfield(zero_vec(d), d));
  for (Eigen::Index r = 0; r < d.k().dim(); ++r) CHECK(valid_bfield(d.k().basis().row(r).transpose(), d));
  const MatrixFq space = valid_bfield_space(d);
  for (Eigen::Index r = 0; r < space.rows(); ++r) CHECK(valid_bfield(space.row(r).transpose(), d));
  CHECK_THROWS_AS(valid_bfield(VectorFq::Constant(3, Fq::zero(d.field())), d), Error);
}

TEST_CASE("extend_by_bfield: the plane example") {
  const CharDatum plane = plane_datum();
  const Field f = gf9();
  const ExtendedDatum ed = extend_by_bfield(BFieldClass{plane, vec({Fq::one(f), Fq::zero(f)})});
  MatrixFq expected(2, 4);
  expected << Fq::one(f), t9(), Fq::one(f), Fq::zero(f), Fq::one(f), Fq::zero(f), Fq::from_int(f, 2), Fq::one(f);
  CHECK(ed.ktilde == Subspace(ed.extension.extended, f, expected));
  CHECK(artin_invariant(CharDatum(ed.ktilde)) == 2);
  CHECK(check_range(ed, plane).ok());
  // B and B + x_1 give the same K̃.
  const VectorFq shifted = vec({Fq::one(f) + Fq::one(f), t9()});
  CHECK(extend_by_bfield(BFieldClass{plane, shifted}).ktilde == ed.ktilde);
  const BFieldClass back = restrict_datum(ed);
  CHECK(back.base == plane);
  CHECK(same_class(back, BFieldClass{plane, vec({Fq::one(f), Fq::zero(f)})}));
}

TEST_CASE("B = 0 gives K ⊕ ⟨w⟩, characteristic but not strict") {
  const CharDatum plane = plane_datum();
  const ExtendedDatum ed = extend_by_bfield(BFieldClass{plane, zero_vec(plane)});
  const ValidationReport r = validate(ed.ktilde, ed.extension.extended);
  CHECK(r.is_characteristic);
  CHECK_FALSE(r.is_strict);
  CHECK(ed.ktilde.contains(ed.w()));
  CHECK(plane.k().contains(restrict_datum(ed).b));
  CHECK(is_zero_matrix(restrict_datum(ed).b));
}

TEST_CASE("restrict rejects v inside K̃") {
  const CharDatum plane = plane_datum();
  const HyperbolicExtension ext = hyperbolic_extend(plane.space());
  MatrixFq rows = MatrixFq::Constant(2, 4, Fq::zero(gf9()));
  rows(0, 0) = Fq::one(gf9());
  rows(0, 1) = t9();
  rows(1, 2) = Fq::one(gf9());
  const ExtendedDatum ed{ext, Subspace(ext.extended, gf9(), rows)};
  CHECK(kind_of([&] { restrict_datum(ed); }) == ErrorKind::DistinguishedVectorInside);
  CHECK_FALSE(check_range(ed, plane).v_outside);
}

TEST_CASE("invalid B and zero lambda") {
  const CharDatum d = datum(3, 2, {1});
  // Some coordinate vector fails the condition when K + φK is a proper subspace.
  bool found_invalid = false;
  for (Eigen::Index i = 0; i < 4 && !found_invalid; ++i) {
    VectorFq b = zero_vec(d);
    b(i) = Fq::generator(d.field());
    if (!valid_bfield(b, d)) {
      found_invalid = true;
      CHECK(kind_of([&] { extend_by_bfield(BFieldClass{d, b}); }) == ErrorKind::InvalidBField);
    }
  }
  CHECK(found_invalid);
  const ExtendedDatum ed = extend_by_bfield(BFieldClass{plane_datum(), zero_vec(plane_datum())});
  CHECK(kind_of([&] { power_twist(ed, Zp(0, 3)); }) == ErrorKind::ZeroLambda);
  CHECK(kind_of([&] { power_twist(ed, Zp(3, 3)); }) == ErrorKind::ZeroLambda);
}

TEST_CASE("power twist") {
  const CharDatum plane = plane_datum();
  const Field f = gf9();
  const VectorFq b = vec({Fq::one(f), Fq::zero(f)});
  const ExtendedDatum ed = extend_by_bfield(BFieldClass{plane, b});
  CHECK(power_twist(ed, Zp(1, 3)).ktilde == ed.ktilde);
  CHECK(power_twist(ed, Zp(2, 3)).ktilde == extend_by_bfield(BFieldClass{plane, vec({Fq::from_int(f, 2), Fq::zero(f)})}).ktilde);
  CHECK(power_twist(ed, Zp(-1, 3)).ktilde == extend_by_bfield(BFieldClass{plane, vec({-Fq::one(f), Fq::zero(f)})}).ktilde);
  const CharDatum d = datum(5, 2, {0});
  const MatrixFq space = valid_bfield_space(d);
  const ContextFq ctx = d.k().context();
  for (Eigen::Index r = 0; r < space.rows(); r += 2) {
    const VectorFq bb = space.row(r).transpose();
    const ExtendedDatum e = extend_by_bfield(BFieldClass{d, bb});
    for (int l = 1; l < 5; ++l) {
      CHECK(power_twist(e, Zp(l, 5)).ktilde ==
            extend_by_bfield(BFieldClass{d, bind(ctx, (ctx.from_int(l) * bb).eval())}).ktilde);
      for (int l2 = 1; l2 < 5; ++l2)
        CHECK(power_twist(power_twist(e, Zp(l, 5)), Zp(l2, 5)).ktilde == power_twist(e, Zp(l * l2, 5)).ktilde);
    }
  }
}

TEST_CASE("extension round trips on generic data") {
  for (const CharDatum& d : {datum(3, 2, {1}), datum(3, 3, {0, 2})}) {
    const MatrixFq space = valid_bfield_space(d);
    for (Eigen::Index r = 0; r < space.rows(); r += 3) {
      const VectorFq b = space.row(r).transpose();
      const ExtendedDatum ed = extend_by_bfield(BFieldClass{d, b});
      CHECK(ed.ktilde.dim() == d.sigma0() + 1);
      CHECK(check_range(ed, d).ok());
      const BFieldClass back = restrict_datum(ed);
      CHECK(same_class(back, BFieldClass{d, b}));
      CHECK(extend_by_bfield(back).ktilde == ed.ktilde);
    }
  }
}

TEST_CASE("the nine GF(9)-rational classes and the Grassmannian") {
  const CharDatum plane = plane_datum();
  const Field f = gf9();
  std::set<std::vector<std::vector<std::int32_t>>> classes;
  std::vector<VectorFq> reps;
  for (std::uint64_t i = 0; i < 81; ++i) {
    const VectorFq b = vec({Fq::from_index(f, i / 9), Fq::from_index(f, i % 9)});
    const VectorFq c = canonical(BFieldClass{plane, b}).b;
    if (classes.insert({c(0).coeffs(), c(1).coeffs()}).second) reps.push_back(c);
  }
  REQUIRE(reps.size() == 9);
  std::vector<Subspace> images;
  for (const VectorFq& b : reps) {
    const ExtendedDatum ed = extend_by_bfield(BFieldClass{plane, b});
    CHECK(check_range(ed, plane).ok());
    CHECK(same_class(restrict_datum(ed), BFieldClass{plane, b}));
    for (const Subspace& s : images) CHECK_FALSE(s == ed.ktilde);
    images.push_back(ed.ktilde);
  }
  // Every plane of GF(9)^4 meeting the range conditions is one of the images.
  const HyperbolicExtension ext = hyperbolic_extend(plane.space());
  std::size_t planes = 0, in_range = 0, matched = 0;
  oracle::for_each_subspace(f, 4, 2, [&](const MatrixFq& m) {
    ++planes;
    const ExtendedDatum ed{ext, Subspace(ext.extended, f, m)};
    if (!check_range(ed, plane).ok()) return;
    ++in_range;
    for (const Subspace& s : images) matched += s == ed.ktilde;
  });
  CHECK(planes == 7462);
  CHECK(in_range == 9);
  CHECK(matched == 9);
}
