#include "fixtures.hpp"
#include "../oracles.hpp"

#include <set>

using namespace crystal;
using namespace fixture;

namespace {

std::vector<bool> nz(std::initializer_list<int> xs) {
  std::vector<bool> out;
  for (int x : xs) out.push_back(x != 0);
  return out;
}

// Every isometry of V preserving K, found without the diagonal form.
std::vector<MatrixZp> stabiliser_by_search(const CharDatum& d) {
  const int p = d.space().p();
  const ContextFq ctx = d.k().context();
  std::vector<MatrixZp> out;
  for (const auto& cols : oracle::isometries(p, oracle::to_int(d.space().gram()))) {
    const MatrixZp g = oracle::to_matrix(cols, p);
    const MatrixFq gl = lift(d.field(), g);
    if (Subspace(d.space(), d.field(), bind(ctx, d.k().basis() * gl.transpose())) == d.k()) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("m_invariant examples") {
  CHECK(m_invariant(nz({}), 1) == 1);
  CHECK(m_invariant(nz({1}), 2) == 0);
  CHECK(m_invariant(nz({0}), 2) == 2);
  CHECK(m_invariant(nz({0, 1}), 3) == 1);
  CHECK(m_invariant(nz({0, 0}), 3) == 3);
  CHECK(m_invariant(nz({1, 0}), 3) == 0);
  CHECK(m_invariant(nz({1, 1}), 3) == 0);
  // σ0 = 5: m = 5, then m = 1 (a_2 and a_4 may be nonzero).
  CHECK(m_invariant(nz({0, 0, 0, 0}), 5) == 5);
  CHECK(m_invariant(nz({0, 1, 0, 1}), 5) == 1);
  CHECK(m_invariant(nz({0, 1, 1, 0}), 5) == 0);
  // σ0 = 6: admissible m are 2 and 6.
  CHECK(m_invariant(nz({0, 0, 0, 1, 0}), 6) == 2);
  CHECK(m_invariant(nz({0, 0, 0, 0, 0}), 6) == 6);
  CHECK(m_invariant(nz({0, 1, 0, 0, 0}), 6) == 0);
}

TEST_CASE("m_invariant ignores the normalisation rescaling") {
  const CharDatum d = datum(3, 3, {0, 2});
  const OgusBasis b = ogus_basis(d);
  for (const Fq& z : roots_of_unity(d.field(), 28)) {
    std::vector<Fq> scaled;
    for (int i = 1; i < 3; ++i) scaled.push_back(pow(z, boost::multiprecision::pow(BigInt(3), 3 + i) + 1) * b.a[i - 1]);
    CHECK(m_invariant(scaled, 3) == m_invariant(b.a, 3));
  }
}

TEST_CASE("group orders on the p = 3 matrix") {
  const std::vector<std::pair<std::vector<int>, int>> cases{{{}, 4},     {{0}, 10}, {{1}, 2},
                                                            {{0, 0}, 28}, {{0, 2}, 4}, {{1, 2}, 2}};
  for (const auto& [a, order] : cases) {
    const CharDatum d = datum(3, static_cast<int>(a.size()) + 1, a);
    CHECK(ortho_group_order(d) == order);
    CHECK(ortho_group_elements(d).size() == static_cast<std::size_t>(order));
  }
}

TEST_CASE("diagonal enumeration agrees with a search over all of O(V)") {
  for (const CharDatum& d : {plane_datum(), datum(3, 1, {}), datum(3, 2, {0}), datum(3, 2, {1}), datum(5, 1, {}),
                             datum(5, 2, {1})}) {
    std::set<std::vector<std::int64_t>> diagonal, search;
    for (const OrthoElement& g : ortho_group_elements(d)) {
      std::vector<std::int64_t> flat;
      for (Eigen::Index i = 0; i < g.matrix.size(); ++i) flat.push_back(g.matrix(i).value());
      diagonal.insert(flat);
    }
    for (const MatrixZp& g : stabiliser_by_search(d)) {
      std::vector<std::int64_t> flat;
      for (Eigen::Index i = 0; i < g.size(); ++i) flat.push_back(g(i).value());
      search.insert(flat);
    }
    CHECK(diagonal == search);
  }
}

TEST_CASE("sigma0 = 1: the zetas are the fourth roots of unity") {
  const auto els = ortho_group_elements(plane_datum());
  const auto roots = roots_of_unity(gf9(), 4);
  REQUIRE(els.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(els[i].zeta == roots[i]);
}

TEST_CASE("generic sigma0 = 2 gives plus and minus identity") {
  const CharDatum d = datum(3, 2, {1});
  const auto els = ortho_group_elements(d);
  REQUIRE(els.size() == 2);
  const ContextZp ctx{3};
  std::set<std::int64_t> scalars;
  for (const auto& g : els) {
    CHECK(g.matrix == bind(ctx, (g.matrix(0, 0) * identity(ctx, 4)).eval()));
    scalars.insert(g.matrix(0, 0).value());
  }
  CHECK(scalars == std::set<std::int64_t>{1, 2});
}

TEST_CASE("group structure") {
  for (const CharDatum& d : {datum(3, 2, {0}), datum(3, 3, {0, 0}), datum(5, 3, {0, 2})}) {
    const auto els = ortho_group_elements(d);
    const ContextZp ctx = d.space().context();
    std::set<std::vector<std::int32_t>> zetas;
    for (const auto& g : els) {
      zetas.insert(g.zeta.coeffs());
      CHECK(bind(ctx, (g.matrix.transpose() * d.space().gram() * g.matrix).eval()) == d.space().gram());
      const Subspace line = canonical_line(d);
      const MatrixFq gl = lift(d.field(), g.matrix);
      CHECK(Subspace(d.space(), d.field(), bind(d.k().context(), line.basis() * gl.transpose())) == line);
      for (const auto& h : els) {
        const MatrixZp gh = bind(ctx, g.matrix * h.matrix);
        bool found = false;
        for (const auto& k : els) found |= k.matrix == gh;
        CHECK(found);
      }
    }
    CHECK(zetas.size() == els.size());
  }
}

TEST_CASE("zeta_in_image") {
  const CharDatum generic = datum(3, 2, {1});
  const Field f = generic.field();
  CHECK(zeta_in_image(Fq::one(f), generic));
  CHECK(zeta_in_image(Fq::from_int(f, -1), generic));
  for (const Fq& z : roots_of_unity(f, 10))
    if (order_dividing(z, 10) == 10) CHECK_FALSE(zeta_in_image(z, generic));
  for (const CharDatum& d : {datum(3, 2, {0}), datum(3, 3, {0, 2}), datum(3, 3, {0, 0}), datum(5, 2, {0})}) {
    std::set<std::vector<std::int32_t>> members;
    for (const auto& g : ortho_group_elements(d)) members.insert(g.zeta.coeffs());
    const std::uint64_t full = static_cast<std::uint64_t>(boost::multiprecision::pow(BigInt(d.space().p()), d.sigma0())) + 1;
    for (const Fq& z : roots_of_unity(d.field(), full)) CHECK(zeta_in_image(z, d) == (members.count(z.coeffs()) > 0));
  }
}

TEST_CASE("root field too small and budget") {
  // (3, 2, (1)) descends over GF(3^6), which has no tenth roots of unity.
  const CharDatum d = from_structure_constants(3, 2, std::vector<Fq>{Fq(1)}, DescentOptions{64, false});
  REQUIRE(d.field()->degree == 6);
  try {
    ortho_group_elements(d);
    FAIL("expected RootFieldTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RootFieldTooSmall);
  }
  try {
    ortho_group_elements(datum(3, 2, {0}), 5);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}
