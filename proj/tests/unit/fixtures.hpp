#ifndef CRYSTAL_TESTS_FIXTURES_HPP
#define CRYSTAL_TESTS_FIXTURES_HPP

#include <doctest.h>

#include "crystal/verify.hpp"

namespace fixture {

using namespace crystal;

inline Field gf9() { return make_extension(3, 2); }
inline Fq t9() { return Fq::generator(gf9()); }

/// K = ⟨(1, t)⟩ in the plane with Gram diag(1, 1) over GF(9), t² = −1.
inline CharDatum plane_datum() {
  MatrixFq k(1, 2);
  k << Fq::one(gf9()), t9();
  return CharDatum(Subspace(standard_space(3, 1), gf9(), k));
}

inline CharDatum datum(int p, int sigma0, std::vector<int> a) {
  std::vector<Fq> c;
  for (int x : a) c.push_back(Fq(x));
  return from_structure_constants(p, sigma0, c);
}

inline VectorFq vec(std::initializer_list<Fq> xs) {
  VectorFq v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Fq& x : xs) v(i++) = x;
  return v;
}

inline Fq e(const Field& f, std::vector<std::int32_t> c) { return Fq(f, std::move(c)); }

}  // namespace fixture

#endif  // CRYSTAL_TESTS_FIXTURES_HPP
