#include "fixtures.hpp"

using namespace crystal;
using namespace fixture;

TEST_CASE("make_extension picks the smallest irreducible modulus") {
  CHECK(make_extension(3, 1)->modulus == std::vector<std::int32_t>{0, 1});
  CHECK(make_extension(3, 2)->modulus == std::vector<std::int32_t>{1, 0, 1});
  CHECK(make_extension(5, 2)->modulus == std::vector<std::int32_t>{1, 1, 1});
  // Nothing smaller in the lexicographic order is irreducible.
  for (int c0 = 0; c0 < 3; ++c0)
    for (int c1 = 0; c1 < 3; ++c1) {
      const std::vector<std::int32_t> poly{c0, c1, 1};
      if (poly < make_extension(3, 2)->modulus) CHECK_FALSE(is_irreducible(poly, 3));
    }
}

TEST_CASE("make_extension rejects bad characteristics") {
  CHECK_THROWS_AS(make_extension(2, 1), Error);
  try {
    make_extension(2, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EvenCharacteristic);
  }
  try {
    make_extension(9, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
}

TEST_CASE("make_extension is deterministic") {
  for (int n = 1; n <= 6; ++n) CHECK(make_extension(3, n)->modulus == make_extension(3, n)->modulus);
  CHECK(make_extension(3, 4) == make_extension(3, 4));
}

TEST_CASE("frobenius examples") {
  CHECK(frobenius(Fq::from_int(prime_field(3), 2)) == Fq::from_int(prime_field(3), 2));
  CHECK(frobenius(t9()) == e(gf9(), {0, 2}));
  CHECK(is_zero(frobenius(Fq::zero(gf9()))));
  CHECK(t9() * t9() == Fq::from_int(gf9(), -1));
}

TEST_CASE("field axioms hold exhaustively in GF(9) and GF(25)") {
  for (const Field& f : {make_extension(3, 2), make_extension(5, 2)}) {
    const std::uint64_t q = static_cast<std::uint64_t>(f->p * f->p);
    for (std::uint64_t i = 0; i < q; ++i) {
      const Fq x = Fq::from_index(f, i);
      CHECK(frobenius(x, f->degree) == x);
      if (!is_zero(x)) CHECK(is_one(x * inverse(x)));
      for (std::uint64_t j = 0; j < q; j += 3) {
        const Fq y = Fq::from_index(f, j);
        CHECK(frobenius(x + y) == frobenius(x) + frobenius(y));
        CHECK(frobenius(x * y) == frobenius(x) * frobenius(y));
        const Fq z = Fq::from_index(f, (i * 7 + j) % q);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
  }
}

TEST_CASE("frobenius has order N on sampled elements of larger fields") {
  for (int n : {3, 4, 6, 12}) {
    const Field f = make_extension(3, n);
    for (std::uint64_t i = 1; i < 200; i += 17) {
      const Fq x = Fq::from_index(f, i * 104729 % 531441);
      CHECK(frobenius(x, n) == x);
      CHECK(frobenius(frobenius(x, 1), -1) == x);
    }
  }
}

TEST_CASE("canonical element order agrees with from_index") {
  const Field f = gf9();
  for (std::uint64_t i = 0; i + 1 < 9; ++i) CHECK(Fq::from_index(f, i) < Fq::from_index(f, i + 1));
}

TEST_CASE("embeddings are field homomorphisms") {
  const Field small = make_extension(3, 2), big = make_extension(3, 6);
  const FieldEmbedding emb(small, big);
  for (std::uint64_t i = 0; i < 9; ++i)
    for (std::uint64_t j = 0; j < 9; ++j) {
      const Fq x = Fq::from_index(small, i), y = Fq::from_index(small, j);
      CHECK(emb(x * y) == emb(x) * emb(y));
      CHECK(emb(x + y) == emb(x) + emb(y));
    }
  CHECK(emb(t9()) * emb(t9()) == Fq::from_int(big, -1));
}

TEST_CASE("roots of unity and nth roots") {
  const Field f = gf9();
  // a^4 = 2 is solvable in GF(9): fourth powers form {1, 2}.
  const std::vector<Fq> r = nth_roots(Fq::from_int(f, 2), 4);
  CHECK(r.size() == 4);
  for (const Fq& x : r) CHECK(pow(x, BigInt(4)) == Fq::from_int(f, 2));
  CHECK(std::is_sorted(r.begin(), r.end()));
  CHECK(nth_roots(t9(), 8).empty());  // t is not an 8th power: x^8 = 1
  CHECK(roots_of_unity(f, 4).size() == 4);
  CHECK(roots_of_unity(make_extension(3, 6), 28).size() == 28);
  CHECK(roots_of_unity(make_extension(3, 6), 10).size() == 2);  // gcd(10, 728) = 2
  // Exhaustive cross-check of the root counts in GF(25).
  const Field f25 = make_extension(5, 2);
  for (std::uint64_t a = 1; a < 25; ++a) {
    const Fq x = Fq::from_index(f25, a);
    for (std::uint64_t d : {2u, 3u, 4u, 6u, 8u, 12u}) {
      std::size_t count = 0;
      for (std::uint64_t b = 1; b < 25; ++b) count += pow(Fq::from_index(f25, b), BigInt(d)) == x;
      CHECK(nth_roots(x, d).size() == count);
    }
  }
}

TEST_CASE("solve_linear examples") {
  const ContextZp ctx{3};
  const MatrixZp id = identity(ctx, 3);
  VectorZp b(3);
  b << Zp(1, 3), Zp(2, 3), Zp(0, 3);
  const auto s = solve_linear(ctx, id, b);
  CHECK(s.consistent);
  CHECK(s.particular == b);
  CHECK(s.kernel.rows() == 0);

  const auto z = solve_linear(ctx, zeros(ctx, 2, 2), VectorZp(zeros(ctx, 2, 1)));
  CHECK(z.consistent);
  CHECK(z.kernel.rows() == 2);

  MatrixZp a(1, 2);
  a << Zp(1, 3), Zp(1, 3);
  VectorZp one(1);
  one << Zp(1, 3);
  const auto l = solve_linear(ctx, a, one);
  CHECK(l.consistent);
  CHECK(l.particular(0) == Zp(1, 3));
  CHECK(l.particular(1) == Zp(0, 3));
  REQUIRE(l.kernel.rows() == 1);
  CHECK(l.kernel(0, 0) == Zp(1, 3));
  CHECK(l.kernel(0, 1) == Zp(-1, 3));

  const auto bad = solve_linear(ctx, zeros(ctx, 1, 2), one);
  CHECK_FALSE(bad.consistent);
}

TEST_CASE("mixing fields is an error") {
  CHECK_THROWS_AS(t9() + Fq::generator(make_extension(3, 3)), Error);
  CHECK_THROWS_AS(Zp(1, 3) + Zp(1, 5), Error);
}
