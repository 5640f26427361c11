#ifndef CRYSTAL_FIELD_HPP
#define CRYSTAL_FIELD_HPP

// Exact arithmetic in F_p and GF(p^N) = F_p[t]/(f), f monic irreducible.
//
// Two scalar types are provided so that dense linear algebra can be written
// once, templated on the scalar:
//   Zp  - residue modulo an odd prime, two machine words, no allocation.
//   Fq  - element of GF(p^N) in the power basis 1, t, ..., t^(N-1).
//
// Both types admit an *unbound* state that carries a small integer but no
// field. Eigen materialises Scalar(0) and Scalar(1) internally; an unbound
// value is promoted to the field of whichever operand it meets.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crystal/error.hpp"

namespace crystal {

using BigInt = boost::multiprecision::cpp_int;

/// GF(p^N) with a fixed modulus. Immutable once built; shared by pointer.
struct FieldDescriptor {
  int p = 0;
  int degree = 0;
  /// Monic modulus, constant term first; size degree + 1.
  std::vector<std::int32_t> modulus;
  /// Power-basis coordinates of t^(p*j), j < degree. Frobenius is the
  /// F_p-linear map sending t^j to row j.
  std::vector<std::vector<std::int32_t>> frobenius_images;

  BigInt order() const;

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.p == b.p && a.degree == b.degree && a.modulus == b.modulus;
  }
};

using Field = std::shared_ptr<const FieldDescriptor>;

bool is_prime(std::int64_t n);

/// Rabin's test. `poly` is monic, constant term first.
bool is_irreducible(const std::vector<std::int32_t>& poly, int p);

/// GF(p^N) with the lexicographically smallest monic irreducible modulus
/// (coefficient vectors compared constant term first). Degree 1 uses the
/// modulus x. Results are cached, so equal arguments give the same pointer.
Field make_extension(int p, int degree);

inline Field prime_field(int p) { return make_extension(p, 1); }

bool same_field(const Field& a, const Field& b);

// ---------------------------------------------------------------------------

class Zp {
 public:
  Zp() = default;
  Zp(std::int64_t v) : value_(v) {}  // NOLINT: unbound literal
  Zp(std::int64_t v, int p);

  bool bound() const { return p_ != 0; }
  int modulus() const { return p_; }
  /// Residue in [0, p) once bound; the raw literal otherwise.
  std::int64_t value() const { return value_; }

  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o);

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  Zp operator-() const;

  friend bool operator==(const Zp& a, const Zp& b);
  friend bool operator<(const Zp& a, const Zp& b) { return a.value_ < b.value_; }

 private:
  std::int64_t value_ = 0;
  int p_ = 0;
};

bool is_zero(const Zp& x);
Zp inverse(const Zp& x);
inline Zp frobenius(const Zp& x, int = 1) { return x; }
std::ostream& operator<<(std::ostream& os, const Zp& x);

// ---------------------------------------------------------------------------

class Fq {
 public:
  Fq() = default;
  Fq(std::int64_t v) : literal_(v) {}  // NOLINT: unbound literal
  Fq(Field field, std::vector<std::int32_t> coeffs);

  static Fq zero(const Field& f);
  static Fq one(const Field& f);
  static Fq from_int(const Field& f, std::int64_t v);
  static Fq from_zp(const Field& f, const Zp& v) { return from_int(f, v.value()); }
  /// The class of t in F_p[t]/(f).
  static Fq generator(const Field& f);
  /// Element whose coefficient vector is the base-p expansion of `index`
  /// with the constant term as the most significant digit, so that index
  /// order and the canonical element order agree.
  static Fq from_index(const Field& f, std::uint64_t index);

  bool bound() const { return static_cast<bool>(field_); }
  const Field& field() const { return field_; }
  /// Coefficients (constant term first). Requires a bound value.
  const std::vector<std::int32_t>& coeffs() const;
  std::int64_t literal() const { return literal_; }

  /// True when the value lies in F_p; `prime_part` then returns it.
  bool in_prime_field() const;
  Zp prime_part() const;

  Fq& operator+=(const Fq& o);
  Fq& operator-=(const Fq& o);
  Fq& operator*=(const Fq& o);
  Fq& operator/=(const Fq& o);

  friend Fq operator+(Fq a, const Fq& b) { return a += b; }
  friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
  friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
  friend Fq operator/(Fq a, const Fq& b) { return a /= b; }
  Fq operator-() const;

  friend bool operator==(const Fq& a, const Fq& b);
  /// Canonical total order: lexicographic on coefficients, constant first.
  friend bool operator<(const Fq& a, const Fq& b);

 private:
  Fq bind_like(const Field& f) const;

  Field field_;
  std::vector<std::int32_t> coeffs_;
  std::int64_t literal_ = 0;
};

bool is_zero(const Fq& x);
bool is_one(const Fq& x);
Fq inverse(const Fq& x);
Fq pow(const Fq& x, const BigInt& e);
/// x^(p^k); k is taken modulo the degree, so negative k inverts.
Fq frobenius(const Fq& x, int k = 1);
std::ostream& operator<<(std::ostream& os, const Fq& x);

// ---------------------------------------------------------------------------

/// GF(p^n) -> GF(p^N) for n | N, sending t to the smallest root of the
/// smaller modulus in the larger field.
class FieldEmbedding {
 public:
  FieldEmbedding(Field from, Field to);

  const Field& source() const { return from_; }
  const Field& target() const { return to_; }
  const Fq& image_of_generator() const { return generator_image_; }

  Fq operator()(const Fq& x) const;

 private:
  Field from_;
  Field to_;
  Fq generator_image_;
};

/// Prime factorisation by trial division, ascending, with multiplicity.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Exact multiplicative order of x, given that it divides `multiple`.
std::uint64_t order_dividing(const Fq& x, std::uint64_t multiple);

/// All d-th roots of unity in the field, ascending in element order.
/// Throws BudgetExceeded if there are more than `budget` of them.
std::vector<Fq> roots_of_unity(const Field& f, std::uint64_t d,
                               std::uint64_t budget = 1'000'000);

/// Every solution of x^d = a, ascending; empty if there is none.
std::vector<Fq> nth_roots(const Fq& a, std::uint64_t d,
                          std::uint64_t budget = 1'000'000);

}  // namespace crystal

#include "crystal/detail/eigen_traits.hpp"

#endif  // CRYSTAL_FIELD_HPP
