#include "crystal/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <utility>

namespace crystal {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::SingularOperator: return "SingularOperator";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotCharacteristic: return "NotCharacteristic";
    case ErrorKind::NotStrict: return "NotStrict";
    case ErrorKind::RootUnavailable: return "RootUnavailable";
    case ErrorKind::RootFieldTooSmall: return "RootFieldTooSmall";
    case ErrorKind::DescentFailed: return "DescentFailed";
    case ErrorKind::ModelInconsistent: return "ModelInconsistent";
    case ErrorKind::InvalidM: return "InvalidM";
    case ErrorKind::InvalidBField: return "InvalidBField";
    case ErrorKind::DistinguishedVectorInside: return "DistinguishedVectorInside";
    case ErrorKind::ZeroLambda: return "ZeroLambda";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(ErrorKind::InvalidArgument, "zero has no inverse");
  return mod(t, p);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

// Remainder of a modulo a nonzero polynomial b.
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  const int db = deg(b);
  const std::int64_t lead_inv = inv_mod(b.back(), p);
  while (deg(a) >= db) {
    const std::int64_t c = a.back() * lead_inv % p;
    const int shift = deg(a) - db;
    for (int j = 0; j <= db; ++j) a[shift + j] = mod(a[shift + j] - c * b[j], p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_rem(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::int64_t e, const Poly& f, std::int64_t p) {
  Poly result{1};
  base = poly_rem(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

// u with u * a = 1 mod f, for a coprime to f.
Poly poly_inverse(const Poly& a, const Poly& f, std::int64_t p) {
  Poly r0 = f, r1 = a, s0{}, s1{1};
  trim(r1);
  if (r1.empty()) throw Error(ErrorKind::InvalidArgument, "zero has no inverse");
  while (!r1.empty()) {
    // q = r0 / r1
    Poly rem = r0;
    trim(rem);
    Poly q(std::max(0, deg(rem) - deg(r1)) + 1, 0);
    const std::int64_t lead_inv = inv_mod(r1.back(), p);
    while (!rem.empty() && deg(rem) >= deg(r1)) {
      const std::int64_t c = rem.back() * lead_inv % p;
      const int shift = deg(rem) - deg(r1);
      q[shift] = c;
      for (int j = 0; j <= deg(r1); ++j) rem[shift + j] = mod(rem[shift + j] - c * r1[j], p);
      trim(rem);
    }
    // s2 = s0 - q * s1
    Poly qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = (qs[i + j] + q[i] * s1[j]) % p;
    Poly s2 = poly_sub(s0, qs, p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant.
  if (deg(r0) != 0) throw Error(ErrorKind::InvalidArgument, "element not invertible");
  const std::int64_t c = inv_mod(r0[0], p);
  for (auto& x : s0) x = x * c % p;
  return poly_rem(s0, f, p);
}

BigInt big_inv_mod(BigInt a, const BigInt& m) {
  BigInt t = 0, new_t = 1, r = m, new_r = a % m;
  if (new_r < 0) new_r += m;
  while (new_r != 0) {
    BigInt q = r / new_r;
    BigInt tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error(ErrorKind::InvalidArgument, "not invertible modulo m");
  if (t < 0) t += m;
  return t;
}

Field build_descriptor(int p, int degree, std::vector<std::int32_t> modulus) {
  auto d = std::make_shared<FieldDescriptor>();
  d->p = p;
  d->degree = degree;
  d->modulus = std::move(modulus);
  const Poly f(d->modulus.begin(), d->modulus.end());
  const Poly tp = poly_powmod(Poly{0, 1}, p, f, p);
  Poly cur{1};
  for (int j = 0; j < degree; ++j) {
    std::vector<std::int32_t> row(degree, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) row[i] = static_cast<std::int32_t>(cur[i]);
    d->frobenius_images.push_back(std::move(row));
    cur = poly_mulmod(cur, tp, f, p);
  }
  return d;
}

}  // namespace

BigInt FieldDescriptor::order() const {
  return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(degree));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<std::int32_t>& poly, int p) {
  const Poly f(poly.begin(), poly.end());
  const int n = deg(f);
  if (n < 1 || f.back() != 1) return false;
  if (n == 1) return true;
  std::vector<Poly> frob_powers{Poly{0, 1}};  // x^(p^k), k = 0..n
  for (int k = 1; k <= n; ++k) frob_powers.push_back(poly_powmod(frob_powers.back(), p, f, p));
  const Poly x{0, 1};
  if (!poly_sub(frob_powers[n], x, p).empty()) return false;
  for (int ell = 2; ell <= n; ++ell) {
    if (n % ell != 0 || !is_prime(ell)) continue;
    const Poly g = poly_gcd(f, poly_sub(frob_powers[n / ell], x, p), p);
    if (deg(g) != 0) return false;
  }
  return true;
}

Field make_extension(int p, int degree) {
  if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (degree < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");

  static std::mutex mutex;
  static std::map<std::pair<int, int>, Field> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, degree}); it != cache.end()) return it->second;
  }

  // Odometer over (c_0, ..., c_{N-1}) with c_0 most significant.
  std::vector<std::int32_t> coeffs(degree, 0);
  if (degree > 1) coeffs[0] = 1;  // c_0 = 0 means x divides f
  for (;;) {
    std::vector<std::int32_t> candidate = coeffs;
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) {
      Field field = build_descriptor(p, degree, std::move(candidate));
      std::lock_guard lock(mutex);
      return cache.emplace(std::make_pair(p, degree), field).first->second;
    }
    int i = degree - 1;
    while (i >= 0 && ++coeffs[i] == p) coeffs[i--] = 0;
    if (i < 0) throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
  }
}

bool same_field(const Field& a, const Field& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Zp

Zp::Zp(std::int64_t v, int p) : value_(mod(v, p)), p_(p) {}

namespace {
int common_modulus(const Zp& a, const Zp& b) {
  if (a.bound() && b.bound() && a.modulus() != b.modulus())
    throw Error(ErrorKind::FieldMismatch, "residues modulo different primes");
  return a.bound() ? a.modulus() : b.modulus();
}
}  // namespace

Zp& Zp::operator+=(const Zp& o) {
  const int p = common_modulus(*this, o);
  *this = p ? Zp(value_ + o.value_, p) : Zp(value_ + o.value_);
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  const int p = common_modulus(*this, o);
  *this = p ? Zp(value_ - o.value_, p) : Zp(value_ - o.value_);
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  const int p = common_modulus(*this, o);
  if (p) {
    *this = Zp(mod(value_, p) * mod(o.value_, p), p);
  } else {
    *this = Zp(value_ * o.value_);
  }
  return *this;
}

Zp& Zp::operator/=(const Zp& o) { return *this *= inverse(o); }

Zp Zp::operator-() const { return p_ ? Zp(-value_, p_) : Zp(-value_); }

bool operator==(const Zp& a, const Zp& b) {
  const int p = common_modulus(a, b);
  return p ? mod(a.value_, p) == mod(b.value_, p) : a.value_ == b.value_;
}

bool is_zero(const Zp& x) { return x.bound() ? x.value() == 0 : x.value() == 0; }

Zp inverse(const Zp& x) {
  if (!x.bound()) {
    if (x.value() == 1 || x.value() == -1) return x;
    throw Error(ErrorKind::InvalidArgument, "cannot invert an unbound literal");
  }
  if (x.value() == 0) throw Error(ErrorKind::InvalidArgument, "zero has no inverse");
  return Zp(inv_mod(x.value(), x.modulus()), x.modulus());
}

std::ostream& operator<<(std::ostream& os, const Zp& x) { return os << x.value(); }

// ---------------------------------------------------------------------------
// Fq

Fq::Fq(Field field, std::vector<std::int32_t> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "null field");
  const int p = field_->p;
  if (coeffs_.size() > static_cast<std::size_t>(field_->degree))
    throw Error(ErrorKind::InvalidArgument, "too many coefficients for the field degree");
  coeffs_.resize(field_->degree, 0);
  for (auto& c : coeffs_) c = static_cast<std::int32_t>(mod(c, p));
}

Fq Fq::zero(const Field& f) { return Fq(f, {}); }
Fq Fq::one(const Field& f) { return from_int(f, 1); }

Fq Fq::from_int(const Field& f, std::int64_t v) {
  std::vector<std::int32_t> c(f->degree, 0);
  c[0] = static_cast<std::int32_t>(mod(v, f->p));
  return Fq(f, std::move(c));
}

Fq Fq::generator(const Field& f) {
  if (f->degree == 1) return from_int(f, -f->modulus[0]);
  std::vector<std::int32_t> c(f->degree, 0);
  c[1] = 1;
  return Fq(f, std::move(c));
}

Fq Fq::from_index(const Field& f, std::uint64_t index) {
  std::vector<std::int32_t> c(f->degree, 0);
  for (int i = f->degree - 1; i >= 0; --i) {
    c[i] = static_cast<std::int32_t>(index % f->p);
    index /= f->p;
  }
  return Fq(f, std::move(c));
}

const std::vector<std::int32_t>& Fq::coeffs() const {
  if (!bound()) throw Error(ErrorKind::InvalidArgument, "unbound field literal has no coefficients");
  return coeffs_;
}

bool Fq::in_prime_field() const {
  if (!bound()) return true;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::int32_t c) { return c == 0; });
}

Zp Fq::prime_part() const {
  if (!in_prime_field()) throw Error(ErrorKind::InvalidArgument, "element is not in the prime field");
  return bound() ? Zp(coeffs_[0], field_->p) : Zp(literal_);
}

Fq Fq::bind_like(const Field& f) const { return bound() ? *this : from_int(f, literal_); }

namespace {
const Field& common_field(const Fq& a, const Fq& b) {
  if (a.bound() && b.bound() && !same_field(a.field(), b.field()))
    throw Error(ErrorKind::FieldMismatch, "elements of different fields");
  return a.bound() ? a.field() : b.field();
}
}  // namespace

Fq& Fq::operator+=(const Fq& o) {
  const Field& f = common_field(*this, o);
  if (!f) {
    literal_ += o.literal_;
    return *this;
  }
  Fq a = bind_like(f);
  const Fq b = o.bind_like(f);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    std::int32_t s = a.coeffs_[i] + b.coeffs_[i];
    if (s >= f->p) s -= f->p;
    a.coeffs_[i] = s;
  }
  return *this = std::move(a);
}

Fq& Fq::operator-=(const Fq& o) { return *this += -o; }

Fq Fq::operator-() const {
  if (!bound()) return Fq(-literal_);
  Fq r = *this;
  for (auto& c : r.coeffs_) c = c == 0 ? 0 : field_->p - c;
  return r;
}

Fq& Fq::operator*=(const Fq& o) {
  const Field& f = common_field(*this, o);
  if (!f) {
    literal_ *= o.literal_;
    return *this;
  }
  const Fq a = bind_like(f);
  const Fq b = o.bind_like(f);
  const std::int64_t p = f->p;
  const int n = f->degree;
  std::vector<std::int64_t> r(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < n; ++j) r[i + j] = (r[i + j] + std::int64_t{a.coeffs_[i]} * b.coeffs_[j]) % p;
  }
  // Reduce with the monic modulus.
  for (int k = 2 * n - 2; k >= n; --k) {
    const std::int64_t c = r[k];
    if (c == 0) continue;
    for (int j = 0; j < n; ++j) r[k - n + j] = mod(r[k - n + j] - c * f->modulus[j], p);
    r[k] = 0;
  }
  std::vector<std::int32_t> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<std::int32_t>(r[i]);
  return *this = Fq(f, std::move(out));
}

Fq& Fq::operator/=(const Fq& o) { return *this *= inverse(o); }

bool operator==(const Fq& a, const Fq& b) {
  const Field& f = common_field(a, b);
  if (!f) return a.literal_ == b.literal_;
  return a.bind_like(f).coeffs_ == b.bind_like(f).coeffs_;
}

bool operator<(const Fq& a, const Fq& b) {
  const Field& f = common_field(a, b);
  if (!f) return a.literal_ < b.literal_;
  return a.bind_like(f).coeffs_ < b.bind_like(f).coeffs_;
}

bool is_zero(const Fq& x) {
  if (!x.bound()) return x.literal() == 0;
  const auto& c = x.coeffs();
  return std::all_of(c.begin(), c.end(), [](std::int32_t v) { return v == 0; });
}

bool is_one(const Fq& x) {
  if (!x.bound()) return x.literal() == 1;
  return x == Fq::one(x.field());
}

Fq inverse(const Fq& x) {
  if (!x.bound()) {
    if (x.literal() == 1 || x.literal() == -1) return x;
    throw Error(ErrorKind::InvalidArgument, "cannot invert an unbound literal");
  }
  if (is_zero(x)) throw Error(ErrorKind::InvalidArgument, "zero has no inverse");
  const auto& f = x.field();
  const Poly fp(f->modulus.begin(), f->modulus.end());
  const Poly a(x.coeffs().begin(), x.coeffs().end());
  const Poly u = poly_inverse(a, fp, f->p);
  std::vector<std::int32_t> c(f->degree, 0);
  for (std::size_t i = 0; i < u.size(); ++i) c[i] = static_cast<std::int32_t>(u[i]);
  return Fq(f, std::move(c));
}

Fq pow(const Fq& x, const BigInt& e) {
  if (e < 0) return pow(inverse(x), -e);
  Fq result = x.bound() ? Fq::one(x.field()) : Fq(1);
  if (e == 0) return result;
  const unsigned top = boost::multiprecision::msb(e);
  for (int bit = static_cast<int>(top); bit >= 0; --bit) {
    result *= result;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit))) result *= x;
  }
  return result;
}

Fq frobenius(const Fq& x, int k) {
  if (!x.bound()) return x;
  const auto& f = x.field();
  const int n = f->degree;
  k %= n;
  if (k < 0) k += n;
  Fq cur = x;
  for (int step = 0; step < k; ++step) {
    std::vector<std::int64_t> acc(n, 0);
    const auto& c = cur.coeffs();
    for (int j = 0; j < n; ++j) {
      if (c[j] == 0) continue;
      const auto& row = f->frobenius_images[j];
      for (int i = 0; i < n; ++i) acc[i] = (acc[i] + std::int64_t{c[j]} * row[i]) % f->p;
    }
    std::vector<std::int32_t> out(n);
    for (int i = 0; i < n; ++i) out[i] = static_cast<std::int32_t>(acc[i]);
    cur = Fq(f, std::move(out));
  }
  return cur;
}

std::ostream& operator<<(std::ostream& os, const Fq& x) {
  if (!x.bound()) return os << x.literal();
  os << '[';
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) os << (i ? "," : "") << x.coeffs()[i];
  return os << ']';
}

// ---------------------------------------------------------------------------

namespace {

// F_p-basis (as elements of `to`) of the subfield fixed by x -> x^(p^n).
std::vector<Fq> subfield_basis(const Field& to, int n) {
  const int big = to->degree;
  const std::int64_t p = to->p;
  // Column j is the image of t^j under x -> x^(p^n) - x.
  std::vector<std::vector<std::int64_t>> m(big, std::vector<std::int64_t>(big, 0));
  for (int j = 0; j < big; ++j) {
    std::vector<std::int32_t> unit(big, 0);
    unit[j] = 1;
    const Fq e(to, unit);
    const Fq img = frobenius(e, n) - e;
    for (int i = 0; i < big; ++i) m[i][j] = img.coeffs()[i];
  }
  // Reduced row echelon form, then read the kernel.
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < big && row < big; ++col) {
    int pr = row;
    while (pr < big && m[pr][col] == 0) ++pr;
    if (pr == big) continue;
    std::swap(m[pr], m[row]);
    const std::int64_t iv = inv_mod(m[row][col], p);
    for (auto& v : m[row]) v = v * iv % p;
    for (int r = 0; r < big; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::int64_t c = m[r][col];
      for (int k = 0; k < big; ++k) m[r][k] = mod(m[r][k] - c * m[row][k], p);
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<Fq> basis;
  for (int free = 0; free < big; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<std::int32_t> v(big, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = static_cast<std::int32_t>(mod(-m[r][free], p));
    basis.emplace_back(to, std::move(v));
  }
  return basis;
}

}  // namespace

FieldEmbedding::FieldEmbedding(Field from, Field to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p != to_->p) throw Error(ErrorKind::FieldMismatch, "embedding between different characteristics");
  if (to_->degree % from_->degree != 0)
    throw Error(ErrorKind::FieldMismatch, "source degree does not divide target degree");
  if (from_->degree == 1) {
    generator_image_ = Fq::from_int(to_, -from_->modulus[0]);
    return;
  }
  const auto basis = subfield_basis(to_, from_->degree);
  const std::int64_t p = to_->p;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) count *= static_cast<std::uint64_t>(p);
  std::optional<Fq> best;
  std::vector<std::int64_t> digits(basis.size(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    Fq x = Fq::zero(to_);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      x += Fq::from_int(to_, static_cast<std::int64_t>(rest % p)) * basis[i];
      rest /= p;
    }
    Fq value = Fq::zero(to_);
    for (int k = from_->degree; k >= 0; --k) value = value * x + Fq::from_int(to_, from_->modulus[k]);
    if (is_zero(value) && (!best || x < *best)) best = x;
  }
  if (!best) throw Error(ErrorKind::ModelInconsistent, "modulus has no root in the target field");
  generator_image_ = *best;
}

Fq FieldEmbedding::operator()(const Fq& x) const {
  if (!x.bound()) return Fq::from_int(to_, x.literal());
  if (!same_field(x.field(), from_)) throw Error(ErrorKind::FieldMismatch, "element is not in the source field");
  Fq value = Fq::zero(to_);
  const auto& c = x.coeffs();
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) value = value * generator_image_ + Fq::from_int(to_, c[k]);
  return value;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t order_dividing(const Fq& x, std::uint64_t multiple) {
  if (!is_one(pow(x, BigInt(multiple))))
    throw Error(ErrorKind::InvalidArgument, "element order does not divide the given multiple");
  std::uint64_t ord = multiple;
  for (const auto& [ell, k] : factorize(multiple)) {
    for (int i = 0; i < k; ++i) {
      if (ord % ell != 0 || !is_one(pow(x, BigInt(ord / ell)))) break;
      ord /= ell;
    }
  }
  return ord;
}

namespace {

std::uint64_t group_gcd(const Field& f, std::uint64_t d) {
  const BigInt g = boost::multiprecision::gcd(BigInt(d), f->order() - 1);
  return g.convert_to<std::uint64_t>();
}

// Smallest element z (canonical order) with z^((q-1)/ell) != 1.
Fq non_residue(const Field& f, std::uint64_t ell) {
  const BigInt e = (f->order() - 1) / ell;
  for (std::uint64_t idx = 1;; ++idx) {
    const Fq z = Fq::from_index(f, idx);
    if (!is_one(pow(z, e))) return z;
  }
}

}  // namespace

std::vector<Fq> roots_of_unity(const Field& f, std::uint64_t d, std::uint64_t budget) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "d must be positive");
  const std::uint64_t g = group_gcd(f, d);
  if (g > budget) throw Error(ErrorKind::BudgetExceeded, std::to_string(g) + " roots of unity exceed the budget");
  const BigInt e = (f->order() - 1) / g;
  Fq h = Fq::one(f);
  for (std::uint64_t idx = 1;; ++idx) {
    h = pow(Fq::from_index(f, idx), e);
    if (order_dividing(h, g) == g) break;
  }
  std::vector<Fq> roots;
  roots.reserve(g);
  Fq cur = Fq::one(f);
  for (std::uint64_t i = 0; i < g; ++i) {
    roots.push_back(cur);
    cur *= h;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Fq> nth_roots(const Fq& a, std::uint64_t d, std::uint64_t budget) {
  if (!a.bound()) throw Error(ErrorKind::InvalidArgument, "nth_roots needs a bound element");
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "d must be positive");
  const Field& f = a.field();
  if (is_zero(a)) return {a};
  const BigInt q1 = f->order() - 1;
  const std::uint64_t g = group_gcd(f, d);
  if (!is_one(pow(a, q1 / g))) return {};

  // y with y^g = a, assembled from the Sylow components of a.
  const auto primes = factorize(g);
  BigInt coprime_part = q1;
  for (const auto& [ell, k] : primes)
    while (coprime_part % ell == 0) coprime_part /= ell;

  Fq y = Fq::one(f);
  if (coprime_part > 1) {
    const BigInt cofactor = q1 / coprime_part;
    const BigInt idem = cofactor * big_inv_mod(cofactor % coprime_part, coprime_part);
    const BigInt g_inv = big_inv_mod(BigInt(g) % coprime_part, coprime_part);
    y *= pow(a, (idem % q1) * g_inv);
  }
  for (const auto& [ell, k] : primes) {
    BigInt ell_s = 1;
    int s = 0;
    while ((q1 / ell_s) % ell == 0) {
      ell_s *= ell;
      ++s;
    }
    const BigInt cofactor = q1 / ell_s;
    const BigInt idem = cofactor * big_inv_mod(cofactor % ell_s, ell_s);
    const Fq component = pow(a, idem % q1);
    const Fq rho = pow(non_residue(f, ell), cofactor);  // generates the Sylow ell-subgroup
    const Fq gamma = pow(rho, ell_s / ell);              // order ell
    // Pohlig-Hellman: component = rho^exponent.
    BigInt exponent = 0;
    BigInt ell_i = 1;
    for (int i = 0; i < s; ++i) {
      const Fq h = pow(component * pow(rho, -exponent), ell_s / (ell_i * ell));
      Fq probe = Fq::one(f);
      std::uint64_t digit = 0;
      while (!(probe == h)) {
        probe *= gamma;
        if (++digit == ell) throw Error(ErrorKind::ModelInconsistent, "discrete log failed");
      }
      exponent += ell_i * digit;
      ell_i *= ell;
    }
    BigInt ell_k = 1;
    for (int i = 0; i < k; ++i) ell_k *= ell;
    if (exponent % ell_k != 0) return {};
    // rho^j with j * g = exponent (mod ell^s).
    const BigInt unit = BigInt(g) / ell_k;
    const BigInt j = (exponent / ell_k) * big_inv_mod(unit % ell_s, ell_s);
    y *= pow(rho, j);
  }
  // x = y^w with w * (d/g) = 1 mod (q-1)/g.
  const BigInt reduced = q1 / g;
  const BigInt w = reduced == 1 ? BigInt(1) : big_inv_mod(BigInt(d / g) % reduced, reduced);
  const Fq x0 = pow(y, w);
  if (!(pow(x0, BigInt(d)) == a)) throw Error(ErrorKind::ModelInconsistent, "root extraction failed");
  std::vector<Fq> roots;
  for (const Fq& z : roots_of_unity(f, d, budget)) roots.push_back(x0 * z);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace crystal
