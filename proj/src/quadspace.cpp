#include "crystal/quadspace.hpp"

#include <functional>

namespace crystal {

namespace {

std::uint64_t checked_power(int p, Eigen::Index n, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (total > budget / static_cast<std::uint64_t>(p))
      throw Error(ErrorKind::BudgetExceeded, "p^" + std::to_string(n) + " candidates exceed the enumeration budget of " +
                                                 std::to_string(budget));
    total *= static_cast<std::uint64_t>(p);
  }
  return total;
}

// Calls fn(coords) for every vector of F_p^n in lexicographic order.
template <class Fn>
void for_each_vector(int p, Eigen::Index n, Fn&& fn) {
  std::vector<std::int64_t> x(n, 0);
  for (;;) {
    fn(x);
    Eigen::Index i = n - 1;
    while (i >= 0 && ++x[i] == p) x[i--] = 0;
    if (i < 0) return;
  }
}

std::vector<std::vector<std::int64_t>> raw_gram(const MatrixZp& g) {
  std::vector<std::vector<std::int64_t>> out(g.rows(), std::vector<std::int64_t>(g.cols()));
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) out[i][j] = g(i, j).value();
  return out;
}

std::int64_t quadratic_value(const std::vector<std::vector<std::int64_t>>& g, const std::vector<std::int64_t>& x,
                             int p) {
  std::int64_t acc = 0;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < n; ++j) row += g[i][j] * x[j];
    acc = (acc + (row % p) * x[i]) % p;
  }
  return acc;
}

int witt_index_of(int p, const MatrixZp& gram, std::uint64_t budget) {
  const Eigen::Index n = gram.rows();
  if (n == 0) return 0;
  checked_power(p, n, budget);
  const auto g = raw_gram(gram);
  std::vector<std::int64_t> found;
  for_each_vector(p, n, [&](const std::vector<std::int64_t>& x) {
    if (!found.empty()) return;
    bool nonzero = false;
    for (auto c : x) nonzero |= c != 0;
    if (nonzero && quadratic_value(g, x, p) == 0) found = x;
  });
  if (found.empty()) return 0;
  const ContextZp ctx{p};
  VectorZp x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = Zp(found[i], p);
  const VectorZp gx = bind(ctx, gram * x);
  Eigen::Index j = 0;
  while (is_zero(gx(j))) ++j;
  VectorZp y = zeros(ctx, n, 1);
  y(j) = inverse(gx(j));  // x·y = 1
  MatrixZp constraints(2, n);
  constraints.row(0) = (gram * x).transpose();
  constraints.row(1) = (gram * y).transpose();
  const MatrixZp complement = kernel(ctx, bind(ctx, constraints));  // rows
  const MatrixZp restricted = bind(ctx, complement * gram * complement.transpose());
  return 1 + witt_index_of(p, restricted, budget);
}

}  // namespace

QuadraticSpace::QuadraticSpace(int p, MatrixZp gram) : p_(p), gram_(bind(ContextZp{p}, gram)) {
  if (!is_prime(p) || p == 2) throw Error(ErrorKind::InvalidArgument, "quadratic spaces need an odd prime");
  if (gram_.rows() != gram_.cols() || gram_.rows() == 0 || gram_.rows() % 2 != 0)
    throw Error(ErrorKind::InvalidArgument, "Gram matrix must be square of even positive size");
  for (Eigen::Index i = 0; i < dim(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (!(gram_(i, j) == gram_(j, i))) throw Error(ErrorKind::InvalidArgument, "Gram matrix is not symmetric");
  if (is_zero(determinant(gram_))) throw Error(ErrorKind::InvalidArgument, "Gram matrix is degenerate");
}

Zp QuadraticSpace::pair(const VectorZp& x, const VectorZp& y) const {
  return bind(context(), (x.transpose() * gram_ * y)(0, 0));
}

bool operator==(const QuadraticSpace& a, const QuadraticSpace& b) {
  return a.p_ == b.p_ && a.gram_.rows() == b.gram_.rows() && a.gram_ == b.gram_;
}

bool is_square(const Zp& x) {
  if (is_zero(x)) return true;
  const std::int64_t p = x.modulus();
  // Euler's criterion.
  std::int64_t result = 1, base = x.value(), e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1;
}

Zp smallest_nonsquare(int p) {
  for (int v = 2; v < p; ++v)
    if (!is_square(Zp(v, p))) return Zp(v, p);
  throw Error(ErrorKind::InvalidArgument, "no non-square modulo " + std::to_string(p));
}

Zp determinant(const MatrixZp& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Zp(1);
  int p = 0;
  for (Eigen::Index i = 0; i < n && !p; ++i)
    for (Eigen::Index j = 0; j < n && !p; ++j) p = m(i, j).modulus();
  if (!p) throw Error(ErrorKind::InvalidArgument, "determinant needs a bound matrix");
  MatrixZp a = bind(ContextZp{p}, m);
  Zp det(1, p);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pr = col;
    while (pr < n && is_zero(a(pr, col))) ++pr;
    if (pr == n) return Zp(0, p);
    if (pr != col) {
      a.row(pr).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    const Zp iv = inverse(a(col, col));
    for (Eigen::Index i = col + 1; i < n; ++i) {
      const Zp c = a(i, col) * iv;
      if (!is_zero(c)) a.row(i) -= c * a.row(col);
    }
  }
  return det;
}

QuadraticSpace standard_space(int p, int sigma0) {
  if (sigma0 < 1 || sigma0 > 11) throw Error(ErrorKind::InvalidArgument, "sigma0 must lie in 1..11");
  if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const ContextZp ctx{p};
  const Eigen::Index n = 2 * sigma0;
  MatrixZp g = zeros(ctx, n, n);
  for (Eigen::Index h = 0; h + 1 < sigma0; ++h) {
    g(2 * h, 2 * h + 1) = ctx.from_int(-1);
    g(2 * h + 1, 2 * h) = ctx.from_int(-1);
  }
  g(n - 2, n - 2) = ctx.one();
  g(n - 1, n - 1) = -smallest_nonsquare(p);
  return QuadraticSpace(p, std::move(g));
}

std::vector<VectorZp> enumerate_isotropic(const QuadraticSpace& v, std::uint64_t budget) {
  const int p = v.p();
  const Eigen::Index n = v.dim();
  checked_power(p, n, budget);
  const auto g = raw_gram(v.gram());
  std::vector<VectorZp> out;
  bool first = true;
  for_each_vector(p, n, [&](const std::vector<std::int64_t>& x) {
    if (first) {  // the zero vector
      first = false;
      return;
    }
    if (quadratic_value(g, x, p) != 0) return;
    VectorZp vec(n);
    for (Eigen::Index i = 0; i < n; ++i) vec(i) = Zp(x[i], p);
    out.push_back(std::move(vec));
  });
  return out;
}

BigInt isotropic_count_formula(int p, int sigma0) {
  using boost::multiprecision::pow;
  if (sigma0 < 1) throw Error(ErrorKind::InvalidArgument, "sigma0 must be positive");
  return (pow(BigInt(p), sigma0) + 1) * (pow(BigInt(p), sigma0 - 1) - 1);
}

HyperbolicExtension hyperbolic_extend(const QuadraticSpace& v) {
  const ContextZp ctx = v.context();
  const Eigen::Index n = v.dim();
  MatrixZp g = zeros(ctx, n + 2, n + 2);
  g.topLeftCorner(n, n) = v.gram();
  g(n, n + 1) = ctx.from_int(-1);
  g(n + 1, n) = ctx.from_int(-1);
  return HyperbolicExtension{v, QuadraticSpace(v.p(), std::move(g)), n, n + 1};
}

bool is_non_neutral(const QuadraticSpace& v) {
  Zp disc = determinant(v.gram());
  if (v.sigma0() % 2 == 1) disc = -disc;
  return !is_square(disc);
}

int witt_index_exhaustive(const QuadraticSpace& v, std::uint64_t budget) {
  return witt_index_of(v.p(), v.gram(), budget);
}

bool verify_non_neutral(const QuadraticSpace& v) {
  if (v.dim() <= 6 && v.p() <= 7) return witt_index_exhaustive(v) == v.sigma0() - 1;
  return is_non_neutral(v);
}

std::uint64_t lex_index(const VectorZp& x, int p) {
  std::uint64_t idx = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) idx = idx * p + static_cast<std::uint64_t>(x(i).value());
  return idx;
}

}  // namespace crystal
