#ifndef CRYSTAL_LINALG_HPP
#define CRYSTAL_LINALG_HPP

// Exact dense linear algebra over Zp and Fq, on Eigen containers.
//
// Subspaces are always represented by the rows of a matrix in reduced row
// echelon form, which is unique; equality of subspaces is then equality of
// matrices.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "crystal/field.hpp"

namespace crystal {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using MatrixZp = Matrix<Zp>;
using VectorZp = Vector<Zp>;
using MatrixFq = Matrix<Fq>;
using VectorFq = Vector<Fq>;

// Scalar-generic helpers ----------------------------------------------------

/// Field context of a scalar type: the prime for Zp, the descriptor for Fq.
template <class Scalar>
struct ScalarContext;

template <>
struct ScalarContext<Zp> {
  int p = 0;
  Zp zero() const { return Zp(0, p); }
  Zp one() const { return Zp(1, p); }
  Zp from_int(std::int64_t v) const { return Zp(v, p); }
};

template <>
struct ScalarContext<Fq> {
  Field field;
  Fq zero() const { return Fq::zero(field); }
  Fq one() const { return Fq::one(field); }
  Fq from_int(std::int64_t v) const { return Fq::from_int(field, v); }
};

using ContextZp = ScalarContext<Zp>;
using ContextFq = ScalarContext<Fq>;

inline Zp bind(const ContextZp& c, const Zp& x) { return x.bound() ? x : Zp(x.value(), c.p); }
inline Fq bind(const ContextFq& c, const Fq& x) { return x.bound() ? x : Fq::from_int(c.field, x.literal()); }

/// Promote every unbound literal in `m` to the given field.
template <class Scalar, class Derived>
Matrix<Scalar> bind(const ScalarContext<Scalar>& c, const Eigen::MatrixBase<Derived>& m) {
  Matrix<Scalar> out = m;  // evaluate product expressions once
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      if (!out(i, j).bound()) out(i, j) = bind(c, out(i, j));
  return out;
}

template <class Scalar>
Matrix<Scalar> zeros(const ScalarContext<Scalar>& c, Eigen::Index rows, Eigen::Index cols) {
  return Matrix<Scalar>::Constant(rows, cols, c.zero());
}

template <class Scalar>
Matrix<Scalar> identity(const ScalarContext<Scalar>& c, Eigen::Index n) {
  Matrix<Scalar> m = zeros(c, n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = c.one();
  return m;
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Entrywise x -> x^(p^k).
template <class Derived>
auto frobenius(const Eigen::MatrixBase<Derived>& m, int k = 1) {
  using Scalar = typename Derived::Scalar;
  return m.unaryExpr([k](const Scalar& x) { return frobenius(x, k); }).eval();
}

// Elimination ---------------------------------------------------------------

template <class Scalar>
struct Echelon {
  Matrix<Scalar> reduced;                // nonzero rows only
  std::vector<Eigen::Index> pivots;      // pivot column of each row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row echelon form. Zero rows are dropped.
template <class Scalar>
Echelon<Scalar> row_reduce(const ScalarContext<Scalar>& ctx, Matrix<Scalar> m) {
  m = bind(ctx, m);
  Echelon<Scalar> out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index pr = r;
    while (pr < rows && is_zero(m(pr, col))) ++pr;
    if (pr == rows) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    const Scalar iv = inverse(m(r, col));
    for (Eigen::Index k = col; k < cols; ++k) m(r, k) *= iv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, col))) continue;
      const Scalar c = m(i, col);
      for (Eigen::Index k = col; k < cols; ++k) m(i, k) -= c * m(r, k);
    }
    out.pivots.push_back(col);
    ++r;
  }
  out.reduced = m.topRows(r);
  return out;
}

template <class Scalar>
Matrix<Scalar> rref(const ScalarContext<Scalar>& ctx, const Matrix<Scalar>& m) {
  return row_reduce(ctx, m).reduced;
}

template <class Scalar>
Eigen::Index rank(const ScalarContext<Scalar>& ctx, const Matrix<Scalar>& m) {
  return row_reduce(ctx, m).rank();
}

/// Rows spanning {x : m x = 0}, in reduced row echelon form.
template <class Scalar>
Matrix<Scalar> kernel(const ScalarContext<Scalar>& ctx, const Matrix<Scalar>& m) {
  const Echelon<Scalar> e = row_reduce(ctx, m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix<Scalar> basis = zeros(ctx, cols - e.rank(), cols);
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(k, free) = ctx.one();
    for (Eigen::Index r = 0; r < e.rank(); ++r) basis(k, e.pivots[r]) = -e.reduced(r, free);
    ++k;
  }
  return rref(ctx, basis);
}

template <class Scalar>
struct LinearSolution {
  bool consistent = false;
  Vector<Scalar> particular;   // free variables set to zero
  Matrix<Scalar> kernel;       // rows, reduced echelon form
};

/// All solutions of a x = b. Inconsistency is reported, not thrown.
template <class Scalar>
LinearSolution<Scalar> solve_linear(const ScalarContext<Scalar>& ctx, const Matrix<Scalar>& a,
                                    const Vector<Scalar>& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in solve_linear");
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const Echelon<Scalar> e = row_reduce(ctx, aug);
  LinearSolution<Scalar> out;
  out.kernel = kernel(ctx, a);
  out.particular = Vector<Scalar>::Constant(a.cols(), ctx.zero());
  for (Eigen::Index r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == a.cols()) return out;  // 0 = 1
    out.particular(e.pivots[r]) = e.reduced(r, a.cols());
  }
  out.consistent = true;
  return out;
}

template <class Scalar>
std::optional<Matrix<Scalar>> try_inverse(const ScalarContext<Scalar>& ctx, const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Eigen::Index n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug << m, identity(ctx, n);
  const Echelon<Scalar> e = row_reduce(ctx, aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return Matrix<Scalar>(e.reduced.rightCols(n));
}

template <class Scalar>
Matrix<Scalar> inverse(const ScalarContext<Scalar>& ctx, const Matrix<Scalar>& m) {
  auto inv = try_inverse(ctx, m);
  if (!inv) throw Error(ErrorKind::SingularOperator, "matrix is not invertible");
  return *inv;
}

/// Canonical remainder of the row vector v modulo the row space of an RREF
/// matrix: pivot coordinates are cleared.
template <class Scalar>
RowVector<Scalar> reduce_modulo(const Matrix<Scalar>& echelon, const std::vector<Eigen::Index>& pivots,
                                RowVector<Scalar> v) {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Scalar c = v(pivots[r]);
    if (!is_zero(c)) v -= c * echelon.row(static_cast<Eigen::Index>(r));
  }
  return v;
}

/// Is the row vector v in the row space of m?
template <class Scalar>
bool in_row_space(const ScalarContext<Scalar>& ctx, const Matrix<Scalar>& m, const RowVector<Scalar>& v) {
  const Echelon<Scalar> e = row_reduce(ctx, m);
  return is_zero_matrix(reduce_modulo(e.reduced, e.pivots, bind(ctx, v)));
}

}  // namespace crystal

#endif  // CRYSTAL_LINALG_HPP
