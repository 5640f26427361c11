#ifndef CRYSTAL_QUADSPACE_HPP
#define CRYSTAL_QUADSPACE_HPP

#include <cstdint>
#include <vector>

#include "crystal/linalg.hpp"

namespace crystal {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// F_p-space of even dimension with a non-degenerate symmetric bilinear form.
class QuadraticSpace {
 public:
  /// Throws InvalidArgument unless gram is square, of even positive size,
  /// symmetric and invertible modulo p.
  QuadraticSpace(int p, MatrixZp gram);

  int p() const { return p_; }
  Eigen::Index dim() const { return gram_.rows(); }
  int sigma0() const { return static_cast<int>(gram_.rows() / 2); }
  const MatrixZp& gram() const { return gram_; }
  ContextZp context() const { return ContextZp{p_}; }

  Zp pair(const VectorZp& x, const VectorZp& y) const;

  friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b);

 private:
  int p_;
  MatrixZp gram_;
};

/// V ⊕ U₂ with the hyperbolic basis (v, w) appended after the base
/// coordinates: v² = w² = 0, v·w = −1.
struct HyperbolicExtension {
  QuadraticSpace base;
  QuadraticSpace extended;
  Eigen::Index v_index;
  Eigen::Index w_index;
};

bool is_square(const Zp& x);
Zp smallest_nonsquare(int p);
Zp determinant(const MatrixZp& m);

/// Orthogonal sum of sigma0 - 1 hyperbolic planes and diag(1, -eps), eps the
/// smallest non-square mod p. Non-degenerate and non-neutral.
QuadraticSpace standard_space(int p, int sigma0);

/// Non-zero vectors with v·v = 0, in lexicographic order of coordinates.
/// Throws BudgetExceeded if p^dim exceeds the budget.
std::vector<VectorZp> enumerate_isotropic(const QuadraticSpace& v,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

/// (p^σ0 + 1)(p^(σ0-1) − 1), the number of non-zero isotropic vectors of a
/// non-neutral space of dimension 2σ0.
BigInt isotropic_count_formula(int p, int sigma0);

HyperbolicExtension hyperbolic_extend(const QuadraticSpace& v);

/// Discriminant criterion: (−1)^σ0 · det is a non-square.
bool is_non_neutral(const QuadraticSpace& v);

/// Witt index by splitting off hyperbolic planes around exhaustively found
/// isotropic vectors. Independent of the discriminant criterion.
int witt_index_exhaustive(const QuadraticSpace& v, std::uint64_t budget = kDefaultEnumerationBudget);

/// Exhaustive Witt index for 2σ0 ≤ 6 and p ≤ 7, discriminant otherwise.
bool verify_non_neutral(const QuadraticSpace& v);

/// Index of a vector in the lexicographic enumeration of F_p^n.
std::uint64_t lex_index(const VectorZp& x, int p);

}  // namespace crystal

#endif  // CRYSTAL_QUADSPACE_HPP
