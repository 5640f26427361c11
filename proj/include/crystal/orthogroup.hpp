#ifndef CRYSTAL_ORTHOGROUP_HPP
#define CRYSTAL_ORTHOGROUP_HPP

#include <span>
#include <vector>

#include "crystal/charsub.hpp"

namespace crystal {

/// An automorphism of (K, V). In the basis e_i it is diag(ζ, ζ^p, …,
/// ζ^(p^(2σ0−1))); `matrix` is the same map in V-coordinates (columns are
/// images of the standard basis).
struct OrthoElement {
  Fq zeta;
  VectorFq diagonal;
  MatrixZp matrix;
};

/// Largest divisor m of σ0 with σ0/m odd and a_i = 0 whenever 2m ∤ i,
/// else 0. Only the vanishing pattern of a matters.
int m_invariant(std::span<const Fq> a, int sigma0);
int m_invariant(const std::vector<bool>& nonzero, int sigma0);

/// p^m + 1 for the datum's m-invariant.
BigInt ortho_group_order(const CharDatum& d);

/// Every ζ ∈ μ_(p^σ0+1) whose diagonal map is F_p-rational, an isometry and
/// preserves K, sorted by ζ. Throws RootFieldTooSmall if GF(p^N) lacks
/// μ_(p^σ0+1) and BudgetExceeded if p^σ0+1 > budget.
std::vector<OrthoElement> ortho_group_elements(const CharDatum& d, std::uint64_t budget = 1'000'000);

/// Membership of ζ in the image of O_K(V) → μ_(p^σ0+1). Uses the vanishing
/// criterion when ζ has order p^m+1 for an admissible m ≥ 1 and tests the
/// diagonal map directly otherwise.
bool zeta_in_image(const Fq& zeta, const CharDatum& d);

/// The diagonal candidate for ζ, tested. Empty if it is not an automorphism.
std::optional<OrthoElement> diagonal_automorphism(const Fq& zeta, const CharDatum& d, const OgusBasis& basis);

}  // namespace crystal

#endif  // CRYSTAL_ORTHOGROUP_HPP
