#ifndef CRYSTAL_FMCOUNT_HPP
#define CRYSTAL_FMCOUNT_HPP

#include <optional>

#include "crystal/orthogroup.hpp"

namespace crystal {

/// (p^σ0+1)/(p^m+1) · (p^(σ0−1)−1), plus 1 when σ0 ≤ 10. Throws InvalidM
/// unless p^m+1 divides p^σ0+1.
BigInt count_fm_formula(int p, int sigma0, int m);

struct OrbitCount {
  BigInt orbits;
  bool action_free = true;
};

/// Orbits of O_K(V) on I(V), by union-find over the action.
OrbitCount orbit_count(const CharDatum& d, std::uint64_t budget = kDefaultEnumerationBudget);

/// No non-identity automorphism fixes an isotropic vector.
bool verify_free_action(const CharDatum& d, std::uint64_t budget = kDefaultEnumerationBudget);

struct PartnerCountReport {
  int p = 0;
  int sigma0 = 0;
  int m = 0;
  BigInt formula_count;
  BigInt isotropic_count;
  std::optional<BigInt> group_order;
  std::optional<BigInt> bruteforce_count;
  std::optional<BigInt> orbit_count;
  std::optional<bool> action_free;
};

struct CountOptions {
  bool brute_force = true;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

/// Formula count, plus the orbit count when brute force is requested and
/// fits the budget. The two are reported side by side, not reconciled.
PartnerCountReport count_fm_partners(const CharDatum& d, const CountOptions& options = {});

/// Formula-only report from the vanishing pattern of the constants; this is
/// the path for σ0 = 11, where nothing is enumerated.
PartnerCountReport count_fm_from_constants(int p, int sigma0, const std::vector<bool>& nonzero);

}  // namespace crystal

#endif  // CRYSTAL_FMCOUNT_HPP
