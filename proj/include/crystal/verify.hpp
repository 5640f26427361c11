#ifndef CRYSTAL_VERIFY_HPP
#define CRYSTAL_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "crystal/serialize.hpp"

namespace crystal {

/// One entry of the standard test matrix.
struct MatrixCase {
  int p;
  int sigma0;
  std::string pattern;  // "all-zero", "generic" or "mixed"
  std::vector<int> a;   // constants in F_p
};

/// p ∈ {3, 5}, σ0 ∈ {1, 2, 3}; σ0 = 1 has only the empty tuple and σ0 = 2
/// no mixed pattern.
std::vector<MatrixCase> standard_matrix();

struct VerifyOptions {
  std::optional<int> p;
  std::optional<int> sigma0;
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// Dev fixture: "gram" replaces the anisotropic block of every standard
  /// space by a hyperbolic one, which must make the suite fail.
  std::string fault;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status;
  Json computed;
  Json expected;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus s) const;
  bool passed() const { return count(CheckStatus::Fail) == 0; }
  Json to_json() const;
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"isotropic", "ortho", "fm", "bfield", "roundtrip", "all"};
  return names;
}

/// Runs a named suite. Throws InvalidArgument for an unknown suite.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options = {});

/// (3^11 + 1)/2 · (3^10 − 1), the σ0 = 11, m = 0 count at p = 3.
BigInt golden_fm_3_11();

}  // namespace crystal

#endif  // CRYSTAL_VERIFY_HPP
