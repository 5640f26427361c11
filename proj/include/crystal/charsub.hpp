#ifndef CRYSTAL_CHARSUB_HPP
#define CRYSTAL_CHARSUB_HPP

#include <span>
#include <vector>

#include "crystal/semilinear.hpp"

namespace crystal {

/// A pair (K, V): a subspace K of V ⊗ GF(p^N) together with its ambient
/// quadratic space. Holding one does not imply K is characteristic; the
/// operations below check what they need.
class CharDatum {
 public:
  explicit CharDatum(Subspace k) : k_(std::move(k)) {}

  const QuadraticSpace& space() const { return k_.ambient(); }
  const Field& field() const { return k_.field(); }
  const Subspace& k() const { return k_; }
  int sigma0() const { return k_.ambient().sigma0(); }

  friend bool operator==(const CharDatum& a, const CharDatum& b) { return a.k_ == b.k_; }

 private:
  Subspace k_;
};

struct ValidationReport {
  int sigma0 = 0;
  Eigen::Index dim_k = 0;
  Eigen::Index dim_k_plus_phi_k = 0;
  Eigen::Index dim_phi_span = 0;  // dim of Σ φ^i(K)
  bool totally_isotropic = false;
  bool is_characteristic = false;
  bool is_strict = false;
};

ValidationReport validate(const Subspace& k, const QuadraticSpace& v);
inline ValidationReport validate(const CharDatum& d) { return validate(d.k(), d.space()); }

/// dim K; throws NotCharacteristic unless the datum is characteristic.
int artin_invariant(const CharDatum& d);

/// K ∩ φ(K) ∩ … ∩ φ^(σ0−1)(K). Throws NotStrict unless K is strictly
/// characteristic and the intersection is a line.
Subspace canonical_line(const CharDatum& d);

/// Basis e_i = φ^(i−1)(e) of V ⊗ GF(p^N) built from a generator e of the
/// canonical line scaled so that e·φ^σ0(e) = 1.
struct OgusBasis {
  MatrixFq e;                 // rows e_1 .. e_2σ0, V-coordinates
  std::vector<Fq> a;          // a_i = e_1·e_(σ0+i+1), i = 1..σ0−1
  std::vector<Fq> lambda;     // φ(e_2σ0) = Σ λ_i e_i + Σ μ_i e_(σ0+i)
  std::vector<Fq> mu;
  Fq scale;                   // e = scale · (echelon generator of the line)
  MatrixFq gram;              // form in the basis e_i
};

/// The scale is the smallest solution (canonical element order) of
/// c^(p^σ0+1) = 1/(e'·φ^σ0(e')). Throws RootUnavailable if GF(p^N) has no
/// solution and NotStrict for non-strict data.
OgusBasis ogus_basis(const CharDatum& d, std::uint64_t budget = 1'000'000);

/// The 2σ0 × 2σ0 block matrix [[0, A], [Aᵀ, 0]] with A unipotent upper
/// triangular, A(i, j) = σ^(i)(a_(j−i)) for j > i (0-based).
MatrixFq structure_gram(const Field& field, int sigma0, std::span<const Fq> a);

struct DescentOptions {
  /// The working field degree may grow to at most cap_factor · n, where
  /// GF(p^n) holds the structure constants.
  int cap_factor = 64;
  /// Also make 2σ0 divide the working degree, so that μ_(p^σ0+1) and the
  /// normalisation roots exist there. Without it N = n·ord(φ^n).
  bool include_root_field = true;
};

/// The abstract model behind a tuple of structure constants, in the basis
/// e_1 .. e_2σ0: the Gram matrix and the matrix F with φ(x) = F·σ(x).
struct StructureModel {
  Field field;
  MatrixFq gram;
  MatrixFq frobenius;
  std::vector<Fq> lambda;
  std::vector<Fq> mu;
};

/// Solves for φ(e_2σ0) from the σ-twisted pairings with e_2 .. e_2σ0 and
/// μ_1 = 0; checks λ_1 = 1 and isotropy. Throws ModelInconsistent.
StructureModel structure_model(int p, int sigma0, std::span<const Fq> a);

/// Rebuilds (K, V) from structure constants: finds the F_p-structure as the
/// fixed points of φ over a large enough GF(p^N) and returns
/// K = φ^(−(σ0−1))⟨e_1, …, e_σ0⟩ in V-coordinates. The constants may be
/// unbound literals (read in F_p) or elements of a common GF(p^n).
CharDatum from_structure_constants(int p, int sigma0, std::span<const Fq> a, const DescentOptions& options = {});

/// Field holding the constants: their common field, or F_p.
Field constants_field(int p, std::span<const Fq> a);

}  // namespace crystal

#endif  // CRYSTAL_CHARSUB_HPP
