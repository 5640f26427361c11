#ifndef CRYSTAL_SERIALIZE_HPP
#define CRYSTAL_SERIALIZE_HPP

// JSON encodings. Keys come out sorted (nlohmann::json uses std::map), field
// elements are coefficient arrays with the constant term first, and big
// integers are decimal strings.

#include <json.hpp>

#include "crystal/bfield.hpp"
#include "crystal/fmcount.hpp"

namespace crystal {

using Json = nlohmann::json;

Json big_json(const BigInt& x);
Json to_json(const Fq& x);
Json to_json(const Field& f);
Json to_json(const MatrixZp& m);
Json to_json(const MatrixFq& m);
Json to_json(const VectorFq& v);
Json to_json(std::span<const Fq> xs);
Json to_json(const QuadraticSpace& v);
Json to_json(const Subspace& s);
Json to_json(const CharDatum& d);
Json to_json(const ValidationReport& r);
Json to_json(const OgusBasis& b);
Json to_json(const OrthoElement& g);
Json to_json(const PartnerCountReport& r);
Json to_json(const BFieldClass& bc);
Json to_json(const ExtendedDatum& ed);
Json to_json(const RangeReport& r);
Json to_json(const Error& e);

/// Field element from a coefficient array or a bare integer. Arrays longer
/// than the degree are rejected.
Fq fq_from_json(const Field& f, const Json& j);
VectorFq vector_from_json(const Field& f, const Json& j);
MatrixFq matrix_from_json(const Field& f, const Json& j, Eigen::Index cols);
QuadraticSpace space_from_json(const Json& j);
CharDatum datum_from_json(const Json& j);
ExtendedDatum extended_from_json(const Json& j);

/// Structure constants given as coefficient arrays (or integers) of
/// GF(p^n). With n = 0 the degree is the longest array length.
std::vector<Fq> constants_from_json(int p, int n, const Json& j);

}  // namespace crystal

#endif  // CRYSTAL_SERIALIZE_HPP
