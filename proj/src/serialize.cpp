#include "crystal/serialize.hpp"

namespace crystal {

Json big_json(const BigInt& x) { return x.str(); }

Json to_json(const Fq& x) {
  if (!x.bound()) return Json::array({x.literal()});
  return Json(x.coeffs());
}

Json to_json(const Field& f) { return Json{{"p", f->p}, {"N", f->degree}, {"modulus", f->modulus}}; }

Json to_json(const MatrixZp& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).value());
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const MatrixFq& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const VectorFq& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(std::span<const Fq> xs) {
  Json out = Json::array();
  for (const Fq& x : xs) out.push_back(to_json(x));
  return out;
}

Json to_json(const QuadraticSpace& v) { return Json{{"p", v.p()}, {"dim", v.dim()}, {"gram", to_json(v.gram())}}; }

Json to_json(const Subspace& s) {
  return Json{{"ambient", to_json(s.ambient())}, {"fieldN", s.field_degree()}, {"basis", to_json(s.basis())}};
}

Json to_json(const CharDatum& d) {
  return Json{{"V", to_json(d.space())}, {"fieldN", d.field()->degree}, {"K", to_json(d.k().basis())}};
}

Json to_json(const ValidationReport& r) {
  return Json{{"sigma0", r.sigma0},
              {"dim_K", r.dim_k},
              {"dim_K_plus_phiK", r.dim_k_plus_phi_k},
              {"dim_phi_span", r.dim_phi_span},
              {"totally_isotropic", r.totally_isotropic},
              {"is_characteristic", r.is_characteristic},
              {"is_strict", r.is_strict}};
}

Json to_json(const OgusBasis& b) {
  return Json{{"e", to_json(b.e)},     {"a", to_json(std::span<const Fq>(b.a))},
              {"lambda", to_json(std::span<const Fq>(b.lambda))},
              {"mu", to_json(std::span<const Fq>(b.mu))},
              {"scale", to_json(b.scale)}, {"gram", to_json(b.gram)}};
}

Json to_json(const OrthoElement& g) {
  return Json{{"zeta", to_json(g.zeta)}, {"diagonal", to_json(g.diagonal)}, {"matrix", to_json(g.matrix)}};
}

Json to_json(const PartnerCountReport& r) {
  Json out{{"p", r.p},
           {"sigma0", r.sigma0},
           {"m", r.m},
           {"formula_count", big_json(r.formula_count)},
           {"isotropic_count", big_json(r.isotropic_count)},
           {"untwisted_partner", r.sigma0 <= 10}};
  out["group_order"] = r.group_order ? big_json(*r.group_order) : Json(nullptr);
  out["bruteforce_count"] = r.bruteforce_count ? big_json(*r.bruteforce_count) : Json(nullptr);
  out["orbit_count"] = r.orbit_count ? big_json(*r.orbit_count) : Json(nullptr);
  out["action_free"] = r.action_free ? Json(*r.action_free) : Json(nullptr);
  out["agree"] = r.bruteforce_count ? Json(*r.bruteforce_count == r.formula_count) : Json(nullptr);
  return out;
}

Json to_json(const BFieldClass& bc) { return Json{{"base", to_json(bc.base)}, {"B", to_json(bc.b)}}; }

Json to_json(const ExtendedDatum& ed) {
  return Json{{"base", to_json(ed.extension.base)},
              {"Vtilde", to_json(ed.extension.extended)},
              {"v_index", ed.extension.v_index},
              {"w_index", ed.extension.w_index},
              {"fieldN", ed.ktilde.field_degree()},
              {"Ktilde", to_json(ed.ktilde.basis())}};
}

Json to_json(const RangeReport& r) {
  return Json{{"characteristic", r.characteristic},
              {"v_outside", r.v_outside},
              {"restricts_to_base", r.restricts_to_base},
              {"in_range", r.ok()}};
}

Json to_json(const Error& e) {
  return Json{{"error", Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

}  // namespace

Fq fq_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) return Fq::from_int(f, j.get<std::int64_t>());
  if (!j.is_array()) bad("field element must be an integer or an array of integers");
  if (j.size() > static_cast<std::size_t>(f->degree))
    bad("field element has " + std::to_string(j.size()) + " coefficients, more than the degree " +
        std::to_string(f->degree));
  std::vector<std::int32_t> coeffs(f->degree, 0);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) bad("field coefficients must be integers");
    const std::int64_t c = ((j[i].get<std::int64_t>() % f->p) + f->p) % f->p;
    coeffs[i] = static_cast<std::int32_t>(c);
  }
  return Fq(f, std::move(coeffs));
}

VectorFq vector_from_json(const Field& f, const Json& j) {
  if (!j.is_array()) bad("vector must be an array");
  VectorFq out(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) out(static_cast<Eigen::Index>(i)) = fq_from_json(f, j[i]);
  return out;
}

MatrixFq matrix_from_json(const Field& f, const Json& j, Eigen::Index cols) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  MatrixFq out(static_cast<Eigen::Index>(j.size()), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const VectorFq row = vector_from_json(f, j[i]);
    if (row.size() != cols) bad("matrix row has the wrong length");
    out.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return out;
}

QuadraticSpace space_from_json(const Json& j) {
  const int p = j.at("p").get<int>();
  const Json& g = j.at("gram");
  const Eigen::Index n = static_cast<Eigen::Index>(g.size());
  MatrixZp gram(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (g[r].size() != static_cast<std::size_t>(n)) bad("Gram matrix must be square");
    for (Eigen::Index c = 0; c < n; ++c) gram(r, c) = Zp(g[r][c].get<std::int64_t>(), p);
  }
  return QuadraticSpace(p, std::move(gram));
}

CharDatum datum_from_json(const Json& j) {
  QuadraticSpace v = space_from_json(j.at("V"));
  const Field f = make_extension(v.p(), j.at("fieldN").get<int>());
  const MatrixFq k = matrix_from_json(f, j.at("K"), v.dim());
  return CharDatum(Subspace(std::move(v), f, k));
}

ExtendedDatum extended_from_json(const Json& j) {
  QuadraticSpace base = space_from_json(j.at("base"));
  HyperbolicExtension ext = hyperbolic_extend(base);
  if (j.contains("Vtilde") && !(space_from_json(j.at("Vtilde")) == ext.extended))
    bad("Vtilde is not the hyperbolic extension of base");
  const Field f = make_extension(base.p(), j.at("fieldN").get<int>());
  const MatrixFq k = matrix_from_json(f, j.at("Ktilde"), ext.extended.dim());
  Subspace ktilde(ext.extended, f, k);
  return ExtendedDatum{std::move(ext), std::move(ktilde)};
}

std::vector<Fq> constants_from_json(int p, int n, const Json& j) {
  if (!j.is_array()) bad("structure constants must be a JSON array");
  if (n <= 0) {
    n = 1;
    for (const Json& x : j)
      if (x.is_array()) n = std::max(n, static_cast<int>(x.size()));
  }
  const Field f = make_extension(p, n);
  std::vector<Fq> out;
  for (const Json& x : j) out.push_back(fq_from_json(f, x));
  return out;
}

}  // namespace crystal
