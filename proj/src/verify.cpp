#include "crystal/verify.hpp"

#include <map>
#include <random>
#include <set>

namespace crystal {

std::vector<MatrixCase> standard_matrix() {
  std::vector<MatrixCase> out;
  for (int p : {3, 5}) {
    out.push_back({p, 1, "all-zero", {}});
    out.push_back({p, 2, "all-zero", {0}});
    out.push_back({p, 2, "generic", {1}});
    out.push_back({p, 3, "all-zero", {0, 0}});
    out.push_back({p, 3, "mixed", {0, 2}});
    out.push_back({p, 3, "generic", p == 3 ? std::vector<int>{1, 2} : std::vector<int>{1, 1}});
  }
  return out;
}

BigInt golden_fm_3_11() { return BigInt("5230117552"); }

std::size_t VerifyReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const CheckResult& c : checks) n += c.status == s;
  return n;
}

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

}  // namespace

Json VerifyReport::to_json() const {
  Json list = Json::array();
  for (const CheckResult& c : checks)
    list.push_back(Json{{"name", c.name}, {"status", status_name(c.status)}, {"computed", c.computed},
                        {"expected", c.expected}});
  return Json{{"suite", suite},
              {"checks", list},
              {"summary", Json{{"passed", count(CheckStatus::Pass)},
                               {"failed", count(CheckStatus::Fail)},
                               {"skipped", count(CheckStatus::Skipped)},
                               {"status", passed() ? "PASS" : "FAIL"}}}};
}

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void check(const std::string& name, bool ok, Json computed, Json expected) {
    report_.checks.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(computed),
                              std::move(expected)});
  }
  template <class T>
  void equal(const std::string& name, const T& computed, const T& expected) {
    check(name, computed == expected, Json(computed), Json(expected));
  }
  void big_equal(const std::string& name, const BigInt& computed, const BigInt& expected) {
    check(name, computed == expected, big_json(computed), big_json(expected));
  }
  void skip(const std::string& name, const std::string& why) {
    report_.checks.push_back({name, CheckStatus::Skipped, Json(why), nullptr});
  }
  // Runs fn, turning library errors into a failed (or skipped) check.
  template <class Fn>
  void guarded(const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BudgetExceeded)
        skip(name, e.what());
      else
        check(name + "/error", false, crystal::to_json(e), nullptr);
    }
  }

 private:
  VerifyReport& report_;
};

std::string label(int p, int sigma0) { return "p=" + std::to_string(p) + ",sigma0=" + std::to_string(sigma0); }

std::string label(const MatrixCase& c) { return label(c.p, c.sigma0) + "," + c.pattern; }

bool selected(const VerifyOptions& o, int p, int sigma0) {
  return (!o.p || *o.p == p) && (!o.sigma0 || *o.sigma0 == sigma0);
}

std::vector<Fq> literals(const MatrixCase& c) {
  std::vector<Fq> out;
  for (int x : c.a) out.push_back(Fq(x));
  return out;
}

std::vector<bool> pattern(const MatrixCase& c) {
  std::vector<bool> out;
  for (int x : c.a) out.push_back(x % c.p != 0);
  return out;
}

BigInt ipow(int p, int e) { return boost::multiprecision::pow(BigInt(p), e); }

QuadraticSpace suite_space(int p, int sigma0, const VerifyOptions& o) {
  QuadraticSpace v = standard_space(p, sigma0);
  if (o.fault != "gram") return v;
  MatrixZp g = v.gram();
  g(g.rows() - 1, g.cols() - 1) = Zp(-1, p);
  return QuadraticSpace(p, g);
}

// Datum construction is shared by the suites of one run.
class Data {
 public:
  const CharDatum& get(const MatrixCase& c) {
    const std::string key = label(c);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      const std::vector<Fq> a = literals(c);
      it = cache_.emplace(key, from_structure_constants(c.p, c.sigma0, a)).first;
    }
    return it->second;
  }

 private:
  std::map<std::string, CharDatum> cache_;
};

void suite_isotropic(Recorder& rec, const VerifyOptions& o) {
  const std::vector<std::pair<int, int>> pairs{{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}};
  for (auto [p, s0] : pairs) {
    if (!selected(o, p, s0)) continue;
    const std::string base = "isotropic/" + label(p, s0);
    rec.guarded(base, [&] {
      const QuadraticSpace v = suite_space(p, s0, o);
      rec.check(base + "/non_neutral", verify_non_neutral(v), verify_non_neutral(v), true);
      rec.check(base + "/extension_non_neutral", verify_non_neutral(hyperbolic_extend(v).extended),
                verify_non_neutral(hyperbolic_extend(v).extended), true);
      const BigInt formula = isotropic_count_formula(p, s0);
      try {
        const std::vector<VectorZp> iso = enumerate_isotropic(v, o.budget);
        rec.big_equal(base + "/count", BigInt(iso.size()), formula);
        rec.check(base + "/divisible_by_p_minus_1", iso.size() % (p - 1) == 0, iso.size() % (p - 1), 0);
        std::set<std::uint64_t> keys;
        for (const VectorZp& x : iso) keys.insert(lex_index(x, p));
        bool closed = true;
        for (const VectorZp& x : iso)
          for (int c = 2; c < p; ++c) closed &= keys.count(lex_index(bind(v.context(), (Zp(c, p) * x).eval()), p)) > 0;
        rec.check(base + "/scalar_closed", closed, closed, true);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        rec.skip(base + "/count", std::string("formula only: ") + e.what());
      }
    });
  }
  if (selected(o, 3, 11))
    rec.big_equal("isotropic/p=3,sigma0=11/formula", isotropic_count_formula(3, 11), BigInt("10460235104"));
}

void suite_ortho(Recorder& rec, const VerifyOptions& o, Data& data) {
  for (const MatrixCase& c : standard_matrix()) {
    if (!selected(o, c.p, c.sigma0)) continue;
    const std::string base = "ortho/" + label(c);
    rec.guarded(base, [&] {
      const CharDatum& d = data.get(c);
      const BigInt expected = ipow(c.p, m_invariant(pattern(c), c.sigma0)) + 1;
      const std::vector<OrthoElement> group = ortho_group_elements(d);
      rec.big_equal(base + "/order", BigInt(group.size()), expected);
      rec.big_equal(base + "/formula_order", ortho_group_order(d), expected);

      const ContextZp ctx{c.p};
      const MatrixZp id = identity(ctx, d.space().dim());
      bool has_identity = false, closed = true, injective = true;
      std::set<std::vector<std::int32_t>> zetas;
      for (const OrthoElement& g : group) {
        has_identity |= g.matrix == id;
        injective &= zetas.insert(g.zeta.coeffs()).second;
        for (const OrthoElement& h : group) {
          const MatrixZp gh = bind(ctx, g.matrix * h.matrix);
          bool found = false;
          for (const OrthoElement& k : group) found |= k.matrix == gh;
          closed &= found;
        }
      }
      rec.check(base + "/identity", has_identity, has_identity, true);
      rec.check(base + "/closure", closed, closed, true);
      rec.check(base + "/zeta_injective", injective, injective, true);

      const std::uint64_t full = static_cast<std::uint64_t>(ipow(c.p, c.sigma0)) + 1;
      bool agrees = true;
      for (const Fq& z : roots_of_unity(d.field(), full))
        agrees &= zeta_in_image(z, d) == (zetas.count(z.coeffs()) > 0);
      rec.check(base + "/zeta_criterion_agrees", agrees, agrees, true);
    });
  }
}

void suite_fm(Recorder& rec, const VerifyOptions& o, Data& data) {
  for (const MatrixCase& c : standard_matrix()) {
    if (!selected(o, c.p, c.sigma0)) continue;
    const std::string base = "fm/" + label(c);
    rec.guarded(base, [&] {
      const CharDatum& d = data.get(c);
      const PartnerCountReport r = count_fm_partners(d, CountOptions{true, o.budget});
      rec.big_equal(base + "/formula", r.formula_count,
                    count_fm_formula(c.p, c.sigma0, m_invariant(pattern(c), c.sigma0)));
      rec.big_equal(base + "/bruteforce", *r.bruteforce_count, r.formula_count);
      rec.check(base + "/free_action", *r.action_free, *r.action_free, true);
      rec.big_equal(base + "/regular_orbits", *r.orbit_count * *r.group_order, r.isotropic_count);
    });
  }
  for (int p : {3, 5}) {
    if (!selected(o, p, 1)) continue;
    rec.big_equal("fm/" + label(p, 1) + "/no_nontrivial_partners", count_fm_formula(p, 1, 1), BigInt(1));
  }
  if (selected(o, 3, 11)) {
    rec.big_equal("fm/p=3,sigma0=11/formula_golden", count_fm_formula(3, 11, 0), golden_fm_3_11());
    const std::vector<bool> zeros(10, false);
    const PartnerCountReport r = count_fm_from_constants(3, 11, zeros);
    rec.big_equal("fm/p=3,sigma0=11,all-zero/no_untwisted_term", r.formula_count, ipow(3, 10) - 1);
  }
  for (int p : {3, 5}) {
    for (int s0 = 1; s0 <= 11; ++s0) {
      if (!selected(o, p, s0)) continue;
      bool monotone = true;
      std::optional<BigInt> last;
      for (int m = 0; m <= s0; ++m) {
        if (m > 0 && (s0 % m != 0 || (s0 / m) % 2 == 0)) continue;
        const BigInt v = count_fm_formula(p, s0, m);
        if (last) monotone &= v <= *last;  // flat at sigma0 = 1, where p^(sigma0-1) - 1 = 0
        last = v;
      }
      rec.check("fm/" + label(p, s0) + "/non_increasing_in_m", monotone, monotone, true);
    }
  }
}

VectorFq random_combination(const MatrixFq& rows, int p, std::mt19937_64& rng, const ContextFq& ctx) {
  VectorFq out = VectorFq::Constant(rows.cols(), ctx.zero());
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    const std::int64_t c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
    if (c) out = bind(ctx, (out + ctx.from_int(c) * rows.row(r).transpose()).eval());
  }
  return out;
}

void suite_bfield(Recorder& rec, const VerifyOptions& o, Data& data) {
  for (const MatrixCase& c : standard_matrix()) {
    if (!selected(o, c.p, c.sigma0)) continue;
    const std::string base = "bfield/" + label(c);
    rec.guarded(base, [&] {
      const CharDatum& d = data.get(c);
      const ContextFq ctx = d.k().context();
      const MatrixFq space = valid_bfield_space(d);
      std::mt19937_64 rng(20261018);
      bool all_valid = true, dims = true, range = true, round_class = true, round_space = true, rep = true,
           twist = true, compose = true;
      for (int sample = 0; sample < 10; ++sample) {
        const VectorFq b = random_combination(space, c.p, rng, ctx);
        all_valid &= valid_bfield(b, d);
        const ExtendedDatum ed = extend_by_bfield(BFieldClass{d, b});
        dims &= ed.ktilde.dim() == c.sigma0 + 1;
        range &= check_range(ed, d).ok();
        const BFieldClass back = restrict_datum(ed);
        round_class &= same_class(back, BFieldClass{d, b});
        round_space &= extend_by_bfield(back).ktilde == ed.ktilde;
        const VectorFq shifted = bind(ctx, (b + d.k().basis().row(0).transpose()).eval());
        rep &= extend_by_bfield(BFieldClass{d, shifted}).ktilde == ed.ktilde;
        for (int l = 1; l < c.p; ++l) {
          const VectorFq lb = bind(ctx, (ctx.from_int(l) * b).eval());
          twist &= power_twist(ed, Zp(l, c.p)).ktilde == extend_by_bfield(BFieldClass{d, lb}).ktilde;
          for (int l2 = 1; l2 < c.p; ++l2)
            compose &= power_twist(power_twist(ed, Zp(l, c.p)), Zp(l2, c.p)).ktilde ==
                       power_twist(ed, Zp(l * l2, c.p)).ktilde;
        }
      }
      rec.check(base + "/samples_valid", all_valid, all_valid, true);
      rec.check(base + "/dim_Ktilde", dims, dims, true);
      rec.check(base + "/range_conditions", range, range, true);
      rec.check(base + "/restrict_extend_class", round_class, round_class, true);
      rec.check(base + "/extend_restrict_subspace", round_space, round_space, true);
      rec.check(base + "/representative_independent", rep, rep, true);
      rec.check(base + "/power_twist_scales_B", twist, twist, true);
      rec.check(base + "/power_twist_composes", compose, compose, true);

      const ExtendedDatum trivial = extend_by_bfield(BFieldClass{d, VectorFq::Constant(d.space().dim(), ctx.zero())});
      const bool strict = validate(trivial.ktilde, trivial.extension.extended).is_strict;
      rec.check(base + "/zero_B_not_strict", !strict, strict, false);
    });
  }
}

void suite_roundtrip(Recorder& rec, const VerifyOptions& o, Data& data) {
  for (const MatrixCase& c : standard_matrix()) {
    if (!selected(o, c.p, c.sigma0)) continue;
    const std::string base = "roundtrip/" + label(c);
    rec.guarded(base, [&] {
      const CharDatum& d = data.get(c);
      const ValidationReport v = validate(d);
      rec.check(base + "/strict", v.is_strict, v.is_strict, true);
      rec.check(base + "/non_neutral", verify_non_neutral(d.space()), verify_non_neutral(d.space()), true);
      const OgusBasis b = ogus_basis(d);

      std::vector<bool> got;
      for (const Fq& x : b.a) got.push_back(!is_zero(x));
      rec.check(base + "/vanishing_pattern", got == pattern(c), Json(got), Json(pattern(c)));

      const ContextFq ctx = d.k().context();
      const std::uint64_t order = static_cast<std::uint64_t>(ipow(c.p, c.sigma0)) + 1;
      bool rescaled = false;
      for (const Fq& z : roots_of_unity(d.field(), order)) {
        bool all = true;
        for (int i = 1; i < c.sigma0; ++i) {
          const BigInt e = ipow(c.p, c.sigma0 + i) + 1;
          all &= pow(z, e) * b.a[i - 1] == ctx.from_int(c.a[i - 1]);
        }
        if (all) {
          rescaled = true;
          break;
        }
      }
      rec.check(base + "/values_up_to_rescaling", rescaled, rescaled, true);

      const MatrixFq expected = structure_gram(d.field(), c.sigma0, b.a);
      rec.check(base + "/gram_block_form", b.gram == expected, b.gram == expected, true);
      rec.check(base + "/lambda1_mu1", is_one(b.lambda[0]) && is_zero(b.mu[0]),
                Json::array({crystal::to_json(b.lambda[0]), crystal::to_json(b.mu[0])}), Json::array({{1}, {0}}));
      rec.check(base + "/normalised", is_one(b.gram(0, c.sigma0)), crystal::to_json(b.gram(0, c.sigma0)),
                Json::array({1}));

      const Subspace line = canonical_line(d);
      bool inside = true;
      for (int j = 0; j < c.sigma0; ++j) inside &= subspace_intersect(line, apply_phi(d.k(), j)) == line;
      rec.check(base + "/line_in_phi_iterates", inside, inside, true);
    });
  }
}

}  // namespace

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options) {
  bool known = false;
  for (const std::string& s : verify_suites()) known |= s == suite;
  if (!known) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
  if (!options.fault.empty() && options.fault != "gram")
    throw Error(ErrorKind::InvalidArgument, "unknown fault '" + options.fault + "'");

  VerifyReport report{suite, {}};
  Recorder rec(report);
  Data data;
  const bool all = suite == "all";
  if (all || suite == "isotropic") suite_isotropic(rec, options);
  if (all || suite == "roundtrip") suite_roundtrip(rec, options, data);
  if (all || suite == "ortho") suite_ortho(rec, options, data);
  if (all || suite == "fm") suite_fm(rec, options, data);
  if (all || suite == "bfield") suite_bfield(rec, options, data);
  return report;
}

}  // namespace crystal
