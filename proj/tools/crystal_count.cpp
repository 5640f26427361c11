// crystal-count: command-line front end. Every command prints one JSON
// document on stdout. Exit status: 0 on success, 1 when a verify suite
// fails, 2 on a library error (the error is printed as JSON).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crystal/verify.hpp"

using namespace crystal;

namespace {

struct Common {
  int p = 3;
  int sigma0 = 1;
  std::string a = "[]";
  int n = 0;
  std::string datum;
  bool brute_force = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
  bool pretty = false;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CRYSTAL_COUNT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "CRYSTAL_COUNT_BUDGET is not a number");
    }
  }
  return kDefaultEnumerationBudget;
}

// A JSON argument, or @path to read it from a file.
Json parse_arg(const std::string& text, const std::string& what) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, what + " is not valid JSON: " + e.what());
  }
}

void emit(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_flag("--pretty", c.pretty, "Indented JSON");
  cmd->add_flag("--json", [&c](std::int64_t) { c.pretty = false; }, "Compact JSON (default)");
}

void add_space_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--p", c.p, "Odd prime")->capture_default_str();
  cmd->add_option("--sigma0", c.sigma0, "Artin invariant sigma0 (twisted, 1..11)")->capture_default_str();
}

void add_datum_flags(CLI::App* cmd, Common& c) {
  add_space_flags(cmd, c);
  cmd->add_option("--a", c.a, "Structure constants a_1..a_(sigma0-1), JSON array of coefficient arrays")
      ->capture_default_str();
  cmd->add_option("--n", c.n, "Field degree of the constants (default: longest coefficient array)");
  cmd->add_option("--datum", c.datum, "A datum as JSON (or @file) instead of --p/--sigma0/--a");
}

void add_budget(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "Enumeration budget (overrides CRYSTAL_COUNT_BUDGET)");
}

std::vector<Fq> constants(const Common& c) { return constants_from_json(c.p, c.n, parse_arg(c.a, "--a")); }

CharDatum load_datum(const Common& c) {
  if (!c.datum.empty()) return datum_from_json(parse_arg(c.datum, "--datum"));
  const std::vector<Fq> a = constants(c);
  return from_structure_constants(c.p, c.sigma0, a);
}

Json cmd_space(const Common& c) {
  const QuadraticSpace v = standard_space(c.p, c.sigma0);
  Json count{{"formula", big_json(isotropic_count_formula(c.p, c.sigma0))}, {"enumerated", nullptr}};
  Json out{{"space", to_json(v)}, {"non_neutral", verify_non_neutral(v)}};
  if (c.brute_force) {
    try {
      count["enumerated"] = big_json(BigInt(enumerate_isotropic(v, c.budget).size()));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      count["skipped"] = e.what();
    }
  }
  out["isotropic_count"] = count;
  return out;
}

Json cmd_datum(const Common& c) {
  const CharDatum d = load_datum(c);
  const ValidationReport r = validate(d);
  Json out{{"datum", to_json(d)}, {"field", to_json(d.field())}, {"validation", to_json(r)}};
  out["ogus"] = nullptr;
  out["m"] = nullptr;
  if (r.is_strict) {
    const OgusBasis b = ogus_basis(d);
    out["ogus"] = to_json(b);
    out["m"] = m_invariant(b.a, d.sigma0());
  }
  return out;
}

Json cmd_ortho(const Common& c) {
  const CharDatum d = load_datum(c);
  const OgusBasis b = ogus_basis(d);
  const int m = m_invariant(b.a, d.sigma0());
  Json elements = Json::array();
  for (const OrthoElement& g : ortho_group_elements(d)) elements.push_back(to_json(g));
  return Json{{"m", m},
              {"order", big_json(boost::multiprecision::pow(BigInt(d.space().p()), m) + 1)},
              {"field", to_json(d.field())},
              {"elements", elements}};
}

Json cmd_fm(const Common& c) {
  if (!c.brute_force) {
    if (!c.datum.empty()) return to_json(count_fm_partners(load_datum(c), CountOptions{false, c.budget}));
    std::vector<bool> nonzero;
    for (const Fq& x : constants(c)) nonzero.push_back(!is_zero(x));
    return to_json(count_fm_from_constants(c.p, c.sigma0, nonzero));
  }
  if (c.datum.empty() && c.sigma0 == 11) {
    std::vector<bool> nonzero;
    for (const Fq& x : constants(c)) nonzero.push_back(!is_zero(x));
    Json out = to_json(count_fm_from_constants(c.p, c.sigma0, nonzero));
    out["skipped"] = "brute force is not feasible at sigma0 = 11; formula only";
    return out;
  }
  const CharDatum d = load_datum(c);
  try {
    return to_json(count_fm_partners(d, CountOptions{true, c.budget}));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    Json out = to_json(count_fm_partners(d, CountOptions{false, c.budget}));
    out["skipped"] = e.what();
    return out;
  }
}

Json cmd_extend(const Common& c, const std::string& b_text) {
  const CharDatum d = load_datum(c);
  const VectorFq b = vector_from_json(d.field(), parse_arg(b_text, "--b"));
  const ExtendedDatum ed = extend_by_bfield(BFieldClass{d, b});
  const ValidationReport r = validate(ed.ktilde, ed.extension.extended);
  return Json{{"extended", to_json(ed)},
              {"range", to_json(check_range(ed, d))},
              {"validation", to_json(r)},
              {"class", to_json(canonical(BFieldClass{d, b}).b)}};
}

Json cmd_restrict(const std::string& input) {
  const Json j = parse_arg(input, "--input");
  const ExtendedDatum ed = extended_from_json(j.contains("extended") ? j.at("extended") : j);
  return to_json(restrict_datum(ed));
}

Json cmd_twist(const std::string& input, int lambda) {
  const Json j = parse_arg(input, "--input");
  const ExtendedDatum ed = extended_from_json(j.contains("extended") ? j.at("extended") : j);
  return Json{{"extended", to_json(power_twist(ed, Zp(lambda, ed.extension.base.p())))}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts and checks for characteristic subspace data over finite fields"};
  app.require_subcommand(1);
  Common c;
  try {
    c.budget = default_budget();
  } catch (const Error& e) {
    emit(to_json(e), false);
    return 2;
  }

  auto* space = app.add_subcommand("space", "Standard quadratic space and its isotropic count");
  add_space_flags(space, c);
  space->add_flag("--brute-force", c.brute_force, "Also enumerate the isotropic vectors");
  add_budget(space, c);
  add_format(space, c);

  auto* datum = app.add_subcommand("datum", "Build a datum from structure constants and describe it");
  add_datum_flags(datum, c);
  add_format(datum, c);

  auto* ortho = app.add_subcommand("ortho", "Automorphism group of a datum");
  add_datum_flags(ortho, c);
  add_format(ortho, c);

  auto* fm = app.add_subcommand("fm", "Twisted Fourier-Mukai partner count (sigma0 is the twisted invariant)");
  add_datum_flags(fm, c);
  fm->add_flag("--brute-force", c.brute_force, "Also count orbits on the isotropic vectors");
  add_budget(fm, c);
  add_format(fm, c);

  auto* bfield = app.add_subcommand("bfield", "B-field extension, restriction and power twist");
  bfield->require_subcommand(1);
  std::string b_text, input;
  int lambda = 1;
  auto* extend = bfield->add_subcommand("extend", "K̃ from a datum and a B-field");
  add_datum_flags(extend, c);
  extend->add_option("--b", b_text, "B as a JSON array of field elements")->required();
  add_format(extend, c);
  auto* restrict = bfield->add_subcommand("restrict", "Datum and B-field class from K̃");
  restrict->add_option("--input", input, "Extended datum as JSON (or @file)")->required();
  add_format(restrict, c);
  auto* twist = bfield->add_subcommand("twist", "Apply the power twist m_lambda to K̃");
  twist->add_option("--input", input, "Extended datum as JSON (or @file)")->required();
  twist->add_option("--lambda", lambda, "Unit of F_p")->required();
  add_format(twist, c);

  auto* verify = app.add_subcommand("verify", "Run a property suite over the standard test matrix");
  std::string suite = "all", fault;
  std::optional<int> vp, vs;
  verify->add_option("suite", suite, "isotropic, ortho, fm, bfield, roundtrip or all")
      ->check(CLI::IsMember(verify_suites()))
      ->capture_default_str();
  verify->add_option("--p", vp, "Restrict to one prime");
  verify->add_option("--sigma0", vs, "Restrict to one sigma0");
  verify->add_option("--inject-fault", fault, "Dev fixture: corrupt the named input (gram)");
  add_budget(verify, c);
  add_format(verify, c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*space) emit(cmd_space(c), c.pretty);
    if (*datum) emit(cmd_datum(c), c.pretty);
    if (*ortho) emit(cmd_ortho(c), c.pretty);
    if (*fm) emit(cmd_fm(c), c.pretty);
    if (*extend) emit(cmd_extend(c, b_text), c.pretty);
    if (*restrict) emit(cmd_restrict(input), c.pretty);
    if (*twist) emit(cmd_twist(input, lambda), c.pretty);
    if (*verify) {
      const VerifyReport report = run_verify(suite, VerifyOptions{vp, vs, c.budget, fault});
      emit(report.to_json(), c.pretty);
      return report.passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    emit(to_json(e), c.pretty);
    return 2;
  }
  return 0;
}
