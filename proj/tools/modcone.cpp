// Command-line front end: parses a request, dispatches to the library,
// emits a JSON report on stdout. Errors go to stderr as single-line JSON.
// Exit codes: 0 ok, 1 failed check, 2 unknown command, 3 bad parameter,
// 4 internal inconsistency.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modcone/json_io.hpp"
#include "modcone/modcone.hpp"

namespace {

using modcone::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUnknownCommand = 2;
constexpr int kExitBadParameter = 3;
constexpr int kExitInternal = 4;

[[noreturn]] void fail(int code, const std::string& message) {
  Json err{{"error", message}, {"code", code}};
  std::cerr << err.dump() << "\n";
  std::exit(code);
}

Json checks_json(const std::vector<modcone::CheckResult>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks)
    arr.push_back(Json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  return arr;
}

int emit_report(const std::string& command, Json inputs, Json results,
                const std::vector<modcone::CheckResult>& checks, bool pretty) {
  Json report{{"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"checks", checks_json(checks)},
              {"version", modcone::kVersion}};
  std::cout << report.dump(pretty ? 2 : -1) << "\n";
  for (const auto& c : checks)
    if (!c.pass) return kExitCheckFailed;
  return kExitOk;
}

struct MultArgs {
  std::string kase;
  unsigned g = 0, r1 = 1, r2 = 1;
};

int run_mult(const MultArgs& a, bool pretty) {
  Json inputs{{"case", a.kase}, {"g", a.g}};
  if (a.kase == "split") {
    inputs["r1"] = a.r1;
    inputs["r2"] = a.r2;
    modcone::SplitPoint p(a.g, a.r1, a.r2);
    modcone::Integer mult = modcone::multiplicity_case1(p);
    unsigned d = a.r1 * a.r2 * (a.g - 1);
    modcone::Integer oracle = modcone::segre_degree_oracle(d, d);
    if (mult != oracle)
      fail(kExitInternal, "internal inconsistency: closed form disagrees with Segre degree oracle");
    Json results{{"multiplicity", modcone::integer_str(mult)},
                 {"d12", d},
                 {"tangent_space_dim", modcone::tangent_space_dim_case1(p)}};
    std::vector<modcone::CheckResult> checks{
        {"multiplicity_formula_vs_segre_oracle", true,
         "C(2d-2, d-1) = Hilbert-interpolation degree at d = " + std::to_string(d)}};
    return emit_report("mult", inputs, results, checks, pretty);
  }
  if (a.kase == "trivial-rank2") {
    modcone::Rank2TrivialReport rep = modcone::multiplicity_trivial_rank2(a.g);
    Json results{{"multiplicity", modcone::integer_str(rep.multiplicity)},
                 {"tangent_space_dim", rep.tangent_space_dim},
                 {"corank_dim", rep.corank_dim},
                 {"segre_factor", modcone::integer_str(rep.segre_factor)}};
    return emit_report("mult", inputs, results, {}, pretty);
  }
  fail(kExitBadParameter, "mult: case must be 'split' or 'trivial-rank2'");
}

struct ConeArgs {
  std::string kase;
  unsigned g = 0, r1 = 1, r2 = 1;
};

int run_tangent_cone(const ConeArgs& a, bool pretty) {
  Json inputs{{"case", a.kase}};
  Json results;
  if (a.kase == "split") {
    inputs["g"] = a.g;
    inputs["r1"] = a.r1;
    inputs["r2"] = a.r2;
    results = Json{{"cone", modcone::cone_json(modcone::tangent_cone_case1(
                               modcone::SplitPoint(a.g, a.r1, a.r2)))}};
  } else if (a.kase == "trivial-rank2") {
    inputs["g"] = a.g;
    results = Json{{"cone", modcone::cone_json(modcone::tangent_cone_trivial_rank2(a.g))}};
  } else if (a.kase == "su3-torus") {
    results = Json{{"model", modcone::local_model_json(
                               modcone::su3_genus2_local_model(modcone::Su3Case::kTorus))}};
  } else if (a.kase == "su3-two-summand") {
    results = Json{{"model", modcone::local_model_json(
                               modcone::su3_genus2_local_model(modcone::Su3Case::kTwoSummand))}};
  } else if (a.kase == "coble-trivial") {
    results = Json{{"model", modcone::local_model_json(
                               modcone::coble_local_model(modcone::CobleCase::kTrivial))}};
  } else if (a.kase == "coble-split") {
    results = Json{{"model", modcone::local_model_json(
                               modcone::coble_local_model(modcone::CobleCase::kSplit))}};
  } else {
    fail(kExitBadParameter,
         "tangent-cone: case must be one of split, trivial-rank2, su3-torus, su3-two-summand, "
         "coble-trivial, coble-split");
  }
  return emit_report("tangent-cone", inputs, results, {}, pretty);
}

int run_invariants(unsigned summands, unsigned arrow_mult, unsigned degree_bound,
                   unsigned x_degree_bound, bool pretty) {
  modcone::TorusActionSpec spec = modcone::TorusActionSpec::complete(summands, arrow_mult);
  modcone::InvariantPresentation pres =
      modcone::compute_invariant_presentation(spec, degree_bound, x_degree_bound);
  Json inputs{{"summands", summands},
              {"arrow_mult", arrow_mult},
              {"degree_bound", degree_bound},
              {"x_degree_bound", x_degree_bound}};
  std::string note =
      pres.decomposition_certified
          ? "basis complete: every invariant monomial of degree <= " +
                std::to_string(2 * degree_bound) + " decomposes into the returned generators"
          : "warning: decomposition check failed up to degree " +
                std::to_string(2 * degree_bound) + "; raise the degree bound";
  Json results{{"presentation", modcone::invariant_presentation_json(pres)},
               {"completeness_note", note}};
  std::vector<modcone::CheckResult> checks{
      {"relations_vanish_on_generators", true, "validated by substitution"},
      {"basis_decomposition_closure", pres.decomposition_certified,
       "invariant monomials up to twice the bound"}};
  return emit_report("invariants", inputs, results, checks, pretty);
}

int run_corank(unsigned g, unsigned samples, std::uint64_t seed, bool has_seed, bool pretty) {
  if (samples > 0 && !has_seed) fail(kExitBadParameter, "corank: --seed is required with --samples");
  unsigned formula = modcone::corank_formula(g);
  modcone::RationalMatrix diag(g, g);
  for (unsigned i = 0; i < 3 && i < g; ++i) diag.at(i, i) = modcone::Rational(1);
  unsigned brute = modcone::corank_bruteforce(modcone::CorankMap(g, diag));
  Json sample_vals = Json::array();
  bool all_match = brute == formula;
  modcone::Rng rng(seed);
  for (unsigned i = 0; i < samples; ++i) {
    unsigned b = modcone::corank_bruteforce(
        modcone::CorankMap(g, modcone::random_rank3_symmetric(g, rng)));
    sample_vals.push_back(b);
    all_match = all_match && b == formula;
  }
  Json inputs{{"g", g}, {"samples", samples}};
  if (has_seed) inputs["seed"] = std::to_string(seed);
  Json results{{"formula", formula},
               {"bruteforce_diag", brute},
               {"bruteforce_samples", sample_vals}};
  std::vector<modcone::CheckResult> checks{
      {"corank_formula_matches_bruteforce", all_match,
       all_match ? "closed form equals contraction-map corank"
                 : "closed form C(g,3) - C(g-3,3) differs from the contraction-map corank"}};
  return emit_report("corank", inputs, results, checks, pretty);
}

int run_hilbert(bool pretty) {
  modcone::UniPoly p;
  try {
    p = modcone::theta_map_hilbert_polynomial();
  } catch (const modcone::HilbertSolveError& e) {
    fail(kExitInternal, std::string("internal inconsistency: ") + e.what());
  }
  modcone::Integer deg = modcone::degree_of_theta_map();
  Json results{{"polynomial", modcone::unipoly_json(p)},
               {"leading_coefficient", modcone::rational_json(p.coeff(8))},
               {"degree_of_map", modcone::integer_str(deg)}};
  std::vector<modcone::CheckResult> checks{
      {"constraint_system_consistent", true, "overdetermined system solved exactly"},
      {"symmetry_holds_identically", (p - p.compose_affine(modcone::Rational(-6), modcone::Rational(-1))).is_zero(),
       "P(n) - P(-6-n) = 0 at coefficient level"}};
  return emit_report("hilbert", Json::object(), results, checks, pretty);
}

int run_theta(unsigned g, unsigned h, bool pretty) {
  modcone::Integer mult(0);
  try {
    mult = modcone::theta_multiplicity(g, h);
  } catch (const modcone::NotOnThetaDivisor& e) {
    fail(kExitBadParameter, e.what());
  }
  Json inputs{{"g", g}, {"h", h}};
  Json results{{"theta_multiplicity", modcone::integer_str(mult)}};
  return emit_report("theta", inputs, results, {}, pretty);
}

int run_verify(std::uint64_t seed, bool pretty) {
  std::vector<modcone::CheckResult> checks = modcone::run_verification_suite(seed);
  unsigned passed = 0;
  for (const auto& c : checks) passed += c.pass ? 1 : 0;
  Json inputs{{"seed", std::to_string(seed)}};
  Json results{{"total", checks.size()},
               {"passed", passed},
               {"failed", checks.size() - passed}};
  return emit_report("verify", inputs, results, checks, pretty);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact local invariants of moduli of semistable bundles on curves"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON report");

  MultArgs mult_args;
  CLI::App* mult = app.add_subcommand("mult", "multiplicity at a non-stable point");
  mult->add_option("--case", mult_args.kase, "split | trivial-rank2")->required();
  mult->add_option("--g", mult_args.g, "genus")->required();
  mult->add_option("--r1", mult_args.r1, "rank of the first summand");
  mult->add_option("--r2", mult_args.r2, "rank of the second summand");

  ConeArgs cone_args;
  CLI::App* cone = app.add_subcommand("tangent-cone", "tangent-cone presentation");
  cone->add_option("--case", cone_args.kase,
                   "split | trivial-rank2 | su3-torus | su3-two-summand | coble-trivial | coble-split")
      ->required();
  cone->add_option("--g", cone_args.g, "genus");
  cone->add_option("--r1", cone_args.r1, "rank of the first summand");
  cone->add_option("--r2", cone_args.r2, "rank of the second summand");

  unsigned inv_summands = 3, inv_mult = 1, inv_bound = 3, inv_xbound = 6;
  CLI::App* inv = app.add_subcommand("invariants", "torus-invariant generators and relations");
  inv->add_option("--summands", inv_summands, "number of graded summands")->required();
  inv->add_option("--arrow-mult", inv_mult, "variables per arrow (default 1)");
  inv->add_option("--degree-bound", inv_bound, "generator degree bound (default 3)");
  inv->add_option("--x-degree-bound", inv_xbound, "relation search degree bound (default 6)");

  unsigned corank_g = 0, corank_samples = 0;
  std::uint64_t corank_seed = 0;
  CLI::App* corank = app.add_subcommand("corank", "corank: closed formula vs brute force");
  corank->add_option("--g", corank_g, "genus")->required();
  corank->add_option("--samples", corank_samples, "seeded random rank-3 samples");
  CLI::Option* corank_seed_opt = corank->add_option("--seed", corank_seed, "sample stream seed");

  CLI::App* hilbert = app.add_subcommand("hilbert", "constrained Hilbert polynomial and map degree");

  unsigned theta_g = 0, theta_h = 0;
  CLI::App* theta = app.add_subcommand("theta", "theta-divisor multiplicity");
  theta->set_help_flag("--help", "print help");  // frees -h/--h for the input
  theta->add_option("--g", theta_g, "genus")->required();
  theta->add_option("--h", theta_h, "dim H^0 of one summand")->required();

  std::uint64_t verify_seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "run the full property suite");
  verify->add_option("--seed", verify_seed, "property stream seed")->required();

  // classify the command token before CLI11 parsing so that an unknown or
  // missing command exits 2 while parameter problems exit 3
  {
    static const std::vector<std::string> known = {"mult",    "tangent-cone", "invariants",
                                                   "corank",  "hilbert",      "theta",
                                                   "verify"};
    bool help_requested = false;
    std::string first_positional;
    for (int i = 1; i < argc; ++i) {
      std::string a = argv[i];
      if (a == "--help" || a == "-h") { help_requested = true; break; }
      if (!a.empty() && a[0] != '-' && first_positional.empty()) {
        first_positional = a;
        break;
      }
    }
    if (!help_requested) {
      if (first_positional.empty()) fail(kExitUnknownCommand, "no command given");
      bool ok = false;
      for (const auto& k : known) ok = ok || k == first_positional;
      if (!ok) fail(kExitUnknownCommand, "unknown command: " + first_positional);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::RequiredError& e) {
    fail(kExitBadParameter, e.what());
  } catch (const CLI::ConversionError& e) {
    fail(kExitBadParameter, e.what());
  } catch (const CLI::ValidationError& e) {
    fail(kExitBadParameter, e.what());
  } catch (const CLI::ParseError& e) {
    fail(kExitUnknownCommand, e.what());
  }

  try {
    if (mult->parsed()) return run_mult(mult_args, pretty);
    if (cone->parsed()) return run_tangent_cone(cone_args, pretty);
    if (inv->parsed())
      return run_invariants(inv_summands, inv_mult, inv_bound, inv_xbound, pretty);
    if (corank->parsed())
      return run_corank(corank_g, corank_samples, corank_seed, corank_seed_opt->count() > 0, pretty);
    if (hilbert->parsed()) return run_hilbert(pretty);
    if (theta->parsed()) return run_theta(theta_g, theta_h, pretty);
    if (verify->parsed()) return run_verify(verify_seed, pretty);
  } catch (const std::invalid_argument& e) {
    fail(kExitBadParameter, e.what());
  } catch (const std::logic_error& e) {
    fail(kExitInternal, e.what());
  } catch (const std::exception& e) {
    fail(kExitInternal, e.what());
  }
  fail(kExitUnknownCommand, "no command given");
}
