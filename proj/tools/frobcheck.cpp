// Command-line front end. Every subcommand is turned into a short script and
// handed to Session, so subcommands and scripts behave identically.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "frobcheck/session.hpp"

namespace {

using frobcheck::Session;
using frobcheck::SessionOptions;

const char* kSelftest = R"(# quick checks whose answers are immediate
ring F2[x,y,z]
ideal T = (x*y, x*z, y*z)
primes T = monomial
check fedder T
check fpure-containment T n=1
check fpure-containment T n=2
ring F5[x,y,z]
hypersurface x*y - z^2
ideal Q = (x, z)
primes Q = (x, z) local=2
separator Q 1 = y
assert-fpure Q
check fpure Q
check jacobian-fpure Q n=1
check symbolic-into-ie Q n=1 e=1
ring F5[x,y]
ideal C = (y^2 - x^3)
primes C = (y^2 - x^3)
separator C 1 = 1
check symbolic-into-ie C n=1 e=1
ring F3[x,y]
ideal M = (x, y)
check nu M e=1 value=4
)";

struct Common {
  std::string ring;
  std::string hypersurface;
  std::string ideal;
};

void add_common(CLI::App* cmd, Common& c, bool allow_hypersurface = true) {
  cmd->add_option("--ring", c.ring, "ring, e.g. F5[x,y,z]")->required();
  if (allow_hypersurface) cmd->add_option("--hypersurface", c.hypersurface, "defining equation of R = S/(f)");
  cmd->add_option("--ideal", c.ideal, "comma separated generators")->required();
}

std::string preamble(const Common& c, const std::string& name = "Q") {
  std::string s = "ring " + c.ring + "\n";
  if (!c.hypersurface.empty()) s += "hypersurface " + c.hypersurface + "\n";
  s += "ideal " + name + " = (" + c.ideal + ")\n";
  return s;
}

// --prime "x,z" (repeatable) or --prime monomial; --separator aligned by position.
std::string prime_lines(const std::vector<std::string>& primes, const std::vector<std::string>& separators,
                        unsigned local, const std::vector<std::string>& assertions, bool bundle) {
  std::string s;
  if (primes.size() == 1 && primes[0] == "monomial") {
    s += "primes Q = monomial";
  } else if (!primes.empty()) {
    s += "primes Q = ";
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (i) s += "; ";
      s += "(" + primes[i] + ")";
      if (bundle) s += " bundle";
    }
  }
  if (!s.empty() && local) s += " local=" + std::to_string(local);
  if (!s.empty()) s += "\n";
  for (std::size_t i = 0; i < separators.size(); ++i) {
    if (separators[i] == "auto")
      s += "separator Q auto\n";
    else
      s += "separator Q " + std::to_string(i + 1) + " = " + separators[i] + "\n";
  }
  for (const auto& a : assertions) s += "assert-" + a + " Q\n";
  return s;
}

int run_text(const std::string& script, const SessionOptions& opts) {
  Session session(opts);
  std::istringstream in(script);
  return session.run(in, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Frobenius and symbolic-power containment checks over F_p"};
  app.require_subcommand(1);
  app.fallthrough();

  SessionOptions opts;
  std::string budget;
  app.add_flag("--json", opts.json, "one JSON object per report");
  app.add_flag("--timings", opts.timings, "include wall-clock seconds in reports");
  app.add_option("--seed", opts.seed, "seed for random choices")->default_val(42);
  app.add_option("--emax", opts.e_max, "largest Frobenius exponent for searches (0: 3 if p<=5, 2 if p<=13, else 1)")
      ->default_val(0);
  app.add_option("--budget", budget,
                 "Groebner caps as pairs=N,terms=N,basis=N (defaults 2000000,2000000,200000; "
                 "FROBCHECK_BUDGET sets the same keys)");

  Common common;
  unsigned e = 1;
  unsigned n = 1;
  std::string floor = "auto";
  std::string tag;
  std::string tests;
  std::string expect;
  unsigned local = 0;
  bool finite_pd = false;
  bool bundle = false;
  std::vector<std::string> primes, separators, assertions, params;
  std::string script_path, example_id;

  auto* fedder = app.add_subcommand("fedder", "Fedder's criterion for S/I over a polynomial ring");
  add_common(fedder, common, false);
  fedder->add_option("--e", e, "Frobenius exponent")->default_val(1);

  auto* fpure = app.add_subcommand("fpure", "F-purity of R/Q for a hypersurface or polynomial ring R");
  add_common(fpure, common);
  fpure->add_option("--e", e, "Frobenius exponent")->default_val(1);
  fpure->add_flag("--finite-pd", finite_pd, "assert finite projective dimension of R/Q");

  auto* sfr = app.add_subcommand("sfr", "strong F-regularity witness search at given test elements");
  add_common(sfr, common);
  sfr->add_option("--tests", tests, "comma separated test elements")->required();
  sfr->add_option("--prime", primes, "minimal prime of Q (repeatable)");

  auto* symbolic = app.add_subcommand("symbolic", "symbolic power Q^(n) from listed primes");
  add_common(symbolic, common);
  symbolic->add_option("--n", n, "exponent")->required();
  symbolic->add_option("--prime", primes, "prime generators, or 'monomial'")->required();
  symbolic->add_option("--separator", separators, "separator per prime, or 'auto'");
  symbolic->add_flag("--bundle", bundle, "each listed ideal is radical, not prime");

  auto* containment = app.add_subcommand("containment", "run one containment check");
  add_common(containment, common);
  containment->add_option("--tag", tag, "check to run")
      ->required()
      ->check(CLI::IsMember({"fpure-containment", "jacobian-fpure", "sfr-containment", "jacobian-sfr",
                             "fpt-containment", "symbolic-into-ie"}));
  containment->add_option("--n", n, "power")->default_val(1);
  containment->add_option("--e", e, "Frobenius exponent (symbolic-into-ie)")->default_val(1);
  containment->add_option("--floor", floor, "fpt floor or 'auto' (fpt-containment)")->default_val("auto");
  containment->add_option("--prime", primes, "prime generators, or 'monomial'")->required();
  containment->add_option("--separator", separators, "separator per prime, or 'auto'");
  containment->add_option("--local", local, "bound on local minimal generators")->default_val(0);
  containment->add_option("--assert", assertions, "fpure, sfr or finite-pd (repeatable)")
      ->check(CLI::IsMember({"fpure", "sfr", "finite-pd"}));
  containment->add_flag("--bundle", bundle, "each listed ideal is radical, not prime");
  containment->add_option("--expect", expect, "expected verdict")->check(CLI::IsMember({"holds", "fails", "skipped"}));

  auto* fpt = app.add_subcommand("fpt", "nu_e values and the fpt lower bound");
  add_common(fpt, common);

  auto* example = app.add_subcommand("example", "run a registered example");
  example->add_option("id", example_id, "xy-zk or generic-determinantal")->required();
  example->add_option("params", params, "key=value with values 5, 5,7 or 1..3");

  auto* selftest = app.add_subcommand("selftest", "run the built-in quick checks");

  auto* run = app.add_subcommand("run", "run a script file");
  run->add_option("script", script_path, "script path")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return frobcheck::kExitUsage;
  }

  try {
    if (const char* env = std::getenv("FROBCHECK_BUDGET")) opts.budget = frobcheck::parse_budget(env, opts.budget);
    if (!budget.empty()) opts.budget = frobcheck::parse_budget(budget, opts.budget);
  } catch (const frobcheck::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return frobcheck::kExitUsage;
  }

  std::string script;
  if (*fedder) {
    script = preamble(common) + "check fedder Q e=" + std::to_string(e) + "\n";
  } else if (*fpure) {
    script = preamble(common) + (finite_pd ? "assert-finite-pd Q\n" : "") + "check fpure Q e=" + std::to_string(e) +
             "\n";
  } else if (*sfr) {
    script = preamble(common) + prime_lines(primes, {}, 0, {}, false) + "check sfr Q tests=(" + tests + ")\n";
  } else if (*symbolic) {
    script = preamble(common) + prime_lines(primes, separators, 0, {}, bundle) + "symbolic Q n=" +
             std::to_string(n) + "\n";
  } else if (*containment) {
    script = preamble(common) + prime_lines(primes, separators, local, assertions, bundle) + "check " + tag +
             " Q n=" + std::to_string(n);
    if (tag == "symbolic-into-ie") script += " e=" + std::to_string(e);
    if (tag == "fpt-containment") script += " floor=" + floor;
    if (!expect.empty()) script += " expect=" + expect;
    script += "\n";
  } else if (*fpt) {
    script = preamble(common) + "check fpt Q\n";
  } else if (*example) {
    script = "example " + example_id;
    for (const auto& p : params) script += " " + p;
    script += "\n";
  } else if (*selftest) {
    script = kSelftest;
  } else if (*run) {
    std::ifstream in(script_path);
    Session session(opts);
    return session.run(in, std::cout, std::cerr);
  }
  return run_text(script, opts);
}
