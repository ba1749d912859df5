#include "frobcheck/registry.hpp"

#include <chrono>
#include <random>

#include "frobcheck/ideal_algebra.hpp"
#include "frobcheck/parse.hpp"

namespace frobcheck {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr unsigned kMaxDraws = 10;

std::vector<std::int64_t> values(const ExampleParams& given, const ExampleParams& defaults, const std::string& key) {
  auto it = given.find(key);
  if (it != given.end()) return it->second;
  auto d = defaults.find(key);
  return d == defaults.end() ? std::vector<std::int64_t>{} : d->second;
}

void check_keys(const ExampleParams& given, const ExampleParams& defaults, const std::string& id) {
  for (const auto& [key, vals] : given) {
    if (!defaults.count(key)) throw InvalidArgument("example " + id + " has no parameter " + key);
    for (auto v : vals)
      if (v < 0) throw InvalidArgument("parameter " + key + " must be nonnegative");
  }
}

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// A = B as two containments; the witness comes from whichever side fails.
ContainmentReport equality_report(std::string tag, ordered_json params, const QuotientIdeal& A,
                                  const QuotientIdeal& B) {
  ContainmentReport r = compare_ideals(tag, params, A, B);
  if (r.verdict == ReportVerdict::Holds) {
    ContainmentReport back = compare_ideals(tag, params, B, A);
    if (back.verdict == ReportVerdict::Fails) {
      back.diagnostics["failing_direction"] = "right in left";
      return back;
    }
  } else {
    r.diagnostics["failing_direction"] = "left in right";
  }
  return r;
}

void run_xy_zk(Coeff p, unsigned k, unsigned n, std::vector<ContainmentReport>& out) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (p % k == 0) throw InvalidArgument("p must not divide k");
  AmbientRing R = xy_zk_ring(p, k);
  const Ring& ring = R.ring();
  QuotientIdeal Q = xy_zk_line(R);
  PrimeData pd = xy_zk_line_data(R);
  Polynomial x = Polynomial::variable(ring, "x");
  Polynomial y = Polynomial::variable(ring, "y");
  Polynomial z = Polynomial::variable(ring, "z");
  auto params = [&] {
    ordered_json j;
    j["p"] = p;
    j["k"] = k;
    j["n"] = n;
    return j;
  };

  auto start = Clock::now();
  QuotientIdeal sym_kn = symbolic_power(Q, k * n, pd).ideal;
  ContainmentReport value = equality_report("symbolic-power-value", params(), sym_kn, q_ideal(R, {x.pow(n)}));
  value.diagnostics["claim"] = "Q^(kn) = (x^n)";
  value.seconds = elapsed(start);
  out.push_back(std::move(value));

  for (unsigned r = 0; r < k; ++r) {
    start = Clock::now();
    ordered_json pr = params();
    pr["r"] = r;
    Polynomial w = x.pow(n + r);
    bool in_symbolic = symbolic_power(Q, k * n + r, pd).ideal.contains(w);
    bool in_ordinary = q_power(Q, k * n + r).contains(w);
    ContainmentReport rep;
    rep.theorem_tag = "symbolic-ladder";
    rep.params = pr;
    rep.verdict = in_symbolic && !in_ordinary ? ReportVerdict::Holds : ReportVerdict::Fails;
    if (rep.verdict == ReportVerdict::Fails) rep.witness = w;
    rep.diagnostics["claim"] = "x^(n+r) in Q^(kn+r) and not in Q^(kn+r)";
    rep.diagnostics["in_symbolic_power"] = in_symbolic;
    rep.diagnostics["in_ordinary_power"] = in_ordinary;
    rep.diagnostics["in_Q^kn"] = q_power(Q, k * n).contains(w);
    rep.seconds = elapsed(start);
    out.push_back(std::move(rep));
  }

  start = Clock::now();
  QuotientIdeal J = jacobian_ideal(R);
  QuotientIdeal Q_kn = q_power(Q, k * n);
  ContainmentReport repair =
      compare_ideals("jacobian-repair", params(), jacobian_power_product(J, (k - 1) * n, sym_kn), Q_kn);
  repair.diagnostics["claim"] = "J^((k-1)n) Q^(kn) in Q^kn";
  repair.diagnostics["jacobian_is_x_y_z^(k-1)"] = q_equal(J, q_ideal(R, {x, y, z.pow(k - 1)}));
  repair.seconds = elapsed(start);
  out.push_back(std::move(repair));

  start = Clock::now();
  ContainmentReport sharp;
  sharp.theorem_tag = "jacobian-sharpness";
  sharp.params = params();
  sharp.diagnostics["claim"] = "z^((k-1)n-1) x^n not in Q^kn";
  if ((k - 1) * n < 2) {
    sharp.verdict = ReportVerdict::Skipped;
    sharp.expected = ReportVerdict::Skipped;
    sharp.reason = "needs (k-1)n >= 2";
  } else {
    Polynomial w = z.pow((k - 1) * n - 1) * x.pow(n);
    bool inside = Q_kn.contains(w);
    sharp.verdict = inside ? ReportVerdict::Fails : ReportVerdict::Holds;
    if (inside) sharp.witness = w;
  }
  sharp.seconds = elapsed(start);
  out.push_back(std::move(sharp));
}

void run_determinantal(Coeff p, unsigned n, unsigned d, std::uint64_t seed, const std::vector<std::int64_t>& js,
                       std::vector<ContainmentReport>& out) {
  if (d < n + 1) throw InvalidArgument("d must be at least n + 1");
  auto start = Clock::now();
  DeterminantalInstance inst = generic_determinantal(p, n, d, seed);
  double setup = elapsed(start);
  std::vector<std::int64_t> exps = js;
  if (exps.empty()) exps = d > n + 1 ? std::vector<std::int64_t>{2, 3} : std::vector<std::int64_t>{n};
  for (auto j : exps) {
    if (j < 1) throw InvalidArgument("j must be at least 1");
    start = Clock::now();
    unsigned jj = static_cast<unsigned>(j);
    ordered_json params;
    params["p"] = p;
    params["n"] = n;
    params["d"] = d;
    params["seed"] = seed;
    params["j"] = jj;
    SymbolicPower sp = symbolic_power(inst.ideal, jj, inst.primes);
    // Q^j inside Q^(j) is checked by symbolic_power, so this decides equality.
    ContainmentReport rep = compare_ideals("symbolic-equals-power", params, sp.ideal, q_power(inst.ideal, jj));
    rep.expected = d > n + 1 || jj < n ? ReportVerdict::Holds : ReportVerdict::Fails;
    rep.diagnostics["claim"] = "I^(j) = I^j";
    rep.diagnostics["redraws"] = inst.redraws;
    rep.diagnostics["separator"] = inst.primes.components[0].separator->to_string();
    rep.diagnostics["saturation_exponents"] = sp.saturation_exponents;
    rep.diagnostics["notes"] = inst.notes;
    rep.seconds = elapsed(start) + setup;
    out.push_back(std::move(rep));
  }
}

}  // namespace

const std::vector<ExampleInfo>& example_registry() {
  static const std::vector<ExampleInfo> registry = {
      {"xy-zk", "Q = (x, z) in F_p[x,y,z]/(xy - z^k): symbolic ladder and Jacobian repair",
       {{"p", {5, 7}}, {"k", {2, 3}}, {"n", {1, 2}}}},
      {"generic-determinantal", "maximal minors of a random n x (n+1) matrix of linear forms in d variables",
       {{"p", {101}}, {"n", {2}}, {"d", {6}}, {"seed", {}}, {"j", {}}}},
  };
  return registry;
}

std::vector<ContainmentReport> run_example(const std::string& id, const ExampleParams& params, std::uint64_t seed) {
  const ExampleInfo* info = nullptr;
  for (const auto& e : example_registry())
    if (e.id == id) info = &e;
  if (!info) throw InvalidArgument("unknown example " + id);
  check_keys(params, info->defaults, id);
  std::vector<ContainmentReport> out;
  if (id == "xy-zk") {
    for (auto p : values(params, info->defaults, "p"))
      for (auto k : values(params, info->defaults, "k"))
        for (auto n : values(params, info->defaults, "n"))
          run_xy_zk(static_cast<Coeff>(p), static_cast<unsigned>(k), static_cast<unsigned>(n), out);
  } else {
    std::vector<std::int64_t> seeds = values(params, info->defaults, "seed");
    if (seeds.empty())
      for (std::uint64_t s = 0; s < 5; ++s) seeds.push_back(static_cast<std::int64_t>(seed + s));
    for (auto p : values(params, info->defaults, "p"))
      for (auto n : values(params, info->defaults, "n"))
        for (auto d : values(params, info->defaults, "d"))
          for (auto s : seeds)
            run_determinantal(static_cast<Coeff>(p), static_cast<unsigned>(n), static_cast<unsigned>(d),
                              static_cast<std::uint64_t>(s), values(params, info->defaults, "j"), out);
  }
  return out;
}

AmbientRing xy_zk_ring(Coeff p, unsigned k) {
  Ring ring = make_ring(p, {"x", "y", "z"});
  return AmbientRing::hypersurface(parse_poly(ring, "x*y - z^" + std::to_string(k)));
}

QuotientIdeal xy_zk_line(const AmbientRing& R) {
  return q_ideal(R, {Polynomial::variable(R.ring(), "x"), Polynomial::variable(R.ring(), "z")});
}

PrimeData xy_zk_line_data(const AmbientRing& R) {
  const Ring& ring = R.ring();
  Assertions a;
  a.radical = true;
  a.fpure_quotient = true;
  a.sfr_quotient = true;
  PrimeSpec spec{{Polynomial::variable(ring, "x"), Polynomial::variable(ring, "z")},
                 Polynomial::variable(ring, "y"),
                 std::nullopt,
                 false};
  return make_prime_data(R, {spec}, a, 2);
}

std::vector<AmbientRing> registry_hypersurfaces() {
  std::vector<AmbientRing> out;
  for (Coeff p : {5u, 7u})
    for (unsigned k : {2u, 3u}) out.push_back(xy_zk_ring(p, k));
  return out;
}

DeterminantalInstance generic_determinantal(Coeff p, unsigned n, unsigned d, std::uint64_t seed) {
  if (n < 1 || d < 2) throw InvalidArgument("need n >= 1 and d >= 2");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
  Ring ring = make_ring(p, names);
  AmbientRing R = AmbientRing::regular(ring);
  std::mt19937_64 rng(seed);
  std::vector<std::string> notes;
  for (unsigned draw = 0; draw < kMaxDraws; ++draw) {
    PolyMatrix M(ring, n, n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= n; ++j) {
        Polynomial form(ring);
        for (std::size_t v = 0; v < d; ++v)
          form += Polynomial::variable(ring, v).scaled(static_cast<Coeff>(rng() % p));
        M.set(i, j, std::move(form));
      }
    Ideal I = minors(M, n);
    if (krull_dimension(I) != static_cast<int>(d) - 2) {
      notes.push_back("draw " + std::to_string(draw) + " has the wrong dimension; redrawing");
      continue;
    }
    auto s = singular_locus_separator(I, 2, rng, &notes);
    if (!s) {
      notes.push_back("draw " + std::to_string(draw) + " has no separator; redrawing");
      continue;
    }
    Assertions a;
    a.radical = true;
    a.finite_pd = true;
    PrimeData pd = make_prime_data(R, {{I.generators(), s, 2u, true}}, a);
    return {q_ideal(R, I.generators()), std::move(pd), draw, std::move(notes)};
  }
  throw InternalError("no nondegenerate draw after " + std::to_string(kMaxDraws) + " attempts");
}

}  // namespace frobcheck
