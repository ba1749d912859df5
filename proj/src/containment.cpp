#include "frobcheck/containment.hpp"

#include <chrono>
#include <sstream>

#include "frobcheck/frobenius.hpp"
#include "frobcheck/ideal_algebra.hpp"

namespace frobcheck {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Keeps the witness oracle to a few seconds at most.
constexpr std::size_t kWitnessOracleEntries = 4'000'000;

bool all_homogeneous(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (!g.is_homogeneous()) return false;
  return true;
}

// The oracle can only ever find a membership certificate. For homogeneous
// data a certificate of degree deg w exists whenever w is a member, so a
// negative answer is then a proof of non-membership.
std::string check_witness(const Polynomial& w, const QuotientIdeal& left, const QuotientIdeal& right) {
  if (!left.contains(w)) throw InternalError("witness " + w.to_string() + " is not in the left ideal");
  if (right.contains(w)) throw InternalError("witness " + w.to_string() + " lies in the right ideal");
  const auto& gens = right.preimage().generators();
  unsigned bound = w.total_degree();
  bool found = false;
  try {
    found = brute_membership_oracle(w, right.preimage(), bound, {kWitnessOracleEntries});
  } catch (const BudgetExceeded&) {
    return "groebner only (oracle system too large)";
  }
  if (found) throw InternalError("oracle finds a certificate for witness " + w.to_string());
  if (w.is_homogeneous() && all_homogeneous(gens)) return "groebner and oracle";
  return "groebner; no oracle certificate up to degree " + std::to_string(bound);
}

ordered_json ideal_sizes(const QuotientIdeal& Q) {
  ordered_json j;
  j["generators"] = Q.generators().size();
  j["groebner_basis"] = Q.preimage().groebner().size();
  return j;
}

// Symbolic power plus its saturation exponents recorded in the diagnostics.
QuotientIdeal symbolic(const QuotientIdeal& Q, unsigned m, const PrimeData& pd, ordered_json& diag,
                       const std::string& key) {
  SymbolicStrategy s = choose_strategy(Q, pd);
  SymbolicPower sp = symbolic_power(Q, m, pd, s);
  diag[key + "_strategy"] = to_string(s);
  if (!sp.saturation_exponents.empty()) diag[key + "_saturation_exponents"] = sp.saturation_exponents;
  return sp.ideal;
}

// Records whether R/Q F-purity was asserted or confirmed by a criterion.
// Throws when neither is the case.
void require_fpure(const QuotientIdeal& Q, const PrimeData& pd, ordered_json& diag) {
  if (pd.assertions.fpure_quotient) {
    diag["fpure_quotient"] = "asserted";
    return;
  }
  CriterionVerdict v = Q.ambient().is_hypersurface()
                           ? is_fpure_quotient(Q, 1, pd.assertions.finite_pd)
                           : fedder_is_fpure(Q.preimage(), 1);
  if (!v.confirmed()) throw InvalidArgument("missing assertion: R/Q F-pure (criterion " + to_string(v.status) + ")");
  diag["fpure_quotient"] = "machine-checked";
}

ordered_json base_params(const QuotientIdeal& Q, unsigned n) {
  ordered_json p;
  p["ring"] = Q.ambient().describe();
  p["Q"] = Q.to_string();
  p["n"] = n;
  return p;
}

ContainmentReport finish(ContainmentReport r, ordered_json diag, Clock::time_point start) {
  for (auto& [key, value] : diag.items()) r.diagnostics[key] = value;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace

std::string to_string(ReportVerdict v) {
  switch (v) {
    case ReportVerdict::Holds:
      return "holds";
    case ReportVerdict::Fails:
      return "fails";
    case ReportVerdict::Skipped:
      return "skipped";
  }
  return "holds";
}

ordered_json ContainmentReport::to_json(bool include_timings) const {
  ordered_json j;
  j["theorem_tag"] = theorem_tag;
  j["params"] = params;
  j["verdict"] = to_string(verdict);
  j["witness"] = witness ? ordered_json(witness->to_string()) : ordered_json(nullptr);
  if (verdict == ReportVerdict::Skipped) j["reason"] = reason;
  if (!summary.empty()) j["summary"] = summary;
  j["expected"] = to_string(expected);
  j["matches_expectation"] = matches_expectation();
  j["diagnostics"] = diagnostics;
  if (include_timings) j["seconds"] = seconds;
  return j;
}

std::string ContainmentReport::to_text(bool include_timings) const {
  std::ostringstream out;
  out << theorem_tag;
  for (const auto& [key, value] : params.items())
    out << ' ' << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
  out << ": " << to_string(verdict);
  if (witness) out << " witness " << witness->to_string();
  if (verdict == ReportVerdict::Skipped) out << " (" << reason << ")";
  if (!summary.empty()) out << "; " << summary;
  if (!matches_expectation()) out << " [expected " << to_string(expected) << "]";
  if (include_timings) out << " " << seconds << "s";
  return out.str();
}

SymbolicStrategy choose_strategy(const QuotientIdeal& Q, const PrimeData& pd) {
  if (pd.components.empty()) throw InvalidArgument("no prime data");
  if (default_strategy(Q) == SymbolicStrategy::MonomialCombinatorial) {
    bool monomial = true;
    for (const auto& c : pd.components) monomial = monomial && is_squarefree_monomial(c.prime.generators());
    if (monomial) return SymbolicStrategy::MonomialCombinatorial;
  }
  bool separated = true;
  for (const auto& c : pd.components) separated = separated && c.separator.has_value();
  if (separated) return SymbolicStrategy::SaturateBySeparator;
  return SymbolicStrategy::IntersectMinimalPrimes;
}

ContainmentReport compare_ideals(std::string tag, ordered_json params, const QuotientIdeal& left,
                                 const QuotientIdeal& right) {
  ContainmentReport r;
  r.theorem_tag = std::move(tag);
  r.params = std::move(params);
  SubsetResult sub = q_subset(left, right);
  r.diagnostics["left"] = ideal_sizes(left);
  r.diagnostics["right"] = ideal_sizes(right);
  if (sub.holds) {
    r.verdict = ReportVerdict::Holds;
  } else {
    r.verdict = ReportVerdict::Fails;
    r.witness = sub.witness;
    r.diagnostics["witness_check"] = check_witness(*sub.witness, left, right);
  }
  return r;
}

ContainmentReport check_fpure_containment(const QuotientIdeal& Q, const PrimeData& pd, unsigned n,
                                          bool use_jacobian) {
  auto start = Clock::now();
  if (n == 0) throw InvalidArgument("n must be at least 1");
  if (!Q.is_proper()) throw InvalidArgument("Q must be proper");
  const AmbientRing& R = Q.ambient();
  if (!use_jacobian && R.is_hypersurface() && !pd.assertions.finite_pd)
    throw InvalidArgument("missing assertion: finite projective dimension");
  ordered_json diag;
  require_fpure(Q, pd, diag);
  unsigned h = big_height(pd);
  unsigned exponent = h * n - h + 1;
  ordered_json params = base_params(Q, n);
  params["h"] = h;
  params["symbolic_exponent"] = exponent;
  QuotientIdeal left = symbolic(Q, exponent, pd, diag, "symbolic");
  if (use_jacobian) {
    params["jacobian_exponent"] = n;
    left = jacobian_power_product(jacobian_ideal(R), n, left);
  }
  ContainmentReport r =
      compare_ideals(use_jacobian ? "jacobian-fpure" : "fpure-containment", params, left, q_power(Q, n));
  return finish(std::move(r), diag, start);
}

ContainmentReport check_sfr_containment(const QuotientIdeal& Q, const PrimeData& pd, unsigned n,
                                        bool use_jacobian) {
  auto start = Clock::now();
  if (n == 0) throw InvalidArgument("n must be at least 1");
  if (!Q.is_proper()) throw InvalidArgument("Q must be proper");
  if (!pd.assertions.sfr_quotient) throw InvalidArgument("missing assertion: R/Q strongly F-regular");
  const AmbientRing& R = Q.ambient();
  if (!use_jacobian && R.is_hypersurface() && !pd.assertions.finite_pd)
    throw InvalidArgument("missing assertion: finite projective dimension");
  unsigned h = big_height(pd);
  if (use_jacobian) h = std::max(h, local_generator_bound(pd));
  if (h < 2) throw InvalidArgument("h must be at least 2");
  unsigned exponent = (h - 1) * (n - 1) + 1;
  ordered_json diag;
  diag["sfr_quotient"] = "asserted";
  ordered_json params = base_params(Q, n);
  params["h"] = h;
  params["symbolic_exponent"] = exponent;
  QuotientIdeal left = symbolic(Q, exponent, pd, diag, "symbolic");
  if (use_jacobian) {
    params["jacobian_exponent"] = 2 * n - 2;
    left = jacobian_power_product(jacobian_ideal(R), 2 * n - 2, left);
  }
  ContainmentReport r =
      compare_ideals(use_jacobian ? "jacobian-sfr" : "sfr-containment", params, left, q_power(Q, n));
  // symbolic_power already checked Q^n inside Q^(n).
  if (!use_jacobian && h == 2) diag["symbolic_equals_ordinary"] = r.verdict == ReportVerdict::Holds;
  return finish(std::move(r), diag, start);
}

ContainmentReport check_fpt_containment(const QuotientIdeal& I, const PrimeData& pd, unsigned n,
                                        std::optional<unsigned> fpt_floor, unsigned e_max) {
  auto start = Clock::now();
  if (n == 0) throw InvalidArgument("n must be at least 1");
  if (!I.is_proper()) throw InvalidArgument("I must be proper");
  if (!pd.assertions.radical) throw InvalidArgument("missing assertion: I radical");
  const AmbientRing& R = I.ambient();
  const bool jacobian = R.is_hypersurface();
  unsigned h = jacobian ? std::max(big_height(pd), local_generator_bound(pd)) : big_height(pd);
  ordered_json diag;
  unsigned floor_value = 0;
  if (fpt_floor) {
    floor_value = *fpt_floor;
    diag["fpt_floor"] = "given";
  } else {
    FptEstimate est = fpt_lower_bound(I, e_max);
    floor_value = est.floor_lower_bound;
    ordered_json nus = ordered_json::array();
    for (const auto& [e, nu] : est.nu_values) nus.push_back({{"e", e}, {"nu", nu}});
    diag["fpt_floor"] = "auto";
    diag["nu_values"] = nus;
    diag["fpt_lower_bound"] = std::to_string(est.numerator) + "/" + std::to_string(est.denominator);
  }
  if (floor_value >= h * n) throw InvalidArgument("fpt floor must be below h n");
  unsigned exponent = h * n - floor_value;
  ordered_json params = base_params(I, n);
  params["h"] = h;
  params["fpt_floor"] = floor_value;
  params["symbolic_exponent"] = exponent;
  QuotientIdeal left = symbolic(I, exponent, pd, diag, "symbolic");
  if (jacobian) {
    params["jacobian_exponent"] = n;
    left = jacobian_power_product(jacobian_ideal(R), n, left);
  }
  ContainmentReport r = compare_ideals("fpt-containment", params, left, q_power(I, n));
  return finish(std::move(r), diag, start);
}

ContainmentReport check_symbolic_into_Ie(const QuotientIdeal& Q, const PrimeData& pd, unsigned n, unsigned e) {
  auto start = Clock::now();
  if (n == 0) throw InvalidArgument("n must be at least 1");
  if (e == 0) throw InvalidArgument("e must be at least 1");
  if (!Q.is_proper()) throw InvalidArgument("Q must be proper");
  unsigned h = local_generator_bound(pd);
  unsigned q = frobenius_q(Q.ring().characteristic(), e);
  unsigned exponent = q * (h + n - 1) - h + 1;
  ordered_json diag;
  ordered_json params = base_params(Q, n);
  params["e"] = e;
  params["h"] = h;
  params["symbolic_exponent"] = exponent;
  QuotientIdeal left = symbolic(Q, exponent, pd, diag, "symbolic");
  QuotientIdeal inner = symbolic(Q, n, pd, diag, "target");
  QuotientIdeal right = hypersurface_Ie(inner, e);
  ContainmentReport r = compare_ideals("symbolic-into-ie", params, left, right);
  return finish(std::move(r), diag, start);
}

}  // namespace frobcheck
