#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "frobcheck/symbolic.hpp"

namespace frobcheck {

enum class ReportVerdict { Holds, Fails, Skipped };

std::string to_string(ReportVerdict v);

/// Outcome of one containment (or non-containment) check.
struct ContainmentReport {
  std::string theorem_tag;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  ReportVerdict verdict = ReportVerdict::Holds;
  /// Set whenever the verdict is Fails: in the left ideal, not in the right.
  std::optional<Polynomial> witness;
  /// Why a check was skipped.
  std::string reason;
  /// Computed values worth showing on the text line (e.g. nu_e), if any.
  std::string summary;
  ReportVerdict expected = ReportVerdict::Holds;
  nlohmann::ordered_json diagnostics = nlohmann::ordered_json::object();
  double seconds = 0;

  bool matches_expectation() const { return verdict == expected; }
  /// Field order is fixed; timings only when asked for, so equal inputs give
  /// byte-identical output.
  nlohmann::ordered_json to_json(bool include_timings = false) const;
  /// One line: tag, params, verdict, witness, expectation.
  std::string to_text(bool include_timings = false) const;
};

/// Compares left and right exactly. On failure the witness is re-checked by
/// membership in both ideals and, when the system is small enough, by the
/// brute-force oracle; the outcome is stored under diagnostics.witness_check.
ContainmentReport compare_ideals(std::string tag, nlohmann::ordered_json params, const QuotientIdeal& left,
                                 const QuotientIdeal& right);

/// Q^(hn-h+1) in Q^n, or J^n Q^(hn-h+1) in Q^n with use_jacobian, where h is
/// the big height. F-purity of R/Q must be asserted or machine-confirmed;
/// without the Jacobian factor a hypersurface needs asserted finite pd.
ContainmentReport check_fpure_containment(const QuotientIdeal& Q, const PrimeData& pd, unsigned n,
                                          bool use_jacobian = false);

/// Q^((h-1)(n-1)+1) in Q^n, or J^(2n-2) Q^((h-1)(n-1)+1) in Q^n. Needs
/// asserted strong F-regularity and h >= 2; the Jacobian form takes h as the
/// larger of the big height and the local generator bound. For h = 2 without
/// the Jacobian factor the report also records the equality Q^(n) = Q^n.
ContainmentReport check_sfr_containment(const QuotientIdeal& Q, const PrimeData& pd, unsigned n,
                                        bool use_jacobian = false);

/// I^(hn - floor) in I^n over a polynomial ring; J^n I^(hn - floor) in I^n
/// over a hypersurface (h is then the local generator bound). Without an
/// explicit floor, floor(nu_e / p^e) for e <= e_max is used.
ContainmentReport check_fpt_containment(const QuotientIdeal& I, const PrimeData& pd, unsigned n,
                                        std::optional<unsigned> fpt_floor = std::nullopt, unsigned e_max = 2);

/// Q^(q(h+n-1)-h+1) in I_e(Q^(n)) with h the local generator bound.
ContainmentReport check_symbolic_into_Ie(const QuotientIdeal& Q, const PrimeData& pd, unsigned n, unsigned e);

/// Strategy used by the checks: combinatorial for squarefree monomial data,
/// saturation when every component has a separator, intersection of prime
/// powers for linear primes of a polynomial ring.
SymbolicStrategy choose_strategy(const QuotientIdeal& Q, const PrimeData& pd);

}  // namespace frobcheck
