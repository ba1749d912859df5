#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobcheck/quotient.hpp"

namespace frobcheck {

enum class VerdictStatus { Confirmed, Refuted, Inconclusive };

std::string to_string(VerdictStatus s);

/// Outcome of a one-directional criterion. Confirmed and refuted verdicts
/// carry what certifies them: a witness element, or the searched range.
struct CriterionVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  unsigned e_min = 1;
  unsigned e_max = 1;
  std::optional<Polynomial> witness;
  /// Named sub-conditions that were evaluated.
  std::map<std::string, bool> checks;
  std::vector<std::string> notes;

  bool confirmed() const { return status == VerdictStatus::Confirmed; }
};

/// Suggested largest Frobenius exponent: 3 for p <= 5, 2 for p <= 13, else 1.
unsigned default_e_max(Coeff p);

/// q = p^e as an unsigned exponent; throws ExponentOverflow.
unsigned frobenius_q(Coeff p, unsigned e);

/// r in I_e(J), decided as f^(q-1) r in J^[q] (hypersurface) or r in J^[q]
/// (regular), without computing I_e(J).
bool in_Ie(const QuotientIdeal& J, const Polynomial& r, unsigned e);

/// Preimage ((J^[q] + (f^q)) : f^(q-1)) in a hypersurface, J^[q] in a
/// regular ring.
QuotientIdeal hypersurface_Ie(const QuotientIdeal& J, unsigned e);

/// Classical criterion over a polynomial ring: S/I is F-pure iff
/// (I^[q] : I) is not inside m^[q]. `I` must be proper and inside m.
CriterionVerdict fedder_is_fpure(const Ideal& I, unsigned e = 1);

/// F-purity of R/Q for a hypersurface or polynomial ring R. Evaluates
///   first:  (Q^[q] : Q) not inside I_e(m)
///   second: (I_e(Q) : Q) not inside I_e(m)
/// and confirms when either holds. Refutes only when `finite_pd` is asserted.
CriterionVerdict is_fpure_quotient(const QuotientIdeal& Q, unsigned e = 1, bool finite_pd = false);

/// For each test element c, searches e = 1..e_max for c (Q^[q] : Q) (then
/// c (I_e(Q) : Q)) not inside I_e(m). Confirmed when every c succeeds; this is
/// evidence at the supplied c only. Each c must avoid the listed primes.
CriterionVerdict sfr_witness_search(const QuotientIdeal& Q, const std::vector<Polynomial>& test_elements,
                                    unsigned e_max, const std::vector<Ideal>& minimal_primes = {});

/// Largest r with I^r not inside I_e(m); -1 when 1 is already in I_e(m).
/// I must be proper, nonzero and inside m.
int nu_e(const QuotientIdeal& I, unsigned e);

struct FptEstimate {
  /// (e, nu_e) for e = 1..e_max.
  std::vector<std::pair<unsigned, unsigned>> nu_values;
  /// max nu_e / p^e as a fraction.
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  unsigned floor_lower_bound = 0;
  /// nu_(e+1) >= p nu_e held for every computed pair.
  bool superadditive = true;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

FptEstimate fpt_lower_bound(const QuotientIdeal& I, unsigned e_max);

}  // namespace frobcheck
