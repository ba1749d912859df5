#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frobcheck/quotient.hpp"

namespace frobcheck {

/// Hypotheses stated by whoever supplies the prime data. None of them is
/// computed; reports show them as asserted.
struct Assertions {
  bool radical = false;
  bool finite_pd = false;
  bool fpure_quotient = false;
  bool sfr_quotient = false;
};

/// One associated prime (or, when `bundle` is set, the radical ideal of
/// several primes of equal height given together).
struct PrimeComponent {
  QuotientIdeal prime;
  unsigned height = 0;
  bool height_computed = false;
  /// Lies in every other listed component and in every embedded prime of the
  /// powers, but outside this component.
  std::optional<Polynomial> separator;
  bool bundle = false;
};

struct PrimeData {
  std::vector<PrimeComponent> components;
  Assertions assertions;
  /// Upper bound for the minimal number of generators of Q at its
  /// associated primes; defaults to the big height when absent.
  std::optional<unsigned> local_generators;
};

/// Input description for make_prime_data.
struct PrimeSpec {
  std::vector<Polynomial> generators;
  std::optional<Polynomial> separator;
  std::optional<unsigned> height;
  bool bundle = false;
};

/// Builds prime data and checks every separator: s_i outside component i
/// (for bundles: (P_i : s_i) = P_i) and inside every other component.
/// Missing heights are computed as dim R - dim R/P.
PrimeData make_prime_data(const AmbientRing& R, const std::vector<PrimeSpec>& specs, Assertions assertions = {},
                          std::optional<unsigned> local_generators = std::nullopt);

/// Minimal primes of a squarefree monomial ideal (minimal vertex covers) with
/// separators and exact heights. Throws InvalidArgument for other inputs.
PrimeData monomial_prime_data(const QuotientIdeal& Q);

bool is_squarefree_monomial(const std::vector<Polynomial>& gens);

/// Maximum height over the components. Throws on empty data.
unsigned big_height(const PrimeData& pd);

/// local_generators when set, else the big height.
unsigned local_generator_bound(const PrimeData& pd);

enum class SymbolicStrategy { SaturateBySeparator, IntersectMinimalPrimes, MonomialCombinatorial };

std::string to_string(SymbolicStrategy s);

struct SymbolicPower {
  QuotientIdeal ideal;
  /// Stabilization exponent of each saturation, in component order.
  std::vector<unsigned> saturation_exponents;
};

/// Q^(n) relative to the prime data. Checks Q^n inside the result.
SymbolicPower symbolic_power(const QuotientIdeal& Q, unsigned n, const PrimeData& pd,
                             SymbolicStrategy strategy = SymbolicStrategy::SaturateBySeparator);

/// Preferred strategy for the input: combinatorial for squarefree monomial
/// ideals of a polynomial ring, saturation otherwise.
SymbolicStrategy default_strategy(const QuotientIdeal& Q);

/// Partial derivatives of the equation (plus the equation); unit ideal for a
/// polynomial ring.
QuotientIdeal jacobian_ideal(const AmbientRing& R);

/// J^a Q_sym; a = 0 gives Q_sym.
QuotientIdeal jacobian_power_product(const QuotientIdeal& J, unsigned a, const QuotientIdeal& Q_sym);

/// A separator for a prime (or unmixed radical) ideal I of height c in a
/// polynomial ring: an element of the c x c Jacobian minors ideal that is a
/// nonzerodivisor modulo I. Prefers a variable when I + minors is primary to
/// the maximal ideal. Returns nullopt when no candidate works.
std::optional<Polynomial> singular_locus_separator(const Ideal& I, unsigned codim, std::mt19937_64& rng,
                                                   std::vector<std::string>* notes = nullptr);

}  // namespace frobcheck
