#pragma once

#include <string>
#include <vector>

#include "frobcheck/ideal.hpp"

namespace frobcheck {

Ideal ideal_sum(const Ideal& I, const Ideal& J);
/// Pairwise products of generators (made monic, exact duplicates removed).
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// I^0 is the unit ideal.
Ideal ideal_power(const Ideal& I, unsigned n);
/// I^[p^e]: the p^e-th power of every generator.
Ideal bracket_power(const Ideal& I, unsigned e);

/// I ∩ J by eliminating t from t*I + (1-t)*J.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

/// (I : g) = (I ∩ (g)) / g. Throws InvalidArgument for g = 0.
Ideal ideal_colon(const Ideal& I, const Polynomial& g);
/// (I : J) = intersection of (I : g) over the generators of J. J must be nonzero.
Ideal ideal_colon(const Ideal& I, const Ideal& J);

struct Saturation {
  Ideal ideal;
  /// Smallest s with (I : f^s) = (I : f^(s+1)).
  unsigned exponent;
};

/// (I : f^∞) by iterated colon. Throws InvalidArgument for f = 0 and
/// BudgetExceeded when `max_steps` colons do not stabilize.
Saturation saturate(const Ideal& I, const Polynomial& f, unsigned max_steps = 64);
Saturation saturate(const Ideal& I, const Ideal& J, unsigned max_steps = 64);

/// I ∩ k[remaining variables], expressed in the original ring.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars);

/// Krull dimension of S/I read off the leading monomials; -1 for the unit ideal.
int krull_dimension(const Ideal& I);

/// Rectangular grid of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  PolyMatrix(Ring ring, std::vector<std::vector<Polynomial>> entries);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Polynomial p);

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Ideal of all size x size minors (Laplace expansion, memoized over column
/// subsets). Requires size <= min(rows, cols).
Ideal minors(const PolyMatrix& M, std::size_t size);

/// Jacobian matrix (one row per polynomial, one column per variable).
PolyMatrix jacobian_matrix(const std::vector<Polynomial>& polys);

struct OracleOptions {
  /// Cap on unknowns * equations in the dense linear system.
  std::size_t max_entries = 16'000'000;
};

/// Decides whether f = sum h_i g_i has a solution with deg h_i <= bound by
/// dense Gaussian elimination over F_p. Independent of the Groebner code.
/// `false` only means that no certificate exists at this bound.
bool brute_membership_oracle(const Polynomial& f, const Ideal& I, unsigned cofactor_degree_bound,
                             const OracleOptions& options = {});

/// Minimal monomial generators of a monomial ideal (divisibility pruning).
std::vector<Monomial> minimal_monomials(std::vector<Monomial> mons);
/// Intersection of monomial ideals by pairwise lcm.
std::vector<Monomial> monomial_intersect(const std::vector<Monomial>& a, const std::vector<Monomial>& b);
std::vector<Monomial> monomial_power(const std::vector<Monomial>& gens, unsigned n);
Ideal monomial_ideal(const Ring& ring, const std::vector<Monomial>& mons, GroebnerOptions options = {});
/// Leading monomials of the generators; requires a monomial ideal.
std::vector<Monomial> monomials_of(const Ideal& I);

/// Canonical total order on polynomials (used to sort/dedupe generator lists).
bool poly_less(const Polynomial& a, const Polynomial& b);

}  // namespace frobcheck
