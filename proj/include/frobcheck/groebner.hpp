#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frobcheck/polynomial.hpp"

namespace frobcheck {

/// Resource caps for one Groebner computation. Exceeding one throws
/// BudgetExceeded; results are never silently truncated.
struct GroebnerOptions {
  std::size_t max_pairs = 2'000'000;
  std::size_t max_terms = 2'000'000;   // per intermediate polynomial
  std::size_t max_basis = 200'000;     // elements kept during the run
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped = 0;
};

/// Reduced Groebner basis: monic, inter-reduced, sorted ascending by leading
/// monomial in the ring's order.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, std::vector<Polynomial> elements, GroebnerStats stats = {})
      : ring_(std::move(ring)), elements_(std::move(elements)), stats_(stats) {}

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_unit(); }
  bool is_zero() const { return elements_.empty(); }
  const GroebnerStats& stats() const { return stats_; }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.ring_ == b.ring_ && a.elements_ == b.elements_;
  }

 private:
  Ring ring_;
  std::vector<Polynomial> elements_;
  GroebnerStats stats_;
};

/// Buchberger's algorithm with the Gebauer-Moeller pair criteria and sugar
/// selection. Zero inputs are ignored.
GroebnerBasis buchberger(const Ring& ring, std::span<const Polynomial> generators, const GroebnerOptions& options = {});

/// Full reduction of f by the given divisors (leading and tail terms).
/// The divisors need not form a Groebner basis.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors);

/// Unique remainder of f modulo G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger certificate: every S-polynomial of basis pairs reduces to zero
/// and the basis is reduced. Independent of how the basis was produced.
bool is_reduced_groebner_basis(const GroebnerBasis& G);

}  // namespace frobcheck
