#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "frobcheck/ring.hpp"

namespace frobcheck {

struct Term {
  Monomial monomial;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial over F_p in canonical form: terms strictly descending in the
/// ring's order, no zero coefficients. Equality is structural.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  static Polynomial constant(Ring ring, std::int64_t c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial variable(Ring ring, const std::string& name);
  static Polynomial term(Ring ring, const Monomial& m, Coeff c);
  /// Adopts terms that are already canonical (strictly descending, nonzero).
  static Polynomial from_canonical_terms(Ring ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].monomial.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Leading data; the polynomial must be nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  std::uint64_t total_degree() const;
  bool is_homogeneous() const;
  /// Bit i set when variable i occurs.
  std::uint32_t support_mask() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;
  /// Repeated squaring.
  Polynomial pow(std::uint64_t n) const;
  /// f^(p^e) computed term-wise through the Frobenius endomorphism.
  Polynomial frobenius_power(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial derivative(const std::string& var) const { return derivative(ring_.index_of(var)); }
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  /// this -= c * m * g, in place. Used by the reduction loops.
  void subtract_multiple(Coeff c, const Monomial& m, const Polynomial& g);

  /// Rewrites into another ring: variable i of this ring becomes variable
  /// index_map[i] of the target.
  Polynomial map_to(const Ring& target, std::span<const std::size_t> index_map) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_ && a.ring_ == b.ring_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void check_ring(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch();
  }

  Ring ring_;
  std::vector<Term> terms_;
};

std::string format_monomial(const Ring& ring, const Monomial& m);

/// q = p^e with overflow checking (throws ExponentOverflow).
std::uint64_t frobenius_exponent(Coeff p, unsigned e);

/// Exact quotient a / g. Throws InternalError when g does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& g);

}  // namespace frobcheck
