#pragma once

#include <optional>
#include <vector>

#include "frobcheck/ideal.hpp"

namespace frobcheck {

/// The ring everything lives in: a polynomial ring S, or a hypersurface
/// S/(f). Ideals of a hypersurface are handled through their preimages in S.
class AmbientRing {
 public:
  static AmbientRing regular(Ring ring, GroebnerOptions options = {});
  /// Throws InvalidArgument when f is zero or a constant.
  static AmbientRing hypersurface(Polynomial f, GroebnerOptions options = {});

  const Ring& ring() const { return ring_; }
  bool is_hypersurface() const { return f_.has_value(); }
  /// Defining equation; requires is_hypersurface().
  const Polynomial& equation() const { return *f_; }
  const GroebnerOptions& options() const { return options_; }
  AmbientRing with_options(GroebnerOptions options) const;

  /// "F5[x,y,z]" or "F5[x,y,z]/(4*z^2 + x*y)".
  std::string describe() const;

 private:
  AmbientRing(Ring ring, std::optional<Polynomial> f, GroebnerOptions options)
      : ring_(std::move(ring)), f_(std::move(f)), options_(options) {}

  Ring ring_;
  std::optional<Polynomial> f_;
  GroebnerOptions options_;
};

/// Ideal of an AmbientRing. The preimage always contains the defining
/// equation; the preferred generators (without it) are what powers and
/// bracket powers are taken of.
class QuotientIdeal {
 public:
  QuotientIdeal(AmbientRing ambient, std::vector<Polynomial> generators);

  const AmbientRing& ambient() const { return ambient_; }
  const Ring& ring() const { return ambient_.ring(); }
  const std::vector<Polynomial>& generators() const { return preferred_; }
  const Ideal& preimage() const { return preimage_; }

  bool contains(const Polynomial& g) const { return preimage_.contains(g); }
  bool is_unit() const { return preimage_.is_unit(); }
  bool is_proper() const { return !preimage_.is_unit(); }
  /// Zero in the quotient, i.e. preimage equals (f).
  bool is_zero() const;

  std::string to_string() const;

 private:
  AmbientRing ambient_;
  std::vector<Polynomial> preferred_;
  Ideal preimage_;
};

QuotientIdeal q_ideal(const AmbientRing& R, std::vector<Polynomial> gens);
QuotientIdeal q_from_preimage(const AmbientRing& R, const Ideal& preimage);
QuotientIdeal q_zero(const AmbientRing& R);
QuotientIdeal q_unit(const AmbientRing& R);
/// The ideal of all variables.
QuotientIdeal q_maximal(const AmbientRing& R);

QuotientIdeal q_sum(const QuotientIdeal& A, const QuotientIdeal& B);
QuotientIdeal q_product(const QuotientIdeal& A, const QuotientIdeal& B);
QuotientIdeal q_power(const QuotientIdeal& Q, unsigned n);
QuotientIdeal q_bracket(const QuotientIdeal& Q, unsigned e);
/// Colon in R computed on preimages. Colon by the zero ideal is the unit ideal.
QuotientIdeal q_colon(const QuotientIdeal& A, const QuotientIdeal& B);
QuotientIdeal q_colon(const QuotientIdeal& A, const Polynomial& g);
QuotientIdeal q_intersect(const QuotientIdeal& A, const QuotientIdeal& B);

SubsetResult q_subset(const QuotientIdeal& A, const QuotientIdeal& B);
bool q_equal(const QuotientIdeal& A, const QuotientIdeal& B);

}  // namespace frobcheck
