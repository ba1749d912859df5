#include "frobcheck/quotient.hpp"

#include "frobcheck/ideal_algebra.hpp"
#include "frobcheck/parse.hpp"

namespace frobcheck {

namespace {

void check_same(const QuotientIdeal& A, const QuotientIdeal& B) {
  const auto& a = A.ambient();
  const auto& b = B.ambient();
  if (!(a.ring() == b.ring()) || a.is_hypersurface() != b.is_hypersurface() ||
      (a.is_hypersurface() && !(a.equation() == b.equation())))
    throw RingMismatch();
}

}  // namespace

AmbientRing AmbientRing::regular(Ring ring, GroebnerOptions options) {
  return AmbientRing(std::move(ring), std::nullopt, options);
}

AmbientRing AmbientRing::hypersurface(Polynomial f, GroebnerOptions options) {
  if (f.is_constant()) throw InvalidArgument("hypersurface equation must be a nonconstant polynomial");
  Ring ring = f.ring();
  return AmbientRing(std::move(ring), std::move(f), options);
}

AmbientRing AmbientRing::with_options(GroebnerOptions options) const {
  AmbientRing out = *this;
  out.options_ = options;
  return out;
}

std::string AmbientRing::describe() const {
  std::string s = ring_.describe();
  if (f_) s += "/(" + f_->to_string() + ")";
  return s;
}

QuotientIdeal::QuotientIdeal(AmbientRing ambient, std::vector<Polynomial> generators)
    : ambient_(std::move(ambient)), preimage_(Ideal::zero(ambient_.ring())) {
  for (auto& g : generators) {
    if (!(g.ring() == ambient_.ring())) throw RingMismatch();
    if (!g.is_zero()) preferred_.push_back(std::move(g));
  }
  std::vector<Polynomial> pre = preferred_;
  if (ambient_.is_hypersurface()) pre.push_back(ambient_.equation());
  preimage_ = Ideal(ambient_.ring(), std::move(pre), ambient_.options());
}

bool QuotientIdeal::is_zero() const {
  for (const auto& g : preferred_)
    if (!ambient_.is_hypersurface() || !Ideal(ring(), {ambient_.equation()}, ambient_.options()).contains(g))
      return false;
  return true;
}

std::string QuotientIdeal::to_string() const { return format_poly_list(preferred_); }

QuotientIdeal q_ideal(const AmbientRing& R, std::vector<Polynomial> gens) { return QuotientIdeal(R, std::move(gens)); }

QuotientIdeal q_from_preimage(const AmbientRing& R, const Ideal& preimage) {
  if (!(preimage.ring() == R.ring())) throw RingMismatch();
  std::vector<Polynomial> gens;
  for (const auto& g : preimage.generators())
    if (!R.is_hypersurface() || !(g.monic() == R.equation().monic())) gens.push_back(g);
  return QuotientIdeal(R, std::move(gens));
}

QuotientIdeal q_zero(const AmbientRing& R) { return QuotientIdeal(R, {}); }

QuotientIdeal q_unit(const AmbientRing& R) { return QuotientIdeal(R, {Polynomial::constant(R.ring(), 1)}); }

QuotientIdeal q_maximal(const AmbientRing& R) {
  return q_from_preimage(R, Ideal::maximal(R.ring(), R.options()));
}

QuotientIdeal q_sum(const QuotientIdeal& A, const QuotientIdeal& B) {
  check_same(A, B);
  std::vector<Polynomial> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return QuotientIdeal(A.ambient(), std::move(gens));
}

QuotientIdeal q_product(const QuotientIdeal& A, const QuotientIdeal& B) {
  check_same(A, B);
  const Ring& r = A.ring();
  Ideal prod = ideal_product(Ideal(r, A.generators()), Ideal(r, B.generators()));
  return QuotientIdeal(A.ambient(), prod.generators());
}

QuotientIdeal q_power(const QuotientIdeal& Q, unsigned n) {
  if (n == 0) return q_unit(Q.ambient());
  Ideal pw = ideal_power(Ideal(Q.ring(), Q.generators()), n);
  return QuotientIdeal(Q.ambient(), pw.generators());
}

QuotientIdeal q_bracket(const QuotientIdeal& Q, unsigned e) {
  Ideal br = bracket_power(Ideal(Q.ring(), Q.generators()), e);
  return QuotientIdeal(Q.ambient(), br.generators());
}

// f lies in A's preimage, so colon by f contributes the unit ideal and only
// the preferred generators of B matter.
QuotientIdeal q_colon(const QuotientIdeal& A, const QuotientIdeal& B) {
  check_same(A, B);
  if (B.generators().empty()) return q_unit(A.ambient());
  Ideal c = ideal_colon(A.preimage(), Ideal(A.ring(), B.generators(), A.ambient().options()));
  return q_from_preimage(A.ambient(), c);
}

QuotientIdeal q_colon(const QuotientIdeal& A, const Polynomial& g) {
  if (g.is_zero()) return q_unit(A.ambient());
  return q_from_preimage(A.ambient(), ideal_colon(A.preimage(), g));
}

QuotientIdeal q_intersect(const QuotientIdeal& A, const QuotientIdeal& B) {
  check_same(A, B);
  return q_from_preimage(A.ambient(), ideal_intersect(A.preimage(), B.preimage()));
}

SubsetResult q_subset(const QuotientIdeal& A, const QuotientIdeal& B) {
  check_same(A, B);
  for (const auto& g : A.generators())
    if (!B.contains(g)) return {false, g};
  return {};
}

bool q_equal(const QuotientIdeal& A, const QuotientIdeal& B) {
  check_same(A, B);
  return ideal_equal(A.preimage(), B.preimage());
}

}  // namespace frobcheck
