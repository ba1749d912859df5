#include "frobcheck/ideal.hpp"

#include "frobcheck/parse.hpp"

namespace frobcheck {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators, GroebnerOptions options)
    : ring_(std::move(ring)), options_(options), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw RingMismatch();
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::zero(Ring ring, GroebnerOptions options) { return Ideal(std::move(ring), {}, options); }

Ideal Ideal::unit(Ring ring, GroebnerOptions options) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one}, options);
}

Ideal Ideal::maximal(Ring ring, GroebnerOptions options) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars), options);
}

const GroebnerBasis& Ideal::groebner() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->basis) cache_->basis = buchberger(ring_, generators_, options_);
  return *cache_->basis;
}

bool Ideal::has_cached_groebner() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->basis.has_value();
}

bool Ideal::contains(const Polynomial& f) const {
  if (!(f.ring() == ring_)) throw RingMismatch();
  if (f.is_zero()) return true;
  return normal_form(f, groebner()).is_zero();
}

bool Ideal::is_monomial() const {
  for (const auto& g : generators_)
    if (!g.is_monomial()) return false;
  return true;
}

std::string Ideal::to_string() const { return format_poly_list(generators_); }

GroebnerBasis groebner_basis(const Ideal& I) { return I.groebner(); }

bool ideal_member(const Polynomial& f, const Ideal& I) { return I.contains(f); }

SubsetResult ideal_subset(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw RingMismatch();
  for (const auto& g : I.generators())
    if (!J.contains(g)) return {false, g};
  return {};
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw RingMismatch();
  return I.groebner() == J.groebner();
}

}  // namespace frobcheck
