#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "frobcheck/groebner.hpp"
#include "frobcheck/polynomial.hpp"

namespace frobcheck {

/// Ideal given by generators, with a lazily computed reduced Groebner basis.
/// Copies share the cache; the cache is filled at most once.
class Ideal {
 public:
  /// Zero generators are dropped. All generators must live in `ring`.
  Ideal(Ring ring, std::vector<Polynomial> generators, GroebnerOptions options = {});

  static Ideal zero(Ring ring, GroebnerOptions options = {});
  static Ideal unit(Ring ring, GroebnerOptions options = {});
  /// The ideal of all variables.
  static Ideal maximal(Ring ring, GroebnerOptions options = {});

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const GroebnerOptions& options() const { return options_; }
  bool is_zero() const { return generators_.empty(); }

  /// Budget errors propagate; nothing is cached on failure.
  const GroebnerBasis& groebner() const;
  bool has_cached_groebner() const;

  bool contains(const Polynomial& f) const;
  bool is_unit() const { return groebner().is_unit(); }
  bool is_proper() const { return !is_unit(); }
  bool is_monomial() const;

  /// Same ideal with a different budget (shares nothing).
  Ideal with_options(GroebnerOptions options) const { return Ideal(ring_, generators_, options); }

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<GroebnerBasis> basis;
  };

  Ring ring_;
  std::vector<Polynomial> generators_;
  GroebnerOptions options_;
  std::shared_ptr<Cache> cache_;
};

/// Result of a containment query; on failure carries the first generator of
/// the left ideal that is not in the right ideal.
struct SubsetResult {
  bool holds = true;
  std::optional<Polynomial> witness;

  explicit operator bool() const { return holds; }
};

/// Returns a copy so that temporaries are safe to query.
GroebnerBasis groebner_basis(const Ideal& I);
bool ideal_member(const Polynomial& f, const Ideal& I);
SubsetResult ideal_subset(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);

}  // namespace frobcheck
