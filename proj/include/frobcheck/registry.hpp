#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frobcheck/containment.hpp"

namespace frobcheck {

/// Parameter name -> list of values to sweep.
using ExampleParams = std::map<std::string, std::vector<std::int64_t>>;

struct ExampleInfo {
  std::string id;
  std::string description;
  ExampleParams defaults;
};

/// Registered examples in canonical order.
const std::vector<ExampleInfo>& example_registry();

/// Runs every expectation of an example over the parameter grid (missing
/// parameters take their defaults). Reports come in canonical parameter
/// order. Throws InvalidArgument for an unknown id or parameter.
std::vector<ContainmentReport> run_example(const std::string& id, const ExampleParams& params = {},
                                           std::uint64_t seed = 42);

/// F_p[x,y,z]/(xy - z^k).
AmbientRing xy_zk_ring(Coeff p, unsigned k);
/// The line Q = (x, z) of xy - z^k.
QuotientIdeal xy_zk_line(const AmbientRing& R);
/// Prime data of the line: height 1, separator y, two local generators.
/// R/Q = F_p[y], so F-purity and strong F-regularity are asserted.
PrimeData xy_zk_line_data(const AmbientRing& R);

/// The hypersurfaces used by the registry (xy - z^k over the example grid).
std::vector<AmbientRing> registry_hypersurfaces();

/// Maximal minors of an n x (n+1) matrix of random linear forms in d
/// variables over F_p, with prime data from a Jacobian-minor separator.
struct DeterminantalInstance {
  QuotientIdeal ideal;
  PrimeData primes;
  /// Draws rejected because the dimension or separator check failed.
  unsigned redraws = 0;
  std::vector<std::string> notes;
};

DeterminantalInstance generic_determinantal(Coeff p, unsigned n, unsigned d, std::uint64_t seed);

}  // namespace frobcheck
