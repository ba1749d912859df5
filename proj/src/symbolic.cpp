#include "frobcheck/symbolic.hpp"

#include <bit>

#include "frobcheck/ideal_algebra.hpp"

namespace frobcheck {

namespace {

bool is_linear_form(const Polynomial& g) { return g.is_homogeneous() && g.total_degree() == 1; }

unsigned ambient_dimension(const AmbientRing& R) {
  return static_cast<unsigned>(R.ring().num_vars()) - (R.is_hypersurface() ? 1u : 0u);
}

// Whether s is a nonzerodivisor modulo P, i.e. (P : s) = P.
bool avoids(const Ideal& P, const Polynomial& s) { return ideal_equal(ideal_colon(P, s), P); }

}  // namespace

bool is_squarefree_monomial(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) {
    if (!g.is_monomial()) return false;
    const Monomial& m = g.leading_monomial();
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (m[i] > 1) return false;
  }
  return true;
}

PrimeData make_prime_data(const AmbientRing& R, const std::vector<PrimeSpec>& specs, Assertions assertions,
                          std::optional<unsigned> local_generators) {
  if (specs.empty()) throw InvalidArgument("prime data needs at least one prime");
  PrimeData pd;
  pd.assertions = assertions;
  pd.local_generators = local_generators;
  for (const auto& spec : specs) {
    PrimeComponent c{q_ideal(R, spec.generators), 0, false, spec.separator, spec.bundle};
    if (!c.prime.is_proper()) throw InvalidArgument("listed prime is the unit ideal");
    if (spec.height) {
      c.height = *spec.height;
    } else {
      int dim = krull_dimension(c.prime.preimage());
      c.height = ambient_dimension(R) - static_cast<unsigned>(dim);
      c.height_computed = true;
    }
    pd.components.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < pd.components.size(); ++i) {
    const auto& ci = pd.components[i];
    if (!ci.separator) continue;
    const Polynomial& s = *ci.separator;
    if (!(s.ring() == R.ring())) throw RingMismatch();
    bool outside = ci.bundle ? avoids(ci.prime.preimage(), s) : !ci.prime.contains(s);
    if (!outside) throw InvalidArgument("separator " + s.to_string() + " lies in the prime it should avoid");
    for (std::size_t j = 0; j < pd.components.size(); ++j)
      if (j != i && !pd.components[j].prime.contains(s))
        throw InvalidArgument("separator " + s.to_string() + " misses another listed prime");
  }
  return pd;
}

PrimeData monomial_prime_data(const QuotientIdeal& Q) {
  if (Q.ambient().is_hypersurface()) throw InvalidArgument("monomial prime data needs a polynomial ring");
  if (Q.generators().empty() || !is_squarefree_monomial(Q.generators()))
    throw InvalidArgument("not a nonzero squarefree monomial ideal");
  if (Q.is_unit()) throw InvalidArgument("Q must be proper");
  const Ring& ring = Q.ring();
  const std::size_t n = ring.num_vars();
  std::vector<std::uint32_t> supports;
  for (const auto& g : Q.generators()) supports.push_back(g.leading_monomial().support_mask());
  std::vector<std::uint32_t> covers;
  for (unsigned size = 1; size <= n; ++size)
    for (std::uint32_t u = 1; u < (1u << n); ++u) {
      if (static_cast<unsigned>(std::popcount(u)) != size) continue;
      bool cover = true;
      for (auto s : supports) cover = cover && (s & u) != 0;
      if (!cover) continue;
      bool minimal = true;
      for (auto c : covers) minimal = minimal && (c & ~u) != 0;
      if (minimal) covers.push_back(u);
    }
  std::vector<PrimeSpec> specs;
  for (auto u : covers) {
    PrimeSpec spec;
    Monomial outside;
    for (std::size_t i = 0; i < n; ++i) {
      if (u >> i & 1u)
        spec.generators.push_back(Polynomial::variable(ring, i));
      else
        outside[i] = 1;
    }
    spec.separator = Polynomial::term(ring, outside, 1);
    spec.height = static_cast<unsigned>(std::popcount(u));
    specs.push_back(std::move(spec));
  }
  Assertions a;
  a.radical = true;
  a.finite_pd = true;
  PrimeData pd = make_prime_data(Q.ambient(), specs, a);
  for (auto& c : pd.components) c.height_computed = true;
  pd.local_generators = big_height(pd);
  return pd;
}

unsigned big_height(const PrimeData& pd) {
  if (pd.components.empty()) throw InvalidArgument("no prime data");
  unsigned h = 0;
  for (const auto& c : pd.components) h = std::max(h, c.height);
  return h;
}

unsigned local_generator_bound(const PrimeData& pd) {
  return pd.local_generators ? *pd.local_generators : big_height(pd);
}

std::string to_string(SymbolicStrategy s) {
  switch (s) {
    case SymbolicStrategy::SaturateBySeparator:
      return "saturate";
    case SymbolicStrategy::IntersectMinimalPrimes:
      return "intersect";
    case SymbolicStrategy::MonomialCombinatorial:
      return "monomial";
  }
  return "saturate";
}

SymbolicStrategy default_strategy(const QuotientIdeal& Q) {
  if (!Q.ambient().is_hypersurface() && !Q.generators().empty() && is_squarefree_monomial(Q.generators()))
    return SymbolicStrategy::MonomialCombinatorial;
  return SymbolicStrategy::SaturateBySeparator;
}

SymbolicPower symbolic_power(const QuotientIdeal& Q, unsigned n, const PrimeData& pd, SymbolicStrategy strategy) {
  const AmbientRing& R = Q.ambient();
  if (pd.components.empty()) throw InvalidArgument("no prime data");
  if (n == 0) return {q_unit(R), {}};
  const Ring& ring = R.ring();
  SymbolicPower out{q_zero(R), {}};

  switch (strategy) {
    case SymbolicStrategy::SaturateBySeparator: {
      const Ideal power = q_power(Q, n).preimage();
      std::optional<Ideal> acc;
      for (const auto& c : pd.components) {
        if (!c.separator) throw InvalidArgument("component " + c.prime.to_string() + " has no separator");
        Saturation sat = c.separator->is_unit() ? Saturation{power, 0} : saturate(power, *c.separator);
        out.saturation_exponents.push_back(sat.exponent);
        acc = acc ? ideal_intersect(*acc, sat.ideal) : sat.ideal;
      }
      out.ideal = q_from_preimage(R, *acc);
      break;
    }
    case SymbolicStrategy::IntersectMinimalPrimes: {
      if (R.is_hypersurface()) throw InvalidArgument("intersect strategy needs a polynomial ring");
      std::optional<Ideal> acc;
      for (const auto& c : pd.components) {
        if (c.bundle) throw InvalidArgument("intersect strategy needs individual primes");
        for (const auto& g : c.prime.generators())
          if (!is_linear_form(g)) throw InvalidArgument("intersect strategy needs primes generated by linear forms");
        Ideal part = ideal_power(c.prime.preimage(), n);
        acc = acc ? ideal_intersect(*acc, part) : part;
      }
      out.ideal = q_from_preimage(R, *acc);
      break;
    }
    case SymbolicStrategy::MonomialCombinatorial: {
      if (R.is_hypersurface() || !is_squarefree_monomial(Q.generators()))
        throw InvalidArgument("monomial strategy needs a squarefree monomial ideal of a polynomial ring");
      std::optional<std::vector<Monomial>> acc;
      for (const auto& c : pd.components) {
        if (!is_squarefree_monomial(c.prime.generators()))
          throw InvalidArgument("monomial strategy needs monomial primes");
        auto part = monomial_power(monomials_of(c.prime.preimage()), n);
        acc = acc ? monomial_intersect(*acc, part) : part;
      }
      out.ideal = q_from_preimage(R, monomial_ideal(ring, *acc, R.options()));
      break;
    }
  }
  if (!q_subset(q_power(Q, n), out.ideal).holds)
    throw InternalError("ordinary power is not inside the computed symbolic power");
  return out;
}

QuotientIdeal jacobian_ideal(const AmbientRing& R) {
  if (!R.is_hypersurface()) return q_unit(R);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < R.ring().num_vars(); ++i) {
    Polynomial d = R.equation().derivative(i);
    if (!d.is_zero()) gens.push_back(d);
  }
  return q_ideal(R, gens);
}

QuotientIdeal jacobian_power_product(const QuotientIdeal& J, unsigned a, const QuotientIdeal& Q_sym) {
  if (a == 0) return Q_sym;
  return q_product(q_power(J, a), Q_sym);
}

std::optional<Polynomial> singular_locus_separator(const Ideal& I, unsigned codim, std::mt19937_64& rng,
                                                   std::vector<std::string>* notes) {
  const Ring& ring = I.ring();
  auto note = [&](const std::string& s) {
    if (notes) notes->push_back(s);
  };
  PolyMatrix jac = jacobian_matrix(I.generators());
  if (codim == 0 || codim > std::min(jac.rows(), jac.cols())) throw InvalidArgument("codimension out of range");
  Ideal jm = minors(jac, codim);
  Ideal K = ideal_sum(I, jm);
  bool homogeneous = true;
  for (const auto& g : I.generators()) homogeneous = homogeneous && g.is_homogeneous();
  if (homogeneous && krull_dimension(K) == 0) {
    for (std::size_t v = 0; v < ring.num_vars(); ++v) {
      Polynomial x = Polynomial::variable(ring, v);
      if (avoids(I, x)) {
        note("singular locus is the origin; separator is the variable " + ring.variables()[v]);
        return x;
      }
    }
  }
  for (int attempt = 0; attempt < 5; ++attempt) {
    Polynomial s(ring);
    for (const auto& g : jm.generators()) s += g.scaled(static_cast<Coeff>(rng() % ring.characteristic()));
    if (s.is_zero()) continue;
    if (avoids(I, s)) {
      note("separator is a random combination of Jacobian minors");
      return s;
    }
    note("Jacobian-minor combination was a zerodivisor; redrawing");
  }
  return std::nullopt;
}

}  // namespace frobcheck
