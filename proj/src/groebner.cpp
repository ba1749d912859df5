#include "frobcheck/groebner.hpp"

#include <algorithm>
#include <string>

namespace frobcheck {

namespace {

struct Reducer {
  const Polynomial* poly;
  Monomial lm;
  std::uint32_t mask;
  Coeff lc_inv;
};

Reducer make_reducer(const Polynomial& g) {
  return {&g, g.leading_monomial(), g.leading_monomial().support_mask(), g.ring().field().inv(g.leading_coeff())};
}

const Reducer* find_reducer(const std::vector<Reducer>& reducers, const Monomial& m) {
  const std::uint32_t mask = m.support_mask();
  for (const auto& r : reducers) {
    if ((r.mask & ~mask) != 0) continue;
    if (r.lm.divides(m)) return &r;
  }
  return nullptr;
}

/// rest[head..] -= c * m * g, knowing that the leading terms cancel.
void cancel_leading(const Ring& ring, std::vector<Term>& rest, std::size_t& head, Coeff c, const Monomial& m,
                    const Polynomial& g, std::vector<Term>& scratch) {
  const PrimeField& field = ring.field();
  const Coeff neg_c = field.neg(c);
  scratch.clear();
  scratch.reserve(rest.size() - head + g.size());
  const auto& gt = g.terms();
  std::size_t a = head + 1;
  std::size_t b = 1;
  const std::size_t a_end = rest.size();
  const std::size_t b_end = gt.size();
  Term shifted{};
  auto load = [&] {
    if (b < b_end) {
      shifted.monomial = gt[b].monomial * m;
      shifted.coeff = field.mul(gt[b].coeff, neg_c);
    }
  };
  load();
  while (a < a_end && b < b_end) {
    int cmp = ring.compare(rest[a].monomial, shifted.monomial);
    if (cmp > 0) {
      scratch.push_back(rest[a++]);
    } else if (cmp < 0) {
      scratch.push_back(shifted);
      ++b;
      load();
    } else {
      Coeff s = field.add(rest[a].coeff, shifted.coeff);
      if (s != 0) scratch.push_back({rest[a].monomial, s});
      ++a;
      ++b;
      load();
    }
  }
  for (; a < a_end; ++a) scratch.push_back(rest[a]);
  while (b < b_end) {
    scratch.push_back(shifted);
    ++b;
    load();
  }
  rest.swap(scratch);
  head = 0;
}

Polynomial full_reduce(const Polynomial& f, const std::vector<Reducer>& reducers, std::size_t max_terms) {
  const Ring& ring = f.ring();
  const PrimeField& field = ring.field();
  std::vector<Term> rest = f.terms();
  std::vector<Term> scratch;
  std::vector<Term> result;
  std::size_t head = 0;
  while (head < rest.size()) {
    const Term lt = rest[head];
    const Reducer* r = find_reducer(reducers, lt.monomial);
    if (r == nullptr) {
      result.push_back(lt);
      ++head;
      continue;
    }
    const Monomial m = lt.monomial / r->lm;
    const Coeff c = field.mul(lt.coeff, r->lc_inv);
    cancel_leading(ring, rest, head, c, m, *r->poly, scratch);
    if (rest.size() + result.size() > max_terms)
      throw BudgetExceeded("Groebner term budget exceeded (" + std::to_string(max_terms) + " terms)");
  }
  return Polynomial::from_canonical_terms(ring, std::move(result));
}

struct Element {
  Polynomial poly;
  Monomial lm;
  std::uint64_t sugar;
  bool active;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t sugar;
};

class Buchberger {
 public:
  Buchberger(const Ring& ring, const GroebnerOptions& options) : ring_(ring), options_(options) {}

  GroebnerBasis run(std::span<const Polynomial> generators) {
    std::vector<Polynomial> input;
    for (const auto& g : generators) {
      if (!(g.ring() == ring_)) throw RingMismatch();
      if (!g.is_zero()) input.push_back(g.monic());
    }
    if (input.empty()) return GroebnerBasis(ring_, {});
    for (const auto& g : input)
      if (g.is_unit()) return unit();
    if (std::all_of(input.begin(), input.end(), [](const Polynomial& g) { return g.is_monomial(); }))
      return monomial_basis(std::move(input));

    // Deterministic processing order: ascending leading monomial.
    std::stable_sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (auto& g : input) {
      Polynomial h = reduce_by_active(g);
      if (h.is_zero()) continue;
      if (h.is_unit()) return unit();
      insert(h.monic(), h.total_degree());
    }

    while (!pairs_.empty()) {
      Pair p = pairs_.back();
      pairs_.pop_back();
      if (++stats_.pairs_processed > options_.max_pairs)
        throw BudgetExceeded("Groebner pair budget exceeded (" + std::to_string(options_.max_pairs) + " pairs)");
      Polynomial s = s_polynomial(elements_[p.i].poly, elements_[p.j].poly);
      Polynomial h = reduce_by_active(s);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (h.is_unit()) return unit();
      insert(h.monic(), p.sugar);
    }
    return finish();
  }

 private:
  GroebnerBasis unit() const { return GroebnerBasis(ring_, {Polynomial::constant(ring_, 1)}, stats_); }

  GroebnerBasis monomial_basis(std::vector<Polynomial> input) const {
    // Monomial ideals: every S-polynomial vanishes, so the reduced basis is
    // the set of minimal generators.
    std::vector<Monomial> mons;
    for (const auto& g : input) mons.push_back(g.leading_monomial());
    std::sort(mons.begin(), mons.end(), [&](const Monomial& a, const Monomial& b) { return ring_.compare(a, b) < 0; });
    mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
    std::vector<Polynomial> out;
    std::vector<Monomial> kept;
    // In ascending order a divisor always precedes its multiples.
    for (const auto& m : mons) {
      bool redundant = false;
      for (const auto& k : kept)
        if (k.divides(m)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      kept.push_back(m);
      out.push_back(Polynomial::term(ring_, m, 1));
    }
    return GroebnerBasis(ring_, std::move(out), stats_);
  }

  Polynomial reduce_by_active(const Polynomial& f) const {
    std::vector<Reducer> reducers;
    for (const auto& e : elements_)
      if (e.active) reducers.push_back(make_reducer(e.poly));
    return full_reduce(f, reducers, options_.max_terms);
  }

  /// Pair priority: lower sugar first, then smaller lcm, then indices.
  bool before(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ring_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    const Element& a = elements_[i];
    const Element& b = elements_[j];
    Monomial l = a.lm.lcm(b.lm);
    const std::uint64_t dl = l.degree();
    std::uint64_t sugar = std::max(a.sugar + dl - a.lm.degree(), b.sugar + dl - b.lm.degree());
    return {i, j, l, sugar};
  }

  // Gebauer-Moeller installation of a new basis element.
  void insert(Polynomial h, std::uint64_t sugar) {
    if (elements_.size() >= options_.max_basis)
      throw BudgetExceeded("Groebner basis size budget exceeded (" + std::to_string(options_.max_basis) + ")");
    const std::size_t hi = elements_.size();
    Monomial hlm = h.leading_monomial();
    elements_.push_back({std::move(h), hlm, sugar, true});

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k)
      if (elements_[k].active) candidates.push_back(make_pair(k, hi));

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = elements_[p.i].lm.coprime(hlm);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d)
          if (candidates[d].lcm.divides(p.lcm)) keep = false;
        for (std::size_t d = 0; d < kept.size() && keep; ++d)
          if (kept[d].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const auto& p : kept) {
      if (elements_[p.i].lm.coprime(hlm)) {
        ++stats_.pairs_skipped;
      } else {
        fresh.push_back(p);
      }
    }

    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      bool drop = hlm.divides(p.lcm) && !(elements_[p.i].lm.lcm(hlm) == p.lcm) &&
                  !(elements_[p.j].lm.lcm(hlm) == p.lcm);
      if (drop) {
        ++stats_.pairs_skipped;
      } else {
        old.push_back(p);
      }
    }

    // pairs_ is kept sorted so that back() is the next pair to process.
    auto later_first = [&](const Pair& a, const Pair& b) { return before(b, a); };
    std::sort(fresh.begin(), fresh.end(), later_first);
    pairs_.clear();
    std::merge(old.begin(), old.end(), fresh.begin(), fresh.end(), std::back_inserter(pairs_), later_first);

    for (std::size_t k = 0; k < hi; ++k)
      if (elements_[k].active && hlm.divides(elements_[k].lm)) elements_[k].active = false;
  }

  GroebnerBasis finish() const {
    std::vector<Polynomial> basis;
    for (const auto& e : elements_)
      if (e.active) basis.push_back(e.poly);
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    // Inter-reduce tails; leading monomials are already minimal.
    std::vector<Polynomial> reduced;
    reduced.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Reducer> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(make_reducer(basis[j]));
      const Polynomial& g = basis[i];
      Polynomial tail = Polynomial::from_canonical_terms(
          ring_, std::vector<Term>(g.terms().begin() + 1, g.terms().end()));
      Polynomial t = full_reduce(tail, others, options_.max_terms);
      reduced.push_back(Polynomial::term(ring_, g.leading_monomial(), 1) + t);
    }
    return GroebnerBasis(ring_, std::move(reduced), stats_);
  }

  const Ring& ring_;
  const GroebnerOptions& options_;
  std::vector<Element> elements_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
};

}  // namespace

GroebnerBasis buchberger(const Ring& ring, std::span<const Polynomial> generators, const GroebnerOptions& options) {
  return Buchberger(ring, options).run(generators);
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  std::vector<Reducer> reducers;
  for (const auto& g : divisors) {
    if (!(g.ring() == f.ring())) throw RingMismatch();
    if (!g.is_zero()) reducers.push_back(make_reducer(g));
  }
  return full_reduce(f, reducers, static_cast<std::size_t>(-1));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (!(f.ring() == G.ring())) throw RingMismatch();
  return reduce(f, G.elements());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw RingMismatch();
  const PrimeField& field = f.ring().field();
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.times_term(l / f.leading_monomial(), field.inv(f.leading_coeff()));
  Polynomial b = g.times_term(l / g.leading_monomial(), field.inv(g.leading_coeff()));
  return a - b;
}

bool is_reduced_groebner_basis(const GroebnerBasis& G) {
  const auto& els = G.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (els[i].is_zero() || els[i].leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j) continue;
      // No term of element i may be divisible by another leading monomial.
      for (const auto& t : els[i].terms())
        if (els[j].leading_monomial().divides(t.monomial)) return false;
    }
  }
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j)
      if (!reduce(s_polynomial(els[i], els[j]), els).is_zero()) return false;
  return true;
}

}  // namespace frobcheck
