#include "frobcheck/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace frobcheck {

namespace {

void canonicalize(const Ring& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.monomial, b.monomial) > 0; });
  const PrimeField& field = ring.field();
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Coeff c = 0;
    std::size_t j = i;
    for (; j < terms.size() && terms[j].monomial == terms[i].monomial; ++j) c = field.add(c, terms[j].coeff);
    if (c != 0) {
      terms[out] = terms[i];
      terms[out].coeff = c;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  for (auto& t : terms) t.coeff = ring.field().reduce(t.coeff);
  for (const auto& t : terms)
    for (std::size_t i = ring.num_vars(); i < kMaxVariables; ++i)
      if (t.monomial[i] != 0) throw InvalidArgument("monomial uses a variable outside the ring");
  canonicalize(ring, terms);
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
  Coeff r = ring.field().reduce_signed(c);
  Polynomial p(std::move(ring));
  if (r != 0) p.terms_.push_back({Monomial(), r});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring.num_vars()) throw InvalidArgument("variable index out of range");
  Monomial m;
  m[index] = 1;
  Polynomial p(std::move(ring));
  p.terms_.push_back({m, 1});
  return p;
}

Polynomial Polynomial::variable(Ring ring, const std::string& name) {
  std::size_t i = ring.index_of(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::term(Ring ring, const Monomial& m, Coeff c) {
  return from_terms(std::move(ring), {Term{m, c}});
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::uint64_t d = terms_.front().monomial.degree();
  for (const auto& t : terms_)
    if (t.monomial.degree() != d) return false;
  return true;
}

std::uint32_t Polynomial::support_mask() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m |= t.monomial.support_mask();
  return m;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  Polynomial out = *this;
  out.subtract_multiple(ring_.field().neg(1), Monomial(), o);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_ring(o);
  Polynomial out = *this;
  out.subtract_multiple(1, Monomial(), o);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = ring_.field().neg(t.coeff);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const Polynomial& small = size() <= o.size() ? *this : o;
  const Polynomial& large = size() <= o.size() ? o : *this;
  if (small.size() <= 4) {
    Polynomial acc(ring_);
    for (const auto& t : small.terms_) acc.subtract_multiple(ring_.field().neg(t.coeff), t.monomial, large);
    return acc;
  }
  std::vector<Term> prod;
  prod.reserve(small.size() * large.size());
  const PrimeField& field = ring_.field();
  for (const auto& a : small.terms_)
    for (const auto& b : large.terms_) prod.push_back({a.monomial * b.monomial, field.mul(a.coeff, b.coeff)});
  canonicalize(ring_, prod);
  Polynomial out(ring_);
  out.terms_ = std::move(prod);
  return out;
}

Polynomial Polynomial::scaled(Coeff c) const {
  c = ring_.field().reduce(c);
  if (c == 0) return Polynomial(ring_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = ring_.field().mul(t.coeff, c);
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  c = ring_.field().reduce(c);
  if (c == 0) return Polynomial(ring_);
  Polynomial out = *this;
  // Multiplying by a monomial preserves a monomial order.
  for (auto& t : out.terms_) {
    t.monomial = t.monomial * m;
    t.coeff = ring_.field().mul(t.coeff, c);
  }
  return out;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n != 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

std::uint64_t frobenius_exponent(Coeff p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > std::numeric_limits<Exponent>::max() / p) throw ExponentOverflow();
    q *= p;
  }
  return q;
}

Polynomial Polynomial::frobenius_power(unsigned e) const {
  const std::uint64_t q = frobenius_exponent(ring_.characteristic(), e);
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  // (sum c_i m_i)^q = sum c_i^q m_i^q in characteristic p; scaling exponents
  // preserves every monomial order used here, so no re-sort is needed.
  for (const auto& t : terms_) out.terms_.push_back({t.monomial.scaled(q), ring_.field().pow(t.coeff, q)});
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_.num_vars()) throw InvalidArgument("unknown variable");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const Exponent e = t.monomial[var];
    if (e == 0) continue;
    Coeff c = ring_.field().mul(t.coeff, ring_.field().reduce(e));
    if (c == 0) continue;
    Monomial m = t.monomial;
    m[var] = e - 1;
    out.push_back({m, c});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_.field().inv(leading_coeff()));
}

void Polynomial::subtract_multiple(Coeff c, const Monomial& m, const Polynomial& g) {
  if (c == 0 || g.is_zero()) return;
  const PrimeField& field = ring_.field();
  const Coeff neg_c = field.neg(c);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  Term shifted{};
  bool have_shifted = false;
  auto load = [&] {
    if (b != g.terms_.end()) {
      shifted.monomial = b->monomial * m;
      shifted.coeff = field.mul(b->coeff, neg_c);
      have_shifted = true;
    } else {
      have_shifted = false;
    }
  };
  load();
  while (a != terms_.end() && have_shifted) {
    int cmp = ring_.compare(a->monomial, shifted.monomial);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back(shifted);
      ++b;
      load();
    } else {
      Coeff s = field.add(a->coeff, shifted.coeff);
      if (s != 0) out.push_back({a->monomial, s});
      ++a;
      ++b;
      load();
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(*a);
  while (have_shifted) {
    out.push_back(shifted);
    ++b;
    load();
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::map_to(const Ring& target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != ring_.num_vars()) throw InvalidArgument("index map size mismatch");
  if (target.characteristic() != ring_.characteristic()) throw RingMismatch();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_.num_vars(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (index_map[i] >= target.num_vars()) throw InvalidArgument("variable has no image in target ring");
      m[index_map[i]] += t.monomial[i];
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string format_monomial(const Ring& ring, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << ring.variables()[i];
    if (m[i] != 1) os << '^' << m[i];
  }
  return first ? "1" : os.str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (i) os << " + ";
    if (t.monomial.is_one()) {
      os << t.coeff;
    } else {
      if (t.coeff != 1) os << t.coeff << '*';
      os << format_monomial(ring_, t.monomial);
    }
  }
  return os.str();
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& g) {
  if (!(a.ring() == g.ring())) throw RingMismatch();
  if (g.is_zero()) throw InvalidArgument("division by zero polynomial");
  const PrimeField& field = a.ring().field();
  const Coeff lc_inv = field.inv(g.leading_coeff());
  Polynomial rest = a;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!g.leading_monomial().divides(lt.monomial))
      throw InternalError("exact division left a remainder");
    Monomial m = lt.monomial / g.leading_monomial();
    Coeff c = field.mul(lt.coeff, lc_inv);
    quotient.push_back({m, c});
    rest.subtract_multiple(c, m, g);
  }
  return Polynomial::from_terms(a.ring(), std::move(quotient));
}

}  // namespace frobcheck
