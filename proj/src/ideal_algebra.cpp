#include "frobcheck/ideal_algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace frobcheck {

namespace {

void check_same(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw RingMismatch();
}

std::vector<Polynomial> dedupe(std::vector<Polynomial> gens) {
  for (auto& g : gens) g = g.monic();
  std::sort(gens.begin(), gens.end(), poly_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::string fresh_name(const Ring& ring, const std::string& base) {
  std::string name = base;
  for (int k = 0; ring.find(name); ++k) name = base + std::to_string(k);
  return name;
}

// Groebner basis of `gens` (given in `I.ring()`) in a ring where the variables
// listed in `elim` come first in their own block; returns the elements free of
// those variables, mapped back.
Ideal eliminate_indices(const Ring& base, const std::vector<Polynomial>& gens, const std::vector<std::size_t>& elim,
                        const GroebnerOptions& options) {
  const std::size_t n = base.num_vars();
  std::vector<bool> is_elim(n, false);
  for (std::size_t v : elim) is_elim[v] = true;
  std::vector<std::string> names;
  std::vector<std::size_t> to_new(n), to_old;
  for (std::size_t v : elim) {
    to_new[v] = names.size();
    names.push_back(base.variables()[v]);
    to_old.push_back(v);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!is_elim[v]) {
      to_new[v] = names.size();
      names.push_back(base.variables()[v]);
      to_old.push_back(v);
    }
  const std::size_t rest = n - elim.size();
  std::vector<std::size_t> blocks{elim.size()};
  if (base.order().kind() == OrderKind::Lex)
    blocks.insert(blocks.end(), rest, 1);
  else
    blocks.push_back(rest);
  Ring work(base.characteristic(), names, MonomialOrder::block(blocks));
  std::vector<Polynomial> mapped;
  for (const auto& g : gens) mapped.push_back(g.map_to(work, to_new));
  GroebnerBasis G = buchberger(work, mapped, options);
  const std::uint32_t elim_mask = (1u << elim.size()) - 1;
  std::vector<Polynomial> out;
  for (const auto& g : G.elements())
    if ((g.support_mask() & elim_mask) == 0) out.push_back(g.map_to(base, to_old));
  return Ideal(base, std::move(out), options);
}

}  // namespace

bool poly_less(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = a.ring().compare(ta[i].monomial, tb[i].monomial);
    if (c != 0) return c < 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens), I.options());
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(a * b);
  return Ideal(I.ring(), dedupe(std::move(gens)), I.options());
}

Ideal ideal_power(const Ideal& I, unsigned n) {
  Ideal out = Ideal::unit(I.ring(), I.options());
  if (n == 0) return out;
  out = Ideal(I.ring(), dedupe(I.generators()), I.options());
  for (unsigned k = 1; k < n; ++k) out = ideal_product(out, I);
  return out;
}

Ideal bracket_power(const Ideal& I, unsigned e) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.frobenius_power(e));
  return Ideal(I.ring(), std::move(gens), I.options());
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  const Ring& base = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(base, I.options());
  if (I.is_monomial() && J.is_monomial())
    return monomial_ideal(base, monomial_intersect(monomials_of(I), monomials_of(J)), I.options());

  const std::size_t n = base.num_vars();
  if (n + 1 > kMaxVariables) throw InvalidArgument("too many variables for intersection");
  std::vector<std::string> names{fresh_name(base, "_t")};
  names.insert(names.end(), base.variables().begin(), base.variables().end());
  std::vector<std::size_t> blocks{1};
  blocks.insert(blocks.end(), base.order().blocks().begin(), base.order().blocks().end());
  Ring work(base.characteristic(), names, MonomialOrder::block(blocks));
  std::vector<std::size_t> shift(n), back(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    shift[i] = i + 1;
    back[i + 1] = i;
  }
  Polynomial t = Polynomial::variable(work, 0);
  Polynomial one_minus_t = Polynomial::constant(work, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(t * g.map_to(work, shift));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.map_to(work, shift));
  GroebnerBasis G = buchberger(work, gens, I.options());
  std::vector<Polynomial> out;
  for (const auto& g : G.elements())
    if ((g.support_mask() & 1u) == 0) out.push_back(g.map_to(base, back));
  return Ideal(base, std::move(out), I.options());
}

Ideal ideal_colon(const Ideal& I, const Polynomial& g) {
  if (!(I.ring() == g.ring())) throw RingMismatch();
  if (g.is_zero()) throw InvalidArgument("colon by the zero polynomial");
  if (g.is_unit()) return I;
  if (I.is_zero()) return I;
  if (I.contains(g)) return Ideal::unit(I.ring(), I.options());
  if (I.is_monomial() && g.is_monomial()) {
    const Monomial& m = g.leading_monomial();
    std::vector<Monomial> out;
    for (const auto& a : monomials_of(I)) out.push_back(a / a.gcd(m));
    return monomial_ideal(I.ring(), out, I.options());
  }
  Ideal meet = ideal_intersect(I, Ideal(I.ring(), {g}, I.options()));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) gens.push_back(divide_exact(h, g));
  return Ideal(I.ring(), std::move(gens), I.options());
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  if (J.is_zero()) throw InvalidArgument("colon by the zero ideal");
  std::optional<Ideal> out;
  for (const auto& g : J.generators()) {
    Ideal part = ideal_colon(I, g);
    if (part.is_unit()) continue;
    out = out ? ideal_intersect(*out, part) : part;
  }
  return out ? *out : Ideal::unit(I.ring(), I.options());
}

Saturation saturate(const Ideal& I, const Polynomial& f, unsigned max_steps) {
  if (f.is_zero()) throw InvalidArgument("saturation by the zero polynomial");
  Ideal current = I;
  for (unsigned s = 0; s < max_steps; ++s) {
    Ideal next = ideal_colon(current, f);
    if (ideal_equal(next, current)) return {current, s};
    current = next;
  }
  throw BudgetExceeded("saturation did not stabilize");
}

Saturation saturate(const Ideal& I, const Ideal& J, unsigned max_steps) {
  if (J.is_zero()) throw InvalidArgument("saturation by the zero ideal");
  Ideal current = I;
  for (unsigned s = 0; s < max_steps; ++s) {
    Ideal next = ideal_colon(current, J);
    if (ideal_equal(next, current)) return {current, s};
    current = next;
  }
  throw BudgetExceeded("saturation did not stabilize");
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars) {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) {
    std::size_t i = I.ring().index_of(v);
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
  }
  if (idx.size() >= I.ring().num_vars()) throw InvalidArgument("cannot eliminate every variable");
  if (idx.empty()) return I;
  std::sort(idx.begin(), idx.end());
  return eliminate_indices(I.ring(), I.generators(), idx, I.options());
}

int krull_dimension(const Ideal& I) {
  const auto& G = I.groebner();
  if (G.is_unit()) return -1;
  const std::size_t n = I.ring().num_vars();
  std::vector<std::uint32_t> masks;
  for (const auto& g : G.elements()) masks.push_back(g.leading_monomial().support_mask());
  int best = 0;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    int size = std::popcount(u);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t m : masks)
      if ((m & ~u) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring)) {}

PolyMatrix::PolyMatrix(Ring ring, std::vector<std::vector<Polynomial>> entries)
    : ring_(std::move(ring)), rows_(entries.size()), cols_(entries.empty() ? 0 : entries[0].size()) {
  for (auto& row : entries) {
    if (row.size() != cols_) throw InvalidArgument("ragged matrix");
    for (auto& p : row) {
      if (!(p.ring() == ring_)) throw RingMismatch();
      entries_.push_back(std::move(p));
    }
  }
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (!(p.ring() == ring_)) throw RingMismatch();
  entries_[r * cols_ + c] = std::move(p);
}

Ideal minors(const PolyMatrix& M, std::size_t size) {
  if (size == 0 || size > std::min(M.rows(), M.cols())) throw InvalidArgument("minor size out of range");
  if (M.cols() > 31) throw InvalidArgument("too many columns");
  const Ring& ring = M.ring();
  std::vector<Polynomial> gens;
  std::vector<std::size_t> rows(size);
  std::vector<bool> pick(M.rows(), false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    std::size_t k = 0;
    for (std::size_t r = 0; r < M.rows(); ++r)
      if (pick[r]) rows[k++] = r;
    // memo[level][mask]: determinant of rows[level..] against the columns in mask.
    std::vector<std::unordered_map<std::uint32_t, Polynomial>> memo(size + 1);
    auto det = [&](auto&& self, std::size_t level, std::uint32_t mask) -> Polynomial {
      if (level == size) return Polynomial::constant(ring, 1);
      auto it = memo[level].find(mask);
      if (it != memo[level].end()) return it->second;
      Polynomial acc(ring);
      bool negative = false;
      for (std::size_t c = 0; c < M.cols(); ++c) {
        if (!(mask >> c & 1u)) continue;
        const Polynomial& a = M.at(rows[level], c);
        if (!a.is_zero()) {
          Polynomial part = a * self(self, level + 1, mask & ~(1u << c));
          acc = negative ? acc - part : acc + part;
        }
        negative = !negative;
      }
      memo[level].emplace(mask, acc);
      return acc;
    };
    std::vector<bool> cpick(M.cols(), false);
    std::fill(cpick.begin(), cpick.begin() + size, true);
    do {
      std::uint32_t mask = 0;
      for (std::size_t c = 0; c < M.cols(); ++c)
        if (cpick[c]) mask |= 1u << c;
      gens.push_back(det(det, 0, mask));
    } while (std::prev_permutation(cpick.begin(), cpick.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return Ideal(ring, std::move(gens));
}

PolyMatrix jacobian_matrix(const std::vector<Polynomial>& polys) {
  if (polys.empty()) throw InvalidArgument("empty polynomial list");
  const Ring& ring = polys[0].ring();
  PolyMatrix M(ring, polys.size(), ring.num_vars());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < ring.num_vars(); ++j) M.set(i, j, polys[i].derivative(j));
  return M;
}

bool brute_membership_oracle(const Polynomial& f, const Ideal& I, unsigned bound, const OracleOptions& options) {
  if (!(f.ring() == I.ring())) throw RingMismatch();
  if (f.is_zero()) return true;
  const Ring& ring = I.ring();
  const std::size_t n = ring.num_vars();
  const auto& gens = I.generators();
  if (gens.empty()) return false;

  std::vector<Monomial> cofactor_mons;
  Monomial m;
  auto enumerate = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == n) {
      cofactor_mons.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m[var] = e;
      self(self, var + 1, left - e);
    }
    m[var] = 0;
  };
  enumerate(enumerate, 0, bound);

  auto cmp = [](const Monomial& a, const Monomial& b) { return lex_less(a, b); };
  std::map<Monomial, std::size_t, decltype(cmp)> rows(cmp);
  for (const auto& g : gens)
    for (const auto& c : cofactor_mons)
      for (const auto& t : g.terms()) rows.emplace(c * t.monomial, 0);
  for (const auto& t : f.terms()) rows.emplace(t.monomial, 0);
  std::size_t idx = 0;
  for (auto& [mon, row] : rows) row = idx++;

  const std::size_t unknowns = gens.size() * cofactor_mons.size();
  const std::size_t width = unknowns + 1;
  const std::size_t height = rows.size();
  if (width * height > options.max_entries) throw BudgetExceeded("membership oracle system too large");

  const PrimeField& F = ring.field();
  std::vector<Coeff> A(width * height, 0);
  std::size_t col = 0;
  for (const auto& g : gens)
    for (const auto& c : cofactor_mons) {
      for (const auto& t : g.terms()) {
        Coeff& cell = A[rows.at(c * t.monomial) * width + col];
        cell = F.add(cell, t.coeff);
      }
      ++col;
    }
  for (const auto& t : f.terms()) A[rows.at(t.monomial) * width + unknowns] = t.coeff;

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < unknowns && pivot_row < height; ++c) {
    std::size_t r = pivot_row;
    while (r < height && A[r * width + c] == 0) ++r;
    if (r == height) continue;
    if (r != pivot_row)
      std::swap_ranges(A.begin() + r * width, A.begin() + (r + 1) * width, A.begin() + pivot_row * width);
    Coeff inv = F.inv(A[pivot_row * width + c]);
    for (std::size_t k = c; k < width; ++k) A[pivot_row * width + k] = F.mul(A[pivot_row * width + k], inv);
    for (std::size_t rr = pivot_row + 1; rr < height; ++rr) {
      Coeff factor = A[rr * width + c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < width; ++k)
        A[rr * width + k] = F.sub(A[rr * width + k], F.mul(factor, A[pivot_row * width + k]));
    }
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < height; ++r)
    if (A[r * width + unknowns] != 0) return false;
  return true;
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> mons) {
  std::sort(mons.begin(), mons.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_less(a, b);
  });
  mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
  std::vector<Monomial> out;
  for (const auto& m : mons) {
    bool redundant = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> monomial_intersect(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x.lcm(y));
  return minimal_monomials(std::move(out));
}

std::vector<Monomial> monomial_power(const std::vector<Monomial>& gens, unsigned n) {
  std::vector<Monomial> out{Monomial()};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Monomial> next;
    for (const auto& x : out)
      for (const auto& g : gens) next.push_back(x * g);
    out = minimal_monomials(std::move(next));
  }
  return out;
}

Ideal monomial_ideal(const Ring& ring, const std::vector<Monomial>& mons, GroebnerOptions options) {
  std::vector<Polynomial> gens;
  for (const auto& m : mons) gens.push_back(Polynomial::term(ring, m, 1));
  return Ideal(ring, std::move(gens), options);
}

std::vector<Monomial> monomials_of(const Ideal& I) {
  std::vector<Monomial> out;
  for (const auto& g : I.generators()) {
    if (!g.is_monomial()) throw InvalidArgument("not a monomial ideal");
    out.push_back(g.leading_monomial());
  }
  return out;
}

}  // namespace frobcheck
