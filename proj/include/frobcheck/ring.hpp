#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobcheck/errors.hpp"
#include "frobcheck/field.hpp"

namespace frobcheck {

using Exponent = std::uint32_t;

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector. Slots past the ring's variable count stay zero so that
/// equality and divisibility never need to know the ring.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (Exponent e : exps_) d += e;
    return d;
  }
  bool is_one() const {
    for (Exponent e : exps_)
      if (e != 0) return false;
    return true;
  }

  /// Throws ExponentOverflow when a sum leaves 32 bits.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    Monomial out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) out.exps_[i] = exps_[i] - divisor.exps_[i];
    return out;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) out.exps_[i] = std::max(exps_[i], o.exps_[i]);
    return out;
  }
  Monomial gcd(const Monomial& o) const {
    Monomial out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) out.exps_[i] = std::min(exps_[i], o.exps_[i]);
    return out;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    return true;
  }
  /// Multiplies every exponent by k with overflow checking.
  Monomial scaled(std::uint64_t k) const;

  /// One bit per variable that occurs; a cheap necessary test for divisibility.
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exps_[i] != 0) m |= 1u << i;
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<Exponent, kMaxVariables> exps_;
};

enum class OrderKind { Lex, GrevLex, Block };

/// Product of graded-reverse-lexicographic blocks. Lex is the all-singleton
/// case; GrevLex is a single block; Block is caller supplied.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder block(std::vector<std::size_t> sizes);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& blocks() const { return blocks_; }

  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> blocks) : kind_(kind), blocks_(std::move(blocks)) {}

  OrderKind kind_;
  std::vector<std::size_t> blocks_;
};

/// Immutable ring descriptor F_p[x_1..x_d] with a monomial order. Cheap to
/// copy; two descriptors compare equal when all of their data agrees.
class Ring {
 public:
  /// Throws InvalidArgument on composite p, empty/duplicate/too many variables,
  /// or a block order that does not partition the variables.
  Ring(std::uint64_t p, std::vector<std::string> variables, std::optional<MonomialOrder> order = std::nullopt);

  const PrimeField& field() const { return data_->field; }
  Coeff characteristic() const { return data_->field.modulus(); }
  std::size_t num_vars() const { return data_->names.size(); }
  const std::vector<std::string>& variables() const { return data_->names; }
  const MonomialOrder& order() const { return data_->order; }

  /// Throws InvalidArgument("unknown variable <name>").
  std::size_t index_of(const std::string& name) const;
  std::optional<std::size_t> find(const std::string& name) const;

  int compare(const Monomial& a, const Monomial& b) const { return data_->order.compare(a, b); }

  /// Same variables and field, different order.
  Ring with_order(MonomialOrder order) const;

  std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Data {
    PrimeField field;
    std::vector<std::string> names;
    MonomialOrder order;
  };
  std::shared_ptr<const Data> data_;
};

/// Builds the ring of the given order tag: "lex", "grevlex".
Ring make_ring(std::uint64_t p, std::vector<std::string> variables, OrderKind kind = OrderKind::GrevLex);

}  // namespace frobcheck
