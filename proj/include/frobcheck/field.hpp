#pragma once

#include <cstdint>
#include <ostream>

#include "frobcheck/errors.hpp"

namespace frobcheck {

using Coeff = std::uint32_t;

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

/// Deterministic primality test for 64-bit inputs (trial division is enough
/// below 2^31, but Miller-Rabin keeps ring construction cheap).
bool is_prime(std::uint64_t n);

/// Arithmetic in F_p with p prime, 2 <= p <= 2^31. Residues live in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  Coeff modulus() const { return p_; }

  Coeff reduce(std::uint64_t a) const { return static_cast<Coeff>(a % p_); }
  Coeff reduce_signed(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const { return static_cast<Coeff>((std::uint64_t{a} * b) % p_); }
  Coeff pow(Coeff a, std::uint64_t e) const;
  /// Throws InvalidArgument on zero.
  Coeff inv(Coeff a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Coeff p_;
};

/// A reduced residue tagged with its modulus.
class FieldElement {
 public:
  FieldElement(std::int64_t value, const PrimeField& field)
      : residue_(field.reduce_signed(value)), field_(field) {}

  Coeff residue() const { return residue_; }
  Coeff modulus() const { return field_.modulus(); }
  const PrimeField& field() const { return field_; }

  FieldElement operator+(const FieldElement& o) const { return make(field_.add(residue_, o.checked(field_))); }
  FieldElement operator-(const FieldElement& o) const { return make(field_.sub(residue_, o.checked(field_))); }
  FieldElement operator*(const FieldElement& o) const { return make(field_.mul(residue_, o.checked(field_))); }
  FieldElement operator-() const { return make(field_.neg(residue_)); }
  FieldElement inverse() const { return make(field_.inv(residue_)); }
  FieldElement pow(std::uint64_t e) const { return make(field_.pow(residue_, e)); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.residue_ == b.residue_ && a.field_ == b.field_;
  }
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.residue_; }

 private:
  FieldElement make(Coeff r) const {
    FieldElement out = *this;
    out.residue_ = r;
    return out;
  }
  Coeff checked(const PrimeField& f) const {
    if (!(f == field_)) throw RingMismatch();
    return residue_;
  }

  Coeff residue_;
  PrimeField field_;
};

}  // namespace frobcheck
