#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frobcheck/polynomial.hpp"
#include "frobcheck/ring.hpp"

namespace frobcheck {

/// Where a piece of text starts inside a larger document, so that errors
/// from embedded expressions point at the right script location.
struct SourceOffset {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Polynomial text: sums of terms, terms are products of factors, factors
/// are decimal numbers, variables or parenthesized expressions with an
/// optional "^exponent". Whitespace is insignificant; a number followed by a
/// factor multiplies ("2x" == "2*x").
Polynomial parse_poly(const Ring& ring, std::string_view text, SourceOffset where = {});

/// Comma separated polynomials, optionally wrapped in one pair of parentheses:
/// "(x, y^2)" or "x, y^2". An empty list "()" denotes the zero ideal.
std::vector<Polynomial> parse_poly_list(const Ring& ring, std::string_view text, SourceOffset where = {});

/// Ring text: "F5[x,y,z]" or "F_5[x,y,z]", optionally followed by an order
/// tag "lex" or "grevlex".
Ring parse_ring(std::string_view text, SourceOffset where = {});

std::string format_poly_list(const std::vector<Polynomial>& polys);

}  // namespace frobcheck
