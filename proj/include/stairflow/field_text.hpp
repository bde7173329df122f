#pragma once

#include "stairflow/numfield.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace stairflow {

// Text form of field elements: a polynomial in `x` with rational
// coefficients, e.g. `2`, `1/2+3/4*x`, `x^2-1`. Whitespace is ignored.
// Parsed input of any degree is reduced modulo the minimal polynomial.
FieldElement parse_field_element(const FieldContext& context, std::string_view text);

// Canonical text, highest power first: `x^2-1`, `3/4*x+1/2`, `0`.
std::string format_field_element(const FieldElement& a);

// `int` or `int/uint`, optionally signed.
Rational parse_rational(std::string_view text);

// `a,b` with rational a and b.
std::pair<Rational, Rational> parse_rational_pair(std::string_view text);

}  // namespace stairflow
