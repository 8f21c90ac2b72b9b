#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbn {

/// Arbitrary-precision rational, always kept in canonical (lowest-terms) form.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal such as "0.25" or "-1.5"
/// into an exact fraction. Throws InvalidArgument on malformed text.
Rational parse_rational(std::string_view text);

/// Always renders as "p/q" (e.g. "0/1", "1/1", "3/10").
std::string to_string(const Rational& value);

inline bool in_unit_interval(const Rational& value) { return value >= 0 && value <= 1; }

inline bool in_open_unit_interval(const Rational& value) { return value > 0 && value < 1; }

Rational abs(const Rational& value);

/// Total-variation distance 1/2 * sum |a_i - b_i|. Sizes must match.
Rational total_variation(std::span<const Rational> a, std::span<const Rational> b);

/// Renders a vector as ["p/q", ...].
std::string to_string(std::span<const Rational> values);

}  // namespace cbn
