#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sheafpath {

/// Exact arbitrary-precision rational. Weights and accumulated distances are
/// never floating point, so restriction-map equalities are decidable.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3", "22/7" or a decimal such as "0.125" into an exact value.
/// Throws Error(ParseError) on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise (lowest terms).
std::string to_string(const Rational& value);

}  // namespace sheafpath
