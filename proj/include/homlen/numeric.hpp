#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace homlen {

using Rational = boost::multiprecision::cpp_rational;

// Exact value of a finite double.
Rational to_rational(double x);

// Shortest decimal that round-trips to the same double ("1", "0.8098765432098762").
std::string format_double(double x);
std::optional<double> parse_double(std::string_view text);

// "p/q" in lowest terms, or "p" when q = 1.
std::string format_rational(const Rational& q);

} // namespace homlen
