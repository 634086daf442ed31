#include "homlen/numeric.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <system_error>

namespace homlen {

Rational to_rational(double x) {
  if (!std::isfinite(x))
    throw std::domain_error("non-finite bound value");
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // 53 significant bits fit in an int64 after scaling.
  auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  boost::multiprecision::cpp_int numerator = scaled;
  boost::multiprecision::cpp_int denominator = 1;
  if (exponent >= 0)
    numerator <<= exponent;
  else
    denominator <<= -exponent;
  return Rational(numerator, denominator);
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{})
    throw std::runtime_error("double formatting failed");
  return std::string(buf, end);
}

std::optional<double> parse_double(std::string_view text) {
  double value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    return std::nullopt;
  return value;
}

std::string format_rational(const Rational& q) { return q.str(); }

} // namespace homlen
