#ifndef CRN_RATIONAL_HPP
#define CRN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-7", "2/5" or a decimal like "0.25" (converted exactly).
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

std::vector<std::string> format_rational_vector(const std::vector<Rational>& v);

}  // namespace crn

#endif
