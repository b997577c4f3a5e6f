#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace edgeglue {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "a", "-a", "a/b". Throws ParseError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

// Always "num/den" (den = 1 prints as "num/1").
std::string to_fraction_string(const Rational& r);

double to_double(const Rational& r);

Rational pow(const Rational& base, std::uint32_t exponent);

BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace edgeglue
