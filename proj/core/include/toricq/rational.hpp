#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace toricq {

/// Arbitrary-precision integer. Expression templates are disabled so that
/// `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Exact rational number, always kept in lowest terms by GMP.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Canonical "p/q" text form with q > 0. Integers are written as "p/1".
std::string to_string(const Rational& value);

/// Accepts "p/q" or "p". Throws toricq::Error(ParseError) on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);

}  // namespace toricq
