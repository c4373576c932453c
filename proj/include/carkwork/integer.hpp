#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace carkwork {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Floor of the square root; `n` must be non-negative.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

inline int sign(const Integer& n) { return n.sign(); }

/// Number of bits in |n|; 0 for n == 0.
std::size_t bit_length(const Integer& n);

Integer gcd(const Integer& a, const Integer& b);

/// Floor division (rounds toward negative infinity), `d` != 0.
Integer floor_div(const Integer& n, const Integer& d);

/// Non-negative remainder in [0, |d|).
Integer floor_mod(const Integer& n, const Integer& d);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// n / d with d != 0; the sign is moved to the numerator.
Rational ratio(Integer n, Integer d);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

double to_double(const Integer& n);
double to_double(const Rational& q);

}  // namespace carkwork
