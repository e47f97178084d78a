#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace widthlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(x, y) for any integers, zero outside 0 <= y <= x. Exact.
BigInt binom_ext(std::int64_t x, std::int64_t y);

/// Floor of a non-negative or negative rational.
BigInt floor_rational(const Rational& r);
BigInt ceil_div(const BigInt& a, const BigInt& b);

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& r);

}  // namespace widthlab
