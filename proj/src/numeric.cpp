#include "widthlab/numeric.hpp"

#include <utility>

namespace widthlab {

BigInt binom_ext(std::int64_t x, std::int64_t y) {
  if (y < 0 || y > x) return 0;
  if (y > x - y) y = x - y;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= y; ++i) {
    result *= x - y + i;
    result /= i;
  }
  return result;
}

BigInt floor_rational(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a > 0) == (b > 0))) q += 1;
  return q;
}

std::string to_string(const Rational& r) {
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

}  // namespace widthlab
