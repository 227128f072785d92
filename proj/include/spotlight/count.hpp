#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace spotlight {

using Count = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

// C(a, b) with the usual convention: 0 whenever b < 0 or b > a.
inline Count binomial(long long a, long long b) {
  if (a < 0) throw std::invalid_argument("binomial: a must be >= 0");
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Count result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

// Render an exact nonnegative rational with three decimals, rounding half up.
inline std::string fixed3(const Ratio& q) {
  Count p = numerator(q) * 1000;
  Count d = denominator(q);
  Count scaled = p / d;
  Count rem = p % d;
  if (2 * rem >= d) ++scaled;
  Count whole = scaled / 1000;
  Count frac = scaled % 1000;
  std::string f = frac.str();
  return whole.str() + "." + std::string(3 - f.size(), '0') + f;
}

}  // namespace spotlight
