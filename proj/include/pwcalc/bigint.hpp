#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pwcalc {

// Every quantity in this project is an exact integer; no floating point
// exists anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int num = 1;
    Int den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

} // namespace pwcalc
