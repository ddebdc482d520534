#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hesscalc {

/// Exact coefficient types. Schubert-side computations use arbitrary-precision
/// integers; Groebner-side computations use exact rationals. No floating point
/// appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// base^e for e >= 0 by binary powering.
inline Rat rat_pow(Rat base, int e) {
    Rat out = 1;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

} // namespace hesscalc
