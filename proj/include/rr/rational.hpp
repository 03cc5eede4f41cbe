#pragma once

#include <boost/rational.hpp>

namespace rr {

using Int = long long;
using Rational = boost::rational<Int>;

// boost::rational keeps the denominator positive, so floor division on the
// numerator is all that is needed.
inline Int rational_floor(const Rational& r) {
    Int q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline Int rational_ceil(const Rational& r) {
    Int q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

}  // namespace rr
