#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace heisrep {

// Exact arithmetic everywhere: unbounded integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// a mod r normalized into [0, r)
inline Int imod(const Int& a, const Int& r) {
    Int m = a % r;
    if (m < 0) m += r;
    return m;
}

inline Int idot(const std::vector<Int>& x, const std::vector<Int>& y) {
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

} // namespace heisrep
