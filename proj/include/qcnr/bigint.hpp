#pragma once

#include <cmath>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcnr/common.hpp"

namespace qcnr {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

inline bigint binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    bigint r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) after each step
    }
    return r;
}

inline double log2_bigint(const bigint& v) {
    if (v <= 0)
        throw parameter_error("log2_bigint: argument must be positive");
    const std::uint64_t bits = boost::multiprecision::msb(v); // floor(log2 v)
    if (bits <= 62)
        return std::log2(static_cast<double>(v));
    const bigint top = v >> (bits - 62);
    return std::log2(static_cast<double>(top)) + static_cast<double>(bits - 62);
}

inline double log2_bigrat(const bigrat& v) {
    return log2_bigint(boost::multiprecision::numerator(v)) -
           log2_bigint(boost::multiprecision::denominator(v));
}

} // namespace qcnr
