#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "qcnr/bigint.hpp"
#include "qcnr/code.hpp"

namespace qcnr {

// ---- Lee-Brickell work factor ----
//
// For the [n = mp, k = (m-1)p] code correcting t errors,
//   Q_i   = C(t,i) C(n-t, k-i) / C(n,k)
//   T_2   = 1 / (Q_0 + Q_1 + Q_2)
//   N_2   = 1 + k + C(k,2)
//   W_min = T_2 ((m-1)^3 p^3 + (m-1) p N_2)

inline bigrat lb_q(std::uint64_t n, std::uint64_t k, std::uint64_t e, std::uint64_t i) {
    if (n == 0 || k > n || e > n)
        throw parameter_error("lb_q: need 0 < n, k <= n, e <= n");
    return bigrat(binomial(e, i) * binomial(n - e, k - i), binomial(n, k));
}

struct work_factor_input {
    std::size_t p = 0, m = 0, t = 0;
    std::size_t n() const { return m * p; }
    std::size_t k() const { return (m - 1) * p; }
};

// Exact rational evaluation, log2 taken at the end.
inline double work_factor_log2(const work_factor_input& in) {
    const std::uint64_t n = in.n(), k = in.k(), t = in.t;
    if (in.p < 1 || in.m < 2 || t < 1 || t > n)
        throw parameter_error("work_factor_log2: invalid (p,m,t)");
    bigint denom = 0; // sum_i C(t,i) C(n-t, k-i), i = 0..2
    for (std::uint64_t i = 0; i <= 2; ++i)
        denom += binomial(t, i) * binomial(n - t, k - i);
    const bigint m1 = in.m - 1, bp = in.p;
    const bigint n2 = 1 + bigint(k) + binomial(k, 2);
    const bigint ops = m1 * m1 * m1 * bp * bp * bp + m1 * bp * n2;
    return log2_bigrat(bigrat(binomial(n, k) * ops, denom));
}

// Smallest m >= 2 whose work factor reaches the requested security level.
inline std::size_t min_m_classical(std::size_t p, std::size_t t, double sec_bits,
                                   std::size_t m_cap = 10000) {
    if (!is_prime(p))
        throw parameter_error("min_m_classical: p must be prime");
    for (std::size_t m = 2; m <= m_cap; ++m)
        if (work_factor_log2({p, m, t}) >= sec_bits)
            return m;
    throw budget_error("min_m_classical: no m within the search cap");
}

// Smallest m with p <= m (log2 m + log2 p) / 4, the quantum-security rule.
// Base-2 logs reproduce the published m_Q column.
inline std::size_t min_m_quantum(std::size_t p) {
    if (p < 2)
        throw parameter_error("min_m_quantum: p must be >= 2");
    const double lp = std::log2(static_cast<double>(p));
    for (std::size_t m = 2;; ++m) {
        const double rhs = static_cast<double>(m) * (std::log2(static_cast<double>(m)) + lp) / 4.0;
        if (static_cast<double>(p) <= rhs)
            return m;
    }
}

// ---- information rate ----
//
// R = log2 S / log2 T with S = C(n,t) (2^l - 1)^t weight-exactly-t
// plaintexts and T = 2^{lp} syndromes; log-gamma keeps it overflow-free.

struct rate_input {
    std::size_t p = 0, m = 0, t = 0;
    unsigned l = 0;
};

inline double log2_binomial(double n, double k) {
    if (k < 0 || k > n)
        return -std::numeric_limits<double>::infinity();
    return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) / std::log(2.0);
}

inline double info_rate(const rate_input& in) {
    const double n = static_cast<double>(in.m) * static_cast<double>(in.p);
    if (in.t > in.m * in.p)
        throw parameter_error("info_rate: t must be <= n");
    const double log2_s = log2_binomial(n, static_cast<double>(in.t)) +
                          static_cast<double>(in.t) * std::log2((1u << in.l) - 1.0);
    const double log2_t = static_cast<double>(in.l) * static_cast<double>(in.p);
    return log2_s / log2_t;
}

// ---- quantum-security bookkeeping ----
//
// |H_0| = |Aut(H)| * |Fix(H)| with |Fix(H)| = 1, |K| = 2 |H_0|^2, and the
// distinguishability bound D_K <= |K|^2 e^{-delta * minimal_degree} evaluated
// at the minimal-degree lower bound p - 1. The premise of the theorem is
// 2^{p^2} <= (mp)^{a m p} for a strict constant 0 < a < 1/4.

struct qsec_report_t {
    std::size_t m_q = 0;
    bool premise_ok = false;
    std::uint64_t h0_size = 0;
    std::uint64_t k_size = 0;
    double dk_bound_log2 = 0.0;
    double delta = 0.0;
    double a = 0.0;
};

inline qsec_report_t qsec_report(std::size_t p, std::size_t m, std::uint64_t aut_size,
                                 double delta = 1.0, double a = 0.249) {
    if (delta <= 0)
        throw parameter_error("qsec_report: delta must be positive");
    if (!(a > 0.0 && a < 0.25))
        throw parameter_error("qsec_report: need 0 < a < 1/4 strictly");
    if (p < 2 || m < 2 || aut_size < 1)
        throw parameter_error("qsec_report: invalid p/m/aut_size");
    qsec_report_t rep;
    rep.delta = delta;
    rep.a = a;
    rep.m_q = min_m_quantum(p);
    rep.h0_size = aut_size; // |Fix(H)| = 1
    rep.k_size = 2 * aut_size * aut_size;
    rep.dk_bound_log2 = 2.0 * std::log2(static_cast<double>(rep.k_size)) -
                        delta * static_cast<double>(p - 1) * std::log2(std::exp(1.0));
    const double np = static_cast<double>(m) * static_cast<double>(p);
    rep.premise_ok = static_cast<double>(p) * static_cast<double>(p) <= a * np * std::log2(np);
    return rep;
}

} // namespace qcnr
