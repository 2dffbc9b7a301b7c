#pragma once

#include <cstdint>
#include <vector>

#include "qcnr/common.hpp"
#include "qcnr/rng.hpp"

namespace qcnr {

// Polynomials over F_2 packed LSB-first into an integer; bit i is the
// coefficient of x^i.
namespace gf2x {

inline int degree(std::uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

inline std::uint32_t mod(std::uint32_t a, std::uint32_t m) {
    const int dm = degree(m);
    for (int da = degree(a); da >= dm; da = degree(a))
        a ^= m << (da - dm);
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool irreducible(std::uint32_t p) {
    const int d = degree(p);
    if (d < 1)
        return false;
    for (int dd = 1; dd <= d / 2; ++dd)
        for (std::uint32_t q = 1u << dd; q < (2u << dd); ++q)
            if (mod(p, q) == 0)
                return false;
    return true;
}

} // namespace gf2x

// Smallest monic irreducible of degree l, ordered as integers.
inline std::uint32_t smallest_irreducible(unsigned l) {
    if (l < 1 || l > 16)
        throw parameter_error("smallest_irreducible: degree must be in [1,16]");
    for (std::uint32_t cand = 1u << l; cand < (2u << l); ++cand)
        if (gf2x::irreducible(cand))
            return cand;
    return 0; // unreachable: an irreducible of every degree exists
}

// The field F_{2^l} in polynomial basis. Immutable after construction and
// safe to share across threads. Multiplication is table-driven (log/antilog
// over a primitive generator) for l <= 8 and shift-reduce above.
class gf {
  public:
    explicit gf(unsigned l) : gf(l, smallest_irreducible(l)) {}

    gf(unsigned l, std::uint32_t modulus) : l_(l), mod_(modulus) {
        if (l < 1 || l > 16)
            throw parameter_error("gf: degree must be in [1,16]");
        if (gf2x::degree(modulus) != static_cast<int>(l) || !gf2x::irreducible(modulus))
            throw parameter_error("gf: modulus is not a degree-l irreducible");
        if (l_ <= table_limit)
            build_tables();
    }

    unsigned degree() const { return l_; }
    std::uint32_t modulus() const { return mod_; }
    std::uint32_t size() const { return 1u << l_; }
    bool valid(fe a) const { return a < size(); }

    static fe add(fe a, fe b) { return a ^ b; }

    fe mul(fe a, fe b) const {
        if (!log_.empty()) {
            if (a == 0 || b == 0)
                return 0;
            const std::uint32_t ord = size() - 1;
            return exp_[(log_[a] + log_[b]) % ord];
        }
        return mul_shift(a, b);
    }

    fe inv(fe a) const {
        if (a == 0)
            throw std::domain_error("gf::inv: zero has no inverse");
        if (!log_.empty()) {
            const std::uint32_t ord = size() - 1;
            return exp_[(ord - log_[a]) % ord];
        }
        return pow(a, size() - 2);
    }

    fe pow(fe a, std::uint32_t e) const {
        fe r = 1;
        fe base = a;
        while (e) {
            if (e & 1)
                r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    fe random_element(rng& r) const { return static_cast<fe>(r.below(size())); }
    fe random_nonzero(rng& r) const { return static_cast<fe>(1 + r.below(size() - 1)); }

    bool operator==(const gf& o) const { return l_ == o.l_ && mod_ == o.mod_; }

  private:
    static constexpr unsigned table_limit = 8;

    fe mul_shift(fe a, fe b) const {
        std::uint32_t acc = 0, bb = b;
        const std::uint32_t top = 1u << l_;
        for (std::uint32_t aa = a; aa; aa >>= 1) {
            if (aa & 1)
                acc ^= bb;
            bb <<= 1;
            if (bb & top)
                bb ^= mod_;
        }
        return static_cast<fe>(acc);
    }

    // x need not generate the unit group for an arbitrary irreducible
    // modulus, so search for a primitive element first.
    void build_tables() {
        const std::uint32_t q = size(), ord = q - 1;
        fe gen = 0;
        for (std::uint32_t c = 1; c < q && !gen; ++c) {
            fe v = static_cast<fe>(c);
            std::uint32_t k = 1;
            fe acc = v;
            while (acc != 1) {
                acc = mul_shift(acc, v);
                ++k;
            }
            if (k == ord)
                gen = v;
        }
        exp_.assign(q, 0);
        log_.assign(q, 0);
        fe acc = 1;
        for (std::uint32_t i = 0; i < ord; ++i) {
            exp_[i] = acc;
            log_[acc] = i;
            acc = mul_shift(acc, gen);
        }
    }

    unsigned l_;
    std::uint32_t mod_;
    std::vector<fe> exp_, log_;
};

} // namespace qcnr
