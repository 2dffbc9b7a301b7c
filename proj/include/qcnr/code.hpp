#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "qcnr/matrix.hpp"

namespace qcnr {

inline bool is_prime(std::size_t n) {
    if (n < 2)
        return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Parameters of an [n = mp, k = (m-1)p] rate-(m-1)/m quasi-cyclic code over
// F_{2^l} correcting t errors.
struct qc_params {
    unsigned l = 0;
    std::size_t p = 0, m = 0, t = 0;

    // m is required to stay polynomial in p; the configured bound is m <= p^2.
    static constexpr unsigned poly_bound_exp = 2;

    std::size_t n() const { return m * p; }
    std::size_t k() const { return (m - 1) * p; }

    void validate() const {
        if (l < 1 || l > 16)
            throw parameter_error("qc_params: l must be in [1,16]");
        if (!is_prime(p))
            throw parameter_error("qc_params: p must be prime");
        if (m < 2)
            throw parameter_error("qc_params: m must be at least 2");
        std::size_t bound = 1;
        for (unsigned i = 0; i < poly_bound_exp; ++i)
            bound *= p;
        if (m > bound)
            throw parameter_error("qc_params: m exceeds the polynomial bound p^2");
        if (t < 1 || t > n())
            throw parameter_error("qc_params: t must be in [1, mp]");
    }

    bool operator==(const qc_params&) const = default;
};

// H = [I | C_1 | ... | C_{m-1}] held as the m-1 circulant first rows, plus
// the distinguished pair (a, b) that appears exactly once per column of C_1
// and never together in any other block.
struct parity_check {
    qc_params params;
    gf field;
    std::vector<circulant> blocks;
    fe mark_a = 0, mark_b = 0;
};

struct condition_report {
    bool block_sizes = false;      // I: p prime, 2 <= m <= p^2
    bool shape = false;            // II: m-1 circulant first rows of length p
    bool nonbinary_blocks = false; // III: every block holds an element outside F_2
    bool marked_pair = false;      // IV': certifies IV (T_H not 2-transitive)
    bool distinct_columns = false; // V: all (m-1)p columns of C pairwise distinct
    bool pass() const {
        return block_sizes && shape && nonbinary_blocks && marked_pair && distinct_columns;
    }
};

namespace detail {

// Column j of block bi, as a length-p vector.
inline std::vector<fe> block_column(const circulant& c, std::size_t j) {
    std::vector<fe> v(c.p);
    for (std::size_t r = 0; r < c.p; ++r)
        v[r] = c.first_row[(j + c.p - r) % c.p];
    return v;
}

inline bool columns_distinct(const parity_check& h) {
    std::set<std::vector<fe>> seen;
    for (const auto& blk : h.blocks)
        for (std::size_t j = 0; j < blk.p; ++j)
            if (!seen.insert(block_column(blk, j)).second)
                return false;
    return true;
}

} // namespace detail

inline condition_report verify_conditions(const parity_check& h) {
    condition_report rep;
    const auto& P = h.params;

    std::size_t bound = 1;
    for (unsigned i = 0; i < qc_params::poly_bound_exp; ++i)
        bound *= P.p;
    rep.block_sizes = is_prime(P.p) && P.m >= 2 && P.m <= bound;

    rep.shape = !h.blocks.empty() && h.blocks.size() == P.m - 1 && h.field.degree() == P.l;
    for (const auto& blk : h.blocks)
        if (blk.p != P.p || blk.first_row.size() != P.p)
            rep.shape = false;
    if (!rep.shape)
        return rep;

    rep.nonbinary_blocks = true;
    for (const auto& blk : h.blocks) {
        bool has = false;
        for (fe v : blk.first_row)
            has = has || v > 1;
        rep.nonbinary_blocks = rep.nonbinary_blocks && has;
    }

    // IV': a != b, one of them non-binary, each exactly once in C_1's first
    // row (hence once per column), and no later block holding both.
    const fe a = h.mark_a, b = h.mark_b;
    rep.marked_pair = a != b && (a > 1 || b > 1);
    const auto& c1 = h.blocks.front().first_row;
    rep.marked_pair = rep.marked_pair && std::count(c1.begin(), c1.end(), a) == 1 &&
                      std::count(c1.begin(), c1.end(), b) == 1;
    for (std::size_t i = 1; i < h.blocks.size(); ++i) {
        const auto& row = h.blocks[i].first_row;
        const bool has_a = std::find(row.begin(), row.end(), a) != row.end();
        const bool has_b = std::find(row.begin(), row.end(), b) != row.end();
        if (has_a && has_b)
            rep.marked_pair = false;
    }

    rep.distinct_columns = detail::columns_distinct(h);
    return rep;
}

// The IV' construction: place a (non-binary) and b at two random distinct
// positions of C_1's first row, keep a and b out of the rest of C_1, keep b
// out of every later block, and resample until condition V holds.
inline parity_check build_parity_check(const gf& field, const qc_params& params, rng& r,
                                       unsigned retry_budget = 64) {
    params.validate();
    if (field.degree() != params.l)
        throw parameter_error("build_parity_check: field degree does not match params.l");
    if (field.size() < 3)
        throw parameter_error("build_parity_check: need 2^l >= 3 for a non-binary entry");
    if (params.p == 2)
        throw parameter_error("build_parity_check: p must be an odd prime");

    const std::size_t p = params.p;
    const std::uint32_t q = field.size();

    parity_check h{params, field, {}, 0, 0};
    // a non-binary, b any other element
    h.mark_a = static_cast<fe>(2 + r.below(q - 2));
    h.mark_b = static_cast<fe>(r.below(q - 1));
    if (h.mark_b >= h.mark_a)
        ++h.mark_b;

    // elements available for the rest of C_1 / for later blocks
    std::vector<fe> not_ab, not_b, not_b_nonbinary;
    for (std::uint32_t v = 0; v < q; ++v) {
        if (v != h.mark_a && v != h.mark_b)
            not_ab.push_back(static_cast<fe>(v));
        if (v != h.mark_b) {
            not_b.push_back(static_cast<fe>(v));
            if (v > 1)
                not_b_nonbinary.push_back(static_cast<fe>(v));
        }
    }

    for (unsigned attempt = 0; attempt <= retry_budget; ++attempt) {
        h.blocks.clear();

        circulant c1{p, std::vector<fe>(p, 0)};
        const std::size_t pos_a = r.below(p);
        std::size_t pos_b = r.below(p - 1);
        if (pos_b >= pos_a)
            ++pos_b;
        for (std::size_t j = 0; j < p; ++j)
            c1.first_row[j] = not_ab[r.below(not_ab.size())];
        c1.first_row[pos_a] = h.mark_a;
        c1.first_row[pos_b] = h.mark_b;
        h.blocks.push_back(std::move(c1));

        for (std::size_t i = 2; i < params.m; ++i) {
            circulant ci{p, std::vector<fe>(p, 0)};
            for (std::size_t j = 0; j < p; ++j)
                ci.first_row[j] = not_b[r.below(not_b.size())];
            const bool has_nonbinary =
                std::any_of(ci.first_row.begin(), ci.first_row.end(), [](fe v) { return v > 1; });
            if (!has_nonbinary)
                ci.first_row[r.below(p)] = not_b_nonbinary[r.below(not_b_nonbinary.size())];
            h.blocks.push_back(std::move(ci));
        }

        if (detail::columns_distinct(h))
            return h;
    }
    throw budget_error("build_parity_check: condition V still failing after retry budget");
}

// Dense p x mp matrix [I | C_1 | ... | C_{m-1}].
inline mat expand_h(const parity_check& h) {
    const std::size_t p = h.params.p;
    mat out(p, h.params.n());
    for (std::size_t i = 0; i < p; ++i)
        out.at(i, i) = 1;
    for (std::size_t bi = 0; bi < h.blocks.size(); ++bi) {
        const mat blk = circulant_expand(h.blocks[bi]);
        const std::size_t off = (bi + 1) * p;
        for (std::size_t rr = 0; rr < p; ++rr)
            for (std::size_t c = 0; c < p; ++c)
                out.at(rr, off + c) = blk.at(rr, c);
    }
    return out;
}

// Just the C part (p x (m-1)p), the object the automorphism lemmas act on.
inline mat expand_c(const parity_check& h) {
    const std::size_t p = h.params.p;
    mat out(p, h.params.k());
    for (std::size_t bi = 0; bi < h.blocks.size(); ++bi) {
        const mat blk = circulant_expand(h.blocks[bi]);
        for (std::size_t rr = 0; rr < p; ++rr)
            for (std::size_t c = 0; c < p; ++c)
                out.at(rr, bi * p + c) = blk.at(rr, c);
    }
    return out;
}

} // namespace qcnr
