#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qcnr/bigint.hpp"
#include "qcnr/decoder.hpp"

namespace qcnr {

struct public_key {
    qc_params params;
    gf field;
    mat hpub; // H' = A0 H B0, p x mp, full row rank
};

struct private_key {
    qc_params params;
    gf field;
    mat a0, a0inv;
    parity_check h;
    perm b0;
    // exact decoder when the table fits the budget, otherwise decrypt falls
    // back to ISD on the secret H
    std::shared_ptr<const syndrome_table> table;
};

struct key_pair {
    public_key pub;
    private_key priv;
};

enum class decoder_mode { automatic, table, isd };

struct keygen_options {
    decoder_mode mode = decoder_mode::automatic;
    std::size_t table_budget = std::size_t{1} << 22;
    unsigned keygen_retries = 16; // re-draws of H when certification fails
    unsigned build_retries = 64;  // condition V resampling inside each draw
    bool binary_scrambler = false; // sample A0 from GL_p(F_2) instead of GL_p(F_{2^l})
};

// Builds the syndrome table when the mode and budget allow it; nullptr means
// the ISD route. A collision (code cannot correct t errors) propagates.
inline std::shared_ptr<const syndrome_table> make_decoder_table(const parity_check& h,
                                                                const keygen_options& opt) {
    if (opt.mode == decoder_mode::isd)
        return nullptr;
    const std::size_t need =
        syndrome_table_size(h.params.n(), h.params.t, h.field.size(), opt.table_budget);
    if (need > opt.table_budget) {
        if (opt.mode == decoder_mode::table)
            throw budget_error("keygen: syndrome table exceeds budget");
        return nullptr;
    }
    return std::make_shared<const syndrome_table>(
        build_syndrome_table(h, h.params.t, opt.table_budget));
}

inline key_pair assemble_keypair(parity_check h, mat a0, perm b0,
                                 std::shared_ptr<const syndrome_table> table) {
    const auto& f = h.field;
    if (a0.rows != h.params.p || a0.cols != h.params.p)
        throw parameter_error("assemble_keypair: A0 must be p x p");
    if (b0.size() != h.params.n() || !b0.is_bijection())
        throw parameter_error("assemble_keypair: B0 must be a permutation of n");
    auto a0inv = mat_inverse(f, a0);
    if (!a0inv)
        throw parameter_error("assemble_keypair: A0 is singular");
    mat hpub = apply_perm_cols(mat_mul(f, a0, expand_h(h)), b0);
    return key_pair{public_key{h.params, f, std::move(hpub)},
                    private_key{h.params, f, std::move(a0), std::move(*a0inv), std::move(h),
                                std::move(b0), std::move(table)}};
}

inline key_pair keygen(const gf& field, const qc_params& params, rng& r,
                       const keygen_options& opt = {}) {
    for (unsigned attempt = 0; attempt <= opt.keygen_retries; ++attempt) {
        parity_check h = build_parity_check(field, params, r, opt.build_retries);
        std::shared_ptr<const syndrome_table> table;
        try {
            table = make_decoder_table(h, opt);
        } catch (const table_collision&) {
            continue; // this H cannot correct t errors; draw another
        }
        mat a0 = random_invertible(field, params.p, r, opt.binary_scrambler);
        perm b0 = random_perm(params.n(), r);
        return assemble_keypair(std::move(h), std::move(a0), std::move(b0), std::move(table));
    }
    throw budget_error("keygen: decodability certification kept failing; raise t-distance "
                       "margin or the retry budget");
}

// ---- weight-t plaintext coding ----
//
// Plaintexts are the weight-exactly-t vectors of F_{2^l}^n, indexed
// canonically: supports in colexicographic order (combinadic rank), nonzero
// values as base-(2^l - 1) digits, digit d standing for field element d+1.
// index = support_rank * (2^l - 1)^t + value_rank.

inline bigint plaintext_space(const qc_params& params) {
    bigint v = 1;
    for (std::size_t i = 0; i < params.t; ++i)
        v *= (std::uint32_t{1} << params.l) - 1;
    return binomial(params.n(), params.t) * v;
}

namespace detail {

inline std::vector<std::uint32_t> combinadic_unrank(bigint rank, std::size_t n, std::size_t t) {
    std::vector<std::uint32_t> support(t);
    for (std::size_t i = t; i >= 1; --i) {
        std::size_t c = i - 1;
        while (c + 1 < n && binomial(c + 1, i) <= rank)
            ++c;
        support[i - 1] = static_cast<std::uint32_t>(c);
        rank -= binomial(c, i);
    }
    return support; // ascending
}

inline bigint combinadic_rank(std::span<const std::uint32_t> support) {
    bigint rank = 0;
    for (std::size_t i = 0; i < support.size(); ++i)
        rank += binomial(support[i], i + 1);
    return rank;
}

} // namespace detail

inline std::vector<fe> encode_plaintext(const bigint& index, const qc_params& params) {
    if (index < 0 || index >= plaintext_space(params))
        throw parameter_error("encode_plaintext: index out of range");
    const std::uint32_t nz = (std::uint32_t{1} << params.l) - 1;
    bigint v = 1;
    for (std::size_t i = 0; i < params.t; ++i)
        v *= nz;
    bigint support_rank = index / v;
    bigint value_rank = index % v;
    const auto support = detail::combinadic_unrank(std::move(support_rank), params.n(), params.t);
    std::vector<fe> x(params.n(), 0);
    for (std::size_t i = 0; i < params.t; ++i) {
        const auto digit = static_cast<std::uint32_t>(value_rank % nz);
        value_rank /= nz;
        x[support[i]] = static_cast<fe>(digit + 1);
    }
    return x;
}

inline bigint decode_plaintext(std::span<const fe> x, const qc_params& params) {
    if (x.size() != params.n())
        throw parameter_error("decode_plaintext: length mismatch");
    if (weight_of(x) != params.t)
        throw parameter_error("decode_plaintext: weight must be exactly t");
    const std::uint32_t nz = (std::uint32_t{1} << params.l) - 1;
    std::vector<std::uint32_t> support;
    bigint value_rank = 0, scale = 1;
    for (std::size_t pos = 0; pos < x.size(); ++pos)
        if (x[pos] != 0) {
            support.push_back(static_cast<std::uint32_t>(pos));
            value_rank += scale * (x[pos] - 1);
            scale *= nz;
        }
    bigint v = 1;
    for (std::size_t i = 0; i < params.t; ++i)
        v *= nz;
    return detail::combinadic_rank(support) * v + value_rank;
}

// ---- the protocol ----

inline std::vector<fe> encrypt(const public_key& pk, std::span<const fe> x) {
    if (x.size() != pk.params.n())
        throw parameter_error("encrypt: plaintext length mismatch");
    if (weight_of(x) != pk.params.t)
        throw parameter_error("encrypt: plaintext weight must be exactly t");
    return mat_vec_mul(pk.field, pk.hpub, x);
}

// nullopt = decryption failure (no weight-<=t preimage found). With the
// syndrome-table decoder the answer, when present, is the unique one.
inline std::optional<std::vector<fe>> decrypt(const private_key& sk, std::span<const fe> y,
                                              const isd_config& isd = {}) {
    if (y.size() != sk.params.p)
        throw parameter_error("decrypt: syndrome length mismatch");
    const std::vector<fe> y1 = mat_vec_mul(sk.field, sk.a0inv, y);
    std::optional<std::vector<fe>> e;
    if (sk.table)
        e = table_decode(*sk.table, y1);
    else
        e = isd_decode(sk.h, y1, sk.params.t, isd).error;
    if (!e)
        return std::nullopt;
    return perm_apply(perm_inverse(sk.b0), *e);
}

} // namespace qcnr
