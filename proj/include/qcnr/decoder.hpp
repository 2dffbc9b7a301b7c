#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qcnr/code.hpp"

namespace qcnr {

// The code cannot correct t errors: two distinct weight-<=t vectors share a
// syndrome. Keygen treats this as a signal to resample the code.
struct table_collision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string pack_syndrome(std::span<const fe> y) {
    std::string s(y.size() * 2, '\0');
    for (std::size_t i = 0; i < y.size(); ++i) {
        s[2 * i] = static_cast<char>(y[i] & 0xff);
        s[2 * i + 1] = static_cast<char>(y[i] >> 8);
    }
    return s;
}

// weight-<=t vectors as sparse (position, value) lists, ascending positions
using sparse_vec = std::vector<std::pair<std::uint32_t, fe>>;

template <typename Fn>
void for_each_weight_le(std::size_t n, std::size_t t, std::uint32_t q, Fn&& fn) {
    sparse_vec cur;
    auto rec = [&](auto&& self, std::size_t first_pos, std::size_t budget) -> void {
        fn(static_cast<const sparse_vec&>(cur));
        if (budget == 0)
            return;
        for (std::size_t pos = first_pos; pos < n; ++pos)
            for (std::uint32_t v = 1; v < q; ++v) {
                cur.emplace_back(static_cast<std::uint32_t>(pos), static_cast<fe>(v));
                self(self, pos + 1, budget - 1);
                cur.pop_back();
            }
    };
    rec(rec, 0, t);
}

inline std::vector<fe> densify(const sparse_vec& s, std::size_t n) {
    std::vector<fe> v(n, 0);
    for (auto [pos, val] : s)
        v[pos] = val;
    return v;
}

} // namespace detail

// Exact decoder: complete map syndrome -> unique weight-<=t error. Building
// it certifies minimum distance >= 2t+1 as a byproduct.
struct syndrome_table {
    qc_params params;
    std::size_t t = 0;
    std::unordered_map<std::string, detail::sparse_vec> lookup;
};

inline std::size_t syndrome_table_size(std::size_t n, std::size_t t, std::uint32_t q,
                                       std::size_t budget) {
    // sum_{i<=t} C(n,i)(q-1)^i with saturation at the budget
    std::size_t total = 0;
    for (std::size_t i = 0; i <= t; ++i) {
        long double term = 1.0L;
        for (std::size_t j = 0; j < i; ++j)
            term = term * static_cast<long double>(n - j) / static_cast<long double>(j + 1) *
                   static_cast<long double>(q - 1);
        if (term > static_cast<long double>(budget) * 2)
            return budget + 1;
        total += static_cast<std::size_t>(term + 0.5L);
        if (total > budget)
            return budget + 1;
    }
    return total;
}

inline syndrome_table build_syndrome_table(const parity_check& h, std::size_t t,
                                           std::size_t budget = std::size_t{1} << 22) {
    const std::size_t n = h.params.n();
    const std::uint32_t q = h.field.size();
    if (syndrome_table_size(n, t, q, budget) > budget)
        throw budget_error("build_syndrome_table: table size exceeds budget");

    const mat hm = expand_h(h);
    const gf& f = h.field;
    syndrome_table tbl{h.params, t, {}};
    detail::for_each_weight_le(n, t, q, [&](const detail::sparse_vec& e) {
        std::vector<fe> y(h.params.p, 0);
        for (auto [pos, val] : e)
            for (std::size_t r = 0; r < h.params.p; ++r)
                y[r] ^= f.mul(hm.at(r, pos), val);
        auto [it, inserted] = tbl.lookup.emplace(detail::pack_syndrome(y), e);
        if (!inserted)
            throw table_collision("build_syndrome_table: two weight-<=t errors share a syndrome");
    });
    return tbl;
}

inline std::optional<std::vector<fe>> table_decode(const syndrome_table& tbl,
                                                   std::span<const fe> y) {
    const auto it = tbl.lookup.find(detail::pack_syndrome(y));
    if (it == tbl.lookup.end())
        return std::nullopt;
    return detail::densify(it->second, tbl.params.n());
}

// Lee-Brickell style information-set decoding on the known H: guess a size-p
// column set, invert, allow up to `depth` error positions outside it.
struct isd_config {
    std::size_t max_iterations = 2000;
    unsigned depth = 2; // 0 = plain Prange
    std::uint64_t seed = 0;
};

struct isd_result {
    std::optional<std::vector<fe>> error;
    std::size_t iterations = 0;
};

inline isd_result isd_decode(const parity_check& h, std::span<const fe> y, std::size_t t,
                             const isd_config& cfg = {}) {
    if (cfg.depth > 2)
        throw parameter_error("isd_decode: depth must be in [0,2]");
    if (cfg.max_iterations < 1)
        throw parameter_error("isd_decode: max_iterations must be >= 1");
    const std::size_t p = h.params.p, n = h.params.n();
    if (y.size() != p)
        throw parameter_error("isd_decode: syndrome length mismatch");

    if (weight_of(y) == 0)
        return {std::vector<fe>(n, 0), 1};

    const mat hm = expand_h(h);
    const gf& f = h.field;
    const std::uint32_t q = f.size();
    rng r(cfg.seed);

    std::vector<std::uint32_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = static_cast<std::uint32_t>(i);

    const std::vector<fe> yv(y.begin(), y.end());
    auto verify = [&](const std::vector<fe>& e) {
        return weight_of(e) <= t && mat_vec_mul(f, hm, e) == yv;
    };

    for (std::size_t iter = 1; iter <= cfg.max_iterations; ++iter) {
        // uniform p-subset of columns, then sorted for a stable layout
        for (std::size_t i = 0; i < p; ++i) {
            const std::size_t j = i + r.below(n - i);
            std::swap(idx[i], idx[j]);
        }
        std::vector<std::uint32_t> sel(idx.begin(), idx.begin() + p);
        std::sort(sel.begin(), sel.end());

        mat hs(p, p);
        for (std::size_t c = 0; c < p; ++c)
            for (std::size_t rr = 0; rr < p; ++rr)
                hs.at(rr, c) = hm.at(rr, sel[c]);
        const auto hs_inv = mat_inverse(f, hs);
        if (!hs_inv)
            continue;

        std::vector<std::uint32_t> outside;
        outside.reserve(n - p);
        {
            std::vector<bool> in(n, false);
            for (auto s : sel)
                in[s] = true;
            for (std::size_t i = 0; i < n; ++i)
                if (!in[i])
                    outside.push_back(static_cast<std::uint32_t>(i));
        }

        auto attempt = [&](std::span<const fe> rhs,
                           const detail::sparse_vec& extra) -> std::optional<std::vector<fe>> {
            const std::vector<fe> es = mat_vec_mul(f, *hs_inv, rhs);
            if (weight_of(es) + extra.size() > t)
                return std::nullopt;
            std::vector<fe> e(n, 0);
            for (std::size_t c = 0; c < p; ++c)
                e[sel[c]] = es[c];
            for (auto [pos, val] : extra)
                e[pos] = val;
            if (!verify(e))
                return std::nullopt;
            return e;
        };

        if (auto e = attempt(y, {}))
            return {std::move(e), iter};

        if (cfg.depth >= 1) {
            std::vector<fe> rhs(y.begin(), y.end());
            for (std::size_t a = 0; a < outside.size(); ++a)
                for (std::uint32_t va = 1; va < q; ++va) {
                    std::vector<fe> r1 = rhs;
                    for (std::size_t rr = 0; rr < p; ++rr)
                        r1[rr] ^= f.mul(hm.at(rr, outside[a]), static_cast<fe>(va));
                    if (auto e = attempt(r1, {{outside[a], static_cast<fe>(va)}}))
                        return {std::move(e), iter};
                    if (cfg.depth >= 2)
                        for (std::size_t b = a + 1; b < outside.size(); ++b)
                            for (std::uint32_t vb = 1; vb < q; ++vb) {
                                std::vector<fe> r2 = r1;
                                for (std::size_t rr = 0; rr < p; ++rr)
                                    r2[rr] ^= f.mul(hm.at(rr, outside[b]), static_cast<fe>(vb));
                                if (auto e = attempt(r2, {{outside[a], static_cast<fe>(va)},
                                                          {outside[b], static_cast<fe>(vb)}}))
                                    return {std::move(e), iter};
                            }
                }
        }
    }
    return {std::nullopt, cfg.max_iterations};
}

} // namespace qcnr
