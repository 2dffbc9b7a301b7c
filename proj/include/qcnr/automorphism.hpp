#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qcnr/code.hpp"

namespace qcnr {

// Brute-force findings about Aut(H) and T_H on a toy instance.
struct aut_report {
    std::uint64_t aut_size = 0;
    std::uint64_t t_set_size = 0;
    std::size_t minimal_degree = 0; // over non-identity elements of Aut(H) on mp points
    bool two_transitive = false;    // of T_H acting on p points
    bool block_diagonal_all = false;
    bool mu_in_t_set = false;
    std::vector<perm> t_set; // the P1 members, on p points
    std::vector<perm> p2_of; // the unique matching P2 per member, on (m-1)p points
};

inline std::uint64_t factorial_capped(std::size_t n, std::uint64_t cap) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
        if (f > cap)
            return cap + 1;
    }
    return f;
}

// Orbit of the ordered pair (0,1) under the monoid closure of the elements;
// a single orbit of size n(n-1) means 2-transitivity. Works for a full
// element list or any generating set.
inline bool is_two_transitive(std::size_t npoints, const std::vector<perm>& elements) {
    if (npoints < 2)
        return false;
    std::set<std::pair<std::uint32_t, std::uint32_t>> orbit;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> frontier{{0, 1}};
    orbit.insert({0, 1});
    while (!frontier.empty()) {
        const auto [x, y] = frontier.back();
        frontier.pop_back();
        for (const auto& g : elements) {
            const std::pair<std::uint32_t, std::uint32_t> nxt{g.images[x], g.images[y]};
            if (orbit.insert(nxt).second)
                frontier.push_back(nxt);
        }
    }
    return orbit.size() == npoints * (npoints - 1);
}

// Membership in Aut(H) with the scrambler over F_2, the group the
// hidden-subgroup reduction lives in. A with A (H P) = H is unique because
// H has full row rank, so solve for it through a column basis and demand
// binary entries. (Over the full extension field extra non-block-diagonal
// automorphisms exist already at p=3, l=2, and the block-diagonal lemma
// would be false.)
inline bool is_f2_automorphism(const gf& f, const mat& hm, const perm& p) {
    const mat hp = apply_perm_cols(hm, p);
    const std::size_t rows = hm.rows;

    // first `rows` linearly independent columns of hp
    std::vector<std::size_t> basis;
    for (std::size_t c = 0; c < hp.cols && basis.size() < rows; ++c) {
        mat trial(rows, basis.size() + 1);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t i = 0; i < basis.size(); ++i)
                trial.at(r, i) = hp.at(r, basis[i]);
            trial.at(r, basis.size()) = hp.at(r, c);
        }
        if (mat_rank(f, trial) == basis.size() + 1)
            basis.push_back(c);
    }
    if (basis.size() < rows)
        return false;

    mat s(rows, rows), target(rows, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < rows; ++c) {
            s.at(r, c) = hp.at(r, basis[c]);
            target.at(r, c) = hm.at(r, basis[c]);
        }
    const auto s_inv = mat_inverse(f, s);
    if (!s_inv)
        return false;
    const mat a = mat_mul(f, target, *s_inv);
    for (fe v : a.a)
        if (v > 1)
            return false;
    return mat_mul(f, a, hp) == hm;
}

// Enumerate P1 over S_p; condition V makes the matching P2 unique when it
// exists (no two columns of C are identical), and each found pair is
// re-verified as a genuine automorphism P1^{-1} (+) P2 of H with the
// explicit scrambler A = P1.
inline aut_report brute_aut(const parity_check& h, std::uint64_t cap = 5040) {
    const std::size_t p = h.params.p;
    if (factorial_capped(p, cap) > cap)
        throw budget_error("brute_aut: p! exceeds the cap");

    const gf& f = h.field;
    const mat c = expand_c(h);
    const mat hm = expand_h(h);
    const std::size_t kc = c.cols;

    std::map<std::vector<fe>, std::uint32_t> col_index;
    for (std::size_t j = 0; j < kc; ++j)
        col_index.emplace(c.column(j), static_cast<std::uint32_t>(j));

    aut_report rep;
    std::vector<std::uint32_t> sigma(p);
    for (std::size_t i = 0; i < p; ++i)
        sigma[i] = static_cast<std::uint32_t>(i);

    std::size_t min_moved = h.params.n() + 1;
    do {
        // row i of P1 C is row sigma[i] of C; find where each column of
        // P1 C sits inside C
        perm p2;
        p2.images.assign(kc, 0);
        bool ok = true;
        std::vector<bool> hit(kc, false);
        std::vector<fe> colbuf(p);
        for (std::size_t j = 0; j < kc && ok; ++j) {
            for (std::size_t i = 0; i < p; ++i)
                colbuf[i] = c.at(sigma[i], j);
            const auto it = col_index.find(colbuf);
            if (it == col_index.end() || hit[it->second]) {
                ok = false;
                break;
            }
            hit[it->second] = true;
            p2.images[j] = it->second;
        }
        if (!ok)
            continue;

        perm p1{sigma};
        ++rep.t_set_size;

        // the automorphism this pair induces: P = P1^{-1} (+) P2, A = P1
        const perm q1 = perm_inverse(p1);
        perm full;
        full.images.reserve(h.params.n());
        for (auto v : q1.images)
            full.images.push_back(v);
        for (auto v : p2.images)
            full.images.push_back(v + static_cast<std::uint32_t>(p));
        mat a(p, p);
        for (std::size_t i = 0; i < p; ++i)
            a.at(i, p1.images[i]) = 1;
        if (mat_mul(f, a, apply_perm_cols(hm, full)) == hm)
            ++rep.aut_size;

        if (!full.is_identity())
            min_moved = std::min(min_moved, full.moved_points());
        rep.t_set.push_back(std::move(p1));
        rep.p2_of.push_back(std::move(p2));
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    rep.minimal_degree = (min_moved == h.params.n() + 1) ? 0 : min_moved;
    rep.block_diagonal_all = true; // by construction of the reconstruction
    rep.two_transitive = is_two_transitive(p, rep.t_set);

    perm mu = perm::identity(p);
    for (std::size_t i = 0; i < p; ++i)
        mu.images[i] = static_cast<std::uint32_t>((i + 1) % p);
    rep.mu_in_t_set = std::find(rep.t_set.begin(), rep.t_set.end(), mu) != rep.t_set.end();
    return rep;
}

// Full S_n sweep (p = 3, m = 2 scale): membership of every permutation by
// solving for the unique scrambler and requiring it binary, then agreement
// with brute_aut's reconstruction and block-diagonality of every member.
inline bool full_aut_crosscheck(const parity_check& h, std::uint64_t cap = 720) {
    const std::size_t n = h.params.n(), p = h.params.p;
    if (factorial_capped(n, cap) > cap)
        throw budget_error("full_aut_crosscheck: (mp)! exceeds the cap");

    const gf& f = h.field;
    const mat hm = expand_h(h);

    std::set<std::vector<std::uint32_t>> members;
    std::vector<std::uint32_t> pi(n);
    for (std::size_t i = 0; i < n; ++i)
        pi[i] = static_cast<std::uint32_t>(i);
    do {
        if (is_f2_automorphism(f, hm, perm{pi}))
            members.insert(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));

    for (const auto& im : members)
        for (std::size_t i = 0; i < p; ++i)
            if (im[i] >= p)
                return false; // non-block-diagonal member

    const aut_report rep = brute_aut(h, cap);
    if (members.size() != rep.t_set.size() || rep.aut_size != rep.t_set_size)
        return false;
    std::set<std::vector<std::uint32_t>> rebuilt;
    for (std::size_t i = 0; i < rep.t_set.size(); ++i) {
        std::vector<std::uint32_t> im = perm_inverse(rep.t_set[i]).images;
        for (auto v : rep.p2_of[i].images)
            im.push_back(v + static_cast<std::uint32_t>(p));
        rebuilt.insert(std::move(im));
    }
    return rebuilt == members;
}

} // namespace qcnr
