#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcnr/gf.hpp"

namespace qcnr {

// Dense row-major matrix over one field.
struct mat {
    std::size_t rows = 0, cols = 0;
    std::vector<fe> a;

    mat() = default;
    mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    fe& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    fe at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static mat identity(std::size_t n) {
        mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    std::vector<fe> column(std::size_t c) const {
        std::vector<fe> v(rows);
        for (std::size_t r = 0; r < rows; ++r)
            v[r] = at(r, c);
        return v;
    }

    bool operator==(const mat&) const = default;
};

// Permutation on {0..n-1}; images[i] is where position i maps.
struct perm {
    std::vector<std::uint32_t> images;

    perm() = default;
    explicit perm(std::vector<std::uint32_t> im) : images(std::move(im)) {}

    std::size_t size() const { return images.size(); }

    static perm identity(std::size_t n) {
        perm p;
        p.images.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            p.images[i] = static_cast<std::uint32_t>(i);
        return p;
    }

    bool is_bijection() const {
        std::vector<bool> seen(images.size(), false);
        for (auto v : images) {
            if (v >= images.size() || seen[v])
                return false;
            seen[v] = true;
        }
        return true;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < images.size(); ++i)
            if (images[i] != i)
                return false;
        return true;
    }

    std::size_t moved_points() const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < images.size(); ++i)
            if (images[i] != i)
                ++c;
        return c;
    }

    bool operator==(const perm&) const = default;
};

// Circulant of size p, determined by its first row; row r is the first row
// rotated right r times.
struct circulant {
    std::size_t p = 0;
    std::vector<fe> first_row;

    circulant() = default;
    circulant(std::size_t p_, std::vector<fe> fr) : p(p_), first_row(std::move(fr)) {}

    bool operator==(const circulant&) const = default;
};

inline mat circulant_expand(const circulant& c) {
    mat m(c.p, c.p);
    for (std::size_t r = 0; r < c.p; ++r)
        for (std::size_t j = 0; j < c.p; ++j)
            m.at(r, j) = c.first_row[(j + c.p - r) % c.p];
    return m;
}

inline mat mat_mul(const gf& f, const mat& x, const mat& y) {
    if (x.cols != y.rows)
        throw parameter_error("mat_mul: dimension mismatch");
    mat out(x.rows, y.cols);
    for (std::size_t r = 0; r < x.rows; ++r)
        for (std::size_t s = 0; s < x.cols; ++s) {
            const fe xv = x.at(r, s);
            if (xv == 0)
                continue;
            for (std::size_t c = 0; c < y.cols; ++c)
                out.at(r, c) ^= f.mul(xv, y.at(s, c));
        }
    return out;
}

inline std::vector<fe> mat_vec_mul(const gf& f, const mat& x, std::span<const fe> v) {
    if (x.cols != v.size())
        throw parameter_error("mat_vec_mul: dimension mismatch");
    std::vector<fe> out(x.rows, 0);
    for (std::size_t c = 0; c < x.cols; ++c) {
        const fe vv = v[c];
        if (vv == 0)
            continue;
        for (std::size_t r = 0; r < x.rows; ++r)
            out[r] ^= f.mul(x.at(r, c), vv);
    }
    return out;
}

// Gauss-Jordan on [A | I]; nullopt when singular.
inline std::optional<mat> mat_inverse(const gf& f, const mat& m) {
    if (m.rows != m.cols)
        throw parameter_error("mat_inverse: matrix not square");
    const std::size_t n = m.rows;
    mat w = m;
    mat inv = mat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w.at(piv, col) == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(w.a[piv * n + c], w.a[col * n + c]);
                std::swap(inv.a[piv * n + c], inv.a[col * n + c]);
            }
        const fe scale = f.inv(w.at(col, col));
        for (std::size_t c = 0; c < n; ++c) {
            w.at(col, c) = f.mul(w.at(col, c), scale);
            inv.at(col, c) = f.mul(inv.at(col, c), scale);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const fe v = w.at(r, col);
            if (v == 0)
                continue;
            for (std::size_t c = 0; c < n; ++c) {
                w.at(r, c) ^= f.mul(v, w.at(col, c));
                inv.at(r, c) ^= f.mul(v, inv.at(col, c));
            }
        }
    }
    return inv;
}

// Reduced row echelon form; pivots at the leftmost nonzero column of each
// row, rows processed top to bottom. Canonical, so equal RREF <=> equal
// row space.
inline mat rref(const gf& f, mat w) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < w.cols && rank < w.rows; ++col) {
        std::size_t piv = rank;
        while (piv < w.rows && w.at(piv, col) == 0)
            ++piv;
        if (piv == w.rows)
            continue;
        if (piv != rank)
            for (std::size_t c = 0; c < w.cols; ++c)
                std::swap(w.a[piv * w.cols + c], w.a[rank * w.cols + c]);
        const fe scale = f.inv(w.at(rank, col));
        for (std::size_t c = 0; c < w.cols; ++c)
            w.at(rank, c) = f.mul(w.at(rank, c), scale);
        for (std::size_t r = 0; r < w.rows; ++r) {
            if (r == rank)
                continue;
            const fe v = w.at(r, col);
            if (v == 0)
                continue;
            for (std::size_t c = 0; c < w.cols; ++c)
                w.at(r, c) ^= f.mul(v, w.at(rank, c));
        }
        ++rank;
    }
    return w;
}

inline std::size_t mat_rank(const gf& f, const mat& m) {
    mat r = rref(f, m);
    std::size_t rank = 0;
    for (std::size_t row = 0; row < r.rows; ++row)
        for (std::size_t c = 0; c < r.cols; ++c)
            if (r.at(row, c) != 0) {
                ++rank;
                break;
            }
    return rank;
}

// Solve a z^T = y with free variables set to zero; nullopt when the system
// is inconsistent.
inline std::optional<std::vector<fe>> gauss_solve(const gf& f, const mat& m,
                                                  std::span<const fe> y) {
    if (m.rows != y.size())
        throw parameter_error("gauss_solve: dimension mismatch");
    mat w(m.rows, m.cols + 1);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c)
            w.at(r, c) = m.at(r, c);
        w.at(r, m.cols) = y[r];
    }
    w = rref(f, w);
    std::vector<fe> z(m.cols, 0);
    for (std::size_t r = 0; r < w.rows; ++r) {
        std::size_t lead = 0;
        while (lead < m.cols && w.at(r, lead) == 0)
            ++lead;
        if (lead == m.cols) {
            if (w.at(r, m.cols) != 0)
                return std::nullopt;
            continue;
        }
        z[lead] = w.at(r, m.cols);
    }
    return z;
}

inline mat random_matrix(const gf& f, std::size_t rows, std::size_t cols, rng& r,
                         bool binary_entries = false) {
    mat m(rows, cols);
    for (auto& v : m.a)
        v = binary_entries ? static_cast<fe>(r.below(2)) : f.random_element(r);
    return m;
}

// Rejection-resample until invertible; deterministic for a given seed.
inline mat random_invertible(const gf& f, std::size_t n, rng& r, bool binary_entries = false) {
    for (;;) {
        mat m = random_matrix(f, n, n, r, binary_entries);
        if (mat_inverse(f, m))
            return m;
    }
}

// Fisher-Yates with the seeded generator.
inline perm random_perm(std::size_t n, rng& r) {
    perm p = perm::identity(n);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = r.below(i);
        std::swap(p.images[i - 1], p.images[j]);
    }
    return p;
}

inline perm perm_inverse(const perm& p) {
    perm inv;
    inv.images.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv.images[p.images[i]] = static_cast<std::uint32_t>(i);
    return inv;
}

// Column j of the input lands at column images[j] of the output
// (right-multiplication by the permutation matrix of p).
inline mat apply_perm_cols(const mat& m, const perm& p) {
    if (p.size() != m.cols)
        throw parameter_error("apply_perm_cols: size mismatch");
    mat out(m.rows, m.cols);
    for (std::size_t j = 0; j < m.cols; ++j)
        for (std::size_t r = 0; r < m.rows; ++r)
            out.at(r, p.images[j]) = m.at(r, j);
    return out;
}

// y[i] = x[images[i]]: left-multiplication of a column vector by the
// permutation matrix of p.
inline std::vector<fe> perm_apply(const perm& p, std::span<const fe> x) {
    if (p.size() != x.size())
        throw parameter_error("perm_apply: size mismatch");
    std::vector<fe> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = x[p.images[i]];
    return y;
}

inline std::size_t weight_of(std::span<const fe> v) {
    std::size_t w = 0;
    for (fe x : v)
        if (x != 0)
            ++w;
    return w;
}

} // namespace qcnr
