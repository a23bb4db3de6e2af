#pragma once

// Small exact integer linear algebra: determinants, adjugates and Smith
// normal form for matrices the size of a Cartan matrix.  Everything is
// plain long long with __int128 intermediates; inputs here are tiny.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "cartan/errors.hpp"

namespace cartan {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;

inline IntMat identity_matrix(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntVec mat_vec(const IntMat& m, const IntVec& v) {
    IntVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) acc += static_cast<__int128>(m[i][j]) * v[j];
        out[i] = static_cast<long long>(acc);
    }
    return out;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat out(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

/// Fraction-free (Bareiss) determinant.
inline long long det(IntMat m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    long long sign = 1;
    long long prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 num = static_cast<__int128>(m[i][j]) * m[k][k] -
                               static_cast<__int128>(m[i][k]) * m[k][j];
                m[i][j] = static_cast<long long>(num / prev);
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Adjugate: adj(A) * A = A * adj(A) = det(A) * I.
inline IntMat adjugate(const IntMat& a) {
    const std::size_t n = a.size();
    IntMat adj(n, IntVec(n, 0));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMat minor(n - 1, IntVec(n - 1));
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;  // adj = transpose of cofactor matrix
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor[mr][mc++] = a[r][c];
                }
                ++mr;
            }
            long long cof = det(std::move(minor));
            adj[i][j] = (((i + j) % 2) == 0) ? cof : -cof;
        }
    return adj;
}

struct SmithNormalForm {
    IntMat u;        // unimodular row transform
    IntMat d;        // diagonal, d[i][i] >= 0, d[i][i] | d[i+1][i+1]
    IntMat v;        // unimodular column transform, u * a * v = d
    IntVec factors;  // nonzero diagonal entries, ascending divisibility chain
};

/// Smith normal form of a square integer matrix, with both transforms.
inline SmithNormalForm smith_normal_form(IntMat a) {
    const std::size_t n = a.size();
    SmithNormalForm s;
    s.u = identity_matrix(n);
    s.v = identity_matrix(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(s.u[i], s.u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < n; ++r) {
            std::swap(a[r][i], a[r][j]);
            std::swap(s.v[r][i], s.v[r][j]);
        }
    };
    auto add_row = [&](std::size_t dst, std::size_t src, long long q) {
        for (std::size_t c = 0; c < n; ++c) {
            a[dst][c] += q * a[src][c];
            s.u[dst][c] += q * s.u[src][c];
        }
    };
    auto add_col = [&](std::size_t dst, std::size_t src, long long q) {
        for (std::size_t r = 0; r < n; ++r) {
            a[r][dst] += q * a[r][src];
            s.v[r][dst] += q * s.v[r][src];
        }
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < n; ++c) {
            a[i][c] = -a[i][c];
            s.u[i][c] = -s.u[i][c];
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        // pivot: smallest-magnitude nonzero entry in the trailing block
        std::size_t pi = t, pj = t;
        long long best = 0;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                    best = std::llabs(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        if (pi != t) swap_rows(t, pi);
        if (pj != t) swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a[i][t] == 0) continue;
                long long q = a[i][t] / a[t][t];
                add_row(i, t, -q);
                if (a[i][t] != 0) {  // remainder became the smaller pivot
                    swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                long long q = a[t][j] / a[t][t];
                add_col(j, t, -q);
                if (a[t][j] != 0) {
                    swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty) {
                // enforce divisibility of the trailing block by the pivot
                for (std::size_t i = t + 1; i < n && !dirty; ++i)
                    for (std::size_t j = t + 1; j < n && !dirty; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            add_row(t, i, 1);
                            dirty = true;
                        }
            }
        }
        if (a[t][t] < 0) negate_row(t);
    }

    s.d = a;
    for (std::size_t i = 0; i < n; ++i)
        if (a[i][i] != 0) s.factors.push_back(a[i][i]);
    return s;
}

} // namespace cartan
