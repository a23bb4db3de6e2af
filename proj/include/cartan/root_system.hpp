#pragma once

// Root system construction.  Conventions, fixed throughout the library:
//   * Bourbaki node numbering in every family; for G2, node 1 carries the
//     long root, node 2 the short one.
//   * cartan[i][j] = <alpha_i^vee, alpha_j>, so the fundamental-weight
//     coordinates of the simple root alpha_j are column j of the Cartan
//     matrix.
//   * Roots are stored in simple-root coordinates, weights in
//     fundamental-weight coordinates; both integer-exact.
//   * symmetrizers[i] = (alpha_i, alpha_i)/2 scaled so that short roots get
//     d = 1; then d_i * A_ij = (alpha_i, alpha_j) is the symmetric form.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cartan/dynkin.hpp"
#include "cartan/int_linalg.hpp"
#include "cartan/weight.hpp"

namespace cartan {

struct RootSystem {
    DynkinType type;
    IntMat cartan;
    std::vector<IntVec> positive_roots;  // simple-root coordinates; by height, ties lex
    IntVec symmetrizers;
    Weight rho;  // all-ones vector

    // derived data, filled by build_root_system
    long long cartan_det = 1;  // = (P : Q); positive for every simple type
    IntMat cartan_adjugate;
    IntVec class_mods;  // invariant factors > 1 of P/Q
    IntMat class_rows;  // matching rows of the Smith row transform

    int rank() const { return static_cast<int>(cartan.size()); }
};

namespace detail {

inline IntMat cartan_matrix(DynkinType t) {
    const int n = t.rank;
    IntMat a(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto chain = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            break;
        case Family::B:  // alpha_n short
            for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
            a[n - 2][n - 1] = -1;
            a[n - 1][n - 2] = -2;
            break;
        case Family::C:  // alpha_n long
            for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
            break;
        case Family::D:
            for (int i = 0; i + 3 < n; ++i) chain(i, i + 1);
            chain(n - 3, n - 2);
            chain(n - 3, n - 1);
            break;
        case Family::E:  // chain 1-3-4-5-..., node 2 hangs off node 4
            chain(0, 2);
            for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
            chain(1, 3);
            break;
        case Family::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            chain(0, 1);
            chain(2, 3);
            a[1][2] = -1;
            a[2][1] = -2;
            break;
        case Family::G:  // alpha_1 long, alpha_2 short
            a[0][1] = -1;
            a[1][0] = -3;
            break;
    }
    return a;
}

// d_i with d_i A_ij = d_j A_ji, scaled to coprime integers; the minimum
// (attained on short roots) is then 1.
inline IntVec symmetrizers_of(const IntMat& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::pair<long long, long long>> frac(n, {0, 1});  // d_i as num/den
    frac[0] = {1, 1};
    // the Dynkin diagram is connected for a simple type, so one sweep per
    // node suffices
    std::vector<int> order{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t q = 0; q < order.size(); ++q) {
        int i = order[q];
        for (int j = 0; j < n; ++j) {
            if (seen[j] || a[i][j] == 0) continue;
            // d_j = d_i * A_ij / A_ji
            long long num = frac[i].first * a[i][j];
            long long den = frac[i].second * a[j][i];
            if (num < 0) num = -num;  // both off-diagonal entries are negative
            if (den < 0) den = -den;
            long long g = std::gcd(num, den);
            frac[j] = {num / g, den / g};
            seen[j] = true;
            order.push_back(j);
        }
    }
    long long scale = 1;
    for (auto& [num, den] : frac) scale = std::lcm(scale, den);
    IntVec d(n);
    long long g = 0;
    for (int i = 0; i < n; ++i) {
        d[i] = frac[i].first * (scale / frac[i].second);
        g = std::gcd(g, d[i]);
    }
    for (auto& x : d) x /= g;
    return d;
}

inline std::vector<IntVec> positive_roots_by_closure(const IntMat& a) {
    const int n = static_cast<int>(a.size());
    std::set<IntVec> seen;
    std::vector<IntVec> level;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        level.push_back(e);
    }
    std::vector<IntVec> all = level;
    while (!level.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& beta : level) {
            for (int i = 0; i < n; ++i) {
                // root string: beta + alpha_i is a root iff p - <alpha_i^vee, beta> >= 1,
                // where p counts how far the string continues below beta
                long long pairing = 0;
                for (int j = 0; j < n; ++j) pairing += a[i][j] * beta[j];
                long long p = 0;
                IntVec down = beta;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0 || !seen.count(down)) break;
                    ++p;
                }
                if (p - pairing >= 1) {
                    IntVec up = beta;
                    up[i] += 1;
                    if (seen.insert(up).second) next.push_back(up);
                }
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const IntVec& x, const IntVec& y) {
        long long hx = std::accumulate(x.begin(), x.end(), 0ll);
        long long hy = std::accumulate(y.begin(), y.end(), 0ll);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    return all;
}

} // namespace detail

inline RootSystem build_root_system(DynkinType t) {
    RootSystem rs;
    rs.type = t;
    rs.cartan = detail::cartan_matrix(t);
    rs.symmetrizers = detail::symmetrizers_of(rs.cartan);
    rs.positive_roots = detail::positive_roots_by_closure(rs.cartan);
    rs.rho = Weight(std::vector<long long>(t.rank, 1));
    rs.cartan_det = det(rs.cartan);
    rs.cartan_adjugate = adjugate(rs.cartan);
    SmithNormalForm snf = smith_normal_form(rs.cartan);
    for (std::size_t i = 0; i < snf.factors.size(); ++i)
        if (snf.factors[i] > 1) {
            rs.class_mods.push_back(snf.factors[i]);
            rs.class_rows.push_back(snf.u[i]);
        }
    return rs;
}

/// Fundamental-weight coordinates of a vector given in simple-root
/// coordinates: w_i = <alpha_i^vee, sum_j r_j alpha_j> = (A r)_i.
inline Weight weight_of_root(const RootSystem& rs, const IntVec& root) {
    return Weight(mat_vec(rs.cartan, root));
}

/// Pairing (alpha, lambda) of a root-lattice vector against a weight under
/// the symmetrized form: sum_i r_i d_i lambda_i.  Integer-exact.
inline long long bilinear_pairing(const RootSystem& rs, const IntVec& root, const Weight& w) {
    long long acc = 0;
    for (int i = 0; i < rs.rank(); ++i) acc += root[i] * rs.symmetrizers[i] * w.coords[i];
    return acc;
}

/// (alpha, alpha) for a root-lattice vector.
inline long long root_norm_sq(const RootSystem& rs, const IntVec& root) {
    return bilinear_pairing(rs, root, weight_of_root(rs, root));
}

/// Simple-root coordinates of a weight, when it lies in the root lattice Q.
inline std::optional<IntVec> root_coordinates(const RootSystem& rs, const Weight& w) {
    IntVec scaled = mat_vec(rs.cartan_adjugate, w.coords);
    for (auto& x : scaled) {
        if (x % rs.cartan_det != 0) return std::nullopt;
        x /= rs.cartan_det;
    }
    return scaled;
}

/// The highest root, in simple-root coordinates.
inline const IntVec& highest_root(const RootSystem& rs) { return rs.positive_roots.back(); }

} // namespace cartan
