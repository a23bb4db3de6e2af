#pragma once

// The Weyl group as a reflection group.  Group elements are never
// materialized; consumers get orbits, signs and dominant representatives.

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cartan/root_system.hpp"

namespace cartan {

inline constexpr long long default_orbit_cap = 10'000'000;

/// s_i(lambda) = lambda - <alpha_i^vee, lambda> alpha_i.  Node index 0-based.
inline Weight simple_reflection(const RootSystem& rs, int i, const Weight& w) {
    if (i < 0 || i >= rs.rank())
        throw DomainError("reflection index " + std::to_string(i) + " out of range for rank " +
                          std::to_string(rs.rank()));
    Weight r = w;
    const long long c = w.coords[i];
    if (c != 0)
        for (int j = 0; j < rs.rank(); ++j) r.coords[j] -= c * rs.cartan[j][i];
    return r;
}

struct OrbitResult {
    std::vector<Weight> elements;  // sorted lexicographically
    std::size_t size() const { return elements.size(); }
};

namespace detail {

inline void check_hashable_rank(const RootSystem& rs) {
    if (static_cast<std::size_t>(rs.rank()) > max_hashed_rank)
        throw ResourceError("orbit computations support rank <= " +
                            std::to_string(max_hashed_rank));
}

} // namespace detail

/// Full W-orbit of a weight, by breadth-first closure under the simple
/// reflections.  Throws ResourceError beyond `cap` elements.
inline OrbitResult orbit(const RootSystem& rs, const Weight& start,
                         long long cap = default_orbit_cap) {
    detail::check_hashable_rank(rs);
    std::unordered_set<detail::VecKey, detail::VecKeyHash> seen;
    std::vector<Weight> queue{start};
    seen.insert(detail::to_key(start));
    for (std::size_t q = 0; q < queue.size(); ++q) {
        Weight w = queue[q];  // copy: queue may reallocate
        for (int i = 0; i < rs.rank(); ++i) {
            if (w.coords[i] == 0) continue;
            Weight r = simple_reflection(rs, i, w);
            if (seen.insert(detail::to_key(r)).second) {
                if (static_cast<long long>(seen.size()) > cap)
                    throw ResourceError("Weyl orbit exceeds cap of " + std::to_string(cap) +
                                        " elements");
                queue.push_back(std::move(r));
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return {std::move(queue)};
}

/// Orbit of a strictly dominant weight together with the sign of the group
/// element carrying the dominant representative to each point.
inline std::vector<std::pair<Weight, int>> signed_orbit(const RootSystem& rs, const Weight& start,
                                                        long long cap = default_orbit_cap) {
    for (long long c : start.coords)
        if (c <= 0) throw DomainError("signed_orbit requires a strictly dominant weight");
    detail::check_hashable_rank(rs);
    std::unordered_set<detail::VecKey, detail::VecKeyHash> seen;
    std::vector<std::pair<Weight, int>> queue{{start, 1}};
    seen.insert(detail::to_key(start));
    for (std::size_t q = 0; q < queue.size(); ++q) {
        auto [w, sgn] = queue[q];
        for (int i = 0; i < rs.rank(); ++i) {
            Weight r = simple_reflection(rs, i, w);
            if (seen.insert(detail::to_key(r)).second) {
                if (static_cast<long long>(seen.size()) > cap)
                    throw ResourceError("Weyl orbit exceeds cap of " + std::to_string(cap) +
                                        " elements");
                queue.emplace_back(std::move(r), -sgn);
            }
        }
    }
    return queue;
}

/// |W|, computed as the orbit size of the regular weight rho.
inline unsigned long long weyl_order(const RootSystem& rs, long long cap = default_orbit_cap) {
    return orbit(rs, rs.rho, cap).size();
}

struct DominantProjection {
    Weight dominant;
    int sign = 1;             // (-1)^length
    int length = 0;           // simple reflections applied
    bool stabilized = false;  // input lies on a chamber wall
    std::vector<int> word;    // node indices, in application order
};

/// Unique dominant orbit representative, reflecting at the lowest-index
/// negative coordinate until dominant.  Applying the recorded word to the
/// input reproduces `dominant`.
inline DominantProjection to_dominant(const RootSystem& rs, Weight w) {
    DominantProjection p;
    const int n = rs.rank();
    for (;;) {
        int i = 0;
        while (i < n && w.coords[i] >= 0) ++i;
        if (i == n) break;
        const long long c = w.coords[i];
        for (int j = 0; j < n; ++j) w.coords[j] -= c * rs.cartan[j][i];
        p.word.push_back(i);
        ++p.length;
    }
    for (long long c : w.coords)
        if (c == 0) {
            p.stabilized = true;
            break;
        }
    p.sign = (p.length % 2 == 0) ? 1 : -1;
    p.dominant = std::move(w);
    return p;
}

} // namespace cartan
