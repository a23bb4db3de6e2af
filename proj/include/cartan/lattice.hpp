#pragma once

// Lattice arithmetic between the root lattice Q and the weight lattice P.
// P/Q is presented in invariant-factor coordinates obtained from the Smith
// normal form of the Cartan matrix; a character lattice Q <= X(T) <= P is a
// subgroup of that finite abelian group.

#include <algorithm>
#include <set>
#include <vector>

#include "cartan/root_system.hpp"

namespace cartan {

/// A subgroup of P/Q, i.e. a character lattice X(T) between Q and P.
/// Elements and generators use invariant-factor coordinates: tuples
/// (c_1, ..., c_k) with c_i taken mod the i-th invariant factor > 1.
struct LatticeClass {
    std::vector<IntVec> generators;
    long long order = 1;
    std::vector<IntVec> elements;  // sorted; first entry is the zero tuple

    bool contains(const IntVec& e) const {
        return std::binary_search(elements.begin(), elements.end(), e);
    }
    bool is_trivial() const { return order == 1; }

    friend bool operator==(const LatticeClass& a, const LatticeClass& b) {
        return a.elements == b.elements;
    }
};

/// (P : Q) = |det A|.
inline long long fundamental_group_order(const RootSystem& rs) { return rs.cartan_det; }

/// Invariant factors > 1 of P/Q, ascending, each dividing the next.  This is
/// the center of the simply-connected form; empty means trivial center.
inline IntVec center_structure(const RootSystem& rs) { return rs.class_mods; }

/// Class of a weight in P/Q, in invariant-factor coordinates.
inline IntVec weight_class(const RootSystem& rs, const Weight& w) {
    IntVec cls(rs.class_mods.size());
    for (std::size_t r = 0; r < rs.class_mods.size(); ++r) {
        long long acc = 0;
        for (int j = 0; j < rs.rank(); ++j) acc += rs.class_rows[r][j] * w.coords[j];
        long long m = rs.class_mods[r];
        cls[r] = ((acc % m) + m) % m;
    }
    return cls;
}

namespace detail {

inline IntVec mod_add(const IntVec& a, const IntVec& b, const IntVec& mods) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % mods[i];
    return c;
}

inline std::vector<IntVec> subgroup_closure(const std::vector<IntVec>& gens, const IntVec& mods) {
    std::set<IntVec> elems;
    elems.insert(IntVec(mods.size(), 0));
    std::vector<IntVec> queue(elems.begin(), elems.end());
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const IntVec& g : gens) {
            IntVec e = mod_add(queue[q], g, mods);
            if (elems.insert(e).second) queue.push_back(e);
        }
    return {elems.begin(), elems.end()};
}

inline std::vector<IntVec> reduced_generators(const std::vector<IntVec>& elements,
                                              const IntVec& mods) {
    std::vector<IntVec> gens;
    std::vector<IntVec> closed = subgroup_closure({}, mods);
    for (const IntVec& e : elements) {
        if (std::binary_search(closed.begin(), closed.end(), e)) continue;
        gens.push_back(e);
        closed = subgroup_closure(gens, mods);
        if (closed.size() == elements.size()) break;
    }
    return gens;
}

inline LatticeClass make_lattice(std::vector<IntVec> elements, const IntVec& mods) {
    LatticeClass lc;
    lc.elements = std::move(elements);
    lc.order = static_cast<long long>(lc.elements.size());
    lc.generators = reduced_generators(lc.elements, mods);
    return lc;
}

} // namespace detail

/// Subgroup of P/Q generated by the classes of the given weights.
inline LatticeClass lattice_subgroup(const RootSystem& rs, const std::vector<Weight>& weights) {
    std::vector<IntVec> gens;
    for (const Weight& w : weights) gens.push_back(weight_class(rs, w));
    return detail::make_lattice(detail::subgroup_closure(gens, rs.class_mods), rs.class_mods);
}

/// X(T) = P: the simply-connected form.
inline LatticeClass full_lattice(const RootSystem& rs) {
    const IntVec& mods = rs.class_mods;
    std::vector<IntVec> all;
    IntVec cur(mods.size(), 0);
    // odometer over all invariant-factor tuples
    while (true) {
        all.push_back(cur);
        std::size_t i = 0;
        while (i < mods.size() && ++cur[i] == mods[i]) cur[i++] = 0;
        if (i == mods.size()) break;
    }
    std::sort(all.begin(), all.end());
    return detail::make_lattice(std::move(all), mods);
}

/// X(T) = Q: the adjoint form.
inline LatticeClass trivial_lattice(const RootSystem& rs) {
    return detail::make_lattice({IntVec(rs.class_mods.size(), 0)}, rs.class_mods);
}

/// Every lattice Q <= X(T) <= P, one per subgroup of P/Q, sorted by order
/// (adjoint first, simply-connected last).
inline std::vector<LatticeClass> enumerate_character_lattices(const RootSystem& rs) {
    const IntVec& mods = rs.class_mods;
    std::vector<IntVec> all = full_lattice(rs).elements;
    const std::size_t k = mods.size();

    std::set<std::vector<IntVec>> subgroups;
    subgroups.insert(detail::subgroup_closure({}, mods));
    // every subgroup of a group with k invariant factors needs <= k
    // generators; simple types have k <= 2 (only D_even reaches 2)
    auto try_subset = [&](const std::vector<IntVec>& g) {
        subgroups.insert(detail::subgroup_closure(g, mods));
    };
    if (k >= 1)
        for (const IntVec& e : all) try_subset({e});
    if (k >= 2)
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) try_subset({all[i], all[j]});

    std::vector<LatticeClass> out;
    for (const auto& elems : subgroups) out.push_back(detail::make_lattice(elems, mods));
    std::sort(out.begin(), out.end(), [](const LatticeClass& a, const LatticeClass& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.elements < b.elements;
    });
    return out;
}

} // namespace cartan
