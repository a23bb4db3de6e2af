#pragma once

// Tensor product decomposition (Klimyk's shift-and-project algorithm) and
// decomposition of W-invariant characters into irreducibles (greedy peel at
// the dominance-maximal support element).

#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "cartan/characters.hpp"

namespace cartan {

/// A nonnegative integer combination of irreducible characters.
struct Decomposition {
    std::map<Weight, long long> terms;  // dominant highest weight -> multiplicity
};

/// L(lambda) (x) L(mu) = sum_nu N L(nu).  For each weight nu of the
/// smaller-dimensional factor, lambda + nu + rho is projected to the
/// dominant chamber; chamber-wall hits are dropped, signs accumulate.
inline Decomposition tensor_decompose(const RootSystem& rs, const Weight& lambda,
                                      const Weight& mu, long long dim_cap = default_dim_cap) {
    if (!lambda.is_dominant() || !mu.is_dominant())
        throw DomainError("tensor_decompose requires dominant weights");
    const Weight* anchor = &lambda;
    const Weight* diagram = &mu;
    if (weyl_dim(rs, mu) > weyl_dim(rs, lambda)) std::swap(anchor, diagram);

    std::map<Weight, long long> acc;
    for (const auto& [nu, mult] : formal_character(rs, *diagram, dim_cap).terms) {
        DominantProjection p = to_dominant(rs, *anchor + nu + rs.rho);
        if (p.stabilized) continue;
        acc[p.dominant - rs.rho] += p.sign * mult;
    }
    Decomposition out;
    for (auto& [w, m] : acc) {
        if (m == 0) continue;
        if (m < 0) throw std::logic_error("Klimyk accumulation left a negative multiplicity");
        out.terms.emplace(w, m);
    }
    return out;
}

/// Decompose the dominant-chamber restriction of a W-invariant character.
/// Input maps each dominant support weight to its multiplicity.
inline Decomposition decompose_dominant_character(const RootSystem& rs,
                                                  std::map<Weight, long long> support,
                                                  long long dim_cap = default_dim_cap) {
    Decomposition out;
    std::unordered_map<detail::VecKey, std::map<Weight, long long>, detail::VecKeyHash> cache;

    auto scaled_height = [&](const Weight& w) {
        // sum of det(A)-scaled simple-root coordinates; strictly monotone
        // along the dominance order within each coset of Q
        long long h = 0;
        for (const IntVec& row : rs.cartan_adjugate)
            for (int j = 0; j < rs.rank(); ++j) h += row[j] * w.coords[j];
        return h;
    };

    while (!support.empty()) {
        auto best = support.begin();
        long long best_h = scaled_height(best->first);
        for (auto it = std::next(support.begin()); it != support.end(); ++it) {
            long long h = scaled_height(it->first);
            if (h > best_h || (h == best_h && it->first > best->first)) {
                best = it;
                best_h = h;
            }
        }
        const Weight top = best->first;
        const long long mult = best->second;
        if (mult < 0 || !top.is_dominant())
            throw DomainError("character is not a nonnegative integer combination of "
                              "irreducible characters");

        auto key = detail::to_key(top);
        auto cached = cache.find(key);
        if (cached == cache.end())
            cached = cache.emplace(key, formal_character_dominant(rs, top, dim_cap)).first;
        for (const auto& [w, m] : cached->second) {
            auto it = support.find(w);
            long long next = (it == support.end() ? 0 : it->second) - mult * m;
            if (next < 0)
                throw DomainError("character is not a nonnegative integer combination of "
                                  "irreducible characters");
            if (next == 0) {
                if (it != support.end()) support.erase(it);
            } else {
                support[w] = next;
            }
        }
        out.terms.emplace(top, mult);
    }
    return out;
}

/// Decompose a W-invariant character with nonnegative multiplicities into
/// irreducible characters; recomposition reproduces the input exactly.
inline Decomposition decompose_character(const RootSystem& rs, const FormalCharacter& chi,
                                         long long dim_cap = default_dim_cap) {
    std::map<Weight, long long> dominant_part;
    for (const auto& [w, m] : chi.terms) {
        if (m < 0)
            throw DomainError("character is not a nonnegative integer combination of "
                              "irreducible characters");
        if (w.is_dominant()) dominant_part.emplace(w, m);
    }
    Decomposition d = decompose_dominant_character(rs, std::move(dominant_part), dim_cap);
    // a W-invariant input is fully determined by its dominant part; the mass
    // check catches inputs that violate the precondition
    long long mass = 0;
    for (const auto& [nu, m] : d.terms) mass += m * weyl_dim(rs, nu);
    if (mass != chi.total_mass())
        throw DomainError("character is not W-invariant: dominant part decomposes to mass " +
                          std::to_string(mass) + " but total mass is " +
                          std::to_string(chi.total_mass()));
    return d;
}

inline std::string format_decomposition(const Decomposition& d) {
    return format_character(d.terms);
}

} // namespace cartan
