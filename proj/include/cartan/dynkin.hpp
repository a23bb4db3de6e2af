#pragma once

#include <string>
#include <string_view>

#include "cartan/errors.hpp"

namespace cartan {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple type and rank.  Low-rank coincidences are normalized on
/// construction: B1, C1 -> A1; C2 -> B2; D3 -> A3.  D2 splits as A1 + A1
/// and is rejected, as are all other invalid (family, rank) pairs.
struct DynkinType {
    Family family;
    int rank;

    static DynkinType make(Family f, int rank);
    static DynkinType parse(std::string_view s);

    std::string name() const {
        return std::string(1, static_cast<char>(family)) + std::to_string(rank);
    }

    friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

inline DynkinType DynkinType::make(Family f, int rank) {
    if (rank < 1) throw DomainError("rank must be positive, got " + std::to_string(rank));
    switch (f) {
        case Family::A:
            return {Family::A, rank};
        case Family::B:
            if (rank == 1) return {Family::A, 1};
            return {Family::B, rank};
        case Family::C:
            if (rank == 1) return {Family::A, 1};
            if (rank == 2) return {Family::B, 2};
            return {Family::C, rank};
        case Family::D:
            if (rank == 2)
                throw DomainError("D2 is not simple (it splits as A1 + A1)");
            if (rank == 1)
                throw DomainError("D1 is not semisimple");
            if (rank == 3) return {Family::A, 3};
            return {Family::D, rank};
        case Family::E:
            if (rank < 6 || rank > 8)
                throw DomainError("family E requires rank 6, 7 or 8, got " + std::to_string(rank));
            return {Family::E, rank};
        case Family::F:
            if (rank != 4) throw DomainError("family F requires rank 4, got " + std::to_string(rank));
            return {Family::F, 4};
        case Family::G:
            if (rank != 2) throw DomainError("family G requires rank 2, got " + std::to_string(rank));
            return {Family::G, 2};
    }
    throw DomainError("unknown family");
}

inline DynkinType DynkinType::parse(std::string_view s) {
    if (s.size() < 2) throw ParseError("not a Dynkin name: '" + std::string(s) + "'");
    char f = s[0];
    if (f < 'A' || f > 'G') throw ParseError("unknown family letter '" + std::string(1, f) + "'");
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("bad rank in Dynkin name: '" + std::string(s) + "'");
        rank = rank * 10 + (s[i] - '0');
        if (rank > 200) throw ParseError("rank out of range in '" + std::string(s) + "' (max 200)");
    }
    try {
        return make(static_cast<Family>(f), rank);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

} // namespace cartan
