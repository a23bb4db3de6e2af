#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include "cartan/int_linalg.hpp"

namespace cartan {

/// Integer weight in fundamental-weight coordinates: coords[i] = <alpha_i^vee, lambda>.
struct Weight {
    std::vector<long long> coords;

    Weight() = default;
    explicit Weight(std::vector<long long> c) : coords(std::move(c)) {}
    Weight(std::initializer_list<long long> c) : coords(c) {}

    std::size_t rank() const { return coords.size(); }
    long long operator[](std::size_t i) const { return coords[i]; }
    long long& operator[](std::size_t i) { return coords[i]; }

    bool is_dominant() const {
        for (long long c : coords)
            if (c < 0) return false;
        return true;
    }
    bool is_zero() const {
        for (long long c : coords)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a) {
        for (auto& c : a.coords) c = -c;
        return a;
    }
    friend Weight operator*(long long s, Weight a) {
        for (auto& c : a.coords) c *= s;
        return a;
    }
};

inline Weight zero_weight(std::size_t rank) { return Weight(std::vector<long long>(rank, 0)); }

inline std::string to_string(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.rank(); ++i) {
        if (i) os << ',';
        os << w.coords[i];
    }
    os << ')';
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << to_string(w); }

namespace detail {

// Fixed-size key for hash containers on weight/root coordinate vectors.
// Coordinates met in any desk-scale computation fit easily in 32 bits.
inline constexpr std::size_t max_hashed_rank = 12;

struct VecKey {
    std::array<std::int32_t, max_hashed_rank> v{};
    std::uint8_t n = 0;

    friend bool operator==(const VecKey&, const VecKey&) = default;
};

inline VecKey to_key(const std::vector<long long>& c) {
    VecKey k;
    k.n = static_cast<std::uint8_t>(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) k.v[i] = static_cast<std::int32_t>(c[i]);
    return k;
}

inline VecKey to_key(const Weight& w) { return to_key(w.coords); }

struct VecKeyHash {
    std::size_t operator()(const VecKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint8_t i = 0; i < k.n; ++i) {
            h ^= static_cast<std::uint32_t>(k.v[i]);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace detail
} // namespace cartan
