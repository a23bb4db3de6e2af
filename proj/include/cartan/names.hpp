#pragma once

// Group-name grammar (recursive descent, no parser dependency):
//   group  := classical "(" int ")" | dynkin
//   dynkin := [A-G] int
//   weight := "[" int ("," int)* "]"
// Classical names follow the classification table: SU(n+1) <-> A_n,
// Spin(2n+1) <-> B_n, Sp(n) <-> C_n, Spin(2n) <-> D_n, plus the adjoint
// forms PSU(n), SO(2n+1), SO(3), and the intermediate forms SO(2n).
// Bare Dynkin names denote the simply-connected group.

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "cartan/lattice.hpp"

namespace cartan {

/// A connected compact form: a Dynkin type plus a character lattice.
struct GroupSpec {
    DynkinType type;
    LatticeClass lattice;
    std::string display_name;
};

namespace detail {

struct NameCursor {
    std::string_view s;
    std::size_t at = 0;

    void skip_ws() {
        while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
    }
    bool done() {
        skip_ws();
        return at == s.size();
    }
    bool eat(char c) {
        skip_ws();
        if (at < s.size() && s[at] == c) {
            ++at;
            return true;
        }
        return false;
    }
    long long integer() {
        skip_ws();
        bool neg = false;
        if (at < s.size() && (s[at] == '-' || s[at] == '+')) neg = (s[at++] == '-');
        if (at == s.size() || !std::isdigit(static_cast<unsigned char>(s[at])))
            throw ParseError("expected an integer at position " + std::to_string(at) + " in '" +
                             std::string(s) + "'");
        long long v = 0;
        while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) {
            v = v * 10 + (s[at++] - '0');
            if (v > 1'000'000'000ll) throw ParseError("integer out of range in '" + std::string(s) + "'");
        }
        return neg ? -v : v;
    }
};

inline int classical_argument(NameCursor& cur, const std::string& head) {
    if (!cur.eat('('))
        throw ParseError("expected '(' after '" + head + "'");
    long long n = cur.integer();
    if (!cur.eat(')'))
        throw ParseError("expected ')' in '" + std::string(cur.s) + "'");
    if (!cur.done())
        throw ParseError("trailing characters after group name in '" + std::string(cur.s) + "'");
    if (n < 1 || n > 200)
        throw ParseError("argument out of range in '" + std::string(cur.s) + "' (max 200)");
    return static_cast<int>(n);
}

/// Vector fundamental weight row used to cut out the SO(2n) lattice.
inline LatticeClass vector_form_lattice(const RootSystem& rs) {
    // D_n vector weight is omega_1; after the D3 -> A3 normalization the
    // 6-dimensional vector representation sits at the middle node.
    Weight w = zero_weight(rs.rank());
    if (rs.type.family == Family::A && rs.rank() == 3)
        w.coords[1] = 1;
    else
        w.coords[0] = 1;
    return lattice_subgroup(rs, {w});
}

} // namespace detail

/// Parse a group name.  Accepts Dynkin names ("A3", "G2") and the classical
/// names from the classification table; rejects non-simple input with a
/// diagnostic naming the reason.
inline GroupSpec parse_group(std::string_view name) {
    detail::NameCursor cur{name};
    cur.skip_ws();
    std::size_t start = cur.at;
    while (cur.at < name.size() && std::isalpha(static_cast<unsigned char>(name[cur.at]))) ++cur.at;
    std::string head(name.substr(start, cur.at - start));
    if (head.empty()) throw ParseError("empty group name");

    auto finish = [&](DynkinType t, LatticeClass lattice) {
        return GroupSpec{t, std::move(lattice), std::string(name)};
    };
    auto simply_connected = [&](DynkinType t) {
        RootSystem rs = build_root_system(t);
        return finish(t, full_lattice(rs));
    };
    auto adjoint = [&](DynkinType t) {
        RootSystem rs = build_root_system(t);
        return finish(t, trivial_lattice(rs));
    };

    if (head == "SU" || head == "PSU") {
        int n = detail::classical_argument(cur, head);
        if (n < 2) throw ParseError(head + "(" + std::to_string(n) + ") is not semisimple");
        DynkinType t = DynkinType::make(Family::A, n - 1);
        return head == "SU" ? simply_connected(t) : adjoint(t);
    }
    if (head == "Spin") {
        int n = detail::classical_argument(cur, head);
        if (n == 4)
            throw ParseError("Spin(4) is not simple: D2 = A1 u A1 (it is SU(2) x SU(2))");
        if (n < 3) throw ParseError("Spin(" + std::to_string(n) + ") is not semisimple");
        DynkinType t = (n % 2)
                           ? DynkinType::make(Family::B, (n - 1) / 2)
                           : DynkinType::make(Family::D, n / 2);
        return simply_connected(t);
    }
    if (head == "SO") {
        int n = detail::classical_argument(cur, head);
        if (n == 4) throw ParseError("SO(4) is not simple: D2 = A1 u A1");
        if (n < 3) throw ParseError("SO(" + std::to_string(n) + ") is not semisimple");
        if (n % 2) return adjoint(DynkinType::make(Family::B, (n - 1) / 2));
        DynkinType t = DynkinType::make(Family::D, n / 2);
        RootSystem rs = build_root_system(t);
        return finish(t, detail::vector_form_lattice(rs));
    }
    if (head == "Sp") {
        int n = detail::classical_argument(cur, head);
        return simply_connected(DynkinType::make(Family::C, n));
    }
    if (head == "U")
        throw ParseError("U(n) is reductive, not simple; its harmonic analysis is available "
                         "through the verify-harmonic command");

    // Dynkin form: single family letter followed by the rank
    if (head.size() == 1 && head[0] >= 'A' && head[0] <= 'G' && cur.at < name.size()) {
        long long rank = cur.integer();
        if (!cur.done())
            throw ParseError("trailing characters after group name in '" + std::string(name) + "'");
        try {
            return simply_connected(
                DynkinType::make(static_cast<Family>(head[0]), static_cast<int>(rank)));
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown group name '" + std::string(name) + "'");
}

/// Canonical display name; re-parses to the same GroupSpec for every
/// accepted input.
inline std::string canonical_name(const GroupSpec& spec) {
    RootSystem rs = build_root_system(spec.type);
    long long group_order = 1;  // |P/Q|
    for (long long m : rs.class_mods) group_order *= m;

    if (spec.lattice.order == group_order) return spec.type.name();  // simply-connected
    if (spec.lattice.order == 1) {
        if (spec.type.family == Family::A) {
            if (spec.type.rank == 1) return "SO(3)";
            return "PSU(" + std::to_string(spec.type.rank + 1) + ")";
        }
        if (spec.type.family == Family::B) return "SO(" + std::to_string(2 * spec.type.rank + 1) + ")";
    }
    if (spec.lattice == detail::vector_form_lattice(rs)) {
        if (spec.type.family == Family::D) return "SO(" + std::to_string(2 * spec.type.rank) + ")";
        if (spec.type == DynkinType{Family::A, 3}) return "SO(6)";
    }
    // forms with no classical name: show the type and the lattice order
    return spec.type.name() + "[" + std::to_string(spec.lattice.order) + "]";
}

/// Parse "[c1,c2,...]" into a Weight.
inline Weight parse_weight(std::string_view s) {
    detail::NameCursor cur{s};
    if (!cur.eat('[')) throw ParseError("expected '[' in weight '" + std::string(s) + "'");
    std::vector<long long> coords;
    coords.push_back(cur.integer());
    while (cur.eat(',')) coords.push_back(cur.integer());
    if (!cur.eat(']')) throw ParseError("expected ']' in weight '" + std::string(s) + "'");
    if (!cur.done()) throw ParseError("trailing characters in weight '" + std::string(s) + "'");
    return Weight(std::move(coords));
}

/// Parse "[t1,t2,...]" into torus angles (radians).
inline std::vector<double> parse_angles(std::string_view s) {
    std::string str(s);
    std::size_t at = 0;
    auto skip = [&] {
        while (at < str.size() && std::isspace(static_cast<unsigned char>(str[at]))) ++at;
    };
    skip();
    if (at == str.size() || str[at] != '[')
        throw ParseError("expected '[' in angle list '" + str + "'");
    ++at;
    std::vector<double> out;
    for (;;) {
        skip();
        const char* begin = str.c_str() + at;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError("expected a number in angle list '" + str + "'");
        at += static_cast<std::size_t>(end - begin);
        out.push_back(v);
        skip();
        if (at < str.size() && str[at] == ',') {
            ++at;
            continue;
        }
        break;
    }
    skip();
    if (at == str.size() || str[at] != ']')
        throw ParseError("expected ']' in angle list '" + str + "'");
    ++at;
    while (at < str.size()) {
        if (!std::isspace(static_cast<unsigned char>(str[at])))
            throw ParseError("trailing characters in angle list '" + str + "'");
        ++at;
    }
    return out;
}

} // namespace cartan
