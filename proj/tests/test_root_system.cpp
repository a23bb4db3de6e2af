#include <catch2/catch_amalgamated.hpp>

#include "cartan/root_system.hpp"

using namespace cartan;

namespace {

RootSystem make(Family f, int rank) { return build_root_system(DynkinType::make(f, rank)); }

long long expected_positive_roots(DynkinType t) {
    const long long n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return -1;
}

std::vector<DynkinType> all_types_up_to_rank(int maxrank) {
    std::vector<DynkinType> ts;
    for (int n = 1; n <= maxrank; ++n) ts.push_back(DynkinType::make(Family::A, n));
    for (int n = 2; n <= maxrank; ++n) ts.push_back(DynkinType::make(Family::B, n));
    for (int n = 3; n <= maxrank; ++n) ts.push_back(DynkinType::make(Family::C, n));
    for (int n = 4; n <= maxrank; ++n) ts.push_back(DynkinType::make(Family::D, n));
    for (int n = 6; n <= std::min(8, maxrank); ++n) ts.push_back(DynkinType::make(Family::E, n));
    if (maxrank >= 4) ts.push_back(DynkinType::make(Family::F, 4));
    if (maxrank >= 2) ts.push_back(DynkinType::make(Family::G, 2));
    return ts;
}

} // namespace

TEST_CASE("low-rank aliases normalize; invalid ranks are rejected") {
    CHECK(DynkinType::make(Family::B, 1) == DynkinType{Family::A, 1});
    CHECK(DynkinType::make(Family::C, 1) == DynkinType{Family::A, 1});
    CHECK(DynkinType::make(Family::C, 2) == DynkinType{Family::B, 2});
    CHECK(DynkinType::make(Family::D, 3) == DynkinType{Family::A, 3});
    CHECK_THROWS_AS(DynkinType::make(Family::D, 2), DomainError);
    CHECK_THROWS_AS(DynkinType::make(Family::E, 5), DomainError);
    CHECK_THROWS_AS(DynkinType::make(Family::F, 3), DomainError);
    CHECK_THROWS_AS(DynkinType::make(Family::G, 4), DomainError);
    CHECK_THROWS_AS(DynkinType::make(Family::A, 0), DomainError);
    CHECK(DynkinType::parse("G2") == DynkinType{Family::G, 2});
    CHECK_THROWS_AS(DynkinType::parse("H3"), ParseError);
    CHECK_THROWS_AS(DynkinType::parse("Ax"), ParseError);
}

TEST_CASE("A1 is the forced rank-one system") {
    RootSystem rs = make(Family::A, 1);
    CHECK(rs.cartan == IntMat{{2}});
    CHECK(rs.positive_roots.size() == 1);
    CHECK(weight_of_root(rs, {1}) == Weight{2});
}

TEST_CASE("A2 positive roots from the closure") {
    RootSystem rs = make(Family::A, 2);
    REQUIRE(rs.positive_roots.size() == 3);
    CHECK(rs.positive_roots[0] == IntVec{0, 1});
    CHECK(rs.positive_roots[1] == IntVec{1, 0});
    CHECK(rs.positive_roots[2] == IntVec{1, 1});
    CHECK(weight_of_root(rs, {1, 1}) == Weight{1, 1});
}

TEST_CASE("G2 Cartan data: long node first") {
    RootSystem rs = make(Family::G, 2);
    CHECK(rs.cartan == IntMat{{2, -1}, {-3, 2}});
    CHECK(rs.symmetrizers == IntVec{3, 1});
    REQUIRE(rs.positive_roots.size() == 6);
    // highest root is 2 alpha_1 + 3 alpha_2, the adjoint highest weight
    CHECK(highest_root(rs) == IntVec{2, 3});
    CHECK(weight_of_root(rs, highest_root(rs)) == Weight{1, 0});
}

TEST_CASE("positive root counts match the closed forms, rank <= 8") {
    for (DynkinType t : all_types_up_to_rank(8)) {
        RootSystem rs = build_root_system(t);
        INFO(t.name());
        CHECK(static_cast<long long>(rs.positive_roots.size()) == expected_positive_roots(t));
        // roots come sorted by height with lexicographic ties
        for (std::size_t i = 1; i < rs.positive_roots.size(); ++i) {
            long long h0 = 0, h1 = 0;
            for (long long c : rs.positive_roots[i - 1]) h0 += c;
            for (long long c : rs.positive_roots[i]) h1 += c;
            CHECK((h0 < h1 || (h0 == h1 && rs.positive_roots[i - 1] < rs.positive_roots[i])));
        }
    }
}

TEST_CASE("Cartan matrix and symmetrizer invariants") {
    for (DynkinType t : all_types_up_to_rank(8)) {
        RootSystem rs = build_root_system(t);
        INFO(t.name());
        long long min_d = rs.symmetrizers[0];
        for (int i = 0; i < rs.rank(); ++i) {
            CHECK(rs.cartan[i][i] == 2);
            min_d = std::min(min_d, rs.symmetrizers[i]);
            CHECK(rs.symmetrizers[i] >= 1);
            for (int j = 0; j < rs.rank(); ++j) {
                if (i == j) continue;
                CHECK(rs.cartan[i][j] <= 0);
                CHECK(rs.cartan[i][j] >= -3);
                CHECK((rs.cartan[i][j] == 0) == (rs.cartan[j][i] == 0));
                CHECK(rs.symmetrizers[i] * rs.cartan[i][j] == rs.symmetrizers[j] * rs.cartan[j][i]);
            }
        }
        CHECK(min_d == 1);
        // <alpha_i^vee, rho> = 1 is the all-ones convention
        for (long long c : rs.rho.coords) CHECK(c == 1);
        // every positive root pairs with its own coroot to 2
        for (const IntVec& r : rs.positive_roots) {
            long long n = root_norm_sq(rs, r);
            CHECK(n > 0);
            CHECK(2 * bilinear_pairing(rs, r, weight_of_root(rs, r)) == 2 * n);
        }
    }
}

TEST_CASE("root coordinates invert weight_of_root exactly") {
    for (DynkinType t : all_types_up_to_rank(6)) {
        RootSystem rs = build_root_system(t);
        for (const IntVec& r : rs.positive_roots) {
            auto back = root_coordinates(rs, weight_of_root(rs, r));
            REQUIRE(back.has_value());
            CHECK(*back == r);
        }
    }
    // a fundamental weight of A2 is not in the root lattice
    RootSystem a2 = make(Family::A, 2);
    CHECK_FALSE(root_coordinates(a2, Weight{1, 0}).has_value());
    CHECK(root_coordinates(a2, Weight{1, 1}).has_value());
}
