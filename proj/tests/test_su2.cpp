#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "cartan/su2.hpp"

using namespace cartan;

namespace {
SU2Element random_su2(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    return SU2Element({gauss(rng), gauss(rng)}, {gauss(rng), gauss(rng)});
}
} // namespace

TEST_CASE("SU(2) elements: normalization, group law, inverse") {
    SU2Element g({3.0, 0.0}, {0.0, 4.0});
    CHECK(std::abs(std::norm(g.a) + std::norm(g.b) - 1.0) < 1e-12);
    CHECK(std::abs(g.a - Complex(0.6, 0.0)) < 1e-12);
    CHECK(std::abs(g.b - Complex(0.0, 0.8)) < 1e-12);

    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        SU2Element x = random_su2(rng), y = random_su2(rng);
        SU2Element xy = x * y;
        CHECK(std::abs(std::norm(xy.a) + std::norm(xy.b) - 1.0) < 1e-12);
        SU2Element e = x * x.inverse();
        CHECK(std::abs(e.a - Complex(1.0, 0.0)) < 1e-12);
        CHECK(std::abs(e.b) < 1e-12);
    }
    CHECK_THROWS_AS(SU2Element(Complex(0, 0), Complex(0, 0)), DomainError);
}

TEST_CASE("rep matrices: identity, tautological k = 1, diagonal torus") {
    for (int k = 0; k <= 6; ++k) {
        RepMatrix rep = su2_rep_matrix(k, SU2Element::identity());
        CHECK((rep.entries - Eigen::MatrixXcd::Identity(k + 1, k + 1)).cwiseAbs().maxCoeff() <
              1e-14);
    }

    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 20; ++rep) {
        SU2Element g = random_su2(rng);
        Eigen::MatrixXcd m = su2_rep_matrix(1, g).entries;
        CHECK(std::abs(m(0, 0) - g.a) < 1e-14);
        CHECK(std::abs(m(0, 1) - g.b) < 1e-14);
        CHECK(std::abs(m(1, 0) + std::conj(g.b)) < 1e-14);
        CHECK(std::abs(m(1, 1) - std::conj(g.a)) < 1e-14);
    }

    double phi = 0.83;
    SU2Element torus(std::polar(1.0, phi), 0.0);
    Eigen::MatrixXcd m2 = su2_rep_matrix(2, torus).entries;
    CHECK(std::abs(m2(0, 0) - std::polar(1.0, 2 * phi)) < 1e-14);
    CHECK(std::abs(m2(1, 1) - Complex(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(m2(2, 2) - std::polar(1.0, -2 * phi)) < 1e-14);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(std::abs(m2(i, j)) < 1e-14);
}

TEST_CASE("rep matrices are unitary homomorphisms") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 30; ++rep) {
        SU2Element g = random_su2(rng), h = random_su2(rng);
        for (int k = 0; k <= 6; ++k) {
            Eigen::MatrixXcd mg = su2_rep_matrix(k, g).entries;
            CHECK((mg * mg.adjoint() - Eigen::MatrixXcd::Identity(k + 1, k + 1))
                      .cwiseAbs()
                      .maxCoeff() < 1e-10);
            CHECK((mg * su2_rep_matrix(k, h).entries - su2_rep_matrix(k, g * h).entries)
                      .cwiseAbs()
                      .maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("su2_to_so3: pinned values") {
    CHECK((su2_to_so3(SU2Element::identity()) - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <
          1e-14);
    SU2Element minus1;
    minus1.a = -1.0;
    CHECK((su2_to_so3(minus1) - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-14);

    // diagonal torus rotates about the z-axis by 2 phi
    double phi = 0.37;
    Eigen::Matrix3d r = su2_to_so3(SU2Element(std::polar(1.0, phi), 0.0));
    Eigen::Matrix3d expect;
    expect << std::cos(2 * phi), std::sin(2 * phi), 0.0,
              -std::sin(2 * phi), std::cos(2 * phi), 0.0,
              0.0, 0.0, 1.0;
    CHECK((r - expect).cwiseAbs().maxCoeff() < 1e-14);

    // a fixed rational element, checked by hand against the closed form
    Eigen::Matrix3d golden = su2_to_so3(SU2Element(Complex(1.0 / 3, 2.0 / 3), Complex(2.0 / 3, 0)));
    Eigen::Matrix3d expect2;
    expect2 << 1.0 / 9, 4.0 / 9, -8.0 / 9,
               -4.0 / 9, -7.0 / 9, -4.0 / 9,
               -8.0 / 9, 4.0 / 9, 1.0 / 9;
    CHECK((golden - expect2).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("su2_to_so3 is a rotation homomorphism with kernel {+-1}") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 50; ++rep) {
        SU2Element g = random_su2(rng), h = random_su2(rng);
        Eigen::Matrix3d r = su2_to_so3(g);
        CHECK((r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(std::abs(r.determinant() - 1.0) < 1e-10);
        CHECK((su2_to_so3(g) * su2_to_so3(h) - su2_to_so3(g * h)).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((su2_to_so3(-g) - r).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("su2_to_so3 equals Pi_2 conjugated into the real basis") {
    // x = (u^2 + v^2)/2, y = (u^2 - v^2)/(2i), z = i uv, with Pi_2 expressed
    // in the orthonormal basis (u^2, sqrt(2) uv, v^2)
    Eigen::Matrix3cd basis;
    const Complex I(0, 1);
    basis << 1, 0, 1,
             I, 0, -I,
             0, -std::numbers::sqrt2 * I, 0;
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 50; ++rep) {
        SU2Element g = random_su2(rng);
        Eigen::Matrix3cd conj = basis * su2_rep_matrix(2, g).entries * basis.inverse();
        CHECK((conj - su2_to_so3(g).cast<Complex>()).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("matrix element accessor bounds") {
    SU2Element g = SU2Element::identity();
    CHECK_THROWS_AS(su2_matrix_element(2, 3, 0, g), DomainError);
    CHECK_THROWS_AS(su2_matrix_element(2, 0, -1, g), DomainError);
    CHECK_THROWS_AS(su2_rep_matrix(-1, g), DomainError);
}
