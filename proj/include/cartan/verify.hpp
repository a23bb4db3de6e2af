#pragma once

// The harmonic-analysis verification battery: quadrature normalization and
// invariance, orthogonality relations, Fourier round trip, Plancherel,
// convolution, and the SU(2) -> SO(3) covering map, each reported as an
// observed error against a fixed tolerance.  Deterministic (fixed RNG seed).

#include <algorithm>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cartan/characters.hpp"
#include "cartan/fourier.hpp"

namespace cartan {

struct CheckResult {
    std::string name;
    double observed = 0;
    double tolerance = 0;
    bool pass = false;
};

namespace detail {

inline SU2Element random_su2(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Complex a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
    return SU2Element(a, b);
}

inline BandLimitedFunction random_blf(std::mt19937_64& rng, int kmax) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    BandLimitedFunction f;
    for (int k = 0; k <= kmax; ++k)
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) f.coefficients[{k, i, j}] = Complex(u(rng), u(rng));
    return f;
}

} // namespace detail

inline std::vector<CheckResult> run_harmonic_battery(int resolution = 12) {
    std::vector<CheckResult> results;
    std::mt19937_64 rng(20240517);
    auto record = [&](const std::string& name, double observed, double tol) {
        results.push_back({name, observed, tol, observed <= tol});
    };

    // Haar normalization and invariance
    {
        double err = std::abs(haar_integrate_su2([](const SU2Element&) { return 1.0; },
                                                 resolution) -
                              1.0);
        record("haar-normalization", err, 1e-12);

        BandLimitedFunction f = detail::random_blf(rng, 3);
        Complex base = haar_integrate_su2(f, resolution);
        double left = 0, right = 0, inv = 0;
        for (int rep = 0; rep < 4; ++rep) {
            SU2Element h = detail::random_su2(rng);
            left = std::max(left, std::abs(haar_integrate_su2(
                                               [&](const SU2Element& g) { return f(h * g); },
                                               resolution) -
                                           base));
            right = std::max(right, std::abs(haar_integrate_su2(
                                                 [&](const SU2Element& g) { return f(g * h); },
                                                 resolution) -
                                             base));
        }
        inv = std::abs(haar_integrate_su2([&](const SU2Element& g) { return f(g.inverse()); },
                                          resolution) -
                       base);
        record("haar-left-invariance", left, 1e-8);
        record("haar-right-invariance", right, 1e-8);
        record("haar-inversion-invariance", inv, 1e-8);
    }

    // Orthogonality of matrix elements, k <= 4, against delta/(k+1)
    {
        double err = 0;
        auto nodes = su2_quadrature(resolution);
        int total = 0;
        for (int k = 0; k <= 4; ++k) total += (k + 1) * (k + 1);
        Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(total, total);
        for (const Su2QuadratureNode& n : *nodes) {
            Eigen::VectorXcd v(total);
            int at = 0;
            for (int k = 0; k <= 4; ++k) {
                RepMatrix rep = su2_rep_matrix(k, n.g);
                for (int i = 0; i <= k; ++i)
                    for (int j = 0; j <= k; ++j) v(at++) = rep.entries(i, j);
            }
            gram += n.weight * v * v.adjoint();
        }
        int row = 0;
        for (int k1 = 0; k1 <= 4; ++k1)
            for (int i1 = 0; i1 <= k1; ++i1)
                for (int j1 = 0; j1 <= k1; ++j1, ++row) {
                    int col = 0;
                    for (int k2 = 0; k2 <= 4; ++k2)
                        for (int i2 = 0; i2 <= k2; ++i2)
                            for (int j2 = 0; j2 <= k2; ++j2, ++col) {
                                double expect =
                                    (k1 == k2 && i1 == i2 && j1 == j2) ? 1.0 / (k1 + 1) : 0.0;
                                err = std::max(err, std::abs(gram(row, col) - expect));
                            }
                }
        record("matrix-element-orthogonality", err, 1e-8);
    }

    // Character orthonormality <chi_j, chi_k> = delta, j,k <= 6
    {
        double err = 0;
        for (int j = 0; j <= 6; ++j)
            for (int k = j; k <= 6; ++k) {
                Complex ip = haar_integrate_su2(
                    [&](const SU2Element& g) {
                        return BandLimitedFunction::character(j)(g) *
                               std::conj(BandLimitedFunction::character(k)(g));
                    },
                    std::max(resolution, j + k));
                err = std::max(err, std::abs(ip - (j == k ? 1.0 : 0.0)));
            }
        record("character-orthonormality", err, 1e-8);
    }

    // Weyl integration on the U(2) torus: normalization and Schur
    // orthonormality for partitions with parts <= 3
    {
        const int n2res = std::max(resolution, 16);
        double err = std::abs(
            weyl_integrate_torus_class([](const std::vector<double>&) { return 1.0; }, 2, n2res) -
            1.0);
        record("weyl-u2-normalization", err, 1e-8);

        auto schur = [](int p, int q, const std::vector<double>& theta) {
            Complex t1 = std::polar(1.0, theta[0]), t2 = std::polar(1.0, theta[1]);
            Complex base = std::pow(t1 * t2, q);
            Complex h = 0;  // complete homogeneous of degree p - q
            for (int i = 0; i <= p - q; ++i) h += std::pow(t1, p - q - i) * std::pow(t2, i);
            return base * h;
        };
        std::vector<std::pair<int, int>> parts;
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= p; ++q) parts.push_back({p, q});
        double serr = 0;
        for (std::size_t x = 0; x < parts.size(); ++x)
            for (std::size_t y = x; y < parts.size(); ++y) {
                Complex ip = weyl_integrate_torus_class(
                    [&](const std::vector<double>& th) {
                        return schur(parts[x].first, parts[x].second, th) *
                               std::conj(schur(parts[y].first, parts[y].second, th));
                    },
                    2, n2res);
                serr = std::max(serr, std::abs(ip - (x == y ? 1.0 : 0.0)));
            }
        record("weyl-u2-schur-orthonormality", serr, 1e-8);
    }

    // Fourier: pinned transforms, round trip, Plancherel, convolution
    {
        const int kmax = 4;
        const int res = std::max(resolution, 2 * kmax);
        double err = 0;
        FourierCoefficients F =
            fourier_transform(BandLimitedFunction::matrix_element(1, 0, 0), kmax, res);
        for (const auto& [k, block] : F.blocks) {
            Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(k + 1, k + 1);
            if (k == 1) expect(0, 0) = 0.5;
            err = std::max(err, (block - expect).cwiseAbs().maxCoeff());
        }
        for (int k = 0; k <= kmax; ++k) {
            FourierCoefficients Fc = fourier_transform(BandLimitedFunction::character(k), kmax, res);
            for (const auto& [kk, block] : Fc.blocks) {
                Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(kk + 1, kk + 1);
                if (kk == k)
                    expect = Eigen::MatrixXcd::Identity(kk + 1, kk + 1) / double(k + 1);
                err = std::max(err, (block - expect).cwiseAbs().maxCoeff());
            }
        }
        record("fourier-pinned-transforms", err, 1e-9);

        BandLimitedFunction f = detail::random_blf(rng, kmax);
        FourierCoefficients Ff = fourier_transform(f, kmax, res);
        record("fourier-round-trip", coefficient_distance(inverse_fourier(Ff), f), 1e-9);

        double l2 = haar_integrate_su2([&](const SU2Element& g) { return std::norm(f(g)); },
                                       res)
                        .real();
        record("plancherel", std::abs(plancherel_norm(Ff) - l2), 1e-9);

        BandLimitedFunction f2 = detail::random_blf(rng, kmax);
        BandLimitedFunction conv = convolve(f, f2, res);
        FourierCoefficients lhs = fourier_transform(conv, kmax, res);
        FourierCoefficients rhs =
            block_product(fourier_transform(f2, kmax, res), Ff);
        record("convolution-to-product", block_distance(lhs, rhs), 1e-9);

        // delta approximant sum_{k<=K} d(k) chi_k acts as identity on
        // functions band-limited by K
        BandLimitedFunction delta;
        for (int k = 0; k <= kmax; ++k)
            delta += Complex(k + 1) * BandLimitedFunction::character(k);
        record("delta-convolution-identity",
               coefficient_distance(convolve(f, delta, res), f), 1e-9);
    }

    // Pi_k matrices: unitarity, homomorphism, character trace consistency
    {
        double uerr = 0, herr = 0;
        for (int rep = 0; rep < 25; ++rep) {
            SU2Element g = detail::random_su2(rng), h = detail::random_su2(rng);
            for (int k = 0; k <= 6; ++k) {
                const Eigen::MatrixXcd mg = su2_rep_matrix(k, g).entries;
                const Eigen::MatrixXcd mh = su2_rep_matrix(k, h).entries;
                const Eigen::MatrixXcd mgh = su2_rep_matrix(k, g * h).entries;
                uerr = std::max(uerr, (mg * mg.adjoint() -
                                       Eigen::MatrixXcd::Identity(k + 1, k + 1))
                                          .cwiseAbs()
                                          .maxCoeff());
                herr = std::max(herr, (mg * mh - mgh).cwiseAbs().maxCoeff());
            }
        }
        record("rep-unitarity", uerr, 1e-10);
        record("rep-homomorphism", herr, 1e-10);

        RootSystem a1 = build_root_system(DynkinType::make(Family::A, 1));
        double cerr = 0;
        for (int rep = 0; rep < 20; ++rep) {
            SU2Element g = detail::random_su2(rng);
            double theta = std::acos(std::clamp(g.trace() / 2.0, -1.0, 1.0));
            for (int k = 0; k <= 6; ++k) {
                Complex tr = su2_rep_matrix(k, g).entries.trace();
                Complex chi = eval_character(a1, Weight{k}, {theta}, CharacterMethod::WeightSum);
                cerr = std::max(cerr, std::abs(tr - chi));
            }
        }
        record("character-trace-consistency", cerr, 1e-10);
    }

    // The covering map SU(2) -> SO(3)
    {
        Eigen::Matrix3cd basis;  // (x, y, z) coordinates of (e0, e1, e2)
        const Complex I(0, 1);
        basis << 1, 0, 1,
                 I, 0, -I,
                 0, -std::numbers::sqrt2 * I, 0;
        double oerr = 0, homerr = 0, conjerr = 0;
        for (int rep = 0; rep < 100; ++rep) {
            SU2Element g = detail::random_su2(rng), h = detail::random_su2(rng);
            Eigen::Matrix3d r = su2_to_so3(g);
            oerr = std::max(oerr,
                            (r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff());
            oerr = std::max(oerr, std::abs(r.determinant() - 1.0));
            homerr = std::max(homerr,
                              (su2_to_so3(g) * su2_to_so3(h) - su2_to_so3(g * h))
                                  .cwiseAbs()
                                  .maxCoeff());
            homerr = std::max(homerr, (su2_to_so3(-g) - r).cwiseAbs().maxCoeff());
            Eigen::Matrix3cd conj =
                basis * su2_rep_matrix(2, g).entries * basis.inverse();
            conjerr = std::max(conjerr, (conj - r.cast<Complex>()).cwiseAbs().maxCoeff());
        }
        SU2Element minus1;
        minus1.a = -1;
        homerr = std::max(homerr, (su2_to_so3(minus1) - Eigen::Matrix3d::Identity())
                                      .cwiseAbs()
                                      .maxCoeff());
        record("so3-orthogonality", oerr, 1e-10);
        record("so3-kernel-and-homomorphism", homerr, 1e-10);
        record("so3-conjugation-consistency", conjerr, 1e-10);
    }

    return results;
}

} // namespace cartan
