#pragma once

// Haar quadrature on SU(2) and Weyl-measure quadrature on U(n) tori.
//
// The SU(2) rule lives on the S^3 chart a = cos(psi) e^{i phi1},
// b = sin(psi) e^{i phi2}.  Both phi directions use equispaced nodes (exact
// for trigonometric polynomials below the node count); the psi direction in
// the variable t = sin^2(psi) carries the flat Haar density and uses
// Gauss-Legendre.  A rule of resolution r integrates every polynomial of
// total degree <= r in (a, abar, b, bbar) exactly, up to rounding.

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <map>
#include <numbers>
#include <vector>

#include "cartan/su2.hpp"

namespace cartan {

namespace detail {

/// Gauss-Legendre nodes/weights on [0, 1]; weights sum to 1.
inline void gauss_legendre_01(int m, std::vector<double>& x, std::vector<double>& w) {
    x.resize(m);
    w.resize(m);
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root of P_m
        double t = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int n = 2; n <= m; ++n) {
                double p2 = ((2 * n - 1) * t * p1 - (n - 1) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (t * p1 - p0) / (t * t - 1.0);
            double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        x[i] = 0.5 * (1.0 - t);  // roots come out descending; map to [0,1]
        w[i] = 1.0 / ((1.0 - t * t) * dp * dp);
    }
}

} // namespace detail

struct Su2QuadratureNode {
    SU2Element g;
    double weight;
};

/// Shared node table for a given resolution; immutable once built.
inline std::shared_ptr<const std::vector<Su2QuadratureNode>> su2_quadrature(int resolution) {
    if (resolution < 1) throw DomainError("quadrature resolution must be >= 1");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const std::vector<Su2QuadratureNode>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(resolution);
    if (it != cache.end()) return it->second;

    const int nphi = resolution + 1;
    const int nt = resolution / 2 + 1;
    std::vector<double> tx, tw;
    detail::gauss_legendre_01(nt, tx, tw);

    auto nodes = std::make_shared<std::vector<Su2QuadratureNode>>();
    nodes->reserve(static_cast<std::size_t>(nphi) * nphi * nt);
    const double dphi = 2.0 * std::numbers::pi / nphi;
    for (int it_ = 0; it_ < nt; ++it_) {
        const double psi = std::asin(std::sqrt(tx[it_]));
        const double w = tw[it_] / (static_cast<double>(nphi) * nphi);
        for (int i = 0; i < nphi; ++i)
            for (int j = 0; j < nphi; ++j)
                nodes->push_back({SU2Element::from_angles(psi, i * dphi, j * dphi), w});
    }
    cache.emplace(resolution, nodes);
    return nodes;
}

/// Normalized Haar integral of f over SU(2); exact for matrix-element
/// polynomials of total degree <= resolution.
template <class F>
Complex haar_integrate_su2(F&& f, int resolution) {
    auto nodes = su2_quadrature(resolution);
    Complex acc = 0;
    for (const Su2QuadratureNode& n : *nodes) acc += n.weight * Complex(f(n.g));
    return acc;
}

/// L^2(SU(2)) inner product of two matrix elements; equals
/// delta_{k1 k2} delta_{i1 i2} delta_{j1 j2} / (k1 + 1) up to quadrature error.
inline Complex matrix_element_inner(int k1, int i1, int j1, int k2, int i2, int j2,
                                    int resolution) {
    if (i1 < 0 || i1 > k1 || j1 < 0 || j1 > k1 || i2 < 0 || i2 > k2 || j2 < 0 || j2 > k2)
        throw DomainError("matrix element index out of range");
    return haar_integrate_su2(
        [&](const SU2Element& g) {
            return su2_rep_matrix(k1, g).entries(i1, j1) *
                   std::conj(su2_rep_matrix(k2, g).entries(i2, j2));
        },
        resolution);
}

/// Weyl integration over the diagonal torus of U(n):
///   (1/n!) * integral of f(theta) * prod_{i<j} |e^{i theta_i} - e^{i theta_j}|^2
/// on the equispaced N^n grid, N = resolution.  Exact for symmetric
/// trigonometric polynomials of per-variable degree < N - (n - 1).
template <class F>
Complex weyl_integrate_torus_class(F&& f, int n, int resolution) {
    if (n < 1) throw DomainError("torus dimension must be >= 1");
    if (resolution < 1) throw DomainError("quadrature resolution must be >= 1");
    const int N = resolution;
    double factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;

    std::vector<int> idx(n, 0);
    std::vector<double> theta(n, 0.0);
    std::vector<Complex> t(n);
    const double step = 2.0 * std::numbers::pi / N;
    Complex acc = 0;
    for (;;) {
        for (int i = 0; i < n; ++i) {
            theta[i] = idx[i] * step;
            t[i] = std::polar(1.0, theta[i]);
        }
        double density = 1.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) density *= std::norm(t[i] - t[j]);
        acc += density * Complex(f(theta));
        int i = 0;
        while (i < n && ++idx[i] == N) idx[i++] = 0;
        if (i == n) break;
    }
    double cells = std::pow(static_cast<double>(N), n);
    return acc / (factorial * cells);
}

} // namespace cartan
