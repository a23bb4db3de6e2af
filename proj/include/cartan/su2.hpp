#pragma once

// Explicit SU(2) representation matrices.  Pi_k acts on the degree-k
// polynomials in the row coordinates (u, v); in the orthonormal basis
// e_j = sqrt(C(k,j)) u^{k-j} v^j this makes every Pi_k(g) unitary and
// Pi_1 the tautological representation Pi_1(g) = g.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "cartan/errors.hpp"

namespace cartan {

using Complex = std::complex<double>;

/// g = [[a, b], [-conj(b), conj(a)]] with |a|^2 + |b|^2 = 1; the pair is
/// normalized on construction.
struct SU2Element {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};

    SU2Element() = default;
    SU2Element(Complex a_, Complex b_) : a(a_), b(b_) {
        double n = std::sqrt(std::norm(a) + std::norm(b));
        if (n < 1e-9) throw DomainError("SU(2) element has near-zero norm");
        a /= n;
        b /= n;
    }

    static SU2Element identity() { return {}; }
    /// a = cos(psi) e^{i phi1}, b = sin(psi) e^{i phi2}: the S^3 chart used
    /// by the Haar quadrature.
    static SU2Element from_angles(double psi, double phi1, double phi2) {
        return {std::polar(std::cos(psi), phi1), std::polar(std::sin(psi), phi2)};
    }

    SU2Element inverse() const {
        SU2Element g;
        g.a = std::conj(a);
        g.b = -b;
        return g;
    }
    double trace() const { return 2.0 * a.real(); }

    friend SU2Element operator*(const SU2Element& x, const SU2Element& y) {
        SU2Element g;
        g.a = x.a * y.a - x.b * std::conj(y.b);
        g.b = x.a * y.b + x.b * std::conj(y.a);
        return g;
    }
    friend SU2Element operator-(const SU2Element& x) {
        SU2Element g;
        g.a = -x.a;
        g.b = -x.b;
        return g;
    }
};

/// Matrix of Pi_k(g) in the orthonormal monomial basis.
struct RepMatrix {
    int k = 0;
    Eigen::MatrixXcd entries;
};

namespace detail {

inline std::vector<double> binomial_row(int k) {
    std::vector<double> row(k + 1, 1.0);
    for (int j = 1; j <= k; ++j) row[j] = row[j - 1] * (k - j + 1) / j;
    return row;
}

} // namespace detail

inline RepMatrix su2_rep_matrix(int k, const SU2Element& g) {
    if (k < 0) throw DomainError("su2_rep_matrix requires k >= 0");
    RepMatrix rep;
    rep.k = k;
    rep.entries = Eigen::MatrixXcd::Zero(k + 1, k + 1);
    const std::vector<double> binom = detail::binomial_row(k);
    const Complex abar = std::conj(g.a), bbar = std::conj(g.b);

    // column j: u^{k-j} v^j evaluated on (u,v) -> (a u - conj(b) v, b u + conj(a) v)
    for (int j = 0; j <= k; ++j) {
        std::vector<Complex> coeff(k + 1, Complex(0.0));  // coeff[l] of u^{k-l} v^l
        coeff[0] = 1.0;
        for (int step = 0; step < k - j; ++step) {  // multiply by (a u - conj(b) v)
            for (int l = step + 1; l >= 1; --l) coeff[l] = coeff[l] * g.a - coeff[l - 1] * bbar;
            coeff[0] *= g.a;
        }
        for (int step = 0; step < j; ++step) {  // multiply by (b u + conj(a) v)
            int top = k - j + step + 1;
            for (int l = top; l >= 1; --l) coeff[l] = coeff[l] * g.b + coeff[l - 1] * abar;
            coeff[0] *= g.b;
        }
        for (int l = 0; l <= k; ++l)
            rep.entries(l, j) = std::sqrt(binom[j] / binom[l]) * coeff[l];
    }
    return rep;
}

/// Matrix element t^k_{ij}(g) = (Pi_k(g) e_j, e_i).
inline Complex su2_matrix_element(int k, int i, int j, const SU2Element& g) {
    if (i < 0 || i > k || j < 0 || j > k)
        throw DomainError("matrix element index out of range for Pi_k");
    return su2_rep_matrix(k, g).entries(i, j);
}

/// The double cover SU(2) -> SO(3): matrix of Pi_2(g) in the real basis
/// x = (u^2+v^2)/2, y = (u^2-v^2)/(2i), z = i uv.  Orthogonal with
/// determinant +1; kernel {+-1}.
inline Eigen::Matrix3d su2_to_so3(const SU2Element& g) {
    const Complex a = g.a, b = g.b;
    const Complex a2pb2 = a * a + b * b;
    const Complex a2mb2 = a * a - b * b;
    const Complex ab = a * b;
    const Complex abbar = a * std::conj(b);
    Eigen::Matrix3d m;
    m << a2pb2.real(), a2mb2.imag(), -2.0 * ab.imag(),
        -a2pb2.imag(), a2mb2.real(), -2.0 * ab.real(),
        -2.0 * abbar.imag(), 2.0 * abbar.real(), std::norm(a) - std::norm(b);
    return m;
}

} // namespace cartan
