#pragma once

// Non-commutative Fourier analysis on SU(2) for band-limited functions
// f = sum c_{kij} t^k_{ij}.  The transform is f~(k) = integral of
// f(g^{-1}) Pi_k(g) dg; inversion, Plancherel and convolution follow the
// block-matrix calculus.

#include <complex>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

#include "cartan/haar.hpp"

namespace cartan {

/// Finite linear combination of matrix elements t^k_{ij}.
struct BandLimitedFunction {
    std::map<std::tuple<int, int, int>, Complex> coefficients;

    int kmax() const {
        int k = 0;
        for (const auto& [key, c] : coefficients) k = std::max(k, std::get<0>(key));
        return k;
    }

    Complex operator()(const SU2Element& g) const {
        Complex acc = 0;
        int cur = -1;
        RepMatrix rep;
        for (const auto& [key, c] : coefficients) {
            const auto [k, i, j] = key;
            if (k != cur) {
                rep = su2_rep_matrix(k, g);
                cur = k;
            }
            acc += c * rep.entries(i, j);
        }
        return acc;
    }

    static BandLimitedFunction matrix_element(int k, int i, int j, Complex c = 1.0) {
        if (i < 0 || i > k || j < 0 || j > k)
            throw DomainError("matrix element index out of range");
        BandLimitedFunction f;
        f.coefficients[{k, i, j}] = c;
        return f;
    }
    static BandLimitedFunction character(int k) {
        BandLimitedFunction f;
        for (int i = 0; i <= k; ++i) f.coefficients[{k, i, i}] = 1.0;
        return f;
    }
    static BandLimitedFunction constant(Complex c) {
        BandLimitedFunction f;
        f.coefficients[{0, 0, 0}] = c;
        return f;
    }

    BandLimitedFunction& operator+=(const BandLimitedFunction& o) {
        for (const auto& [key, c] : o.coefficients) coefficients[key] += c;
        return *this;
    }
    friend BandLimitedFunction operator+(BandLimitedFunction a, const BandLimitedFunction& b) {
        return a += b;
    }
    friend BandLimitedFunction operator*(Complex s, BandLimitedFunction f) {
        for (auto& [key, c] : f.coefficients) c *= s;
        return f;
    }
};

/// Blocks f~(k), one (k+1) x (k+1) matrix per unirrep label.
struct FourierCoefficients {
    std::map<int, Eigen::MatrixXcd> blocks;
};

/// Transform of an arbitrary evaluatable function, computed by quadrature.
/// The resolution must cover deg(f) + kmax.
template <class F>
FourierCoefficients fourier_transform_fn(F&& f, int kmax, int resolution) {
    if (kmax < 0) throw DomainError("fourier_transform requires kmax >= 0");
    FourierCoefficients out;
    for (int k = 0; k <= kmax; ++k) out.blocks[k] = Eigen::MatrixXcd::Zero(k + 1, k + 1);
    auto nodes = su2_quadrature(resolution);
    for (const Su2QuadratureNode& n : *nodes) {
        const Complex fv = n.weight * Complex(f(n.g.inverse()));
        for (int k = 0; k <= kmax; ++k) out.blocks[k] += fv * su2_rep_matrix(k, n.g).entries;
    }
    return out;
}

inline FourierCoefficients fourier_transform(const BandLimitedFunction& f, int kmax,
                                             int resolution) {
    return fourier_transform_fn(f, kmax, resolution);
}

/// f(g) = sum_k d(k) tr(f~(k) Pi_k(g)), returned by its coefficient list:
/// the coefficient of t^k_{ji} is d(k) f~(k)_{ij}.
inline BandLimitedFunction inverse_fourier(const FourierCoefficients& F) {
    BandLimitedFunction f;
    for (const auto& [k, block] : F.blocks) {
        const double d = k + 1;
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                Complex c = d * block(i, j);
                if (c != 0.0) f.coefficients[{k, j, i}] = c;
            }
    }
    return f;
}

/// ||f~||^2 = sum_k d(k) tr(f~(k) f~(k)^*); equals the squared L^2(G) norm.
inline double plancherel_norm(const FourierCoefficients& F) {
    double acc = 0;
    for (const auto& [k, block] : F.blocks) acc += (k + 1) * block.squaredNorm();
    return acc;
}

/// (f1 * f2)(h) = integral of f1(h g) f2(g^-1) dg, computed by quadrature and
/// returned band-limited.  The resolution must cover deg(f1) + deg(f2).
/// With the transform normalized as f~(k) = integral of f(g^-1) Pi_k(g) dg,
/// the transform of f1 * f2 is the blockwise product f2~(k) f1~(k); the
/// factors commute for class functions.
inline BandLimitedFunction convolve(const BandLimitedFunction& f1, const BandLimitedFunction& f2,
                                    int resolution) {
    const int kr = std::min(f1.kmax(), f2.kmax());
    auto value = [&](const SU2Element& h) {
        return haar_integrate_su2([&](const SU2Element& g) { return f1(h * g) * f2(g.inverse()); },
                                  resolution);
    };
    return inverse_fourier(fourier_transform_fn(value, kr, resolution));
}

/// Largest absolute difference between coefficient maps (union of supports).
inline double coefficient_distance(const BandLimitedFunction& a, const BandLimitedFunction& b) {
    double m = 0;
    for (const auto& [key, c] : a.coefficients) {
        auto it = b.coefficients.find(key);
        m = std::max(m, std::abs(c - (it == b.coefficients.end() ? Complex(0) : it->second)));
    }
    for (const auto& [key, c] : b.coefficients)
        if (!a.coefficients.count(key)) m = std::max(m, std::abs(c));
    return m;
}

/// Largest absolute entry difference between two block families.
inline double block_distance(const FourierCoefficients& a, const FourierCoefficients& b) {
    double m = 0;
    auto scan = [&](const FourierCoefficients& x, const FourierCoefficients& y) {
        for (const auto& [k, bx] : x.blocks) {
            auto it = y.blocks.find(k);
            if (it == y.blocks.end())
                m = std::max(m, bx.cwiseAbs().maxCoeff());
            else
                m = std::max(m, (bx - it->second).cwiseAbs().maxCoeff());
        }
    };
    scan(a, b);
    scan(b, a);
    return m;
}

/// Blockwise product (the transform of a convolution).
inline FourierCoefficients block_product(const FourierCoefficients& a,
                                         const FourierCoefficients& b) {
    FourierCoefficients out;
    for (const auto& [k, ba] : a.blocks) {
        auto it = b.blocks.find(k);
        if (it != b.blocks.end()) out.blocks[k] = ba * it->second;
    }
    return out;
}

namespace detail {

inline std::string format_complex_line(int k, int i, int j, Complex c) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d %d %d %.17g %.17g\n", k, i, j, c.real(), c.imag());
    return buf;
}

} // namespace detail

/// Text form: "kmax N" header, then one "k i j re im" line per coefficient.
inline std::string to_text(const BandLimitedFunction& f) {
    std::string out = "kmax " + std::to_string(f.kmax()) + "\n";
    for (const auto& [key, c] : f.coefficients) {
        const auto [k, i, j] = key;
        out += detail::format_complex_line(k, i, j, c);
    }
    return out;
}

/// Text form of the blocks, same line grammar as BandLimitedFunction.
inline std::string to_text(const FourierCoefficients& F) {
    int kmax = F.blocks.empty() ? 0 : F.blocks.rbegin()->first;
    std::string out = "kmax " + std::to_string(kmax) + "\n";
    for (const auto& [k, block] : F.blocks)
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) out += detail::format_complex_line(k, i, j, block(i, j));
    return out;
}

inline BandLimitedFunction blf_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    int kmax = 0;
    if (!(in >> tag >> kmax) || tag != "kmax") throw ParseError("expected 'kmax N' header");
    BandLimitedFunction f;
    int k, i, j;
    double re, im;
    while (in >> k >> i >> j >> re >> im) {
        if (k < 0 || i < 0 || i > k || j < 0 || j > k)
            throw ParseError("coefficient index out of range in text form");
        f.coefficients[{k, i, j}] = Complex(re, im);
    }
    if (!in.eof() && in.fail()) throw ParseError("malformed coefficient line");
    return f;
}

inline FourierCoefficients fc_from_text(const std::string& text) {
    BandLimitedFunction f = blf_from_text(text);
    FourierCoefficients F;
    for (const auto& [key, c] : f.coefficients) {
        const auto [k, i, j] = key;
        auto it = F.blocks.find(k);
        if (it == F.blocks.end())
            it = F.blocks.emplace(k, Eigen::MatrixXcd::Zero(k + 1, k + 1)).first;
        it->second(i, j) = c;
    }
    return F;
}

} // namespace cartan
