#pragma once

// Characters and multiplicities.  Freudenthal's recursion is the production
// algorithm for weight multiplicities; the Kostant formula (a sum over the
// orbit of lambda + rho with signs) is kept alongside it as the exact
// cross-check.  Dimension and multiplicity arithmetic is integer-exact.

#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "cartan/weyl.hpp"

namespace cartan {

inline constexpr long long default_dim_cap = 1'000'000;

namespace detail {

inline unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

/// dim L(lambda) = prod_{alpha > 0} <alpha^vee, lambda + rho> / <alpha^vee, rho>,
/// evaluated as an exact rational product.
inline long long weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (lambda.rank() != static_cast<std::size_t>(rs.rank()))
        throw DomainError("weight rank mismatch");
    if (!lambda.is_dominant())
        throw DomainError("weyl_dim requires a dominant weight, got " + to_string(lambda));
    unsigned __int128 num = 1, den = 1;
    constexpr unsigned __int128 limit = static_cast<unsigned __int128>(1) << 100;
    for (const IntVec& root : rs.positive_roots) {
        // the normalization of the form cancels in the quotient
        long long a = 0, b = 0;
        for (int i = 0; i < rs.rank(); ++i) {
            a += root[i] * rs.symmetrizers[i] * (lambda.coords[i] + 1);
            b += root[i] * rs.symmetrizers[i];
        }
        long long g = std::gcd(a, b);
        num *= static_cast<unsigned long long>(a / g);
        den *= static_cast<unsigned long long>(b / g);
        unsigned __int128 r = detail::gcd128(num, den);
        num /= r;
        den /= r;
        if (num > limit) throw ResourceError("dimension overflow in weyl_dim");
    }
    if (den != 1) throw std::logic_error("weyl_dim product failed to reduce to an integer");
    if (num > static_cast<unsigned __int128>(0x7fffffffffffffffll))
        throw ResourceError("dimension overflow in weyl_dim");
    return static_cast<long long>(num);
}

/// Kostant partition function with a memo table owned by the evaluator, so a
/// caller can share one table across many queries against the same root
/// system.  Never global state.
class KostantEvaluator {
  public:
    explicit KostantEvaluator(const RootSystem& rs) : rs_(&rs) {}

    /// K(tau) for tau in simple-root coordinates; 0 when any coordinate is
    /// negative.
    long long operator()(const IntVec& tau) {
        if (tau.size() != static_cast<std::size_t>(rs_->rank()))
            throw DomainError("kostant partition argument has wrong rank");
        for (long long c : tau)
            if (c < 0) return 0;
        IntVec t = tau;
        return count(t, 0);
    }

  private:
    struct Key {
        detail::VecKey tau;
        std::uint32_t idx;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return detail::VecKeyHash{}(k.tau) * 1000003u ^ k.idx;
        }
    };

    // number of ways to write tau as a Z+ combination of positive_roots[idx..]
    long long count(IntVec& tau, std::size_t idx) {
        bool zero = true;
        for (long long c : tau)
            if (c != 0) {
                zero = false;
                break;
            }
        if (zero) return 1;
        if (idx == rs_->positive_roots.size()) return 0;
        Key key{detail::to_key(tau), static_cast<std::uint32_t>(idx)};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        long long total = count(tau, idx + 1);  // root idx unused
        const IntVec& r = rs_->positive_roots[idx];
        bool ok = true;
        for (std::size_t i = 0; i < tau.size(); ++i) {
            tau[i] -= r[i];
            if (tau[i] < 0) ok = false;
        }
        if (ok) total += count(tau, idx);  // root idx used at least once
        for (std::size_t i = 0; i < tau.size(); ++i) tau[i] += r[i];

        memo_.emplace(key, total);
        return total;
    }

    const RootSystem* rs_;
    std::unordered_map<Key, long long, KeyHash> memo_;
};

/// One-shot K(tau).
inline long long kostant_partition(const RootSystem& rs, const IntVec& tau) {
    KostantEvaluator k(rs);
    return k(tau);
}

/// mult_{L(lambda)} mu = sum_{w in W} eps(w) K(w(lambda+rho) - rho - mu),
/// organized over the signed orbit of lambda + rho.  Bind once per lambda,
/// query many mu; an external KostantEvaluator may be shared across lambdas.
class KostantMultiplicity {
  public:
    KostantMultiplicity(const RootSystem& rs, const Weight& lambda,
                        KostantEvaluator* shared = nullptr)
        : rs_(&rs), own_(rs), kostant_(shared ? shared : &own_) {
        if (!lambda.is_dominant())
            throw DomainError("mult_kostant requires a dominant highest weight");
        orbit_ = signed_orbit(rs, lambda + rs.rho);
    }

    long long operator()(const Weight& mu) const {
        long long total = 0;
        for (const auto& [nu, sign] : orbit_) {
            Weight shifted = nu - rs_->rho - mu;
            auto tau = root_coordinates(*rs_, shifted);
            if (!tau) return 0;  // mu not in lambda + Q: every term vanishes
            total += sign * (*kostant_)(*tau);
        }
        return total;
    }

  private:
    const RootSystem* rs_;
    std::vector<std::pair<Weight, int>> orbit_;
    mutable KostantEvaluator own_;
    KostantEvaluator* kostant_;
};

inline long long mult_kostant(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    return KostantMultiplicity(rs, lambda)(mu);
}

/// chi|_T as a finite map weight -> multiplicity.
struct FormalCharacter {
    std::map<Weight, long long> terms;

    long long total_mass() const {
        long long m = 0;
        for (const auto& [w, c] : terms) m += c;
        return m;
    }
    long long multiplicity(const Weight& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? 0 : it->second;
    }
};

/// Highest weight of the dual representation: the dominant representative
/// of -lambda.  Involutive.
inline Weight dual_weight(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw DomainError("dual_weight requires a dominant weight");
    return to_dominant(rs, -lambda).dominant;
}

/// Weight diagram of L(lambda) restricted to the dominant chamber, by
/// Freudenthal's recursion.  Keys are the dominant weights of the diagram.
inline std::map<Weight, long long> formal_character_dominant(const RootSystem& rs,
                                                             const Weight& lambda,
                                                             long long dim_cap = default_dim_cap) {
    if (!lambda.is_dominant())
        throw DomainError("formal_character requires a dominant weight, got " + to_string(lambda));
    long long dim = weyl_dim(rs, lambda);
    if (dim > dim_cap)
        throw ResourceError("representation dimension " + std::to_string(dim) +
                            " exceeds cap of " + std::to_string(dim_cap));
    detail::check_hashable_rank(rs);
    const int n = rs.rank();

    // dominant support: dominant mu = lambda - sum n_i alpha_i with n_i >= 0,
    // bounded componentwise by the offset of the lowest weight w0(lambda)
    Weight lowest = -to_dominant(rs, -lambda).dominant;
    IntVec bound = root_coordinates(rs, lambda - lowest).value();

    struct Entry {
        Weight mu;
        IntVec offset;  // root coordinates of lambda - mu
        long long height = 0;
        long long mult = 0;
    };
    std::vector<Entry> dominant;
    IntVec ofs(n, 0);
    for (;;) {
        Weight mu = lambda;
        long long h = 0;
        for (int i = 0; i < n; ++i) {
            if (ofs[i]) {
                for (int j = 0; j < n; ++j) mu.coords[j] -= ofs[i] * rs.cartan[j][i];
            }
            h += ofs[i];
        }
        if (mu.is_dominant()) dominant.push_back({std::move(mu), ofs, h, 0});
        int i = 0;
        while (i < n && ++ofs[i] > bound[i]) ofs[i++] = 0;
        if (i == n) break;
    }
    std::sort(dominant.begin(), dominant.end(), [](const Entry& a, const Entry& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.mu < b.mu;
    });

    std::unordered_map<detail::VecKey, std::size_t, detail::VecKeyHash> index;
    for (std::size_t i = 0; i < dominant.size(); ++i)
        index.emplace(detail::to_key(dominant[i].mu), i);

    std::vector<Weight> root_weights;
    root_weights.reserve(rs.positive_roots.size());
    for (const IntVec& r : rs.positive_roots) root_weights.push_back(weight_of_root(rs, r));

    dominant[0].mult = 1;  // the highest weight itself
    for (std::size_t e = 1; e < dominant.size(); ++e) {
        Entry& entry = dominant[e];
        long long num = 0;
        for (std::size_t a = 0; a < rs.positive_roots.size(); ++a) {
            Weight nu = entry.mu;
            for (long long k = 1;; ++k) {
                nu += root_weights[a];
                auto it = index.find(detail::to_key(to_dominant(rs, nu).dominant));
                if (it == index.end()) break;  // nu left the weight system
                num += dominant[it->second].mult * bilinear_pairing(rs, rs.positive_roots[a], nu);
            }
        }
        // (lambda+rho, lambda+rho) - (mu+rho, mu+rho) = (lambda+mu+2rho, lambda-mu)
        Weight s = lambda + entry.mu + rs.rho + rs.rho;
        long long delta = 0;
        for (int i = 0; i < n; ++i) delta += entry.offset[i] * rs.symmetrizers[i] * s.coords[i];
        long long twice = 2 * num;
        if (delta <= 0 || twice % delta != 0 || twice / delta <= 0)
            throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
        entry.mult = twice / delta;
    }

    std::map<Weight, long long> out;
    for (Entry& e : dominant) out.emplace(std::move(e.mu), e.mult);
    return out;
}

/// Complete weight diagram of L(lambda) with multiplicities.
inline FormalCharacter formal_character(const RootSystem& rs, const Weight& lambda,
                                        long long dim_cap = default_dim_cap) {
    FormalCharacter chi;
    for (const auto& [mu, mult] : formal_character_dominant(rs, lambda, dim_cap))
        for (const Weight& w : orbit(rs, mu).elements) chi.terms.emplace(w, mult);
    return chi;
}

/// Pointwise product of two formal characters (e_a e_b = e_{a+b}).
inline FormalCharacter character_product(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter out;
    for (const auto& [wa, ma] : a.terms)
        for (const auto& [wb, mb] : b.terms) out.terms[wa + wb] += ma * mb;
    return out;
}

enum class CharacterMethod { WeightSum, WeylQuotient };

/// Numeric character value at the torus point t: e_mu(t) = exp(i sum mu_j t_j).
/// WeightSum evaluates the weight expansion; WeylQuotient evaluates
/// A_{lambda+rho} / A_rho and refuses near-singular denominators.
inline std::complex<double> eval_character(const RootSystem& rs, const Weight& lambda,
                                           const std::vector<double>& t, CharacterMethod method,
                                           long long dim_cap = default_dim_cap) {
    if (t.size() != static_cast<std::size_t>(rs.rank()))
        throw DomainError("torus point has wrong rank");
    if (!lambda.is_dominant()) throw DomainError("eval_character requires a dominant weight");
    auto e_at = [&](const Weight& w) {
        double phase = 0;
        for (std::size_t j = 0; j < t.size(); ++j) phase += static_cast<double>(w.coords[j]) * t[j];
        return std::complex<double>(std::cos(phase), std::sin(phase));
    };
    if (method == CharacterMethod::WeightSum) {
        std::complex<double> acc = 0;
        for (const auto& [mu, mult] : formal_character_dominant(rs, lambda, dim_cap))
            for (const Weight& w : orbit(rs, mu).elements)
                acc += static_cast<double>(mult) * e_at(w);
        return acc;
    }
    auto alternating = [&](const Weight& v) {
        std::complex<double> acc = 0;
        for (const auto& [w, sign] : signed_orbit(rs, v)) acc += static_cast<double>(sign) * e_at(w);
        return acc;
    };
    std::complex<double> denom = alternating(rs.rho);
    if (std::abs(denom) < 1e-12)
        throw SingularityError(
            "torus point is singular for the Weyl quotient (|A_rho| < 1e-12); "
            "use the weight-sum method");
    return alternating(lambda + rs.rho) / denom;
}

/// Text form: one line "mult × (c1,...,cr)" per weight, sorted
/// lexicographically by weight.
inline std::string format_character(const std::map<Weight, long long>& terms) {
    std::string out;
    for (const auto& [w, m] : terms) {
        out += std::to_string(m);
        out += " × ";
        out += to_string(w);
        out += '\n';
    }
    return out;
}

inline std::string format_character(const FormalCharacter& chi) {
    return format_character(chi.terms);
}

} // namespace cartan
