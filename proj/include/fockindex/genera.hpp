#pragma once

// Multiplicative genus series: Todd, A-hat, B-hat, quasi Todd (Td*) and the
// Euler class, each a product over roots of a univariate factor g(x).

#include "fockindex/series.hpp"
#include "fockindex/symmetric.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace fockindex {

enum class GenusKind { todd, ahat, bhat, todd_star, euler };

inline const char* genus_name(GenusKind k) {
    switch (k) {
        case GenusKind::todd: return "todd";
        case GenusKind::ahat: return "ahat";
        case GenusKind::bhat: return "bhat";
        case GenusKind::todd_star: return "toddstar";
        case GenusKind::euler: return "euler";
    }
    return "?";
}

inline GenusKind parse_genus_kind(const std::string& s) {
    if (s == "todd" || s == "td") return GenusKind::todd;
    if (s == "ahat" || s == "a-hat") return GenusKind::ahat;
    if (s == "bhat" || s == "b-hat") return GenusKind::bhat;
    if (s == "toddstar" || s == "todd*" || s == "td*" || s == "tdstar") return GenusKind::todd_star;
    if (s == "euler") return GenusKind::euler;
    throw std::invalid_argument("unknown genus kind '" + s + "'");
}

/// Basis a genus polynomial is reported in. B-hat's per-root factor is odd,
/// so its products are not polynomials in the p_k alone; it stays in Chern
/// classes together with Td, Td* and the Euler class.
inline Basis natural_basis(GenusKind k) { return k == GenusKind::ahat ? Basis::pontryagin : Basis::chern; }

struct GenusSpec {
    GenusKind kind = GenusKind::todd;
    TruncatedSeries generating_series;  // univariate in "x"
    bool normalized = true;
};

namespace detail {

/// exp(r * x) in one variable, truncated at D.
inline TruncatedSeries exp_linear(const VariableSet& x, int truncation, const Rational& r) {
    return series_exp(TruncatedSeries::variable(x, truncation, 0, r));
}

}  // namespace detail

/// The per-root factor g(x) of a genus, truncated at D.
inline GenusSpec genus_spec(GenusKind kind, int truncation) {
    if (truncation < 0) throw std::invalid_argument("genus_spec: negative truncation");
    const VariableSet x = VariableSet::single("x");
    const int d = truncation;
    const TruncatedSeries one_up = TruncatedSeries::one(x, d + 1);
    const TruncatedSeries one = TruncatedSeries::one(x, d);
    const TruncatedSeries xs = TruncatedSeries::variable(x, d, 0);

    switch (kind) {
        case GenusKind::todd: {
            // x / (1 - e^{-x}) = 1 / [(1 - e^{-x}) / x]
            TruncatedSeries den = one_up - detail::exp_linear(x, d + 1, -1);
            return {kind, series_invert(quotient_by_variable(den, 0)), true};
        }
        case GenusKind::ahat: {
            TruncatedSeries den = detail::exp_linear(x, d + 1, Rational(1, 2)) -
                                  detail::exp_linear(x, d + 1, Rational(-1, 2));
            return {kind, series_invert(quotient_by_variable(den, 0)), true};
        }
        case GenusKind::bhat: {
            TruncatedSeries den = detail::exp_linear(x, d, Rational(1, 2)) + detail::exp_linear(x, d, Rational(-1, 2));
            return {kind, xs * series_invert(den), false};
        }
        case GenusKind::todd_star: {
            TruncatedSeries den = one + detail::exp_linear(x, d, -1);
            return {kind, xs * series_invert(den), false};
        }
        case GenusKind::euler:
            return {kind, xs, false};
    }
    throw std::invalid_argument("genus_spec: unknown kind");
}

/// prod_i g(x_i) over the given roots.
inline TruncatedSeries genus_series(GenusKind kind, const VariableSet& roots, int truncation) {
    const std::vector<Rational> g = univariate_coefficients(genus_spec(kind, truncation).generating_series);
    TruncatedSeries result = TruncatedSeries::one(roots, truncation);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        result *= compose_univariate(g, TruncatedSeries::variable(roots, truncation, i));
    }
    return result;
}

inline TruncatedSeries genus_series(GenusKind kind, int n_roots, int truncation) {
    if (n_roots < 1) throw std::invalid_argument("genus_series: need at least one root");
    return genus_series(kind, VariableSet::roots(n_roots), truncation);
}

/// (prod_i g(x_i))^2: the squared product convention used for finite and
/// spectral Todd-type classes in the spectral dictionary.
inline TruncatedSeries squared_genus_series(GenusKind kind, int n_roots, int truncation) {
    const TruncatedSeries s = genus_series(kind, n_roots, truncation);
    return s * s;
}

/// The monomial x_1 ... x_l.
inline TruncatedSeries euler_class_roots(int l, int truncation) {
    if (l < 1) throw std::invalid_argument("euler_class_roots: l must be positive");
    if (truncation < l) {
        throw std::invalid_argument("euler_class_roots: truncation " + std::to_string(truncation) +
                                    " is below the Euler class degree " + std::to_string(l));
    }
    return TruncatedSeries::monomial(VariableSet::roots(l), truncation, std::vector<int>(static_cast<std::size_t>(l), 1));
}

/// Number of roots used for genus_polynomial at a given degree.
inline int stable_root_count(int degree) { return std::max(degree, 2); }

/// Degree-homogeneous part of a genus in its natural basis. Cached.
inline ChernPolynomial genus_polynomial(GenusKind kind, int degree) {
    if (degree < 0) throw std::invalid_argument("genus_polynomial: negative degree");
    static std::mutex mutex;
    static std::map<std::pair<GenusKind, int>, ChernPolynomial> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find({kind, degree}); it != cache.end()) return it->second;
    }
    const int n = stable_root_count(degree);
    const TruncatedSeries part = genus_series(kind, n, degree).homogeneous_part(degree);
    ChernPolynomial p = natural_basis(kind) == Basis::pontryagin ? to_pontryagin_basis(part, n) : to_chern_basis(part, n);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::make_pair(kind, degree), std::move(p)).first->second;
}

/// The full (inhomogeneous) genus of a rank-n bundle in Chern classes.
inline ChernPolynomial genus_chern_class(GenusKind kind, int n_roots, int truncation) {
    return to_chern_basis(genus_series(kind, n_roots, truncation), n_roots);
}

}  // namespace fockindex
