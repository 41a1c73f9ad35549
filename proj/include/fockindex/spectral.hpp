#pragma once

// Spectral data {lambda_i} standing in for Chern roots: each eigenvalue is a
// line with c_1 = -lambda_i. Formal characters, zeta-regularized
// determinants, and the four pairings on finite spectra.

#include "fockindex/bundles.hpp"
#include "fockindex/factor_expression.hpp"
#include "fockindex/index_engine.hpp"
#include "fockindex/special_functions.hpp"
#include "fockindex/statmech.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace fockindex {

enum class SpectrumForm { finite, affine };

struct SpectrumSpec {
    SpectrumForm form = SpectrumForm::finite;
    std::vector<double> eigenvalues;  // finite
    double a = 1.0;                   // affine: lambda_n = a (n + c), n >= 0
    double c = 1.0;
    bool grading = false;             // lambda_i^+ = lambda_i^- declared

    static SpectrumSpec finite(std::vector<double> ev, bool graded = false) {
        SpectrumSpec s;
        s.eigenvalues = std::move(ev);
        s.grading = graded;
        s.validate();
        return s;
    }
    static SpectrumSpec affine(double a, double c, bool graded = false) {
        SpectrumSpec s;
        s.form = SpectrumForm::affine;
        s.a = a;
        s.c = c;
        s.grading = graded;
        s.validate();
        return s;
    }

    [[nodiscard]] bool is_finite() const { return form == SpectrumForm::finite; }
    [[nodiscard]] double eigenvalue(std::size_t n) const {
        return is_finite() ? eigenvalues.at(n) : a * (static_cast<double>(n) + c);
    }

    void validate() const {
        if (is_finite()) {
            for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
                if (!(eigenvalues[i] > 0.0) || !std::isfinite(eigenvalues[i])) {
                    throw std::domain_error("spectrum: eigenvalue " + std::to_string(i) + " is not positive");
                }
            }
        } else if (!(a > 0.0) || !(c > 0.0) || !std::isfinite(a) || !std::isfinite(c)) {
            throw std::domain_error("spectrum: affine form needs a > 0 and c > 0");
        }
    }
};

/// Chern roots y_i = c_1(L_i) = -lambda_i of a finite spectrum.
inline std::vector<double> spectral_roots(const SpectrumSpec& s) {
    if (!s.is_finite()) throw std::invalid_argument("spectral_roots: finite spectra only");
    std::vector<double> y;
    for (double l : s.eigenvalues) y.push_back(-l);
    return y;
}

namespace detail {

/// sum_{n>=0} f(n) where |f(n)| <= C q^n beyond the running term; stops once
/// the geometric tail bound term * r / (1 - r) drops below tol * |sum|.
template <class Term>
CertifiedValue sum_affine(const SpectrumSpec& s, Term term, double tol) {
    const double r = std::exp(-s.a);  // ratio between consecutive e^{-lambda_n}
    if (!(r < 1.0)) throw std::domain_error("spectral sum: tail bound cannot reach tolerance");
    double sum = 0.0;
    for (std::size_t n = 0; n < 1000000; ++n) {
        const auto [value, bound_next] = term(s.eigenvalue(n), s.eigenvalue(n + 1));
        sum += value;
        const double tail = bound_next / (1.0 - r);
        if (tail <= tol * std::abs(sum)) return {sum, tail};
    }
    throw std::domain_error("spectral sum: tail bound cannot reach tolerance");
}

}  // namespace detail

/// CH = sum_i e^{-lambda_i}.
inline CertifiedValue formal_chern_character(const SpectrumSpec& s, double tol = 1e-15) {
    s.validate();
    if (s.is_finite()) return {chern_character_value(spectral_roots(s)), 0.0};
    return detail::sum_affine(
        s, [](double l, double l_next) { return std::pair{std::exp(-l), std::exp(-l_next)}; }, tol);
}

/// ln Xi_BE = -sum ln(1 - e^{-lambda}), ln Xi_FD = sum ln(1 + e^{-lambda}).
inline CertifiedValue xi_formal(const SpectrumSpec& s, Statistics stat, double tol = 1e-15) {
    s.validate();
    if (stat == Statistics::mb) throw std::invalid_argument("xi_formal: needs BE or FD statistics");
    if (s.is_finite()) {
        const auto y = spectral_roots(s);
        return {stat == Statistics::be ? log_sym_fock_value(y) : log_ext_fock_value(y), 0.0};
    }
    return detail::sum_affine(
        s,
        [stat](double l, double l_next) {
            const double q_next = std::exp(-l_next);
            // -ln(1 - q) <= q/(1 - q), ln(1 + q) <= q
            const double bound = stat == Statistics::be ? q_next / (1.0 - q_next) : q_next;
            return std::pair{log_level_partition(stat, l), bound};
        },
        tol);
}

/// zeta_F'(0) for a finite spectrum: -sum ln lambda_i.
inline double zeta_derivative_at_zero(const SpectrumSpec& s) {
    s.validate();
    if (s.is_finite()) {
        double d = 0.0;
        for (double l : s.eigenvalues) d -= std::log(l);
        return d;
    }
    // zeta_F(s) = a^{-s} zeta_H(s, c), zeta_H(0, c) = 1/2 - c, zeta_H'(0, c) = ln G(c) - ln(2 pi)/2
    return -std::log(s.a) * (0.5 - s.c) + log_gamma(s.c) - 0.5 * std::log(2.0 * std::numbers::pi);
}

/// det'_zeta(F) = exp(-zeta_F'(0)). Finite spectra: the plain product,
/// checked against exp(-zeta'(0)).
inline CertifiedValue zeta_det(const SpectrumSpec& s) {
    s.validate();
    if (s.is_finite()) {
        double p = 1.0;
        for (double l : s.eigenvalues) p *= l;
        const double via_zeta = std::exp(-zeta_derivative_at_zero(s));
        const double err = std::abs(p - via_zeta);
        const double scale = 64.0 * std::numeric_limits<double>::epsilon() *
                             static_cast<double>(s.eigenvalues.size() + 1) * std::abs(p);
        if (err > std::max(scale, 1e-12 * std::abs(p))) {
            throw std::logic_error("zeta_det: product and exp(-zeta'(0)) disagree");
        }
        return {p, err};
    }
    const CertifiedValue lg = log_gamma_certified(s.c);
    const double log_det =
        (0.5 - s.c) * std::log(s.a) + 0.5 * std::log(2.0 * std::numbers::pi) - lg.value;
    const double value = std::exp(log_det);
    return {value, value * (std::expm1(lg.error_bound) + 4.0 * std::numeric_limits<double>::epsilon())};
}

/// chi(S, F): the regularized product of the spectrum. The integral over M
/// in front of it acts as the identity on this scalar.
inline CertifiedValue formal_euler_class(const SpectrumSpec& s) { return zeta_det(s); }

/// prod (e^{lambda/2} + e^{-lambda/2}) over the spectrum.
inline double spinor_type_character(const SpectrumSpec& s) {
    if (!s.is_finite()) throw std::invalid_argument("spinor_type_character: finite spectra only");
    double p = 1.0;
    for (double l : s.eigenvalues) p *= 2.0 * std::cosh(0.5 * l);
    return p;
}

/// prod (1 - e^{-lambda}) over both graded sectors: with a declared grading
/// the listed spectrum is the + sector and the - sector repeats it.
inline double de_rham_type_character(const SpectrumSpec& s) {
    if (!s.is_finite()) throw std::invalid_argument("de_rham_type_character: finite spectra only");
    double p = 1.0;
    for (double l : s.eigenvalues) p *= -std::expm1(-l);
    return s.grading ? p * p : p;
}

/// Pairing density on N eigenvalues, with the sector identification
/// lambda^+ = lambda^- built in: CH(sigma D) and Td, Td* enter squared.
inline FactorExpression formal_pairing_density(PairingKind kind, int n, PairingMode mode) {
    if (n < 1) throw std::invalid_argument("formal_pairing_density: empty spectrum");
    FactorExpression d(n);
    const auto un = static_cast<std::size_t>(n);
    switch (kind) {
        case PairingKind::fb: d = factors::spinor(n) * factors::ahat(n); break;
        case PairingKind::ff: d = factors::spinor(n) * factors::bhat(n); break;
        case PairingKind::bb:
        case PairingKind::bf:
            for (std::size_t i = 0; i < un; ++i) {
                d.bose(i, RootSign::plus, 2).power(i, RootSign::plus, 2).power(i, RootSign::plus, -1);
                if (kind == PairingKind::bb) {
                    d.bose(i, RootSign::plus, -2);
                } else {
                    d.fermi(i, RootSign::plus, -2);
                }
            }
            break;
    }
    return mode == PairingMode::nondegenerate ? d.nondegenerate_limit() : d;
}

inline double formal_pairing(const SpectrumSpec& s, PairingKind kind, PairingMode mode) {
    s.validate();
    if (!s.is_finite()) throw std::invalid_argument("formal_pairing: finite spectra only");
    if (s.eigenvalues.empty()) throw std::invalid_argument("formal_pairing: empty spectrum");
    return formal_pairing_density(kind, static_cast<int>(s.eigenvalues.size()), mode).evaluate(s.eigenvalues);
}

struct SpectralPairReport {
    CertifiedValue chern_character;
    CertifiedValue log_xi_be;
    CertifiedValue log_xi_fd;
    CertifiedValue determinant;
    CertifiedValue euler_class;
    struct Pairing {
        PairingKind kind;
        std::string density;
        double exact;
        double nondegenerate;
    };
    std::vector<Pairing> pairings;  // finite spectra only
};

inline SpectralPairReport spectral_report(const SpectrumSpec& s, double tol = 1e-15) {
    SpectralPairReport r;
    r.chern_character = formal_chern_character(s, tol);
    r.log_xi_be = xi_formal(s, Statistics::be, tol);
    r.log_xi_fd = xi_formal(s, Statistics::fd, tol);
    r.determinant = zeta_det(s);
    r.euler_class = formal_euler_class(s);
    if (s.is_finite() && !s.eigenvalues.empty()) {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= s.eigenvalues.size(); ++i) names.push_back("l" + std::to_string(i));
        for (auto k : {PairingKind::fb, PairingKind::bb, PairingKind::ff, PairingKind::bf}) {
            const int n = static_cast<int>(s.eigenvalues.size());
            r.pairings.push_back({k, to_string(formal_pairing_density(k, n, PairingMode::exact), names),
                                  formal_pairing(s, k, PairingMode::exact),
                                  formal_pairing(s, k, PairingMode::nondegenerate)});
        }
    }
    return r;
}

}  // namespace fockindex
