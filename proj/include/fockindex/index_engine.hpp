#pragma once

// The four statistics pairings (Fermi-Bose, Bose-Bose, Fermi-Fermi,
// Bose-Fermi), their densities as canonical factor expressions, their
// indices on catalog manifolds, Hirzebruch-Riemann-Roch, and a dual-route
// verifier that rebuilds every density by brute-force series arithmetic.

#include "fockindex/bundles.hpp"
#include "fockindex/factor_expression.hpp"
#include "fockindex/genera.hpp"
#include "fockindex/manifolds.hpp"
#include "fockindex/symmetric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fockindex {

enum class PairingKind { fb, bb, ff, bf };
enum class PairingMode { exact, nondegenerate };

/// How TM (x) C is split into roots for the de Rham pairings. `geometric`
/// uses l conjugate pairs +-x_i; `independent_roots` uses 2l independent roots
/// with the Euler class over the first l of them.
enum class RootConvention { geometric, independent_roots };

inline const char* pairing_name(PairingKind k) {
    switch (k) {
        case PairingKind::fb: return "fb";
        case PairingKind::bb: return "bb";
        case PairingKind::ff: return "ff";
        case PairingKind::bf: return "bf";
    }
    return "?";
}

inline const char* pairing_title(PairingKind k) {
    switch (k) {
        case PairingKind::fb: return "Fermi-Bose";
        case PairingKind::bb: return "Bose-Bose";
        case PairingKind::ff: return "Fermi-Fermi";
        case PairingKind::bf: return "Bose-Fermi";
    }
    return "?";
}

inline PairingKind parse_pairing_kind(const std::string& s) {
    if (s == "fb") return PairingKind::fb;
    if (s == "bb") return PairingKind::bb;
    if (s == "ff") return PairingKind::ff;
    if (s == "bf") return PairingKind::bf;
    throw std::invalid_argument("unknown pairing '" + s + "'");
}

inline const char* mode_name(PairingMode m) { return m == PairingMode::exact ? "exact" : "nondegenerate"; }

inline PairingMode parse_pairing_mode(const std::string& s) {
    if (s == "exact") return PairingMode::exact;
    if (s == "nondegenerate" || s == "nd" || s == "limit") return PairingMode::nondegenerate;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

/// (-1)^{l(2l+1)}, the sign in front of the de Rham topological index.
inline int de_rham_prefactor(int l) { return (l * (2 * l + 1)) % 2 == 0 ? 1 : -1; }

namespace factors {

/// ch(E) = prod (e^{x/2} + e^{-x/2}) = prod e^{x/2} (1 + e^{-x})
inline FactorExpression spinor(int l, std::size_t first = 0, int n = -1) {
    FactorExpression e(n < 0 ? l : n);
    for (int i = 0; i < l; ++i) e.exponential(first + static_cast<std::size_t>(i), RootSign::plus, Rational(1, 2)).fermi(first + static_cast<std::size_t>(i), RootSign::plus, 1);
    return e;
}

/// A-hat = prod x / (e^{x/2} (1 - e^{-x}))
inline FactorExpression ahat(int l) {
    FactorExpression e(l);
    for (std::size_t i = 0; i < static_cast<std::size_t>(l); ++i) {
        e.power(i, RootSign::plus, 1).exponential(i, RootSign::plus, Rational(-1, 2)).bose(i, RootSign::plus, -1);
    }
    return e;
}

/// B-hat = prod x / (e^{x/2} (1 + e^{-x}))
inline FactorExpression bhat(int l) {
    FactorExpression e(l);
    for (std::size_t i = 0; i < static_cast<std::size_t>(l); ++i) {
        e.power(i, RootSign::plus, 1).exponential(i, RootSign::plus, Rational(-1, 2)).fermi(i, RootSign::plus, -1);
    }
    return e;
}

/// Root list of TM (x) C as (variable index, sign) pairs.
struct SignedRoot {
    std::size_t index;
    RootSign sign;
};

inline std::vector<SignedRoot> complexified_roots(int l, RootConvention conv) {
    std::vector<SignedRoot> r;
    for (std::size_t i = 0; i < static_cast<std::size_t>(l); ++i) {
        r.push_back({i, RootSign::plus});
        r.push_back({conv == RootConvention::geometric ? i : i + static_cast<std::size_t>(l),
                     conv == RootConvention::geometric ? RootSign::minus : RootSign::plus});
    }
    return r;
}

inline int variable_count(int l, RootConvention conv) { return conv == RootConvention::geometric ? l : 2 * l; }

/// ch(lambda_{-1} T*M (x) C) = prod over roots of (1 - e^{-root})
inline FactorExpression de_rham_symbol(int l, RootConvention conv) {
    FactorExpression e(variable_count(l, conv));
    for (const auto& r : complexified_roots(l, conv)) e.bose(r.index, r.sign, 1);
    return e;
}

/// Td(TM (x) C) = prod root / (1 - e^{-root})
inline FactorExpression todd_complexified(int l, RootConvention conv) {
    FactorExpression e(variable_count(l, conv));
    for (const auto& r : complexified_roots(l, conv)) e.power(r.index, r.sign, 1).bose(r.index, r.sign, -1);
    return e;
}

/// Td*(TM (x) C) = prod root / (1 + e^{-root})
inline FactorExpression todd_star_complexified(int l, RootConvention conv) {
    FactorExpression e(variable_count(l, conv));
    for (const auto& r : complexified_roots(l, conv)) e.power(r.index, r.sign, 1).fermi(r.index, r.sign, -1);
    return e;
}

/// 1 / e(TM) = prod_{i<=l} x_i^{-1}
inline FactorExpression inverse_euler(int l, RootConvention conv) {
    FactorExpression e(variable_count(l, conv));
    for (std::size_t i = 0; i < static_cast<std::size_t>(l); ++i) e.power(i, RootSign::plus, -1);
    return e;
}

}  // namespace factors

/// The pairing density, fully cancelled; in nondegenerate mode the
/// remaining (1 -+ e^{-x})^k factors are then dropped.
inline FactorExpression pairing_density(PairingKind kind, int l, PairingMode mode,
                                        RootConvention conv = RootConvention::geometric) {
    if (l < 1) throw std::invalid_argument("pairing_density: l must be positive");
    FactorExpression d(0);
    switch (kind) {
        case PairingKind::fb: d = factors::spinor(l) * factors::ahat(l); break;
        case PairingKind::ff: d = factors::spinor(l) * factors::bhat(l); break;
        case PairingKind::bb:
            d = factors::de_rham_symbol(l, conv) * factors::todd_complexified(l, conv) * factors::inverse_euler(l, conv);
            d.scale(Rational(de_rham_prefactor(l)));
            break;
        case PairingKind::bf:
            d = factors::de_rham_symbol(l, conv) * factors::todd_star_complexified(l, conv) *
                factors::inverse_euler(l, conv);
            break;
    }
    return mode == PairingMode::nondegenerate ? d.nondegenerate_limit() : d;
}

// ---------------------------------------------------------------------------
// Indices on manifolds

struct IndexReport {
    std::string manifold;
    std::string pairing;  // fb, bb, ff, bf or hrr
    PairingMode mode = PairingMode::exact;
    std::string density;  // canonical factor form in roots
    ChernPolynomial density_chern;
    Rational index;
};

/// Index of a pairing on a manifold: the density is lowered to a symmetric
/// series in l = dim_C roots, rewritten in Chern classes, evaluated on the
/// manifold and integrated.
inline IndexReport pairing_index(PairingKind kind, const Manifold& m, PairingMode mode, int truncation = -1) {
    const int l = m.complex_dim();
    const int d = truncation < 0 ? l : truncation;
    if (d < l) throw std::invalid_argument("pairing_index: truncation below the manifold dimension");
    const FactorExpression density = pairing_density(kind, l, mode);
    const TruncatedSeries lowered = density.lower(d);
    ChernPolynomial poly = to_chern_basis(lowered, l);
    const Rational value = integrate(m.model, evaluate_chern_polynomial(poly, m));
    return {m.name, pairing_name(kind), mode, to_string(density), std::move(poly), value};
}

/// chi(M, E) = integral of ch(E) Td(M).
inline Rational hrr_index(const Manifold& m, const RootModel& bundle) {
    const int l = m.complex_dim();
    if (!(bundle.variables() == m.model.generators())) {
        throw std::invalid_argument("hrr_index: bundle roots are not expressed in the manifold's generators");
    }
    if (bundle.truncation() < l) {
        throw std::invalid_argument("hrr_index: bundle truncation " + std::to_string(bundle.truncation()) +
                                    " is below the manifold dimension " + std::to_string(l));
    }
    const TruncatedSeries ch = m.model.reduce(chern_character(bundle).truncated(l));
    return integrate(m.model, m.model.multiply(ch, genus_class(GenusKind::todd, m)));
}

/// Root model of a sum of line bundles O(k_1 h_1 + ... ) on m.
inline RootModel line_bundle_sum(const Manifold& m, const std::vector<std::vector<Rational>>& degrees) {
    RootModel b(m.model.generators(), m.complex_dim());
    for (const auto& d : degrees) b.add_root(d, 1);
    return b;
}

// ---------------------------------------------------------------------------
// Dual-route verification

struct IdentityReport {
    PairingKind kind = PairingKind::ff;
    int l = 1;
    int truncation = 0;        // truncation of the compared series
    PairingMode mode = PairingMode::exact;
    RootConvention convention = RootConvention::geometric;
    std::string canonical;     // factor-route canonical form
    std::vector<std::string> chain;  // intermediate forms, factor route
    TruncatedSeries factor_route;
    TruncatedSeries brute_route;
    bool match = false;
    std::string first_mismatch;  // empty when match
};

namespace detail {

/// g(sign * x_i) for each listed root, multiplied together.
inline TruncatedSeries product_over_roots(GenusKind kind, const VariableSet& vars,
                                          const std::vector<factors::SignedRoot>& roots, int truncation) {
    const std::vector<Rational> g = univariate_coefficients(genus_spec(kind, truncation).generating_series);
    TruncatedSeries out = TruncatedSeries::one(vars, truncation);
    for (const auto& r : roots) {
        const Rational s = r.sign == RootSign::plus ? Rational(1) : Rational(-1);
        out *= compose_univariate(g, TruncatedSeries::variable(vars, truncation, r.index, s));
    }
    return out;
}

inline std::string describe_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries diff = a - b;
    if (diff.is_zero()) return {};
    const auto& [m, c] = *diff.terms().begin();
    return "coefficient of " + (detail::is_constant(m.exponents) ? std::string("1") : detail::monomial_text(a.variables(), m.exponents)) +
           ": factor route " + a.coefficient(m.exponents).str() + ", series route " + b.coefficient(m.exponents).str();
}

/// Exact density straight from the series definitions.
inline TruncatedSeries brute_force_density(PairingKind kind, int l, RootConvention conv, int truncation) {
    const int n = factors::variable_count(l, conv);
    const VariableSet vars = VariableSet::roots(n);
    const int d = truncation;
    switch (kind) {
        case PairingKind::fb: {
            const VariableSet lv = VariableSet::roots(l);
            return spinor_character(lv, d) * genus_series(GenusKind::ahat, lv, d);
        }
        case PairingKind::ff: {
            const VariableSet lv = VariableSet::roots(l);
            return spinor_character(lv, d) * genus_series(GenusKind::bhat, lv, d);
        }
        case PairingKind::bb:
        case PairingKind::bf: {
            const auto roots = factors::complexified_roots(l, conv);
            TruncatedSeries symbol = conv == RootConvention::geometric ? lambda_minus1_dual(vars, true, d)
                                                                       : lambda_minus1_dual(vars, false, d);
            const GenusKind g = kind == PairingKind::bb ? GenusKind::todd : GenusKind::todd_star;
            TruncatedSeries s = symbol * product_over_roots(g, vars, roots, d);
            for (std::size_t i = 0; i < static_cast<std::size_t>(l); ++i) s = quotient_by_variable(s, i);
            if (kind == PairingKind::bb) s *= Rational(de_rham_prefactor(l));
            return s;
        }
    }
    throw std::logic_error("brute_force_density: unknown kind");
}

}  // namespace detail

/// Compares the canonical factor route with brute-force series arithmetic.
/// In nondegenerate mode the check is that the exact series equals the
/// limit density times the factors the limit removed, cleared of
/// denominators on both sides.
inline IdentityReport verify_identity(PairingKind kind, int l, int truncation,
                                      PairingMode mode = PairingMode::exact,
                                      RootConvention conv = RootConvention::geometric) {
    if (l < 1) throw std::invalid_argument("verify_identity: l must be positive");
    const bool divides_by_euler = kind == PairingKind::bb || kind == PairingKind::bf;
    // below degree l every density truncates to zero and the check says nothing
    if (truncation < l) throw std::invalid_argument("verify_identity: truncation must be at least l");
    IdentityReport rep;
    rep.kind = kind;
    rep.l = l;
    rep.mode = mode;
    rep.convention = conv;
    rep.truncation = divides_by_euler ? truncation - l : truncation;

    // Factor route, with the intermediate forms.
    const int n = (kind == PairingKind::fb || kind == PairingKind::ff) ? l : factors::variable_count(l, conv);
    switch (kind) {
        case PairingKind::fb:
            rep.chain = {to_string(factors::spinor(l)), to_string(factors::ahat(l))};
            break;
        case PairingKind::ff:
            rep.chain = {to_string(factors::spinor(l)), to_string(factors::bhat(l))};
            break;
        case PairingKind::bb:
            rep.chain = {to_string(factors::de_rham_symbol(l, conv)), to_string(factors::todd_complexified(l, conv)),
                         to_string(factors::inverse_euler(l, conv))};
            break;
        case PairingKind::bf:
            rep.chain = {to_string(factors::de_rham_symbol(l, conv)),
                         to_string(factors::todd_star_complexified(l, conv)), to_string(factors::inverse_euler(l, conv))};
            break;
    }
    const FactorExpression exact = pairing_density(kind, l, PairingMode::exact, conv);
    const FactorExpression density = mode == PairingMode::exact ? exact : exact.nondegenerate_limit();
    rep.canonical = to_string(density);
    rep.chain.push_back(to_string(exact));
    if (mode == PairingMode::nondegenerate) rep.chain.push_back(rep.canonical);

    const VariableSet vars = VariableSet::roots(n);
    const int t = rep.truncation;
    const TruncatedSeries brute = detail::brute_force_density(kind, l, conv, truncation);

    if (mode == PairingMode::exact) {
        rep.factor_route = density.lower(vars, t);
        rep.brute_route = brute;
    } else {
        // exact = limit * prod B^b F^f  <=>  exact * prod B^{b-} F^{f-} = limit * prod B^{b+} F^{f+}
        const TruncatedSeries one = TruncatedSeries::one(vars, t);
        TruncatedSeries left = brute;
        TruncatedSeries right = density.lower(vars, t);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const TruncatedSeries x = TruncatedSeries::variable(vars, t, i);
            const TruncatedSeries b = one - series_exp(-x);
            const TruncatedSeries f = one + series_exp(-x);
            const RootFactors& r = exact.root(i);
            if (r.bose > 0) right *= pow(b, r.bose);
            if (r.bose < 0) left *= pow(b, -r.bose);
            if (r.fermi > 0) right *= pow(f, r.fermi);
            if (r.fermi < 0) left *= pow(f, -r.fermi);
        }
        rep.factor_route = right;
        rep.brute_route = left;
    }
    rep.match = rep.factor_route == rep.brute_route;
    if (!rep.match) rep.first_mismatch = detail::describe_mismatch(rep.factor_route, rep.brute_route);
    return rep;
}

}  // namespace fockindex
