#pragma once

// Bundles as multisets of Chern roots, and the characters of their Fock-type
// constructions: ch, Sym^*, Lambda^*, the spinor character and lambda_{-1}
// of the dual.

#include "fockindex/genera.hpp"
#include "fockindex/series.hpp"

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fockindex {

struct RootEntry {
    TruncatedSeries root;  // homogeneous of degree 1
    int multiplicity = 1;  // negative for virtual summands
    friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

class RootModel {
public:
    RootModel(VariableSet vars, int truncation) : vars_(std::move(vars)), truncation_(truncation) {
        if (truncation < 0) throw std::invalid_argument("RootModel: negative truncation");
    }

    /// Adds the root sum_j coefficients[j] * generator_j.
    RootModel& add_root(const std::vector<Rational>& coefficients, int multiplicity = 1) {
        if (coefficients.size() != vars_.size()) throw std::invalid_argument("RootModel: coefficient count mismatch");
        TruncatedSeries r(vars_, truncation_);
        for (std::size_t j = 0; j < coefficients.size(); ++j) {
            if (coefficients[j].is_zero()) continue;
            r += TruncatedSeries::variable(vars_, truncation_, j, coefficients[j]);
        }
        return add_root(std::move(r), multiplicity);
    }
    RootModel& add_root(TruncatedSeries root, int multiplicity = 1) {
        root.require_compatible(TruncatedSeries(vars_, truncation_));
        for (const auto& [m, c] : root.terms()) {
            if (m.degree != 1) throw std::invalid_argument("RootModel: roots must be homogeneous of degree 1");
        }
        if (multiplicity != 0) entries_.push_back({std::move(root), multiplicity});
        return *this;
    }

    [[nodiscard]] const VariableSet& variables() const { return vars_; }
    [[nodiscard]] int truncation() const { return truncation_; }
    [[nodiscard]] const std::vector<RootEntry>& entries() const { return entries_; }
    [[nodiscard]] int rank() const {
        int r = 0;
        for (const auto& e : entries_) r += e.multiplicity;
        return r;
    }

    /// Coefficient vector of a root over the generators.
    [[nodiscard]] std::vector<Rational> coefficients(const RootEntry& e) const {
        std::vector<Rational> c(vars_.size(), Rational(0));
        for (const auto& [m, v] : e.root.terms()) {
            for (std::size_t j = 0; j < m.exponents.size(); ++j) {
                if (m.exponents[j] == 1) c[j] = v;
            }
        }
        return c;
    }

    friend bool operator==(const RootModel&, const RootModel&) = default;

private:
    VariableSet vars_;
    int truncation_;
    std::vector<RootEntry> entries_;
};

/// E + F: concatenated roots.
inline RootModel direct_sum(const RootModel& a, const RootModel& b) {
    if (!(a.variables() == b.variables()) || a.truncation() != b.truncation()) {
        throw std::invalid_argument("direct_sum: models live over different variables or truncations");
    }
    RootModel r = a;
    for (const auto& e : b.entries()) r.add_root(e.root, e.multiplicity);
    return r;
}

/// E (x) F: roots added pairwise, multiplicities multiplied.
inline RootModel tensor_product(const RootModel& a, const RootModel& b) {
    if (!(a.variables() == b.variables()) || a.truncation() != b.truncation()) {
        throw std::invalid_argument("tensor_product: models live over different variables or truncations");
    }
    RootModel r(a.variables(), a.truncation());
    for (const auto& ea : a.entries()) {
        for (const auto& eb : b.entries()) {
            r.add_root(ea.root + eb.root, ea.multiplicity * eb.multiplicity);
        }
    }
    return r;
}

/// ch(E) = sum of multiplicity * e^{root}.
inline TruncatedSeries chern_character(const RootModel& m) {
    TruncatedSeries result(m.variables(), m.truncation());
    for (const auto& e : m.entries()) result += series_exp(e.root) * Rational(e.multiplicity);
    return result;
}

/// ch(Sym^* E) as x^{-denominator} * unit.
struct FockCharacter {
    std::vector<int> denominator_exponents;  // per generator
    TruncatedSeries unit;                    // constant term nonzero
    friend bool operator==(const FockCharacter&, const FockCharacter&) = default;
};

/// prod over roots y of 1/(1 - e^{y}). Each root must be a nonzero multiple
/// w*x_j of a single generator; then
///     1/(1 - e^{w x}) = (1/x) * (-1/w) * Td(-w x),   Td(t) = t/(1 - e^{-t}).
inline FockCharacter sym_fock_character(const RootModel& m) {
    const std::vector<Rational> todd = univariate_coefficients(genus_spec(GenusKind::todd, m.truncation()).generating_series);
    FockCharacter out{std::vector<int>(m.variables().size(), 0), TruncatedSeries::one(m.variables(), m.truncation())};
    for (const auto& e : m.entries()) {
        if (e.root.is_zero()) {
            throw std::domain_error("sym_fock_character: zero root, the bosonic occupation sum diverges");
        }
        if (e.root.size() != 1) {
            throw std::domain_error("sym_fock_character: root must be a multiple of a single generator");
        }
        const auto& [mono, w] = *e.root.terms().begin();
        std::size_t j = 0;
        while (mono.exponents[j] == 0) ++j;
        const TruncatedSeries level_unit =
            compose_univariate(todd, e.root * Rational(-1)) * (Rational(-1) / w);
        if (e.multiplicity > 0) {
            out.unit *= pow(level_unit, e.multiplicity);
        } else {
            out.unit *= pow(series_invert(level_unit), -e.multiplicity);
        }
        out.denominator_exponents[j] += e.multiplicity;
    }
    return out;
}

/// prod over roots y of (1 + e^{y})^multiplicity.
inline TruncatedSeries ext_fock_character(const RootModel& m) {
    TruncatedSeries result = TruncatedSeries::one(m.variables(), m.truncation());
    for (const auto& e : m.entries()) {
        TruncatedSeries level = TruncatedSeries::one(m.variables(), m.truncation()) + series_exp(e.root);
        if (e.multiplicity > 0) {
            result *= pow(level, e.multiplicity);
        } else {
            result *= pow(series_invert(level), -e.multiplicity);
        }
    }
    return result;
}

/// prod_{i=1}^{l} (e^{x_i/2} + e^{-x_i/2}) over `roots`.
inline TruncatedSeries spinor_character(const VariableSet& roots, int truncation) {
    TruncatedSeries result = TruncatedSeries::one(roots, truncation);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const TruncatedSeries half = TruncatedSeries::variable(roots, truncation, i, Rational(1, 2));
        result *= series_exp(half) + series_exp(-half);
    }
    return result;
}

inline TruncatedSeries spinor_character(int l, int truncation) {
    return spinor_character(VariableSet::roots(l), truncation);
}

/// prod_i (1 - e^{-x_i}); with `paired`, also the factors (1 - e^{x_i}) of
/// the conjugate roots -x_i.
inline TruncatedSeries lambda_minus1_dual(const VariableSet& roots, bool paired, int truncation) {
    const TruncatedSeries one = TruncatedSeries::one(roots, truncation);
    TruncatedSeries result = one;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const TruncatedSeries x = TruncatedSeries::variable(roots, truncation, i);
        result *= one - series_exp(-x);
        if (paired) result *= one - series_exp(x);
    }
    return result;
}

inline TruncatedSeries lambda_minus1_dual(int l, bool paired, int truncation) {
    return lambda_minus1_dual(VariableSet::roots(l), paired, truncation);
}

// ---------------------------------------------------------------------------
// Thermal compactification M -> M x S^1_beta and back along a section.

/// Pullback along the projection: the circle contributes a new generator on
/// which every root has zero coefficient (H^2(S^1) = 0).
inline RootModel thermal_pullback(const RootModel& m, const std::string& circle = "theta") {
    std::vector<Variable> vars = m.variables().list();
    vars.push_back({circle, 1});
    const VariableSet extended(std::move(vars));
    std::vector<std::size_t> mapping(m.variables().size());
    for (std::size_t j = 0; j < mapping.size(); ++j) mapping[j] = j;
    RootModel out(extended, m.truncation());
    for (const auto& e : m.entries()) {
        out.add_root(embed(e.root, extended, mapping, m.truncation()), e.multiplicity);
    }
    return out;
}

/// Restriction along a section: drops the named generator (set to zero).
inline RootModel restrict_to_section(const RootModel& m, const std::string& circle = "theta") {
    const auto idx = m.variables().index_of(circle);
    if (idx < 0) throw std::invalid_argument("restrict_to_section: no generator named '" + circle + "'");
    std::vector<Variable> vars;
    for (std::size_t j = 0; j < m.variables().size(); ++j) {
        if (static_cast<std::ptrdiff_t>(j) != idx) vars.push_back(m.variables()[j]);
    }
    const VariableSet base(std::move(vars));
    RootModel out(base, m.truncation());
    for (const auto& e : m.entries()) {
        std::vector<Rational> c = m.coefficients(e);
        c.erase(c.begin() + idx);
        out.add_root(c, e.multiplicity);
    }
    return out;
}

/// sigma^* pi^*: pull back to M x S^1 and restrict along the section.
inline RootModel thermal_pullback_roundtrip(const RootModel& m) {
    return restrict_to_section(thermal_pullback(m));
}

// ---------------------------------------------------------------------------
// Characters evaluated at real root values y_i (one line per level).

inline double chern_character_value(std::span<const double> roots) {
    double s = 0.0;
    for (double y : roots) s += std::exp(y);
    return s;
}

/// ln prod 1/(1 - e^{y_i}); requires every y_i < 0.
inline double log_sym_fock_value(std::span<const double> roots) {
    double s = 0.0;
    for (double y : roots) {
        if (!(y < 0.0)) throw std::domain_error("bosonic Fock character needs negative real roots");
        s -= std::log1p(-std::exp(y));
    }
    return s;
}

/// ln prod (1 + e^{y_i}).
inline double log_ext_fock_value(std::span<const double> roots) {
    double s = 0.0;
    for (double y : roots) s += std::log1p(std::exp(y));
    return s;
}

}  // namespace fockindex
