#pragma once

// Symbolic products of per-root atoms
//     x_i^k,  e^{s x_i},  (1 - e^{-x_i})^b,  (1 + e^{-x_i})^f
// times a rational scalar. Atoms on a conjugate root -x_i are rewritten onto
// x_i as they are multiplied in:
//     (-x)^k       = (-1)^k x^k
//     1 - e^{x}    = -e^{x} (1 - e^{-x})
//     1 + e^{x}    =  e^{x} (1 + e^{-x})
// so every expression has one canonical record per root and cancellation is
// exponent arithmetic.

#include "fockindex/genera.hpp"
#include "fockindex/series.hpp"

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fockindex {

enum class RootSign { plus = 1, minus = -1 };

struct RootFactors {
    int power = 0;            // x^power
    Rational exp_rate{0};     // e^{exp_rate * x}
    int bose = 0;             // (1 - e^{-x})^bose
    int fermi = 0;            // (1 + e^{-x})^fermi
    friend bool operator==(const RootFactors&, const RootFactors&) = default;
};

class FactorExpression {
public:
    explicit FactorExpression(int n_roots) : roots_(static_cast<std::size_t>(n_roots)) {
        if (n_roots < 0) throw std::invalid_argument("FactorExpression: negative root count");
    }

    [[nodiscard]] int n_roots() const { return static_cast<int>(roots_.size()); }
    [[nodiscard]] const Rational& scalar() const { return scalar_; }
    [[nodiscard]] const RootFactors& root(std::size_t i) const { return roots_.at(i); }

    FactorExpression& scale(const Rational& c) {
        scalar_ *= c;
        return *this;
    }
    /// (sign * x_i)^k
    FactorExpression& power(std::size_t i, RootSign sign, int k) {
        roots_.at(i).power += k;
        if (sign == RootSign::minus && k % 2 != 0) scalar_ = -scalar_;
        return *this;
    }
    /// e^{s * sign * x_i}
    FactorExpression& exponential(std::size_t i, RootSign sign, const Rational& s) {
        roots_.at(i).exp_rate += sign == RootSign::plus ? s : -s;
        return *this;
    }
    /// (1 - e^{-sign * x_i})^k
    FactorExpression& bose(std::size_t i, RootSign sign, int k) {
        auto& r = roots_.at(i);
        r.bose += k;
        if (sign == RootSign::minus) {
            r.exp_rate += Rational(k);
            if (k % 2 != 0) scalar_ = -scalar_;
        }
        return *this;
    }
    /// (1 + e^{-sign * x_i})^k
    FactorExpression& fermi(std::size_t i, RootSign sign, int k) {
        auto& r = roots_.at(i);
        r.fermi += k;
        if (sign == RootSign::minus) r.exp_rate += Rational(k);
        return *this;
    }

    friend FactorExpression operator*(FactorExpression a, const FactorExpression& b) {
        if (a.n_roots() != b.n_roots()) throw std::invalid_argument("FactorExpression: root count mismatch");
        a.scalar_ *= b.scalar_;
        for (std::size_t i = 0; i < a.roots_.size(); ++i) {
            a.roots_[i].power += b.roots_[i].power;
            a.roots_[i].exp_rate += b.roots_[i].exp_rate;
            a.roots_[i].bose += b.roots_[i].bose;
            a.roots_[i].fermi += b.roots_[i].fermi;
        }
        return a;
    }

    /// e^{-x_i} -> 0 in the canonical form: every (1 -+ e^{-x_i})^k becomes 1.
    [[nodiscard]] FactorExpression nondegenerate_limit() const {
        FactorExpression r = *this;
        for (auto& f : r.roots_) f.bose = f.fermi = 0;
        return r;
    }

    /// True when the expression is scalar * prod x_i^{powers} and nothing else.
    [[nodiscard]] bool is_monomial() const {
        for (const auto& f : roots_) {
            if (!f.exp_rate.is_zero() || f.bose != 0 || f.fermi != 0) return false;
        }
        return true;
    }

    /// Power series over `roots` (one variable per root), truncated at D.
    /// Each (1 - e^{-x})^b is split as x^b U^b with U = (1 - e^{-x})/x a unit;
    /// the net power of x must be non-negative.
    [[nodiscard]] TruncatedSeries lower(const VariableSet& roots, int truncation) const {
        if (static_cast<int>(roots.size()) != n_roots()) throw std::invalid_argument("lower: variable count mismatch");
        const int d = truncation;
        const VariableSet t = VariableSet::single("t");
        const TruncatedSeries one = TruncatedSeries::one(t, d);
        const TruncatedSeries u = quotient_by_variable(
            TruncatedSeries::one(t, d + 1) - series_exp(TruncatedSeries::variable(t, d + 1, 0, -1)), 0);
        const TruncatedSeries fermi_factor = one + series_exp(TruncatedSeries::variable(t, d, 0, -1));

        TruncatedSeries result = TruncatedSeries::constant(roots, d, scalar_);
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            const RootFactors& f = roots_[i];
            const int net_power = f.power + f.bose;
            if (net_power < 0) {
                throw std::domain_error("lower: uncancelled pole of order " + std::to_string(-net_power) + " at " +
                                        roots[i].name);
            }
            TruncatedSeries g = TruncatedSeries::monomial(t, d, {net_power});
            if (!f.exp_rate.is_zero()) g *= series_exp(TruncatedSeries::variable(t, d, 0, f.exp_rate));
            if (f.bose > 0) g *= pow(u, f.bose);
            if (f.bose < 0) g *= pow(series_invert(u), -f.bose);
            if (f.fermi > 0) g *= pow(fermi_factor, f.fermi);
            if (f.fermi < 0) g *= pow(series_invert(fermi_factor), -f.fermi);
            result *= compose_univariate(univariate_coefficients(g), TruncatedSeries::variable(roots, d, i));
        }
        return result;
    }

    [[nodiscard]] TruncatedSeries lower(int truncation) const { return lower(VariableSet::roots(n_roots()), truncation); }

    /// Numeric value with x_i replaced by the real numbers values[i].
    [[nodiscard]] double evaluate(std::span<const double> values) const {
        if (static_cast<int>(values.size()) != n_roots()) throw std::invalid_argument("evaluate: value count mismatch");
        double v = scalar_.to_double();
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            const RootFactors& f = roots_[i];
            const double x = values[i];
            const double q = std::exp(-x);
            if (f.power != 0) v *= std::pow(x, f.power);
            if (!f.exp_rate.is_zero()) v *= std::exp(f.exp_rate.to_double() * x);
            if (f.bose != 0) v *= std::pow(-std::expm1(-x), f.bose);
            if (f.fermi != 0) v *= std::pow(1.0 + q, f.fermi);
        }
        return v;
    }

    friend bool operator==(const FactorExpression&, const FactorExpression&) = default;

private:
    Rational scalar_{1};
    std::vector<RootFactors> roots_;
};

/// Renders e.g. "x1*(1+e^{-x1})/(1-e^{-x1})" using `names` for the roots.
inline std::string to_string(const FactorExpression& e, const std::vector<std::string>& names) {
    std::vector<std::string> num;
    std::vector<std::string> den;
    auto with_power = [](const std::string& base, int k) { return k == 1 ? base : base + "^" + std::to_string(k); };
    for (std::size_t i = 0; i < static_cast<std::size_t>(e.n_roots()); ++i) {
        const RootFactors& f = e.root(i);
        const std::string& x = names.at(i);
        if (f.power > 0) num.push_back(with_power(x, f.power));
        if (f.power < 0) den.push_back(with_power(x, -f.power));
        if (!f.exp_rate.is_zero()) {
            const Rational a = f.exp_rate.sign() < 0 ? -f.exp_rate : f.exp_rate;
            std::string arg = a.numerator() == 1 ? x : a.numerator().get_str() + "*" + x;
            if (a.denominator() != 1) arg += "/" + a.denominator().get_str();
            (f.exp_rate.sign() > 0 ? num : den).push_back("e^{" + arg + "}");
        }
        if (f.bose > 0) num.push_back(with_power("(1-e^{-" + x + "})", f.bose));
        if (f.bose < 0) den.push_back(with_power("(1-e^{-" + x + "})", -f.bose));
        if (f.fermi > 0) num.push_back(with_power("(1+e^{-" + x + "})", f.fermi));
        if (f.fermi < 0) den.push_back(with_power("(1+e^{-" + x + "})", -f.fermi));
    }
    auto join = [](const std::vector<std::string>& parts) {
        std::string s;
        for (const auto& p : parts) s += (s.empty() ? "" : "*") + p;
        return s;
    };
    const Rational& c = e.scalar();
    const Rational mag = c.sign() < 0 ? -c : c;
    std::string out;
    if (c.is_zero()) return "0";
    std::string coeff = mag.numerator() == 1 ? "" : mag.numerator().get_str();
    if (!coeff.empty()) num.insert(num.begin(), coeff);
    if (mag.denominator() != 1) den.insert(den.begin(), mag.denominator().get_str());
    out = num.empty() ? "1" : join(num);
    if (!den.empty()) out += "/" + (den.size() == 1 ? den.front() : "(" + join(den) + ")");
    return c.sign() < 0 ? "-" + out : out;
}

inline std::string to_string(const FactorExpression& e) {
    std::vector<std::string> names;
    for (int i = 1; i <= e.n_roots(); ++i) names.push_back("x" + std::to_string(i));
    return to_string(e, names);
}

}  // namespace fockindex
