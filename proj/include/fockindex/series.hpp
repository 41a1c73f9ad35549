#pragma once

// Truncated multivariate power series with exact rational coefficients.
//
// A series lives over an ordered list of variables, each carrying a positive
// integer weight (1 for Chern roots; k for a Chern class c_k). Terms whose
// weighted degree exceeds the truncation D are never stored, and neither are
// zero coefficients, so equality of series is equality of term maps.

#include "fockindex/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fockindex {

struct Variable {
    std::string name;
    int weight = 1;
    friend bool operator==(const Variable&, const Variable&) = default;
};

/// Immutable, shared list of variables. Ordering is creation order.
class VariableSet {
public:
    VariableSet() : vars_(std::make_shared<const std::vector<Variable>>()) {}
    explicit VariableSet(std::vector<Variable> vars) {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i].weight <= 0) throw std::invalid_argument("variable weight must be positive");
            for (std::size_t j = 0; j < i; ++j) {
                if (vars[j].name == vars[i].name) {
                    throw std::invalid_argument("duplicate variable '" + vars[i].name + "'");
                }
            }
        }
        vars_ = std::make_shared<const std::vector<Variable>>(std::move(vars));
    }

    /// x1..xn (or prefix1..prefixn), all of weight 1.
    static VariableSet roots(int n, const std::string& prefix = "x") {
        std::vector<Variable> v;
        v.reserve(static_cast<std::size_t>(std::max(n, 0)));
        for (int i = 1; i <= n; ++i) v.push_back({prefix + std::to_string(i), 1});
        return VariableSet(std::move(v));
    }
    static VariableSet single(const std::string& name, int weight = 1) {
        return VariableSet({Variable{name, weight}});
    }

    [[nodiscard]] std::size_t size() const { return vars_->size(); }
    [[nodiscard]] const Variable& operator[](std::size_t i) const { return (*vars_)[i]; }
    [[nodiscard]] const std::vector<Variable>& list() const { return *vars_; }
    [[nodiscard]] std::ptrdiff_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            if ((*vars_)[i].name == name) return static_cast<std::ptrdiff_t>(i);
        }
        return -1;
    }

    friend bool operator==(const VariableSet& a, const VariableSet& b) {
        return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
    }

private:
    std::shared_ptr<const std::vector<Variable>> vars_;
};

struct Monomial {
    std::vector<int> exponents;
    int degree = 0;  // weighted total degree, cached
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents == b.exponents; }
};

/// Graded-lex: ascending weighted degree, then lexicographically descending
/// exponent vectors (so x1 precedes x2 within a degree).
struct GradedLexOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.exponents > b.exponents;
    }
};

class TruncatedSeries {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexOrder>;

    TruncatedSeries() = default;
    TruncatedSeries(VariableSet vars, int truncation) : vars_(std::move(vars)), truncation_(truncation) {
        if (truncation < 0) throw std::invalid_argument("truncation degree must be non-negative");
    }

    static TruncatedSeries constant(const VariableSet& vars, int truncation, const Rational& c) {
        TruncatedSeries s(vars, truncation);
        s.add_term(std::vector<int>(vars.size(), 0), c);
        return s;
    }
    static TruncatedSeries one(const VariableSet& vars, int truncation) { return constant(vars, truncation, 1); }
    static TruncatedSeries variable(const VariableSet& vars, int truncation, std::size_t index,
                                    const Rational& coefficient = 1) {
        std::vector<int> e(vars.size(), 0);
        e.at(index) = 1;
        TruncatedSeries s(vars, truncation);
        s.add_term(std::move(e), coefficient);
        return s;
    }
    static TruncatedSeries monomial(const VariableSet& vars, int truncation, std::vector<int> exponents,
                                    const Rational& coefficient = 1) {
        TruncatedSeries s(vars, truncation);
        s.add_term(std::move(exponents), coefficient);
        return s;
    }

    [[nodiscard]] const VariableSet& variables() const { return vars_; }
    [[nodiscard]] int truncation() const { return truncation_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] int degree_of(const std::vector<int>& exponents) const {
        if (exponents.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
        int d = 0;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
            d += exponents[i] * vars_[i].weight;
        }
        return d;
    }

    /// Adds c * monomial; silently dropped when above the truncation.
    void add_term(std::vector<int> exponents, const Rational& c) {
        Monomial m{std::move(exponents), 0};
        m.degree = degree_of(m.exponents);
        add_monomial(std::move(m), c);
    }

    [[nodiscard]] Rational coefficient(const std::vector<int>& exponents) const {
        Monomial m{exponents, degree_of(exponents)};
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    [[nodiscard]] Rational constant_term() const { return coefficient(std::vector<int>(vars_.size(), 0)); }

    /// Lowest weighted degree present; -1 for the zero series.
    [[nodiscard]] int min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree; }
    [[nodiscard]] int max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree; }

    [[nodiscard]] TruncatedSeries homogeneous_part(int degree) const {
        TruncatedSeries r(vars_, truncation_);
        for (const auto& [m, c] : terms_) {
            if (m.degree == degree) r.terms_.emplace(m, c);
        }
        return r;
    }

    [[nodiscard]] TruncatedSeries truncated(int new_truncation) const {
        if (new_truncation > truncation_) {
            throw std::invalid_argument("cannot raise the truncation of a truncated series");
        }
        TruncatedSeries r(vars_, new_truncation);
        for (const auto& [m, c] : terms_) {
            if (m.degree <= new_truncation) r.terms_.emplace(m, c);
        }
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_compatible(o);
        for (const auto& [m, c] : o.terms_) add_monomial(m, c);
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_compatible(o);
        for (const auto& [m, c] : o.terms_) add_monomial(m, -c);
        return *this;
    }
    TruncatedSeries& operator*=(const Rational& k) {
        if (k.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= k;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& k) { return a *= k; }
    friend TruncatedSeries operator*(const Rational& k, TruncatedSeries a) { return a *= k; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_compatible(b);
        TruncatedSeries r(a.vars_, a.truncation_);
        const std::size_t n = a.vars_.size();
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                if (ma.degree + mb.degree > a.truncation_) break;  // b is degree-sorted
                Monomial m{std::vector<int>(n), ma.degree + mb.degree};
                for (std::size_t i = 0; i < n; ++i) m.exponents[i] = ma.exponents[i] + mb.exponents[i];
                r.add_monomial(std::move(m), ca * cb);
            }
        }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.truncation_ == b.truncation_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    void require_compatible(const TruncatedSeries& o) const {
        if (!(vars_ == o.vars_)) throw std::invalid_argument("series variable sets differ");
        if (truncation_ != o.truncation_) {
            throw std::invalid_argument("series truncations differ (" + std::to_string(truncation_) + " vs " +
                                        std::to_string(o.truncation_) + ")");
        }
    }

private:
    void add_monomial(Monomial m, const Rational& c) {
        if (m.degree > truncation_ || c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    VariableSet vars_;
    int truncation_ = 0;
    TermMap terms_;
};

/// s^k for k >= 0.
inline TruncatedSeries pow(const TruncatedSeries& s, int k) {
    if (k < 0) throw std::invalid_argument("pow: negative exponent on a series (use series_invert)");
    TruncatedSeries result = TruncatedSeries::one(s.variables(), s.truncation());
    TruncatedSeries base = s;
    while (k != 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k != 0) base *= base;
    }
    return result;
}

/// Multiplicative inverse of a series with nonzero constant term.
inline TruncatedSeries series_invert(const TruncatedSeries& s) {
    const Rational c = s.constant_term();
    if (c.is_zero()) {
        throw std::domain_error("series_invert: constant term is zero (not a unit; divide by a variable first)");
    }
    // s = c(1 - v)  =>  1/s = (1/c) * sum_k v^k
    TruncatedSeries v = s;
    v -= TruncatedSeries::constant(s.variables(), s.truncation(), c);
    v *= Rational(-1) / c;
    TruncatedSeries result = TruncatedSeries::one(s.variables(), s.truncation());
    if (!v.is_zero()) {
        const int steps = s.truncation() / v.min_degree();
        // Horner: 1 + v(1 + v(1 + ...))
        for (int k = 0; k < steps; ++k) {
            result = TruncatedSeries::one(s.variables(), s.truncation()) + v * result;
        }
    }
    return result * (Rational(1) / c);
}

/// exp(s) for s with zero constant term.
inline TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s.constant_term().is_zero()) {
        throw std::domain_error("series_exp: constant term must be zero");
    }
    TruncatedSeries result = TruncatedSeries::one(s.variables(), s.truncation());
    if (s.is_zero()) return result;
    const int steps = s.truncation() / s.min_degree();
    // Horner on sum_{k<=K} s^k/k!: 1 + s/1 (1 + s/2 (1 + ... (1 + s/K)))
    for (int k = steps; k >= 1; --k) {
        result = TruncatedSeries::one(s.variables(), s.truncation()) + (s * Rational(1, k)) * result;
    }
    return result;
}

/// Divides every term by the variable at `index`; the truncation drops by
/// that variable's weight.
inline TruncatedSeries quotient_by_variable(const TruncatedSeries& s, std::size_t index) {
    if (index >= s.variables().size()) throw std::invalid_argument("quotient_by_variable: bad variable index");
    const int w = s.variables()[index].weight;
    if (s.truncation() < w) throw std::invalid_argument("quotient_by_variable: truncation too low");
    TruncatedSeries r(s.variables(), s.truncation() - w);
    for (const auto& [m, c] : s.terms()) {
        if (m.exponents[index] < 1) {
            throw std::domain_error("quotient_by_variable: a term lacks variable '" + s.variables()[index].name +
                                    "'");
        }
        std::vector<int> e = m.exponents;
        e[index] -= 1;
        r.add_term(std::move(e), c);
    }
    return r;
}

/// Evaluates the univariate power series sum_k coeffs[k] t^k at t = root,
/// where root has zero constant term.
inline TruncatedSeries compose_univariate(const std::vector<Rational>& coeffs, const TruncatedSeries& root) {
    if (!root.constant_term().is_zero()) {
        throw std::domain_error("compose_univariate: substituted series must have zero constant term");
    }
    const int d = root.truncation();
    TruncatedSeries result(root.variables(), d);
    if (coeffs.empty()) return result;
    if (root.is_zero()) return TruncatedSeries::constant(root.variables(), d, coeffs[0]);
    const int top = std::min<int>(static_cast<int>(coeffs.size()) - 1, d / root.min_degree());
    for (int k = top; k >= 0; --k) {
        result = TruncatedSeries::constant(root.variables(), d, coeffs[static_cast<std::size_t>(k)]) + root * result;
    }
    return result;
}

/// Coefficients c_0..c_D of a series in a single variable.
inline std::vector<Rational> univariate_coefficients(const TruncatedSeries& s) {
    if (s.variables().size() != 1) throw std::invalid_argument("univariate_coefficients: series is not univariate");
    const int w = s.variables()[0].weight;
    std::vector<Rational> c(static_cast<std::size_t>(s.truncation() / w + 1), Rational(0));
    for (const auto& [m, v] : s.terms()) c[static_cast<std::size_t>(m.exponents[0])] = v;
    return c;
}

/// Re-expresses s over a larger variable set; mapping[i] is the index in
/// `target` of s's i-th variable. Weights must agree.
inline TruncatedSeries embed(const TruncatedSeries& s, const VariableSet& target, const std::vector<std::size_t>& mapping,
                             int truncation) {
    if (mapping.size() != s.variables().size()) throw std::invalid_argument("embed: mapping size mismatch");
    for (std::size_t i = 0; i < mapping.size(); ++i) {
        if (target[mapping[i]].weight != s.variables()[i].weight) throw std::invalid_argument("embed: weight mismatch");
    }
    TruncatedSeries r(target, truncation);
    for (const auto& [m, c] : s.terms()) {
        std::vector<int> e(target.size(), 0);
        for (std::size_t i = 0; i < mapping.size(); ++i) e[mapping[i]] += m.exponents[i];
        r.add_term(std::move(e), c);
    }
    return r;
}

/// B_0..B_kmax with B_1 = -1/2, read off from the inverse of (e^x - 1)/x.
inline std::vector<Rational> bernoulli_numbers(int k_max) {
    if (k_max < 0) throw std::invalid_argument("bernoulli_numbers: k_max must be non-negative");
    const VariableSet x = VariableSet::single("x");
    // (e^x - 1)/x = sum_k x^k/(k+1)!
    TruncatedSeries q(x, k_max);
    for (int k = 0; k <= k_max; ++k) q.add_term({k}, Rational(1) / factorial(static_cast<unsigned>(k + 1)));
    const std::vector<Rational> c = univariate_coefficients(series_invert(q));
    std::vector<Rational> b(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) b[k] = c[k] * factorial(static_cast<unsigned>(k));
    return b;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace detail {

inline std::string monomial_text(const VariableSet& vars, const std::vector<int>& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i].name;
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

inline bool is_constant(const std::vector<int>& e) {
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

}  // namespace detail

/// Renders terms in graded-lex order, e.g. "1 + x1/2 + x1^2/12 - x1^3/6".
inline std::string to_string(const TruncatedSeries& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : s.terms()) {
        const bool negative = c.sign() < 0;
        const Rational a = negative ? -c : c;
        std::string body;
        const std::string mono = detail::monomial_text(s.variables(), m.exponents);
        if (mono.empty()) {
            body = a.str();
        } else {
            const std::string num = a.numerator().get_str();
            const std::string den = a.denominator().get_str();
            body = (num == "1" ? mono : num + "*" + mono);
            if (den != "1") body += "/" + den;
        }
        if (first) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
        first = false;
    }
    return out;
}

/// Renders a homogeneous polynomial with its common denominator pulled out,
/// e.g. "(c1^2 + c2)/12". Falls back to to_string otherwise.
inline std::string to_factored_string(const TruncatedSeries& s) {
    if (s.size() < 2 || s.min_degree() != s.max_degree()) return to_string(s);
    mpz_class l = 1;
    for (const auto& [m, c] : s.terms()) l = lcm(l, c.denominator());
    if (l == 1) return to_string(s);
    TruncatedSeries scaled = s * Rational(mpq_class(l));
    return "(" + to_string(scaled) + ")/" + l.get_str();
}

}  // namespace fockindex
