#pragma once

// Catalog of closed manifolds with even-degree cohomology models: complex
// projective spaces, tori and their products.
//
// Generators are degree-2 classes, written with degree 1 in series units so
// that a class of real degree 2k has series degree k. A model of complex
// dimension l integrates by reading the coefficient of its top monomial.

#include "fockindex/genera.hpp"
#include "fockindex/series.hpp"
#include "fockindex/symmetric.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fockindex {

class CohomologyModel {
public:
    CohomologyModel(VariableSet generators, std::vector<int> nilpotency, std::vector<int> top_monomial,
                    Rational top_integral)
        : generators_(std::move(generators)),
          nilpotency_(std::move(nilpotency)),
          top_(std::move(top_monomial)),
          top_integral_(std::move(top_integral)) {
        if (nilpotency_.size() != generators_.size() || top_.size() != generators_.size()) {
            throw std::invalid_argument("CohomologyModel: per-generator data size mismatch");
        }
        for (std::size_t i = 0; i < top_.size(); ++i) {
            if (generators_[i].weight != 1) throw std::invalid_argument("CohomologyModel: generators must have degree 2");
            if (top_[i] >= nilpotency_[i]) throw std::invalid_argument("CohomologyModel: top monomial vanishes");
            complex_dim_ += top_[i];
        }
    }

    [[nodiscard]] const VariableSet& generators() const { return generators_; }
    [[nodiscard]] const std::vector<int>& nilpotency() const { return nilpotency_; }
    [[nodiscard]] const std::vector<int>& top_monomial() const { return top_; }
    [[nodiscard]] const Rational& top_integral() const { return top_integral_; }
    [[nodiscard]] int complex_dim() const { return complex_dim_; }
    [[nodiscard]] int real_dim() const { return 2 * complex_dim_; }

    [[nodiscard]] TruncatedSeries zero() const { return TruncatedSeries(generators_, complex_dim_); }
    [[nodiscard]] TruncatedSeries one() const { return TruncatedSeries::one(generators_, complex_dim_); }
    [[nodiscard]] TruncatedSeries generator(std::size_t i, const Rational& c = 1) const {
        return reduce(TruncatedSeries::variable(generators_, complex_dim_, i, c));
    }

    /// Drops monomials killed by the nilpotency relations.
    [[nodiscard]] TruncatedSeries reduce(const TruncatedSeries& s) const {
        if (!(s.variables() == generators_)) throw std::invalid_argument("class is not expressed in the model's generators");
        TruncatedSeries r(generators_, complex_dim_);
        for (const auto& [m, c] : s.terms()) {
            if (m.degree > complex_dim_) continue;
            bool alive = true;
            for (std::size_t i = 0; i < m.exponents.size(); ++i) alive = alive && m.exponents[i] < nilpotency_[i];
            if (alive) r.add_term(m.exponents, c);
        }
        return r;
    }

    [[nodiscard]] TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) const {
        return reduce(a.truncated(complex_dim_) * b.truncated(complex_dim_));
    }

private:
    VariableSet generators_;
    std::vector<int> nilpotency_;
    std::vector<int> top_;
    Rational top_integral_;
    int complex_dim_ = 0;
};

/// c_1(TM)..c_l(TM) as classes of the model.
struct TangentData {
    std::vector<TruncatedSeries> chern_values;
};

struct Manifold {
    std::string name;
    CohomologyModel model;
    TangentData tangent;

    [[nodiscard]] int complex_dim() const { return model.complex_dim(); }

    /// c_k(TM), with c_0 = 1 and c_k = 0 beyond the dimension.
    [[nodiscard]] TruncatedSeries chern_class(int k) const {
        if (k == 0) return model.one();
        if (k < 0 || k > complex_dim()) return model.zero();
        return tangent.chern_values[static_cast<std::size_t>(k - 1)];
    }

    [[nodiscard]] TruncatedSeries total_chern_class() const {
        TruncatedSeries c = model.one();
        for (int k = 1; k <= complex_dim(); ++k) c += chern_class(k);
        return c;
    }
};

/// Top-degree coefficient times the declared integral of the top monomial.
inline Rational integrate(const CohomologyModel& m, const TruncatedSeries& cls) {
    return m.reduce(cls).coefficient(m.top_monomial()) * m.top_integral();
}

/// CP^n: H = Q[h]/h^{n+1}, c(T) = (1 + h)^{n+1}, integral of h^n is 1.
inline Manifold cp(int n) {
    if (n < 1) throw std::invalid_argument("cp: n must be at least 1");
    CohomologyModel model(VariableSet::single("h"), {n + 1}, {n}, Rational(1));
    TangentData t;
    for (int k = 1; k <= n; ++k) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(k));
        TruncatedSeries c(model.generators(), n);
        c.add_term({k}, Rational(mpq_class(binom)));
        t.chern_values.push_back(c);
    }
    return {"cp" + std::to_string(n), std::move(model), std::move(t)};
}

/// T^{2l} as (T^2)^l: generators w_i with w_i^2 = 0, flat tangent bundle.
inline Manifold torus(int l) {
    if (l < 1) throw std::invalid_argument("torus: l must be at least 1");
    CohomologyModel model(VariableSet::roots(l, "w"), std::vector<int>(static_cast<std::size_t>(l), 2),
                          std::vector<int>(static_cast<std::size_t>(l), 1), Rational(1));
    TangentData t;
    for (int k = 1; k <= l; ++k) t.chern_values.push_back(model.zero());
    return {"torus" + std::to_string(l), std::move(model), std::move(t)};
}

/// A x B with the Whitney formula c(T(A x B)) = c(TA) c(TB).
inline Manifold product(const Manifold& a, const Manifold& b) {
    std::vector<Variable> vars = a.model.generators().list();
    std::vector<std::size_t> map_a(vars.size());
    for (std::size_t i = 0; i < map_a.size(); ++i) map_a[i] = i;
    std::vector<std::size_t> map_b;
    for (const auto& v : b.model.generators().list()) {
        std::string name = v.name;
        auto taken = [&](const std::string& s) {
            for (const auto& w : vars) if (w.name == s) return true;
            return false;
        };
        for (int suffix = 2; taken(name); ++suffix) name = v.name + "_" + std::to_string(suffix);
        map_b.push_back(vars.size());
        vars.push_back({name, 1});
    }
    const VariableSet gens(std::move(vars));

    std::vector<int> nil = a.model.nilpotency();
    nil.insert(nil.end(), b.model.nilpotency().begin(), b.model.nilpotency().end());
    std::vector<int> top = a.model.top_monomial();
    top.insert(top.end(), b.model.top_monomial().begin(), b.model.top_monomial().end());
    CohomologyModel model(gens, nil, top, a.model.top_integral() * b.model.top_integral());

    const int l = model.complex_dim();
    const TruncatedSeries ca = embed(a.total_chern_class(), gens, map_a, l);
    const TruncatedSeries cb = embed(b.total_chern_class(), gens, map_b, l);
    const TruncatedSeries total = model.multiply(ca, cb);
    TangentData t;
    for (int k = 1; k <= l; ++k) t.chern_values.push_back(total.homogeneous_part(k));
    return {a.name + "x" + b.name, std::move(model), std::move(t)};
}

/// Parses "cpN", "torusN" and products "AxB...".
inline Manifold catalog(const std::string& name) {
    auto parse_factor = [&](const std::string& f) -> Manifold {
        auto number_after = [&](std::size_t prefix) {
            const std::string digits = f.substr(prefix);
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
                throw std::invalid_argument("unknown manifold '" + name + "'");
            }
            return std::stoi(digits);
        };
        if (f.rfind("cp", 0) == 0) return cp(number_after(2));
        if (f.rfind("torus", 0) == 0) return torus(number_after(5));
        throw std::invalid_argument("unknown manifold '" + name + "'");
    };
    std::vector<std::string> factors;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = name.find('x', start);
        factors.push_back(name.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    Manifold m = parse_factor(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) m = product(m, parse_factor(factors[i]));
    m.name = name;
    return m;
}

/// Substitutes the manifold's characteristic classes into a class
/// polynomial. Pontryagin classes come from c(TM (x) C) = c(TM) c(conj TM):
/// p_k = (-1)^k c_{2k}(TM (x) C).
inline TruncatedSeries evaluate_chern_polynomial(const ChernPolynomial& p, const Manifold& m) {
    const int l = m.complex_dim();
    if (p.truncation() < l) {
        throw std::invalid_argument("evaluate_chern_polynomial: polynomial truncated at degree " +
                                    std::to_string(p.truncation()) + ", below the manifold dimension " +
                                    std::to_string(l));
    }
    const CohomologyModel& model = m.model;
    std::vector<TruncatedSeries> values;
    if (p.basis == Basis::chern) {
        for (int k = 1; k <= p.rank; ++k) values.push_back(m.chern_class(k));
    } else {
        TruncatedSeries conj = model.one();
        for (int k = 1; k <= l; ++k) conj += m.chern_class(k) * Rational(k % 2 == 0 ? 1 : -1);
        const TruncatedSeries complexified = model.multiply(m.total_chern_class(), conj);
        for (int k = 1; k <= p.rank; ++k) {
            values.push_back(complexified.homogeneous_part(2 * k) * Rational(k % 2 == 0 ? 1 : -1));
        }
    }
    TruncatedSeries out = model.zero();
    for (const auto& [mono, c] : p.poly.terms()) {
        if (mono.degree > l) continue;
        TruncatedSeries term = TruncatedSeries::constant(model.generators(), l, c);
        for (std::size_t k = 0; k < mono.exponents.size(); ++k) {
            for (int j = 0; j < mono.exponents[k]; ++j) term = model.multiply(term, values[k]);
        }
        out += term;
    }
    return out;
}

/// Full genus class of TM, computed over l = dim_C roots in Chern classes.
inline TruncatedSeries genus_class(GenusKind kind, const Manifold& m) {
    return evaluate_chern_polynomial(genus_chern_class(kind, m.complex_dim(), m.complex_dim()), m);
}

inline Rational genus_number(GenusKind kind, const Manifold& m) { return integrate(m.model, genus_class(kind, m)); }

inline Rational euler_characteristic(const Manifold& m) {
    return integrate(m.model, m.chern_class(m.complex_dim()));
}

}  // namespace fockindex
