#pragma once

// Symmetric series in Chern roots, rewritten in elementary symmetric
// polynomials (Chern classes c_k) or in elementary symmetric polynomials of
// the squared roots (Pontryagin classes p_k).

#include "fockindex/series.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fockindex {

enum class Basis { chern, pontryagin };

inline const char* basis_name(Basis b) { return b == Basis::chern ? "chern" : "pontryagin"; }

/// c1..cn with weights 1..n.
inline VariableSet chern_class_variables(int n) {
    std::vector<Variable> v;
    for (int k = 1; k <= n; ++k) v.push_back({"c" + std::to_string(k), k});
    return VariableSet(std::move(v));
}

/// p1..pl with weights 2, 4, ..., 2l (degrees measured in root units).
inline VariableSet pontryagin_class_variables(int l) {
    std::vector<Variable> v;
    for (int k = 1; k <= l; ++k) v.push_back({"p" + std::to_string(k), 2 * k});
    return VariableSet(std::move(v));
}

/// A polynomial in c_1..c_n (or p_1..p_l). `poly` is a series over the
/// weighted class variables, truncated at the same degree D as the root
/// series it came from.
struct ChernPolynomial {
    Basis basis = Basis::chern;
    int rank = 0;
    TruncatedSeries poly;

    [[nodiscard]] int truncation() const { return poly.truncation(); }
    friend bool operator==(const ChernPolynomial&, const ChernPolynomial&) = default;
};

inline std::string to_string(const ChernPolynomial& p) { return to_string(p.poly); }
inline std::string to_factored_string(const ChernPolynomial& p) { return to_factored_string(p.poly); }

/// e_k(x_1..x_n) as a series over `roots` truncated at D.
inline TruncatedSeries elementary_symmetric(const VariableSet& roots, int truncation, int k) {
    const int n = static_cast<int>(roots.size());
    TruncatedSeries s(roots, truncation);
    if (k < 0 || k > n) return s;
    // Enumerate k-subsets recursively (n is small).
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (left == 0) {
            s.add_term(e, 1);
            return;
        }
        for (int i = start; i <= n - left; ++i) {
            e[static_cast<std::size_t>(i)] = 1;
            rec(i + 1, left - 1);
            e[static_cast<std::size_t>(i)] = 0;
        }
    };
    rec(0, k);
    return s;
}

/// sum_i x_i^k.
inline TruncatedSeries power_sum(const VariableSet& roots, int truncation, int k) {
    TruncatedSeries s(roots, truncation);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        std::vector<int> e(roots.size(), 0);
        e[i] = k;
        s.add_term(std::move(e), 1);
    }
    return s;
}

/// Returns the first adjacent transposition (i, i+1) under which s is not
/// invariant, or nullopt when s is symmetric.
inline std::optional<std::pair<std::size_t, std::size_t>> find_asymmetry(const TruncatedSeries& s) {
    const std::size_t n = s.variables().size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (const auto& [m, c] : s.terms()) {
            std::vector<int> swapped = m.exponents;
            std::swap(swapped[i], swapped[i + 1]);
            if (s.coefficient(swapped) != c) return std::make_pair(i, i + 1);
        }
    }
    return std::nullopt;
}

namespace detail {

inline void require_unit_weight_roots(const TruncatedSeries& s, int n_roots, const char* who) {
    if (static_cast<int>(s.variables().size()) != n_roots) {
        throw std::invalid_argument(std::string(who) + ": series has " + std::to_string(s.variables().size()) +
                                    " variables, expected " + std::to_string(n_roots));
    }
    for (const auto& v : s.variables().list()) {
        if (v.weight != 1) throw std::invalid_argument(std::string(who) + ": root variables must have weight 1");
    }
}

inline void require_symmetric(const TruncatedSeries& s, const char* who) {
    if (auto bad = find_asymmetry(s)) {
        throw std::domain_error(std::string(who) + ": series is not symmetric under transposition (" +
                                s.variables()[bad->first].name + " " + s.variables()[bad->second].name + ")");
    }
}

/// Leading-term elimination. `s` must be symmetric over unit-weight roots.
inline TruncatedSeries reduce_to_elementary(TruncatedSeries s, const VariableSet& class_vars) {
    const VariableSet& roots = s.variables();
    const int n = static_cast<int>(roots.size());
    const int d = s.truncation();
    std::vector<TruncatedSeries> e;
    e.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) e.push_back(elementary_symmetric(roots, d, k));

    // powers[k][j] = e_k^j, grown lazily.
    std::vector<std::vector<TruncatedSeries>> powers(static_cast<std::size_t>(n) + 1);
    auto e_pow = [&](int k, int j) -> const TruncatedSeries& {
        auto& row = powers[static_cast<std::size_t>(k)];
        if (row.empty()) row.push_back(TruncatedSeries::one(roots, d));
        while (static_cast<int>(row.size()) <= j) row.push_back(row.back() * e[static_cast<std::size_t>(k)]);
        return row[static_cast<std::size_t>(j)];
    };

    TruncatedSeries result(class_vars, d);
    while (!s.is_zero()) {
        auto it = std::prev(s.terms().end());
        const int top = it->first.degree;
        while (it != s.terms().begin() && std::prev(it)->first.degree == top) --it;
        const std::vector<int> lead = it->first.exponents;
        const Rational c = it->second;

        std::vector<int> multi(static_cast<std::size_t>(n), 0);
        TruncatedSeries product = TruncatedSeries::one(roots, d);
        for (int k = 0; k < n; ++k) {
            const int next = (k + 1 < n) ? lead[static_cast<std::size_t>(k) + 1] : 0;
            const int m = lead[static_cast<std::size_t>(k)] - next;
            if (m < 0) throw std::logic_error("leading exponent is not a partition; input not symmetric");
            multi[static_cast<std::size_t>(k)] = m;
            if (m > 0) product *= e_pow(k + 1, m);
        }
        s -= product * c;
        result.add_term(std::move(multi), c);
    }
    return result;
}

}  // namespace detail

/// Rewrites a symmetric series in n roots as a polynomial in c_1..c_n.
inline ChernPolynomial to_chern_basis(const TruncatedSeries& s, int n_roots) {
    detail::require_unit_weight_roots(s, n_roots, "to_chern_basis");
    detail::require_symmetric(s, "to_chern_basis");
    return {Basis::chern, n_roots, detail::reduce_to_elementary(s, chern_class_variables(n_roots))};
}

/// Rewrites a series that is symmetric and even in each of l roots as a
/// polynomial in p_k = e_k(x_1^2..x_l^2).
inline ChernPolynomial to_pontryagin_basis(const TruncatedSeries& s, int l) {
    detail::require_unit_weight_roots(s, l, "to_pontryagin_basis");
    for (const auto& [m, c] : s.terms()) {
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] % 2 != 0) {
                throw std::domain_error("to_pontryagin_basis: odd dependence on root " + s.variables()[i].name);
            }
        }
    }
    detail::require_symmetric(s, "to_pontryagin_basis");
    // Substitute y_i = x_i^2 and reduce in the y's.
    const VariableSet ys = VariableSet::roots(l, "y");
    TruncatedSeries halved(ys, s.truncation() / 2);
    for (const auto& [m, c] : s.terms()) {
        std::vector<int> e = m.exponents;
        for (int& k : e) k /= 2;
        halved.add_term(std::move(e), c);
    }
    TruncatedSeries in_y = detail::reduce_to_elementary(halved, chern_class_variables(l));
    // Relabel c_k(y) -> p_k, restoring root-degree truncation.
    TruncatedSeries result(pontryagin_class_variables(l), s.truncation());
    for (const auto& [m, c] : in_y.terms()) result.add_term(m.exponents, c);
    return {Basis::pontryagin, l, result};
}

/// Re-expands a class polynomial into `roots` (which must number p.rank).
inline TruncatedSeries expand_in_roots(const ChernPolynomial& p, const VariableSet& roots) {
    if (static_cast<int>(roots.size()) != p.rank) throw std::invalid_argument("expand_in_roots: rank mismatch");
    const int d = p.truncation();
    std::vector<TruncatedSeries> classes;
    if (p.basis == Basis::chern) {
        for (int k = 1; k <= p.rank; ++k) classes.push_back(elementary_symmetric(roots, d, k));
    } else {
        // e_k of the squares
        for (int k = 1; k <= p.rank; ++k) {
            TruncatedSeries ek(roots, d);
            const TruncatedSeries plain = elementary_symmetric(roots, d / 2 + 1, k);
            for (const auto& [m, c] : plain.terms()) {
                std::vector<int> e = m.exponents;
                for (int& x : e) x *= 2;
                ek.add_term(std::move(e), c);
            }
            classes.push_back(ek);
        }
    }
    TruncatedSeries out(roots, d);
    for (const auto& [m, c] : p.poly.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(roots, d, c);
        for (std::size_t k = 0; k < m.exponents.size(); ++k) {
            if (m.exponents[k] > 0) term *= pow(classes[k], m.exponents[k]);
        }
        out += term;
    }
    return out;
}

}  // namespace fockindex
