#pragma once

// Reference computations that avoid the library's series machinery: plain
// coefficient arrays, hand-expanded formulas, textbook closed forms and
// Euler-Maclaurin sums.

#include "fockindex/rational.hpp"

#include <gmpxx.h>

#include <cmath>
#include <map>
#include <vector>

namespace oracle {

using fockindex::Rational;

inline Rational fact(int n) {
    Rational r(1);
    for (int k = 2; k <= n; ++k) r = r * Rational(k);
    return r;
}

/// Taylor coefficients of e^{s x} up to x^n.
inline std::vector<Rational> exp_coeffs(const Rational& s, int n) {
    std::vector<Rational> c;
    for (int k = 0; k <= n; ++k) c.push_back(pow(s, k) / fact(k));
    return c;
}

/// Long division a / b of power series (b[0] != 0), n + 1 coefficients.
inline std::vector<Rational> divide(const std::vector<Rational>& a, const std::vector<Rational>& b, int n) {
    std::vector<Rational> q(static_cast<std::size_t>(n + 1), Rational(0));
    for (int k = 0; k <= n; ++k) {
        Rational acc = k < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(k)] : Rational(0);
        for (int j = 1; j <= k && j < static_cast<int>(b.size()); ++j) {
            acc = acc - b[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
        }
        q[static_cast<std::size_t>(k)] = acc / b[0];
    }
    return q;
}

inline std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b, int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= n; ++i) {
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= n; ++j) c[i + j] = c[i + j] + a[i] * b[j];
    }
    return c;
}

/// x / (1 - e^{-x}): divide 1 by (1 - e^{-x})/x = sum (-1)^k x^k/(k+1)!.
inline std::vector<Rational> todd_factor(int n) {
    std::vector<Rational> den;
    for (int k = 0; k <= n; ++k) den.push_back(Rational(k % 2 == 0 ? 1 : -1) / fact(k + 1));
    return divide({Rational(1)}, den, n);
}

/// (x/2) / sinh(x/2): divide 1 by sinh(x/2)/(x/2) = sum (x/2)^{2k}/(2k+1)!.
inline std::vector<Rational> ahat_factor(int n) {
    std::vector<Rational> den(static_cast<std::size_t>(n + 1), Rational(0));
    for (int k = 0; 2 * k <= n; ++k) den[static_cast<std::size_t>(2 * k)] = pow(Rational(1, 2), 2 * k) / fact(2 * k + 1);
    return divide({Rational(1)}, den, n);
}

/// x / (1 + e^{-x}).
inline std::vector<Rational> todd_star_factor(int n) {
    std::vector<Rational> den = exp_coeffs(Rational(-1), n);
    den[0] = den[0] + Rational(1);
    std::vector<Rational> q = divide({Rational(1)}, den, n);
    std::vector<Rational> out(static_cast<std::size_t>(n + 1), Rational(0));
    for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(k - 1)];
    return out;
}

/// x / (2 cosh(x/2)).
inline std::vector<Rational> bhat_factor(int n) {
    std::vector<Rational> den(static_cast<std::size_t>(n + 1), Rational(0));
    for (int k = 0; 2 * k <= n; ++k) den[static_cast<std::size_t>(2 * k)] = Rational(2) * pow(Rational(1, 2), 2 * k) / fact(2 * k);
    std::vector<Rational> q = divide({Rational(1)}, den, n);
    std::vector<Rational> out(static_cast<std::size_t>(n + 1), Rational(0));
    for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(k - 1)];
    return out;
}

// Multivariate polynomials as exponent-vector maps.
using Poly = std::map<std::vector<int>, Rational>;

inline Poly poly_mul(const Poly& a, const Poly& b, int max_degree) {
    Poly c;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            int deg = 0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                deg += e[i];
            }
            if (deg > max_degree) continue;
            c[e] = c[e] + ca * cb;
        }
    }
    for (auto it = c.begin(); it != c.end();) it = it->second.is_zero() ? c.erase(it) : std::next(it);
    return c;
}

/// prod_i f(x_i) with f given by coefficients, n variables, degree <= D.
inline Poly product_of_factor(const std::vector<Rational>& f, int n, int max_degree) {
    Poly acc{{std::vector<int>(static_cast<std::size_t>(n), 0), Rational(1)}};
    for (int i = 0; i < n; ++i) {
        Poly g;
        for (int k = 0; k < static_cast<int>(f.size()) && k <= max_degree; ++k) {
            if (f[static_cast<std::size_t>(k)].is_zero()) continue;
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = k;
            g[e] = f[static_cast<std::size_t>(k)];
        }
        acc = poly_mul(acc, g, max_degree);
    }
    return acc;
}

// Textbook genus polynomials in c1..c4 (exponents over c1,c2,c3,c4) and p1,p2.
inline Poly todd_hand(int degree) {
    switch (degree) {
        case 0: return {{{0, 0, 0, 0}, Rational(1)}};
        case 1: return {{{1, 0, 0, 0}, Rational(1, 2)}};
        case 2: return {{{2, 0, 0, 0}, Rational(1, 12)}, {{0, 1, 0, 0}, Rational(1, 12)}};
        case 3: return {{{1, 1, 0, 0}, Rational(1, 24)}};
        case 4:
            return {{{4, 0, 0, 0}, Rational(-1, 720)},
                    {{2, 1, 0, 0}, Rational(4, 720)},
                    {{0, 2, 0, 0}, Rational(3, 720)},
                    {{1, 0, 1, 0}, Rational(1, 720)},
                    {{0, 0, 0, 1}, Rational(-1, 720)}};
    }
    return {};
}

inline Poly ahat_hand(int pontryagin_degree) {
    switch (pontryagin_degree) {
        case 0: return {{{0, 0}, Rational(1)}};
        case 1: return {{{1, 0}, Rational(-1, 24)}};
        case 2: return {{{2, 0}, Rational(7, 5760)}, {{0, 1}, Rational(-4, 5760)}};
    }
    return {};
}

/// chi(CP^n, O(k)) = binom(n + k, n) as a polynomial in k.
inline Rational cp_line_bundle_chi(int n, int k) {
    Rational r(1);
    for (int j = 1; j <= n; ++j) r = r * Rational(k + j) / Rational(j);
    return r;
}

/// Euler characteristic from Betti numbers: CP^n has one class in every even degree.
inline int euler_cp(int n) { return n + 1; }
inline int euler_torus(int) { return 0; }

/// zeta_H'(0, c) by Euler-Maclaurin: sum the first N terms of -ln(n + c),
/// then the derivative at s = 0 of the remainder expansion.
inline double hurwitz_zeta_prime_zero(double c, int n_terms = 40, int bernoulli_terms = 8) {
    // B_2, B_4, ..., B_16
    static const double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
    double s = 0.0;
    for (int n = 0; n < n_terms; ++n) s -= std::log(n + c);
    const double a = n_terms + c;
    s += a * std::log(a) - a - 0.5 * std::log(a);
    for (int k = 1; k <= bernoulli_terms; ++k) {
        s += b[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * std::pow(a, 1.0 - 2.0 * k);
    }
    return s;
}

/// First N terms of sum_n q^n and the remainder bound q^N/(1 - q).
inline double geometric_partial(double q, int n_terms) {
    double s = 0.0;
    double t = 1.0;
    for (int n = 0; n < n_terms; ++n) {
        s += t;
        t *= q;
    }
    return s;
}

}  // namespace oracle
