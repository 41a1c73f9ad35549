#pragma once

// ln Gamma on the positive reals with an explicit error bound: shift the
// argument up to z >= 10 by the recurrence, then Stirling's series
//     ln G(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + sum_k B_{2k} / (2k (2k-1) z^{2k-1}).
// The series is alternating-type with error below the first omitted term.

#include "fockindex/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fockindex {

struct CertifiedValue {
    double value = 0.0;
    double error_bound = 0.0;
};

namespace detail {

inline const std::vector<double>& stirling_coefficients() {
    // B_{2k} / (2k (2k - 1)), k = 1..12
    static const std::vector<double> c = [] {
        const std::vector<Rational> b = bernoulli_numbers(26);
        std::vector<double> out;
        for (int k = 1; k <= 12; ++k) {
            out.push_back((b[static_cast<std::size_t>(2 * k)] / Rational(2 * k * (2 * k - 1))).to_double());
        }
        return out;
    }();
    return c;
}

}  // namespace detail

inline CertifiedValue log_gamma_certified(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("log_gamma: argument must be positive and finite");
    constexpr double shift_to = 10.0;
    constexpr int n_terms = 10;
    double shift = 0.0;
    double z = x;
    while (z < shift_to) {
        shift += std::log(z);
        z += 1.0;
    }
    const auto& c = detail::stirling_coefficients();
    double s = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi);
    const double z2 = z * z;
    double zp = z;  // z^{2k-1}
    for (int k = 0; k < n_terms; ++k) {
        s += c[static_cast<std::size_t>(k)] / zp;
        zp *= z2;
    }
    const double truncation = std::abs(c[static_cast<std::size_t>(n_terms)] / zp);
    // rounding in the shifted sum and the leading terms
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * (std::abs(s) + std::abs(shift));
    return {s - shift, truncation + rounding};
}

inline double log_gamma(double x) { return log_gamma_certified(x).value; }

}  // namespace fockindex
