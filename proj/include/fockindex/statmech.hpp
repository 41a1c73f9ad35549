#pragma once

// Grand canonical ensembles of non-interacting single-level systems.
//
// Two variables appear:
//   x_thermo = alpha + beta*eps = beta*(eps - mu)   (per-level Boltzmann exponent)
//   x_sheaf  = eps - mu, with Chern root y = -beta*x_sheaf
// Everything below that takes a plain `x` means x_thermo.

#include "fockindex/bundles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fockindex {

enum class Statistics { be, fd, mb };

inline const char* statistics_name(Statistics s) {
    switch (s) {
        case Statistics::be: return "BE";
        case Statistics::fd: return "FD";
        case Statistics::mb: return "MB";
    }
    return "?";
}

inline Statistics parse_statistics(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (s == "BE" || s == "BOSE" || s == "BOSON") return Statistics::be;
    if (s == "FD" || s == "FERMI" || s == "FERMION") return Statistics::fd;
    if (s == "MB" || s == "MAXWELL" || s == "CLASSICAL") return Statistics::mb;
    throw std::invalid_argument("unknown statistics '" + s + "'");
}

inline double x_thermo(double eps, double mu, double beta) { return beta * (eps - mu); }
inline double x_sheaf(double eps, double mu) { return eps - mu; }
inline double chern_root_value(double eps, double mu, double beta) { return -beta * x_sheaf(eps, mu); }

namespace detail {
inline void require_bose_convergent(double x, const std::string& where) {
    if (!(x > 0.0)) {
        std::ostringstream os;
        os << where << ": Bose-Einstein sum diverges for x = " << x << " (need eps - mu > 0)";
        throw std::domain_error(os.str());
    }
}
}  // namespace detail

/// ln Xi_i. For MB the classical single-level value ln Xi = e^{-x}.
inline double log_level_partition(Statistics stat, double x) {
    switch (stat) {
        case Statistics::be:
            detail::require_bose_convergent(x, "level_partition");
            return -std::log1p(-std::exp(-x));
        case Statistics::fd: return std::log1p(std::exp(-x));
        case Statistics::mb: return std::exp(-x);
    }
    throw std::invalid_argument("unknown statistics");
}

/// Xi_i = 1/(1 - e^{-x}) or 1 + e^{-x}.
inline double level_partition(Statistics stat, double x) {
    switch (stat) {
        case Statistics::be:
            detail::require_bose_convergent(x, "level_partition");
            return -1.0 / std::expm1(-x);
        case Statistics::fd: return 1.0 + std::exp(-x);
        case Statistics::mb: return std::exp(std::exp(-x));
    }
    throw std::invalid_argument("unknown statistics");
}

/// <n> = 1/(e^x - 1), 1/(e^x + 1), e^{-x}.
inline double occupation(Statistics stat, double x) {
    switch (stat) {
        case Statistics::be:
            detail::require_bose_convergent(x, "occupation");
            return 1.0 / std::expm1(x);
        case Statistics::fd: {
            // stable for both signs of x
            if (x >= 0.0) {
                const double q = std::exp(-x);
                return q / (1.0 + q);
            }
            return 1.0 / (1.0 + std::exp(x));
        }
        case Statistics::mb: return std::exp(-x);
    }
    throw std::invalid_argument("unknown statistics");
}

/// -d/dalpha ln Xi_i by central difference with step h.
inline double occupation_by_derivative(Statistics stat, double x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("occupation_by_derivative: step must be positive");
    if (stat == Statistics::be) detail::require_bose_convergent(x - h, "occupation_by_derivative");
    return -(log_level_partition(stat, x + h) - log_level_partition(stat, x - h)) / (2.0 * h);
}

struct LevelSystem {
    std::vector<double> levels;
    double mu = 0.0;
    double beta = 1.0;
    double kB = 1.0;
    Statistics statistics = Statistics::fd;

    [[nodiscard]] double temperature() const { return 1.0 / (kB * beta); }
    [[nodiscard]] double x(std::size_t i) const { return x_thermo(levels.at(i), mu, beta); }

    void validate() const {
        if (!(beta > 0.0) || !std::isfinite(beta)) throw std::domain_error("LevelSystem: beta must be positive");
        if (!(kB > 0.0)) throw std::domain_error("LevelSystem: kB must be positive");
        if (statistics == Statistics::be) {
            for (std::size_t i = 0; i < levels.size(); ++i) {
                if (!(levels[i] - mu > 0.0)) {
                    std::ostringstream os;
                    os << "LevelSystem: level " << i << " (eps = " << levels[i] << ") is not above mu = " << mu
                       << "; the Bose-Einstein sum diverges";
                    throw std::domain_error(os.str());
                }
            }
        }
    }
};

struct EnsembleReport {
    Statistics statistics = Statistics::fd;
    std::vector<double> level_xi;
    std::vector<double> level_log_xi;
    std::vector<double> occupations;
    double log_xi = 0.0;
    double xi = 1.0;  // may overflow to inf for very many levels; log_xi stays finite
    double grand_potential = 0.0;
    double mean_particles = 0.0;
};

inline EnsembleReport grand_ensemble(const LevelSystem& sys) {
    sys.validate();
    EnsembleReport r;
    r.statistics = sys.statistics;
    for (std::size_t i = 0; i < sys.levels.size(); ++i) {
        const double x = sys.x(i);
        const double lx = log_level_partition(sys.statistics, x);
        r.level_log_xi.push_back(lx);
        r.level_xi.push_back(level_partition(sys.statistics, x));
        r.occupations.push_back(occupation(sys.statistics, x));
        r.log_xi += lx;
        r.mean_particles += r.occupations.back();
    }
    r.xi = std::exp(r.log_xi);
    r.grand_potential = -sys.kB * sys.temperature() * r.log_xi;
    return r;
}

struct CorrespondenceReport {
    double log_xi_ensemble = 0.0;
    double log_xi_character = 0.0;  // Fock character at y_i = -beta (eps_i - mu)
    double log_xi_series = 0.0;     // defining series, summed directly
    double tail_bound = 0.0;        // certified bound on the neglected series tail (relative)
    std::vector<int> terms_used;
    double max_relative_deviation = 0.0;
    bool pass = false;
};

namespace detail {

/// sum_{n>=0} q^n with |error| <= q^{N+1}/(1-q) below `tol` relative to the sum.
inline double geometric_sum_certified(double q, double tol, int& terms, double& bound) {
    if (!(q >= 0.0 && q < 1.0)) throw std::domain_error("geometric_sum_certified: ratio must lie in [0, 1)");
    const double limit_terms = 100000;
    double sum = 0.0;
    double term = 1.0;
    for (int n = 0;; ++n) {
        sum += term;
        term *= q;
        // term is now q^{n+1}
        const double tail = term / (1.0 - q);
        if (tail <= tol * sum) {
            terms = n + 1;
            bound = tail / sum;
            return sum;
        }
        if (n > limit_terms) throw std::domain_error("geometric_sum_certified: tail bound cannot reach tolerance");
    }
}

}  // namespace detail

/// Xi = CH check: grand_ensemble's Xi against the Fock characters of the
/// level line bundles (roots y_i = -beta*(eps_i - mu)) and against the
/// defining occupation series.
inline CorrespondenceReport correspondence_check(const LevelSystem& sys, double tolerance = 1e-12) {
    if (sys.statistics == Statistics::mb) {
        throw std::invalid_argument("correspondence_check: needs BE or FD statistics");
    }
    const EnsembleReport ens = grand_ensemble(sys);
    CorrespondenceReport rep;
    rep.log_xi_ensemble = ens.log_xi;

    std::vector<double> roots;
    for (double e : sys.levels) roots.push_back(chern_root_value(e, sys.mu, sys.beta));
    rep.log_xi_character = sys.statistics == Statistics::be ? log_sym_fock_value(roots) : log_ext_fock_value(roots);

    // per-level tolerance so the product meets `tolerance` overall
    const double per_level = tolerance / (4.0 * static_cast<double>(std::max<std::size_t>(1, sys.levels.size())));
    for (std::size_t i = 0; i < sys.levels.size(); ++i) {
        const double q = std::exp(-sys.x(i));
        if (sys.statistics == Statistics::be) {
            int n = 0;
            double bound = 0.0;
            rep.log_xi_series += std::log(detail::geometric_sum_certified(q, per_level, n, bound));
            rep.terms_used.push_back(n);
            rep.tail_bound += bound;
        } else {
            rep.log_xi_series += std::log(1.0 + q);  // occupations 0 and 1, nothing to truncate
            rep.terms_used.push_back(2);
        }
    }
    auto rel = [](double log_a, double log_b) { return std::abs(std::expm1(log_a - log_b)); };
    rep.max_relative_deviation =
        std::max({rel(rep.log_xi_character, rep.log_xi_ensemble), rel(rep.log_xi_series, rep.log_xi_ensemble),
                  rel(rep.log_xi_series, rep.log_xi_character)});
    rep.pass = rep.max_relative_deviation <= tolerance;
    return rep;
}

}  // namespace fockindex
