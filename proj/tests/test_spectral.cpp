#include "fockindex/spectral.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace fockindex;

namespace {
const double ln2 = std::log(2.0);
const double sqrt2pi = std::sqrt(2.0 * std::numbers::pi);
}  // namespace

TEST(LogGamma, AgainstLibraryAndKnownValues) {
    for (double x : {0.1, 0.5, 1.0, 1.5, 2.0, 3.7, 10.0, 25.0, 123.4}) {
        const CertifiedValue v = log_gamma_certified(x);
        // absolute for moderate arguments; beyond that the double spacing of the result dominates
        EXPECT_LE(v.error_bound, 1e-13 * std::max(1.0, std::abs(v.value))) << x;
        EXPECT_NEAR(v.value, std::lgamma(x), 1e-13 * std::max(1.0, std::abs(v.value))) << x;
    }
    const CertifiedValue half = log_gamma_certified(0.5);
    EXPECT_LE(half.error_bound, 1e-13);
    EXPECT_NEAR(half.value, 0.5 * std::log(std::numbers::pi), half.error_bound);
    const CertifiedValue one = log_gamma_certified(1.0);
    EXPECT_NEAR(one.value, 0.0, one.error_bound);
    EXPECT_THROW(log_gamma(0.0), std::domain_error);
}

TEST(Spectral, ChernCharacter) {
    EXPECT_NEAR(formal_chern_character(SpectrumSpec::finite({ln2})).value, 0.5, 1e-16);
    EXPECT_NEAR(formal_chern_character(SpectrumSpec::finite({1, 2, 3})).value, std::exp(-1.0) + std::exp(-2.0) + std::exp(-3.0),
                1e-16);
    EXPECT_NEAR(formal_chern_character(SpectrumSpec::affine(1, 1)).value, 1.0 / (std::exp(1.0) - 1.0), 1e-12);
}

TEST(Spectral, XiFormal) {
    EXPECT_NEAR(xi_formal(SpectrumSpec::finite({ln2}), Statistics::be).value, ln2, 1e-15);
    EXPECT_NEAR(xi_formal(SpectrumSpec::finite({ln2, ln2}), Statistics::fd).value, 2.0 * std::log(1.5), 1e-15);
    EXPECT_THROW(SpectrumSpec::finite({1.0, 0.0}), std::domain_error);
}

TEST(Spectral, XiFormalAffineMatchesLevelSystem) {
    // lambda_n = n + 1 against 60 explicit levels plus the tail bound
    const CertifiedValue v = xi_formal(SpectrumSpec::affine(1, 1), Statistics::be, 1e-16);
    LevelSystem s;
    s.statistics = Statistics::be;
    for (int n = 1; n <= 60; ++n) s.levels.push_back(n);
    const double head = grand_ensemble(s).log_xi;
    const double tail = std::exp(-61.0) / ((1 - std::exp(-61.0)) * (1 - std::exp(-1.0)));
    EXPECT_NEAR(v.value, head, 1e-12 + tail);
}

TEST(Spectral, ChernCharacterAgreesWithStatmechLevels) {
    // lambda_i = beta (eps_i - mu)
    LevelSystem s{{0.7, 1.9, 2.4}, 0.2, 1.7, 1.0, Statistics::fd};
    std::vector<double> lambdas;
    for (std::size_t i = 0; i < s.levels.size(); ++i) lambdas.push_back(s.x(i));
    const SpectrumSpec sp = SpectrumSpec::finite(lambdas);
    EXPECT_NEAR(xi_formal(sp, Statistics::fd).value, grand_ensemble(s).log_xi, 1e-14);
    s.statistics = Statistics::be;
    EXPECT_NEAR(xi_formal(sp, Statistics::be).value, grand_ensemble(s).log_xi, 1e-14);
    double n_mb = 0;
    for (double l : lambdas) n_mb += occupation(Statistics::mb, l);
    EXPECT_NEAR(formal_chern_character(sp).value, n_mb, 1e-15);
}

TEST(ZetaDet, AffineExamples) {
    EXPECT_NEAR(zeta_det(SpectrumSpec::affine(1, 1)).value, sqrt2pi, 1e-10);
    EXPECT_NEAR(zeta_det(SpectrumSpec::affine(2, 1)).value, std::sqrt(std::numbers::pi), 1e-10);
    EXPECT_NEAR(zeta_det(SpectrumSpec::affine(1, 1)).value, 2.5066282746, 1e-10);
}

TEST(ZetaDet, EulerMaclaurinOracle) {
    for (double c : {0.5, 1.0, 1.5, 2.0, 3.25}) {
        SpectrumSpec s = SpectrumSpec::affine(1, c);
        EXPECT_NEAR(zeta_derivative_at_zero(s), oracle::hurwitz_zeta_prime_zero(c), 1e-9) << c;
        EXPECT_NEAR(zeta_det(s).value, std::exp(-oracle::hurwitz_zeta_prime_zero(c)), 1e-8) << c;
    }
}

TEST(ZetaDet, ScalingLaw) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> a(0.2, 5.0);
    std::uniform_real_distribution<double> c(0.2, 4.0);
    for (int t = 0; t < 50; ++t) {
        const double av = a(rng);
        const double cv = c(rng);
        const double lhs = zeta_det(SpectrumSpec::affine(av, cv)).value;
        const double rhs = std::pow(av, 0.5 - cv) * zeta_det(SpectrumSpec::affine(1, cv)).value;
        EXPECT_NEAR(lhs / rhs, 1.0, 1e-12);
    }
}

TEST(ZetaDet, FiniteIsPlainProduct) {
    EXPECT_DOUBLE_EQ(zeta_det(SpectrumSpec::finite({1, 2, 3})).value, 6.0);
    const SpectrumSpec s = SpectrumSpec::finite({0.3, 7.5, 2.25, 11.0});
    EXPECT_NEAR(std::exp(-zeta_derivative_at_zero(s)) / (0.3 * 7.5 * 2.25 * 11.0), 1.0, 1e-12);
    EXPECT_THROW(SpectrumSpec::affine(0.0, 1.0), std::domain_error);
    EXPECT_THROW(SpectrumSpec::affine(1.0, -1.0), std::domain_error);
}

TEST(FormalEuler, Examples) {
    EXPECT_DOUBLE_EQ(formal_euler_class(SpectrumSpec::finite({1, 2, 3})).value, 6.0);
    EXPECT_DOUBLE_EQ(formal_euler_class(SpectrumSpec::finite({5})).value, 5.0);
    EXPECT_NEAR(formal_euler_class(SpectrumSpec::affine(1, 1)).value, sqrt2pi, 1e-10);
}

TEST(FormalPairing, Examples) {
    EXPECT_NEAR(formal_pairing(SpectrumSpec::finite({1, 2, 3}), PairingKind::ff, PairingMode::exact), 6.0, 1e-15);
    EXPECT_NEAR(formal_pairing(SpectrumSpec::finite({2}), PairingKind::bb, PairingMode::exact), 2.0, 1e-15);
    EXPECT_NEAR(formal_pairing(SpectrumSpec::finite({ln2}), PairingKind::fb, PairingMode::exact), 3 * ln2, 1e-15);
    EXPECT_NEAR(formal_pairing(SpectrumSpec::finite({ln2}), PairingKind::fb, PairingMode::nondegenerate), ln2, 1e-16);
    EXPECT_THROW(formal_pairing(SpectrumSpec::affine(1, 1), PairingKind::ff, PairingMode::exact), std::invalid_argument);
}

TEST(FormalPairing, HandSubstitutedFactors) {
    // build each pairing from the characters directly, no factor algebra
    const std::vector<double> ev{0.4, 1.1, 2.6};
    const SpectrumSpec s = SpectrumSpec::finite(ev, true);
    double prod = 1, ch_e = 1, ahat = 1, bhat = 1, td = 1, tds = 1;
    for (double l : ev) {
        prod *= l;
        ch_e *= std::exp(l / 2) + std::exp(-l / 2);
        ahat *= l / (std::exp(l / 2) - std::exp(-l / 2));
        bhat *= l / (std::exp(l / 2) + std::exp(-l / 2));
        td *= l / (1 - std::exp(-l));
        tds *= l / (1 + std::exp(-l));
    }
    const double ch_sigma = de_rham_type_character(s);
    EXPECT_NEAR(spinor_type_character(s), ch_e, 1e-14 * ch_e);
    auto rel = [](double a, double b) { return std::abs(a / b - 1.0); };
    EXPECT_LE(rel(formal_pairing(s, PairingKind::fb, PairingMode::exact), ch_e * ahat), 1e-12);
    EXPECT_LE(rel(formal_pairing(s, PairingKind::ff, PairingMode::exact), ch_e * bhat), 1e-12);
    EXPECT_LE(rel(formal_pairing(s, PairingKind::bb, PairingMode::exact), ch_sigma * td * td / prod), 1e-12);
    EXPECT_LE(rel(formal_pairing(s, PairingKind::bf, PairingMode::exact), ch_sigma * tds * tds / prod), 1e-12);
    for (auto k : {PairingKind::fb, PairingKind::bb, PairingKind::ff, PairingKind::bf}) {
        EXPECT_LE(rel(formal_pairing(s, k, PairingMode::nondegenerate), prod), 1e-14);
    }
}

TEST(FormalPairing, ScaleConsistency) {
    const std::vector<double> ev{0.5, 1.5, 4.0, 0.9};
    const double c = 2.7;
    std::vector<double> scaled;
    for (double l : ev) scaled.push_back(c * l);
    for (auto k : {PairingKind::ff, PairingKind::bb}) {
        const double a = formal_pairing(SpectrumSpec::finite(ev), k, PairingMode::exact);
        const double b = formal_pairing(SpectrumSpec::finite(scaled), k, PairingMode::exact);
        EXPECT_NEAR(b / (std::pow(c, 4) * a), 1.0, 1e-13);
    }
}

TEST(Spectral, GradingSquaresDeRhamCharacter) {
    const std::vector<double> ev{0.3, 1.2, 2.0};
    const double single = de_rham_type_character(SpectrumSpec::finite(ev, false));
    EXPECT_NEAR(de_rham_type_character(SpectrumSpec::finite(ev, true)), single * single, 1e-16);
    double p = 1;
    for (double l : ev) p *= 1 - std::exp(-l);
    EXPECT_NEAR(single, p, 1e-16);
}

TEST(Spectral, Report) {
    const SpectralPairReport r = spectral_report(SpectrumSpec::finite({1, 2}));
    ASSERT_EQ(r.pairings.size(), 4u);
    EXPECT_NEAR(r.euler_class.value, 2.0, 1e-15);
    EXPECT_EQ(r.pairings[2].density, "l1*l2");
    EXPECT_TRUE(spectral_report(SpectrumSpec::affine(1, 1)).pairings.empty());
}
