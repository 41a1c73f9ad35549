#include "fockindex/genera.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fockindex;

namespace {

void expect_factor(GenusKind kind, const std::vector<Rational>& expect) {
    const int d = static_cast<int>(expect.size()) - 1;
    const auto got = univariate_coefficients(genus_spec(kind, d).generating_series);
    ASSERT_EQ(got.size(), expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) EXPECT_EQ(got[k], expect[k]) << genus_name(kind) << " x^" << k;
}

TruncatedSeries from_poly(const oracle::Poly& p, const VariableSet& v, int d) {
    TruncatedSeries s(v, d);
    for (const auto& [e, c] : p) s.add_term(e, c);
    return s;
}

}  // namespace

TEST(Genera, PerRootFactorsMatchLongDivision) {
    expect_factor(GenusKind::todd, oracle::todd_factor(10));
    expect_factor(GenusKind::ahat, oracle::ahat_factor(10));
    expect_factor(GenusKind::todd_star, oracle::todd_star_factor(10));
    expect_factor(GenusKind::bhat, oracle::bhat_factor(10));
}

TEST(Genera, KnownLowOrderCoefficients) {
    const auto td = univariate_coefficients(genus_spec(GenusKind::todd, 4).generating_series);
    EXPECT_EQ(td[1], Rational(1, 2));
    EXPECT_EQ(td[2], Rational(1, 12));
    EXPECT_EQ(td[3], Rational(0));
    EXPECT_EQ(td[4], Rational(-1, 720));
    const auto ts = univariate_coefficients(genus_spec(GenusKind::todd_star, 3).generating_series);
    EXPECT_EQ(ts[0], Rational(0));
    EXPECT_EQ(ts[1], Rational(1, 2));
    EXPECT_EQ(ts[2], Rational(1, 4));
    const auto bh = univariate_coefficients(genus_spec(GenusKind::bhat, 3).generating_series);
    EXPECT_EQ(bh[1], Rational(1, 2));
    EXPECT_EQ(bh[3], Rational(-1, 16));
}

TEST(Genera, ToddPolynomialsMatchHandExpansion) {
    const VariableSet c4 = chern_class_variables(4);
    for (int d = 0; d <= 4; ++d) {
        const ChernPolynomial p = to_chern_basis(genus_series(GenusKind::todd, 4, d).homogeneous_part(d), 4);
        EXPECT_EQ(p.poly, from_poly(oracle::todd_hand(d), c4, d)) << "degree " << d;
    }
}

TEST(Genera, GenusPolynomialStrings) {
    EXPECT_EQ(to_factored_string(genus_polynomial(GenusKind::todd, 1)), "c1/2");
    EXPECT_EQ(to_factored_string(genus_polynomial(GenusKind::todd, 2)), "(c1^2 + c2)/12");
    EXPECT_EQ(to_factored_string(genus_polynomial(GenusKind::todd, 3)), "c1*c2/24");
    EXPECT_EQ(to_factored_string(genus_polynomial(GenusKind::ahat, 2)), "-p1/24");
    EXPECT_EQ(to_factored_string(genus_polynomial(GenusKind::ahat, 4)), "(7*p1^2 - 4*p2)/5760");
    EXPECT_EQ(genus_polynomial(GenusKind::ahat, 4).basis, Basis::pontryagin);
    EXPECT_EQ(genus_polynomial(GenusKind::bhat, 1).basis, Basis::chern);
}

TEST(Genera, AhatPolynomialRoundTripsThroughRoots) {
    for (int d : {2, 4, 6}) {
        const ChernPolynomial p = genus_polynomial(GenusKind::ahat, d);
        const VariableSet v = VariableSet::roots(p.rank);
        EXPECT_EQ(expand_in_roots(p, v), genus_series(GenusKind::ahat, v, d).homogeneous_part(d)) << d;
    }
    const ChernPolynomial a4 = genus_polynomial(GenusKind::ahat, 4);
    const VariableSet p2 = pontryagin_class_variables(a4.rank);
    TruncatedSeries hand(p2, 4);
    for (const auto& [e, c] : oracle::ahat_hand(2)) {
        std::vector<int> full(static_cast<std::size_t>(a4.rank), 0);
        full[0] = e[0];
        full[1] = e[1];
        hand.add_term(full, c);
    }
    EXPECT_EQ(a4.poly, hand);
}

TEST(Genera, ProductOverRootsMatchesNaiveOracle) {
    const int n = 3;
    const int d = 5;
    const VariableSet v = VariableSet::roots(n);
    for (auto [kind, f] : {std::pair{GenusKind::todd, oracle::todd_factor(d)}, std::pair{GenusKind::ahat, oracle::ahat_factor(d)},
                           std::pair{GenusKind::bhat, oracle::bhat_factor(d)},
                           std::pair{GenusKind::todd_star, oracle::todd_star_factor(d)}}) {
        EXPECT_EQ(genus_series(kind, v, d), from_poly(oracle::product_of_factor(f, n, d), v, d)) << genus_name(kind);
    }
}

TEST(Genera, SquaredSeries) {
    const auto s = genus_series(GenusKind::todd, 2, 4);
    EXPECT_EQ(squared_genus_series(GenusKind::todd, 2, 4), s * s);
}

TEST(Genera, EulerClass) {
    EXPECT_EQ(to_string(euler_class_roots(3, 3)), "x1*x2*x3");
    EXPECT_THROW(euler_class_roots(3, 2), std::invalid_argument);
    EXPECT_EQ(to_string(genus_polynomial(GenusKind::euler, 2)), "c2");
}

TEST(Genera, ParseNames) {
    EXPECT_EQ(parse_genus_kind("td*"), GenusKind::todd_star);
    EXPECT_EQ(parse_genus_kind("ahat"), GenusKind::ahat);
    EXPECT_THROW(parse_genus_kind("elliptic"), std::invalid_argument);
}
