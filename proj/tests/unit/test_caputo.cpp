#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "mlpoly/caputo.hpp"
#include "mlpoly/errors.hpp"
#include "mlpoly/fractional_hermite.hpp"
#include "mlpoly/gamma.hpp"
#include "mlpoly/mittag_leffler.hpp"

using namespace mlpoly;

TEST(CaputoOrder, Range) {
    EXPECT_NO_THROW(CaputoOrder(0.5));
    EXPECT_THROW(CaputoOrder(0.0), DomainError);
    EXPECT_THROW(CaputoOrder(1.0), DomainError);
    EXPECT_THROW(CaputoOrder(1.5), DomainError);
}

TEST(CaputoMonomial, Examples) {
    const Monomial c0 = caputo_monomial(0.0, 0.4);
    EXPECT_EQ(c0.coeff, 0.0);
    EXPECT_EQ(c0.exponent, 0.0);

    const Monomial c1 = caputo_monomial(1.0, 0.5);
    EXPECT_NEAR(c1.coeff, 1.0 / std::tgamma(1.5), 1e-15);
    EXPECT_EQ(c1.exponent, 0.5);

    for (double a : {0.3, 0.5, 0.8}) {
        for (int n = 1; n <= 6; ++n) {
            const Monomial c = caputo_monomial(a * n, a);
            EXPECT_NEAR(c.coeff, std::tgamma(1 + a * n) / std::tgamma(1 + a * n - a), 1e-13 * c.coeff);
            EXPECT_NEAR(c.exponent, a * (n - 1), 1e-15);
        }
    }
}

TEST(CaputoMonomial, RejectsExponentsBelowOrder) {
    EXPECT_THROW(caputo_monomial(0.2, 0.5), DomainError);
    EXPECT_THROW(caputo_monomial(-1.0, 0.5), DomainError);
    // A rounding step below α counts as α.
    const Monomial c = caputo_monomial(0.3 * 4 - 0.3 * 3, 0.3);
    EXPECT_EQ(c.exponent, 0.0);
}

TEST(CaputoPoly, ConstantsVanish) { EXPECT_TRUE(caputo_poly(FracPoly::constant(3.0), 0.5).empty()); }

TEST(CaputoPoly, ReportsOffendingExponent) {
    try {
        (void)caputo_poly(FracPoly{{1.0, 1.0}, {1.0, 0.25}}, 0.5);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("0.25"), std::string::npos) << e.what();
    }
}

TEST(CaputoPoly, EigenfunctionTruncation) {
    for (double a : {-1.0, 0.5}) {
        for (double alpha : {0.3, 0.5, 0.8}) {
            const FracPoly d = caputo_poly(ml_exponential_truncation(alpha, a, 20), alpha);
            const FracPoly want = a * ml_exponential_truncation(alpha, a, 19);
            EXPECT_LE(max_coeff_rel_diff(d, want), 1e-13) << a << ' ' << alpha;
        }
    }
}

TEST(CaputoPoly, ForwardShiftOfHermiteInY) {
    // _αH_2(x, y^α) = x² + 2 y^α / Γ(1+α) as a polynomial in y, x = 0.7.
    const double alpha = 0.6;
    const double x = 0.7;
    const FracPoly p{{x * x, 0.0}, {2.0 * rgamma(1 + alpha), alpha}};
    const FracPoly d = caputo_poly(p, alpha);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_NEAR(d.coeff(0.0), 2.0, 1e-15);
}

TEST(CaputoL1, ConstantIsZero) {
    const std::vector<double> g(65, 3.0);
    EXPECT_EQ(caputo_l1(g, 1.0 / 64, 0.5, 64), 0.0);
}

TEST(CaputoL1, LinearData) {
    const std::size_t n = 128;
    std::vector<double> g(n + 1);
    for (std::size_t i = 0; i <= n; ++i) g[i] = static_cast<double>(i) / n;
    EXPECT_NEAR(caputo_l1(g, 1.0 / n, 0.5, n), 1.0 / std::tgamma(1.5), 1e-13);
}

TEST(CaputoL1, ConvergesAtExpectedOrder) {
    for (double alpha : {0.3, 0.5, 0.8}) {
        for (double gamma : {0.7, 2.3}) {
            const double exact = gamma_ratio(1 + gamma, 1 + gamma - alpha);
            double prev = 0.0;
            for (int level = 0; level < 5; ++level) {
                const std::size_t n = std::size_t{64} << level;
                std::vector<double> g(n + 1);
                for (std::size_t i = 0; i <= n; ++i) g[i] = std::pow(static_cast<double>(i) / n, gamma);
                const double err = std::fabs(caputo_l1(g, 1.0 / n, alpha, n) - exact);
                if (level > 0) EXPECT_NEAR(std::log2(prev / err), 2.0 - alpha, 0.3) << alpha << ' ' << gamma;
                prev = err;
            }
        }
    }
}

TEST(CaputoL1, EigenfunctionAtPointEight) {
    // g = truncated E_{1/2}(-t^{1/2}); its Caputo derivative is -g up to the last term.
    const double alpha = 0.5;
    const FracPoly g = ml_exponential_truncation(alpha, -1.0, 40);
    const std::size_t n = 4096;
    const double h = 0.8 / n;
    std::vector<double> s(n + 1);
    for (std::size_t i = 0; i <= n; ++i) s[i] = g.evaluate(i * h);
    const double exact = caputo_poly(g, alpha).evaluate(0.8);
    EXPECT_NEAR(exact, -ml_exponential_truncation(alpha, -1.0, 39).evaluate(0.8), 1e-14);
    EXPECT_NEAR(caputo_l1(s, h, alpha, n), exact, 2e-3);
}

TEST(CaputoL1, Preconditions) {
    const std::vector<double> g{0.0, 1.0, 2.0};
    EXPECT_THROW(caputo_l1(g, 0.5, 0.5, 1), DomainError);
    EXPECT_THROW(caputo_l1(g, 0.5, 0.5, 3), DomainError);
    EXPECT_THROW(caputo_l1(g, 0.0, 0.5, 2), DomainError);
}

TEST(RiemannLiouville, Relation) {
    EXPECT_NEAR(rl_from_caputo(0.0, 1.0, 1.0, 0.5), 1.0 / std::tgamma(0.5), 1e-15);
    for (double alpha : {0.3, 0.7}) {
        const double a = -0.8, t = 0.6;
        const double e = ml_one(alpha, a * std::pow(t, alpha)).value;
        EXPECT_NEAR(rl_from_caputo(a * e, 1.0, t, alpha), std::pow(t, -alpha) / std::tgamma(1 - alpha) + a * e, 1e-14);
    }
    EXPECT_THROW(rl_from_caputo(0.0, 1.0, 0.0, 0.5), DomainError);
}
