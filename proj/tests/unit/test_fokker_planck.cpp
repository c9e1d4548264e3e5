#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "frozen_values.hpp"
#include "gen.hpp"
#include "mlpoly/errors.hpp"
#include "mlpoly/fokker_planck.hpp"
#include "mlpoly/fractional_hermite.hpp"
#include "mlpoly/gamma.hpp"
#include "mlpoly/mittag_leffler.hpp"
#include "mp_oracle.hpp"

using namespace mlpoly;

namespace {

double rel(double got, double want) {
    return std::fabs(got - want) / std::max({std::fabs(got), std::fabs(want), 1e-12});
}

}  // namespace

TEST(TfDiffusion, MonomialInitialData) {
    const DiffusionProblem p{0.5, 1.0, initial::Monomial{2}};
    EXPECT_NEAR(solve_diffusion(p, 0.7, 0.0), 0.49, 1e-15);
    EXPECT_NEAR(solve_diffusion(p, 0.7, 0.36), 0.49 + 2.0 * 0.6 / std::tgamma(1.5), 1e-14);
    for (int n = 0; n <= 10; ++n) {
        const DiffusionProblem q{0.6, 0.8, initial::Monomial{n}};
        EXPECT_LE(rel(solve_diffusion(q, 0.4, 0.9), fhp_eval(n, 0.6, 0.4, 0.8 * std::pow(0.9, 0.6))), 1e-13);
    }
}

TEST(TfDiffusion, CaseI) {
    EXPECT_LE(rel(solve_case_i(4, 0.2, 0.5, 1.0, 0.3, 0.7), frozen::case_i_4), 1e-13);
    const DiffusionProblem p{0.5, 1.0, initial::Hermite{4, 0.2}};
    EXPECT_LE(rel(solve_diffusion(p, 0.3, 0.7), frozen::case_i_4), 1e-13);
    for (int n = 0; n <= 6; ++n) {
        EXPECT_LE(rel(solve_case_i(n, 0.4, 0.7, 1.3, 0.5, 0.0), oracle::hermite2(n, 0.5, 0.4)), 1e-13);
    }
}

TEST(TfDiffusion, CaseII) {
    EXPECT_LE(rel(solve_case_ii(5, 0.3, 0.6, 1.0, 0.4, 0.5), frozen::case_ii_5), 1e-13);
    const CaseIIForms f = solve_case_ii_forms(5, 0.3, 0.6, 1.0, 0.4, 0.5);
    EXPECT_LE(rel(f.series_form, frozen::case_ii_5), 1e-13);
    EXPECT_LE(rel(f.oplus_form, frozen::case_ii_5), 1e-12);
    for (int n = 0; n <= 6; ++n) {
        EXPECT_LE(rel(solve_case_ii(n, 0.4, 0.7, 1.3, 0.5, 0.0), fhp_eval(n, 0.7, 0.5, 0.4)), 1e-13);
    }
}

TEST(TfDiffusion, SeriesInitialDataIsLinear) {
    const std::vector<double> c{0.5, -1.0, 0.25, 2.0};
    const DiffusionProblem p{0.45, 0.9, initial::Series{c}};
    double want = 0.0;
    for (std::size_t r = 0; r < c.size(); ++r) {
        want += c[r] * solve_diffusion({0.45, 0.9, initial::Monomial{static_cast<int>(r)}}, 0.6, 1.4);
    }
    EXPECT_LE(rel(solve_diffusion(p, 0.6, 1.4), want), 1e-13);
    EXPECT_LE(rel(solve_tf_diffusion(p, 0.6, 1.4, 3), want), 1e-13);
    EXPECT_LE(rel(solve_tf_diffusion(p, 0.6, 1.4, 1), 0.5 - solve_diffusion({0.45, 0.9, initial::Monomial{1}}, 0.6, 1.4)), 1e-13);
    EXPECT_THROW(solve_tf_diffusion(p, 0.6, 1.4, 4), DomainError);
}

TEST(TfDiffusion, Residuals) {
    for (double a : {0.3, 0.5, 0.8, 0.95}) {
        for (int n : {0, 1, 2, 10}) EXPECT_LE(residual_tf_diffusion(n, a, 0.7), 1e-10) << a << ' ' << n;
    }
}

TEST(TfDiffusion, ResidualDetail) {
    for (int n : {0, 1, 2}) {
        const Residual r = residual_tf_diffusion_detail(n, 0.5, 1.0);
        EXPECT_EQ(r.absolute, 0.0) << n;
        EXPECT_EQ(r.scaled, 0.0) << n;
    }
    const Residual big = residual_tf_diffusion_detail(10, 0.3, 1.0);
    EXPECT_LE(big.scaled, big.absolute);
    EXPECT_LE(big.scaled, 1e-15);
    EXPECT_EQ(residual_tf_diffusion(10, 0.3, 1.0), big.scaled);
    EXPECT_EQ(residual_laguerre_detail(0, 0.5, 0.7, 1.0).absolute, 0.0);
}

TEST(TfDiffusion, TableMatchesEvaluation) {
    const FracPoly2 t = tf_diffusion_table(6, 0.4, 1.1);
    EXPECT_LE(rel(t.evaluate(0.8, 0.5), solve_diffusion({0.4, 1.1, initial::Monomial{6}}, 0.8, 0.5)), 1e-13);
}

TEST(TfDiffusion, Validation) {
    EXPECT_THROW(solve_diffusion({0.0, 1.0, initial::Monomial{2}}, 0.5, 0.5), DomainError);
    EXPECT_THROW(solve_diffusion({1.5, 1.0, initial::Monomial{2}}, 0.5, 0.5), DomainError);
    EXPECT_THROW(solve_diffusion({0.5, 1.0, initial::Monomial{-1}}, 0.5, 0.5), DomainError);
    EXPECT_THROW(solve_diffusion({0.5, 1.0, initial::Monomial{2}}, 0.5, -0.1), DomainError);
    EXPECT_THROW(solve_diffusion({0.5, 1.0, initial::Series{}}, 0.5, 0.5), DomainError);
}

TEST(Laguerre, MonomialInitialData) {
    EXPECT_LE(rel(solve_laguerre_monomial(3, 0.5, 0.5, 1.0, 0.7, 0.4), frozen::laguerre_3), 1e-13);
    for (int n = 0; n <= 5; ++n) {
        const double x = 0.9;
        EXPECT_LE(rel(solve_laguerre_monomial(n, 0.6, 0.7, 1.2, x, 1e-12),
                      std::pow(-std::pow(x, 0.6), n) / std::tgamma(1 + 0.6 * n)),
                  1e-6);
    }
}

TEST(Laguerre, TermsSumToSolution) {
    const std::vector<double> terms = laguerre_monomial_terms(4, 0.5, 0.8, 1.3, 0.6, 0.9);
    const std::vector<double> moments = laguerre_monomial_moment_terms(4, 0.5, 0.8, 1.3, 0.6, 0.9);
    ASSERT_EQ(terms.size(), 5u);
    ASSERT_EQ(moments.size(), 5u);
    double s = 0.0;
    for (std::size_t r = 0; r < terms.size(); ++r) {
        s += terms[r];
        EXPECT_LE(rel(moments[r], terms[r]), 1e-14) << r;
    }
    EXPECT_LE(rel(s, solve_laguerre_monomial(4, 0.5, 0.8, 1.3, 0.6, 0.9)), 1e-14);
}

TEST(Laguerre, ClassicalTimeReduction) {
    for (int n = 0; n <= 6; ++n) {
        double want = 0.0;
        const double x = 0.5, t = 0.8, b = 1.3, a = 0.6;
        for (int r = 0; r <= n; ++r) {
            want += std::tgamma(n + 1.0) / (std::tgamma(r + 1.0) * std::tgamma(n - r + 1.0)) *
                    std::pow(-std::pow(x, a), r) / std::tgamma(1 + a * r) * std::pow(b * t, n - r);
        }
        EXPECT_LE(rel(solve_laguerre_monomial(n, a, 1.0, b, x, t), want), 1e-13);
    }
}

TEST(Laguerre, WrightInitialData) {
    EXPECT_LE(rel(solve_laguerre_wright(0.5, 0.5, 0.7, 1.0, 1.0, 0.6), frozen::laguerre_wright), 1e-13);
    const LaguerreProblem p{0.5, 0.7, 1.0, initial::Wright{0.5}};
    EXPECT_LE(rel(solve_laguerre(p, 1.0, 0.6), frozen::laguerre_wright), 1e-13);
    EXPECT_THROW(solve_laguerre_wright(0.5, 0.5, 0.7, 1.0, 1.0, 0.0), DomainError);
}

TEST(Laguerre, Residuals) {
    for (double beta : {0.3, 0.5, 0.8, 1.0}) {
        for (int n = 0; n <= 6; ++n) EXPECT_LE(residual_laguerre(n, 0.5, beta, 1.3), 1e-10) << beta << ' ' << n;
    }
}

TEST(Laguerre, Validation) {
    EXPECT_THROW(solve_laguerre_monomial(-1, 0.5, 0.5, 1.0, 0.5, 0.5), DomainError);
    EXPECT_THROW(solve_laguerre_monomial(2, 0.5, 0.0, 1.0, 0.5, 0.5), DomainError);
    EXPECT_THROW(solve_laguerre_monomial(2, 0.5, 0.5, 1.0, -0.5, 0.5), DomainError);
    EXPECT_THROW(solve_laguerre_monomial(2, 0.5, 1.5, 1.0, 0.5, 0.5), DomainError);
    EXPECT_THROW(solve_laguerre_monomial(2, 0.5, 0.5, 1.0, 0.5, 0.0), DomainError);
}

TEST(Subordination, ChainAtRoundingLevel) {
    gen::for_all(40, 61, [](gen::Source& src, int i) {
        GEN_TRACE(src, i);
        const int n = src.integer(0, 10);
        const double a = src.uniform(0.1, 0.99), k = src.uniform(0.1, 2.0);
        const double x = src.uniform(-1.0, 1.0), t = src.uniform(0.0, 2.0);
        const double u = solve_diffusion({a, k, initial::Monomial{n}}, x, t);
        EXPECT_LE(rel(u, fhp_eval(n, a, x, k * std::pow(t, a))), 1e-13);
    });
}

TEST(SolutionProfile, Validate) {
    SolutionProfile ok{{0.0, 0.5, 1.0}, {1.0, 2.0, 3.0}, {}};
    EXPECT_NO_THROW(ok.validate());
    SolutionProfile lengths{{0.0, 0.5}, {1.0}, {}};
    EXPECT_THROW(lengths.validate(), DomainError);
    SolutionProfile order{{0.0, 0.5, 0.5}, {1.0, 2.0, 3.0}, {}};
    EXPECT_THROW(order.validate(), DomainError);
}
