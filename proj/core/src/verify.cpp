#include "mlpoly/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>

#include "mlpoly/caputo.hpp"
#include "mlpoly/fokker_planck.hpp"
#include "mlpoly/fractional_hermite.hpp"
#include "mlpoly/gamma.hpp"
#include "mlpoly/mittag_leffler.hpp"
#include "mlpoly/ml_polynomials.hpp"
#include "mlpoly/sheffer.hpp"

namespace mlpoly::verify {
namespace {

// Deterministic uniform draws independent of the standard library's
// distribution implementations.
class Draws {
public:
    explicit Draws(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 gen_;
};

// Accumulates the worst error over the cases of one check.
class Tally {
public:
    Tally(std::string suite, std::string name, double tolerance) {
        r_.suite = std::move(suite);
        r_.name = std::move(name);
        r_.tolerance = tolerance;
    }

    void add(double err) {
        ++r_.cases;
        if (std::isnan(err)) err = std::numeric_limits<double>::infinity();
        r_.max_error = std::max(r_.max_error, err);
    }

    void add_relative(double a, double b, double rel, double floor = defaults::identity_abs_floor) {
        add(rel_error(a, b, floor / rel));
    }

    /// Runs one case; an exception is recorded as a failure.
    void guard(const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            ++r_.cases;
            if (r_.note.empty()) r_.note = e.what();
            r_.max_error = std::numeric_limits<double>::infinity();
        }
    }

    CheckResult finish() {
        r_.passed = r_.note.empty() && r_.max_error <= r_.tolerance;
        return r_;
    }

private:
    CheckResult r_;
};

constexpr std::array kAlphas{0.3, 0.5, 0.8};

std::vector<double> uniform_grid(double lo, double hi, int points) {
    std::vector<double> g;
    for (int i = 0; i < points; ++i) g.push_back(lo + (hi - lo) * i / (points - 1));
    return g;
}

// Coefficient-wise difference, measured against the size of the expected polynomial.
double scaled_coeff_diff(const FracPoly& got, const FracPoly& expected) {
    double scale = 1.0;
    for (const Monomial& m : expected.terms()) scale = std::max(scale, std::fabs(m.coeff));
    return max_coeff_diff(got, expected) / scale;
}

double laguerre_explicit(int n, double x) {
    // L_n(x) = Σ_k (-1)^k C(n,k) x^k / k!
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += ((k % 2) ? -1.0 : 1.0) * binomial(n, k) * std::pow(x, k) / factorial(k);
    return s;
}

}  // namespace

double rel_error(double a, double b, double abs_floor) {
    const double scale = std::max({std::fabs(a), std::fabs(b), abs_floor});
    return std::fabs(a - b) / scale;
}

bool close(double a, double b, double rel, double abs_floor) {
    return std::fabs(a - b) <= std::max(rel * std::max(std::fabs(a), std::fabs(b)), abs_floor);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"fhp-identities", "mlp-gf", "caputo", "pde-residuals",
                                                "sheffer-ladder"};
    return names;
}

std::vector<CheckResult> fhp_identities(const Options& opts) {
    const std::string suite = "fhp-identities";
    std::vector<CheckResult> out;
    Draws draws(opts.seed);

    {
        Tally t(suite, "forward-shift-x", 1e-13);
        for (double alpha : {0.3, 0.5, 0.8, 1.0}) {
            for (int n = 1; n <= std::max(opts.n_max, 15); ++n) {
                t.guard([&] {
                    t.add(max_coeff_rel_diff(fhp_coeffs(n, alpha, 0.7).derivative(), n * fhp_coeffs(n - 1, alpha, 0.7)));
                });
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally t(suite, "forward-shift-y", 1e-10);
        for (double alpha : kAlphas) {
            for (int n = 2; n <= std::max(opts.n_max, 12); ++n) {
                t.guard([&] {
                    const FracPoly2 h = fhp_bivariate(n, alpha, 1.0);
                    const FracPoly2 d = h.map_y([alpha](const Monomial& m) {
                        const Monomial c = caputo_monomial(m.exponent, alpha);
                        return Monomial{m.coeff * c.coeff, c.exponent};
                    });
                    const FracPoly2 expect = static_cast<double>(n * (n - 1)) * fhp_bivariate(n - 2, alpha, 1.0);
                    t.add(max_coeff_diff(d, expect) / std::max(1.0, max_abs_coeff(expect)));
                });
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally t(suite, "egf", 1e-10);
        for (double alpha : {0.4, 0.6, 0.9}) {
            for (int i = 0; i < 34; ++i) {
                const double lambda = draws.uniform(-0.4, 0.4);
                const double x = draws.uniform(-1.0, 1.0);
                const double y = draws.uniform(-1.0, 1.0);
                t.guard([&] {
                    double partial = 0.0;
                    double scale = 1.0;
                    for (int n = 0; n <= 30; ++n) {
                        if (n > 0) scale *= lambda / n;
                        partial += scale * fhp_eval(n, alpha, x, y);
                    }
                    const double closed = std::exp(x * lambda) * ml_one(alpha, y * lambda * lambda, opts.series).value;
                    t.add(std::fabs(partial - closed));
                });
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally t15(suite, "identity-umbral-shift", defaults::identity_rel_tol);
        Tally t20(suite, "identity-oplus", defaults::identity_rel_tol);
        for (int i = 0; i < 50; ++i) {
            const double x = draws.uniform(-1.0, 1.0);
            const double a = draws.uniform(-1.0, 1.0);
            const double w = draws.uniform(0.0, 1.0);
            const double alpha = draws.uniform(0.1, 0.95);
            for (int n = 0; n <= std::max(opts.n_max, 12); ++n) {
                t15.guard([&] {
                    t15.add_relative(umbral_hermite_shift(n, x, a, w, alpha),
                                     convolution_identity_i_rhs(n, x, a, w, alpha), defaults::identity_rel_tol);
                });
                t20.guard([&] {
                    t20.add_relative(fhp_oplus_eval(n, x, w, a, alpha), convolution_identity_ii_rhs(n, x, a, w, alpha),
                                     defaults::identity_rel_tol);
                });
            }
        }
        out.push_back(t15.finish());
        out.push_back(t20.finish());
    }
    {
        Tally t(suite, "zero-values", 1e-12);
        for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
            for (int n = 0; n <= opts.n_max; ++n) {
                t.guard([&] { t.add_relative(fhp_at_zero(n, alpha, 0.8), fhp_eval(n, alpha, 0.0, 0.8), 1e-12); });
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally t(suite, "homogeneity", 1e-12);
        for (int i = 0; i < 20; ++i) {
            const double x = draws.uniform(-1.0, 1.0);
            const double y = draws.uniform(-1.0, 1.0);
            const double s = draws.uniform(0.2, 2.0);
            const double alpha = draws.uniform(0.1, 1.0);
            for (int n = 0; n <= opts.n_max; ++n) {
                t.guard([&] {
                    const double scale = std::pow(s, n) * fhp_eval(n, alpha, std::fabs(x), std::fabs(y));
                    t.add(std::fabs(fhp_eval(n, alpha, s * x, s * s * y) - std::pow(s, n) * fhp_eval(n, alpha, x, y)) /
                          scale);
                });
            }
        }
        out.push_back(t.finish());
    }
    return out;
}

std::vector<CheckResult> mlp_generating_functions(const Options& opts) {
    const std::string suite = "mlp-gf";
    std::vector<CheckResult> out;
    Draws draws(opts.seed + 1);

    {
        Tally ogf(suite, "ogf", 1e-9);
        Tally egf(suite, "egf", 1e-9);
        for (int i = 0; i < 30; ++i) {
            const double alpha = draws.uniform(0.3, 1.0);
            const double beta = draws.uniform(0.5, 2.0);
            const double x = draws.uniform(-1.0, 1.0);
            const double y = draws.uniform(-1.0, 1.0);
            // |λ|(|x| + |y|) <= 0.5
            const double lambda = draws.uniform(-0.5, 0.5) / std::max(1.0, std::fabs(x) + std::fabs(y));
            ogf.guard([&] {
                double partial = 0.0;
                for (int n = 0; n <= 40; ++n) partial += std::pow(lambda, n) * mlp_eval(n, alpha, beta, x, y);
                ogf.add(std::fabs(partial - mlp_ogf_closed(lambda, alpha, beta, x, y, opts.series)));
            });
            egf.guard([&] {
                double partial = 0.0;
                double scale = 1.0;
                for (int n = 0; n <= 30; ++n) {
                    if (n > 0) scale *= lambda / n;
                    partial += scale * mlp_eval(n, alpha, beta, x, y);
                }
                egf.add(std::fabs(partial - mlp_egf_closed(lambda, alpha, beta, x, y, opts.series)));
            });
        }
        out.push_back(ogf.finish());
        out.push_back(egf.finish());
    }
    {
        Tally t(suite, "one-variable-reduction", 1e-12);
        for (int i = 0; i < 30; ++i) {
            const double alpha = draws.uniform(0.2, 1.5);
            const double beta = draws.uniform(0.5, 2.0);
            const double x = draws.uniform(-2.0, 2.0);
            const double y = draws.uniform(0.2, 2.0) * (i % 2 ? -1.0 : 1.0);
            for (int n = 0; n <= opts.n_max; ++n) {
                t.guard([&] {
                    // Error relative to Σ|terms|.
                    const double scale = mlp_eval(n, alpha, beta, -std::fabs(x), std::fabs(y));
                    t.add(std::fabs(mlp_one_var_reduction(n, alpha, beta, x, y) - mlp_eval(n, alpha, beta, x, y)) /
                          scale);
                });
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally t(suite, "konhauser-laguerre", 1e-10);
        for (int n = 0; n <= std::max(opts.n_max, 10); ++n) {
            for (double x : uniform_grid(0.0, 5.0, 11)) {
                t.guard([&] { t.add(std::fabs(konhauser(n, 1.0, 1.0, x, 1.0) - laguerre_explicit(n, x))); });
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally t(suite, "operational-form", 1e-10);
        const std::vector<double> grid = uniform_grid(0.0, 2.0, 21);
        for (double alpha : {0.3, 0.5, 0.9}) {
            for (double y : {0.5, 1.0, 2.0}) {
                for (int n = 0; n <= std::min(opts.n_max, 8); ++n) {
                    t.guard([&] { t.add(mlp_operational_check(n, alpha, y, n, grid, 1e-10).max_abs_diff); });
                }
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally t(suite, "prabhakar-consistency", 1e-13);
        for (double alpha : {0.3, 0.5, 0.9}) {
            for (int n = 0; n <= 6; ++n) {
                t.guard([&] {
                    const std::vector<double> c = ml_three_polynomial_coeffs(alpha, 1.3, n);
                    const FracPoly p = mlp_coeffs_x(n, alpha, 1.3, 1.0);
                    for (int r = 0; r <= n; ++r) t.add_relative(c[static_cast<std::size_t>(r)], p.coeff(r), 1e-13);
                });
            }
        }
        out.push_back(t.finish());
    }
    return out;
}

std::vector<CheckResult> caputo_checks(const Options& opts) {
    (void)opts;
    const std::string suite = "caputo";
    std::vector<CheckResult> out;

    {
        Tally t(suite, "eigenfunction", 1e-13);
        for (double a : {-1.0, 0.5}) {
            for (double alpha : kAlphas) {
                t.guard([&] {
                    const int terms = 25;
                    const FracPoly d = caputo_poly(ml_exponential_truncation(alpha, a, terms), alpha);
                    t.add(max_coeff_rel_diff(d, a * ml_exponential_truncation(alpha, a, terms - 1)));
                });
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally order(suite, "l1-order", 0.3);
        Tally exact(suite, "l1-exact-linear", 1e-12);
        for (double alpha : kAlphas) {
            for (double gamma : {0.7, 1.0, 2.3}) {
                std::vector<double> errors;
                for (int level = 0; level < 5; ++level) {
                    const std::size_t steps = std::size_t{64} << level;
                    const double h = 1.0 / static_cast<double>(steps);
                    std::vector<double> g(steps + 1);
                    for (std::size_t i = 0; i <= steps; ++i) g[i] = std::pow(static_cast<double>(i) * h, gamma);
                    // Exact value at t = 1.
                    const double exact_value = gamma_ratio(1.0 + gamma, 1.0 + gamma - alpha);
                    errors.push_back(std::fabs(caputo_l1(g, h, alpha, steps) - exact_value));
                }
                if (gamma == 1.0) {
                    // L1 is exact for linear data.
                    for (double e : errors) exact.add(e);
                    continue;
                }
                for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
                    const double observed = std::log2(errors[i] / errors[i + 1]);
                    order.add(std::fabs(observed - (2.0 - alpha)));
                }
            }
        }
        out.push_back(order.finish());
        out.push_back(exact.finish());
    }
    {
        Tally t(suite, "linearity", 1e-15);
        const FracPoly p{{1.0, 0.0}, {2.0, 0.9}, {-0.3, 1.7}, {0.25, 3.0}};
        const FracPoly q{{-2.0, 0.85}, {1.5, 1.7}, {4.0, 2.0}};
        for (double alpha : kAlphas) {
            t.guard([&] {
                const FracPoly lhs = caputo_poly(2.5 * p - 0.75 * q, alpha);
                const FracPoly rhs = 2.5 * caputo_poly(p, alpha) - 0.75 * caputo_poly(q, alpha);
                t.add(max_coeff_rel_diff(lhs, rhs, 1.0));
            });
        }
        out.push_back(t.finish());
    }
    {
        Tally t(suite, "riemann-liouville-relation", 1e-12);
        for (double alpha : kAlphas) {
            for (double a : {-1.0, 0.5}) {
                for (double tt : {0.25, 0.5, 1.0}) {
                    t.guard([&] {
                        const double e = ml_one(alpha, a * std::pow(tt, alpha), opts.series).value;
                        const double rl = rl_from_caputo(a * e, 1.0, tt, alpha);
                        // RL derivative of the series, term by term: t^{αr-α} Γ(1+αr)/Γ(1+αr-α) a^r/Γ(1+αr)
                        double series = 0.0;
                        for (int r = 0; r < 60; ++r) {
                            series += std::pow(a, r) * rgamma(1.0 + alpha * r - alpha) * std::pow(tt, alpha * r - alpha);
                        }
                        t.add_relative(rl, series, 1e-12);
                    });
                }
            }
        }
        out.push_back(t.finish());
    }
    return out;
}

std::vector<CheckResult> pde_residuals(const Options& opts) {
    const std::string suite = "pde-residuals";
    std::vector<CheckResult> out;
    Draws draws(opts.seed + 2);

    {
        Tally t(suite, "tf-diffusion-residual", 1e-10);
        for (double alpha : kAlphas) {
            for (double k : {0.7, 1.0, 2.0}) {
                for (int n = 0; n <= opts.n_max; ++n) {
                    t.guard([&] { t.add(residual_tf_diffusion(n, alpha, k)); });
                }
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally t(suite, "laguerre-residual", 1e-10);
        for (double alpha : kAlphas) {
            for (double beta : {0.3, 0.5, 0.8, 1.0}) {
                for (int n = 0; n <= std::min(opts.n_max, 6); ++n) {
                    t.guard([&] { t.add(residual_laguerre(n, alpha, beta, 1.3)); });
                }
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally t(suite, "subordination-chain", 1e-14);
        for (double alpha : kAlphas) {
            for (double beta : kAlphas) {
                for (int n = 0; n <= 8; ++n) {
                    t.guard([&] {
                        const auto direct = laguerre_monomial_terms(n, alpha, beta, 1.2, 0.7, 0.9);
                        const auto moment = laguerre_monomial_moment_terms(n, alpha, beta, 1.2, 0.7, 0.9);
                        for (std::size_t r = 0; r < direct.size(); ++r) t.add(rel_error(direct[r], moment[r], 1e-300));
                    });
                }
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally ci(suite, "case-i-umbral", defaults::identity_rel_tol);
        Tally cii(suite, "case-ii-forms", defaults::identity_rel_tol);
        for (int i = 0; i < 20; ++i) {
            const double alpha = draws.uniform(0.1, 0.95);
            const double k = draws.uniform(0.2, 2.0);
            const double a = draws.uniform(-1.0, 1.0);
            const double x = draws.uniform(-1.0, 1.0);
            const double tt = draws.uniform(0.0, 1.0);
            for (int n = 0; n <= opts.n_max; ++n) {
                ci.guard([&] {
                    ci.add_relative(solve_case_i(n, a, alpha, k, x, tt),
                                    umbral_hermite_shift(n, x, a, k * std::pow(tt, alpha), alpha),
                                    defaults::identity_rel_tol);
                });
                cii.guard([&] {
                    const CaseIIForms f = solve_case_ii_forms(n, a, alpha, k, x, tt);
                    cii.add_relative(f.series_form, f.oplus_form, defaults::identity_rel_tol);
                });
            }
        }
        out.push_back(ci.finish());
        out.push_back(cii.finish());
    }
    {
        Tally t(suite, "initial-conditions", 1e-10);
        for (int n = 0; n <= opts.n_max; ++n) {
            for (double x : {-0.8, 0.3, 1.1}) {
                t.guard([&] {
                    t.add(std::fabs(solve_case_i(n, 0.4, 0.5, 1.0, x, 0.0) - hermite2(n, x, 0.4)));
                    t.add(std::fabs(solve_case_ii(n, 0.4, 0.5, 1.0, x, 0.0) - fhp_eval(n, 0.5, x, 0.4)));
                    t.add(std::fabs(fhp_eval(n, 0.5, x, 1.0 * std::pow(1e-300, 0.5)) - std::pow(x, n)));
                    if (x >= 0.0) {
                        const double g0 = std::pow(-std::pow(x, 0.5), n) * rgamma(1.0 + 0.5 * n);
                        t.add(std::fabs(solve_laguerre_monomial(n, 0.5, 0.7, 1.0, x, 1e-300) - g0));
                        t.add(std::fabs(solve_laguerre_wright(0.6, 0.5, 0.7, 1.0, x, 1e-300, opts.series) -
                                        wright(0.5, 1.0, -0.6 * std::pow(x, 0.5), opts.series).value));
                    }
                });
            }
        }
        out.push_back(t.finish());
    }
    return out;
}

std::vector<CheckResult> sheffer_ladder(const Options& opts) {
    const std::string suite = "sheffer-ladder";
    std::vector<CheckResult> out;
    const int n_max = opts.n_max;
    const auto order = static_cast<std::size_t>(n_max + 2);

    {
        Tally raise(suite, "fhp-raising", 1e-9);
        Tally lower(suite, "fhp-lowering", 1e-9);
        for (double alpha : kAlphas) {
            for (double y : {-1.0, 0.5, 2.0}) {
                const PowerSeries g_log = series_log_derivative(series_reciprocal(appell_A_fhp(alpha, y, order)));
                for (int n = 0; n <= n_max; ++n) {
                    raise.guard([&] {
                        raise.add(scaled_coeff_diff(raising_apply(fhp_coeffs(n, alpha, y), g_log),
                                                     fhp_coeffs(n + 1, alpha, y)));
                    });
                    lower.guard([&] {
                        lower.add(scaled_coeff_diff(lowering_apply(fhp_coeffs(n, alpha, y)),
                                                     n * (n > 0 ? fhp_coeffs(n - 1, alpha, y) : FracPoly{})));
                    });
                }
            }
        }
        out.push_back(raise.finish());
        out.push_back(lower.finish());
    }
    {
        Tally raise(suite, "mlp-raising", 1e-9);
        Tally lower(suite, "mlp-lowering", 1e-9);
        for (double alpha : kAlphas) {
            for (double x : {-1.0, 0.5, 2.0}) {
                const double beta = 1.4;
                const PowerSeries g_log = series_log_derivative(series_reciprocal(appell_A_mlp(alpha, beta, x, order)));
                for (int n = 0; n <= n_max; ++n) {
                    raise.guard([&] {
                        raise.add(scaled_coeff_diff(raising_apply(mlp_coeffs_y(n, alpha, beta, x), g_log),
                                                     mlp_coeffs_y(n + 1, alpha, beta, x)));
                    });
                    lower.guard([&] {
                        lower.add(scaled_coeff_diff(lowering_apply(mlp_coeffs_y(n, alpha, beta, x)),
                                                     n * (n > 0 ? mlp_coeffs_y(n - 1, alpha, beta, x) : FracPoly{})));
                    });
                }
            }
        }
        out.push_back(raise.finish());
        out.push_back(lower.finish());
    }
    {
        Tally t(suite, "commutator", 1e-9);
        for (double alpha : kAlphas) {
            const PowerSeries fhp_log = series_log_derivative(series_reciprocal(appell_A_fhp(alpha, 0.5, order)));
            const PowerSeries mlp_log = series_log_derivative(series_reciprocal(appell_A_mlp(alpha, 1.4, 0.5, order)));
            for (int n = 0; n <= n_max; ++n) {
                t.guard([&] {
                    std::vector<FracPoly> basis{fhp_coeffs(n, alpha, 0.5), mlp_coeffs_y(n, alpha, 1.4, 0.5),
                                                FracPoly::monomial(1.0, n)};
                    for (std::size_t i = 0; i < basis.size(); ++i) {
                        const PowerSeries& g = (i == 1) ? mlp_log : fhp_log;
                        const FracPoly& p = basis[i];
                        const FracPoly pm = lowering_apply(raising_apply(p, g));
                        const FracPoly mp = raising_apply(lowering_apply(p), g);
                        t.add(scaled_coeff_diff(pm - mp, p));
                    }
                });
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally t(suite, "appell-structure", 4.0 * std::numeric_limits<double>::epsilon());
        const AppellAuxiliary aux([](double l) { return std::exp(l); }, [](double l) { return std::exp(l); });
        for (double x : {-1.0, 0.0, 0.5, 2.0}) {
            for (double lambda : {-0.3, 0.0, 0.7}) {
                t.add(std::fabs(aux.q(x) - 1.0));
                t.add(std::fabs(aux.T(lambda, x) - (lambda + x)));
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally t(suite, "h-cocycle", 1e-9);
        for (double alpha : kAlphas) {
            for (double l1 : {-0.2, 0.3}) {
                for (double l2 : {0.1, 0.4}) {
                    t.guard([&] {
                        const double x = 1.6;
                        t.add_relative(aux_v_h_fhp(l1 + l2, x, alpha, 0.7, opts.series).h,
                                       aux_v_h_fhp(l1, x, alpha, 0.7, opts.series).h *
                                           aux_v_h_fhp(l2, l1 + x, alpha, 0.7, opts.series).h,
                                       1e-9);
                        t.add_relative(aux_v_h_mlp(l1 + l2, x, alpha, 1.4, 0.8, opts.series).h,
                                       aux_v_h_mlp(l1, x, alpha, 1.4, 0.8, opts.series).h *
                                           aux_v_h_mlp(l2, l1 + x, alpha, 1.4, 0.8, opts.series).h,
                                       1e-9);
                    });
                }
            }
        }
        out.push_back(t.finish());
    }
    {
        Tally t(suite, "a-prime-wiman", 1e-10);
        for (double alpha : kAlphas) {
            for (double y : {-1.0, 0.5, 2.0}) {
                t.guard([&] {
                    const PowerSeries d = appell_A_fhp(alpha, y, 20).derivative();
                    const PowerSeries w = appell_A_fhp_derivative_wiman(alpha, y, 20);
                    for (std::size_t k = 0; k < 20; ++k) t.add(std::fabs(d[k] - w[k]));
                });
            }
        }
        out.push_back(t.finish());
    }
    return out;
}

std::vector<CheckResult> run(std::string_view suite, const Options& opts) {
    using Runner = std::vector<CheckResult> (*)(const Options&);
    const std::vector<std::pair<std::string, Runner>> table{
        {"fhp-identities", &fhp_identities}, {"mlp-gf", &mlp_generating_functions}, {"caputo", &caputo_checks},
        {"pde-residuals", &pde_residuals},   {"sheffer-ladder", &sheffer_ladder},
    };
    const std::string wanted = (suite == "identities") ? std::string("fhp-identities") : std::string(suite);

    std::vector<Runner> selected;
    for (const auto& [name, fn] : table) {
        if (wanted == "all" || wanted == name) selected.push_back(fn);
    }
    if (selected.empty()) throw std::invalid_argument("unknown verification suite '" + std::string(suite) + "'");

    std::vector<CheckResult> out;
    if (opts.parallel && selected.size() > 1) {
        std::vector<std::future<std::vector<CheckResult>>> jobs;
        for (Runner fn : selected) jobs.push_back(std::async(std::launch::async, fn, std::cref(opts)));
        for (auto& job : jobs) {
            auto part = job.get();
            out.insert(out.end(), part.begin(), part.end());
        }
    } else {
        for (Runner fn : selected) {
            auto part = fn(opts);
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    return out;
}

}  // namespace mlpoly::verify
