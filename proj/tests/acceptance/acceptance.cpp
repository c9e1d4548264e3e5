// Acceptance run: one PASS/FAIL line per criterion, each with its pinned
// tolerance and runtime budget. Exit status is 0 only if every line passes.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "gen.hpp"
#include "mlpoly/mlpoly.hpp"
#include "mp_oracle.hpp"

#ifndef MLPOLY_TOOL_PATH
#error "MLPOLY_TOOL_PATH must name the mlpoly executable"
#endif

using namespace mlpoly;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Measure {
    double max_error = 0.0;
    std::size_t cases = 0;
    std::string note;

    void add(double e) {
        ++cases;
        if (std::isnan(e)) e = std::numeric_limits<double>::infinity();
        if (e > max_error) max_error = e;
    }
};

struct Criterion {
    int id;
    const char* name;
    double tolerance;
    double budget_s;
    std::function<Measure()> body;
};

// |a - b| / max(|a|, |b|, floor / rel): at most rel exactly when
// |a - b| <= max(rel * max(|a|, |b|), floor).
double rel_with_floor(double a, double b, double rel, double floor) {
    return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), floor / rel});
}

double scaled_coeff_diff(const FracPoly& got, const FracPoly& want) {
    double scale = 1.0;
    for (const Monomial& m : want.terms()) scale = std::max(scale, std::fabs(m.coeff));
    return max_coeff_diff(got, want) / scale;
}

Measure low_order_forms() {
    Measure m;
    for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
        for (double y : {-1.5, 0.3, 2.0}) {
            const double g = std::tgamma(1.0 + alpha);
            const std::array<FracPoly, 4> listed{
                FracPoly::constant(1.0),
                FracPoly::monomial(1.0, 1.0),
                FracPoly{{1.0, 2.0}, {2.0 * y / g, 0.0}},
                FracPoly{{1.0, 3.0}, {6.0 * y / g, 1.0}},
            };
            for (int n = 0; n <= 3; ++n) m.add(max_coeff_diff(fhp_coeffs(n, alpha, y), listed[static_cast<std::size_t>(n)]));
        }
    }
    return m;
}

Measure classical_reductions() {
    Measure m;
    for (int n = 0; n <= 15; ++n) {
        for (double x : {-1.7, -0.4, 0.0, 0.9, 1.6}) {
            for (double y : {-1.2, -0.3, 0.5, 1.4}) {
                const double want = oracle::hermite2(n, x, y);
                m.add(std::fabs(fhp_eval(n, 1.0, x, y) - want) / std::max(1.0, std::fabs(want)));
            }
        }
    }
    for (int n = 0; n <= 10; ++n) {
        for (int i = 0; i <= 20; ++i) {
            const double x = 0.25 * i;
            const double want = oracle::laguerre(n, x);
            m.add(std::fabs(konhauser(n, 1.0, 1.0, x, 1.0) - want) / std::max(1.0, std::fabs(want)));
        }
    }
    return m;
}

Measure fhp_egf() {
    Measure m;
    gen::Source src(kSeed);
    const std::vector<double> alphas{0.4, 0.6, 0.9};
    for (int i = 0; i < 100; ++i) {
        const double alpha = src.pick(alphas);
        const double lambda = src.uniform(-0.4, 0.4);
        const double x = src.uniform(-1.0, 1.0);
        const double y = src.uniform(-1.0, 1.0);
        double partial = 0.0;
        double scale = 1.0;
        for (int n = 0; n <= 30; ++n) {
            if (n > 0) scale *= lambda / n;
            partial += scale * fhp_eval(n, alpha, x, y);
        }
        m.add(std::fabs(partial - std::exp(x * lambda) * ml_one(alpha, y * lambda * lambda).value));
    }
    return m;
}

Measure convolution_identities() {
    Measure m;
    gen::Source src(kSeed + 1);
    for (int i = 0; i < 50; ++i) {
        const double x = src.uniform(-1.0, 1.0);
        const double a = src.uniform(-1.0, 1.0);
        const double w = src.uniform(0.0, 1.0);
        const double alpha = src.uniform(0.1, 0.95);
        for (int n = 0; n <= 12; ++n) {
            m.add(rel_with_floor(umbral_hermite_shift(n, x, a, w, alpha), convolution_identity_i_rhs(n, x, a, w, alpha),
                                 1e-9, 1e-12));
        }
    }
    for (int i = 0; i < 50; ++i) {
        const double x = src.uniform(-1.0, 1.0);
        const double a = src.uniform(-1.0, 1.0);
        const double w = src.uniform(0.0, 1.0);
        const double alpha = src.uniform(0.1, 0.95);
        for (int n = 0; n <= 12; ++n) {
            m.add(rel_with_floor(fhp_oplus_eval(n, x, w, a, alpha), convolution_identity_ii_rhs(n, x, a, w, alpha),
                                 1e-9, 1e-12));
        }
    }
    return m;
}

Measure mlp_generating_functions() {
    Measure m;
    gen::Source src(kSeed + 2);
    for (int i = 0; i < 30; ++i) {
        const double alpha = src.uniform(0.3, 1.0);
        const double beta = src.uniform(0.5, 2.0);
        const double x = src.uniform(-1.0, 1.0);
        const double y = src.uniform(-1.0, 1.0);
        // |λ|(|x| + |y|) <= 0.5, hence |λy| <= 0.5.
        const double lambda = src.uniform(-0.5, 0.5) / std::max(1.0, std::fabs(x) + std::fabs(y));
        double partial = 0.0;
        for (int n = 0; n <= 40; ++n) partial += std::pow(lambda, n) * mlp_eval(n, alpha, beta, x, y);
        m.add(std::fabs(partial - mlp_ogf_closed(lambda, alpha, beta, x, y)));
    }
    for (int i = 0; i < 30; ++i) {
        const double alpha = src.uniform(0.3, 1.0);
        const double beta = src.uniform(0.5, 2.0);
        const double x = src.uniform(-1.0, 1.0);
        const double y = src.uniform(-1.0, 1.0);
        const double lambda = src.uniform(-0.5, 0.5);
        double partial = 0.0;
        double scale = 1.0;
        for (int n = 0; n <= 30; ++n) {
            if (n > 0) scale *= lambda / n;
            partial += scale * mlp_eval(n, alpha, beta, x, y);
        }
        m.add(std::fabs(partial - mlp_egf_closed(lambda, alpha, beta, x, y)));
    }
    return m;
}

Measure operational_form() {
    Measure m;
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(0.1 * i);
    for (double alpha : {0.3, 0.5, 0.9}) {
        for (double y : {0.5, 1.0, 2.0}) {
            for (int n = 0; n <= 8; ++n) m.add(mlp_operational_check(n, alpha, y, n, grid).max_abs_diff);
        }
    }
    return m;
}

// Two sub-measures share one line: the eigenfunction identity must hold at
// rounding level (1e-13 relative per coefficient) and each observed L1 order
// must lie within 0.3 of 2 - α. The reported error is the worse of the two,
// each normalized by its own tolerance, so the line tolerance is 1.
Measure caputo_criterion() {
    Measure eig;
    for (double a : {-1.0, 0.5}) {
        for (double alpha : {0.3, 0.5, 0.8}) {
            for (int terms : {5, 15, 25}) {
                const FracPoly d = caputo_poly(ml_exponential_truncation(alpha, a, terms), alpha);
                eig.add(max_coeff_rel_diff(d, a * ml_exponential_truncation(alpha, a, terms - 1)) / 1e-13);
            }
        }
    }
    Measure order;
    for (double alpha : {0.3, 0.5, 0.8}) {
        for (double gamma : {0.7, 2.3}) {
            std::vector<double> errors;
            for (int level = 0; level <= 4; ++level) {
                const std::size_t steps = std::size_t{64} << level;
                const double h = 1.0 / static_cast<double>(steps);
                std::vector<double> g(steps + 1);
                for (std::size_t i = 0; i <= steps; ++i) g[i] = std::pow(static_cast<double>(i) * h, gamma);
                errors.push_back(std::fabs(caputo_l1(g, h, alpha, steps) - gamma_ratio(1.0 + gamma, 1.0 + gamma - alpha)));
            }
            for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
                order.add(std::fabs(std::log2(errors[i] / errors[i + 1]) - (2.0 - alpha)) / 0.3);
            }
        }
    }
    Measure m;
    m.cases = eig.cases + order.cases;
    m.max_error = std::max(eig.max_error, order.max_error);
    char buf[96];
    std::snprintf(buf, sizeof buf, "eigen %.2e/1e-13, order dev %.3f/0.3", eig.max_error * 1e-13, order.max_error * 0.3);
    m.note = buf;
    return m;
}

Measure pde_residuals() {
    Measure m;
    double absolute = 0.0;
    auto take = [&](const Residual& r) {
        m.add(r.scaled);
        absolute = std::max(absolute, r.absolute);
    };
    for (double alpha : {0.3, 0.5, 0.8}) {
        for (double k : {0.7, 1.0, 2.0}) {
            for (int n = 0; n <= 10; ++n) take(residual_tf_diffusion_detail(n, alpha, k));
        }
    }
    for (double alpha : {0.3, 0.5, 0.8}) {
        for (double beta : {0.3, 0.5, 0.8}) {
            for (double b : {1.0, 1.3}) {
                for (int n = 0; n <= 6; ++n) take(residual_laguerre_detail(n, alpha, beta, b));
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "scaled by max(1, max|coeff|); largest absolute residual %.3e", absolute);
    m.note = buf;
    return m;
}

Measure subordination_chain() {
    Measure m;
    for (double alpha : {0.3, 0.5, 0.8}) {
        for (double beta : {0.3, 0.5, 0.8}) {
            for (double b : {0.5, 1.3}) {
                for (double x : {0.4, 1.2}) {
                    for (double t : {0.3, 1.5}) {
                        for (int n = 0; n <= 8; ++n) {
                            const auto direct = laguerre_monomial_terms(n, alpha, beta, b, x, t);
                            const auto moment = laguerre_monomial_moment_terms(n, alpha, beta, b, x, t);
                            if (direct.size() != moment.size()) {
                                m.add(std::numeric_limits<double>::infinity());
                                continue;
                            }
                            for (std::size_t r = 0; r < direct.size(); ++r) {
                                m.add(std::fabs(direct[r] - moment[r]) /
                                      std::max({std::fabs(direct[r]), std::fabs(moment[r]), 1e-300}));
                            }
                        }
                    }
                }
            }
        }
    }
    return m;
}

Measure sheffer_ladder() {
    Measure m;
    for (double alpha : {0.3, 0.5, 0.8, 1.0}) {
        for (double y : {-1.0, 0.5, 2.0}) {
            const PowerSeries g = series_log_derivative(series_reciprocal(appell_A_fhp(alpha, y, 12)));
            for (int n = 0; n <= 10; ++n) {
                const FracPoly p = fhp_coeffs(n, alpha, y);
                m.add(scaled_coeff_diff(raising_apply(p, g), fhp_coeffs(n + 1, alpha, y)));
                m.add(scaled_coeff_diff(lowering_apply(p), n * (n > 0 ? fhp_coeffs(n - 1, alpha, y) : FracPoly{})));
            }
        }
        for (double x : {-1.0, 0.5, 2.0}) {
            const double beta = 1.4;
            const PowerSeries g = series_log_derivative(series_reciprocal(appell_A_mlp(alpha, beta, x, 12)));
            for (int n = 0; n <= 10; ++n) {
                const FracPoly p = mlp_coeffs_y(n, alpha, beta, x);
                m.add(scaled_coeff_diff(raising_apply(p, g), mlp_coeffs_y(n + 1, alpha, beta, x)));
                m.add(scaled_coeff_diff(lowering_apply(p), n * (n > 0 ? mlp_coeffs_y(n - 1, alpha, beta, x) : FracPoly{})));
            }
        }
        const PowerSeries g = series_log_derivative(series_reciprocal(appell_A_fhp(alpha, 0.5, 12)));
        for (int n = 0; n <= 10; ++n) {
            const FracPoly p = FracPoly::monomial(1.0, n);
            const FracPoly c = lowering_apply(raising_apply(p, g)) - raising_apply(lowering_apply(p), g);
            m.add(scaled_coeff_diff(c, p));
        }
    }
    return m;
}

struct Captured {
    std::string out;
    int status = -1;
};

Captured run_tool(const std::string& args) {
    Captured c;
    const std::string cmd = std::string("\"") + MLPOLY_TOOL_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return c;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
    const int raw = ::pclose(pipe);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return c;
}

Measure cli_determinism() {
    Measure m;
    const Captured a = run_tool("verify --suite all --seed 42");
    const Captured b = run_tool("verify --suite all --seed 42");
    m.add(a.status == 0 ? 0.0 : 1.0);
    m.add(b.status == 0 ? 0.0 : 1.0);
    m.add(!a.out.empty() && a.out == b.out ? 0.0 : 1.0);
    m.note = "exit " + std::to_string(a.status) + "/" + std::to_string(b.status) + ", " +
             std::to_string(a.out.size()) + " bytes, " + (a.out == b.out ? "identical" : "different");
    return m;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "low-order fHP closed forms", 1e-12, 1.0, low_order_forms},
        {2, "classical Hermite and Laguerre reductions", 1e-10, 1.0, classical_reductions},
        {3, "fHP exponential generating function", 1e-10, 5.0, fhp_egf},
        {4, "umbral shift and oplus convolution identities", 1e-9, 5.0, convolution_identities},
        {5, "MLP ordinary and exponential generating functions", 1e-9, 5.0, mlp_generating_functions},
        {6, "MLP operational form", 1e-10, 2.0, operational_form},
        {7, "Caputo eigenfunction and L1 order (normalized)", 1.0, 10.0, caputo_criterion},
        {8, "diffusion and Laguerre PDE residuals", 1e-10, 5.0, pde_residuals},
        {9, "subordination chain term by term", 1e-14, 1.0, subordination_chain},
        {10, "Sheffer raising, lowering and commutator", 1e-9, 2.0, sheffer_ladder},
        {11, "CLI verify determinism", 0.0, 30.0, cli_determinism},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Measure m;
        try {
            m = c.body();
        } catch (const std::exception& e) {
            m.max_error = std::numeric_limits<double>::infinity();
            m.note = std::string("threw: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = m.cases > 0 && m.max_error <= c.tolerance && elapsed < c.budget_s;
        failed += ok ? 0 : 1;
        std::printf("%s [%2d] %-50s max_err=%.3e tol=%.1e cases=%zu time=%.3fs budget=%.0fs%s%s\n", ok ? "PASS" : "FAIL",
                    c.id, c.name, m.max_error, c.tolerance, m.cases, elapsed, c.budget_s, m.note.empty() ? "" : "  ",
                    m.note.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
