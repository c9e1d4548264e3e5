#pragma once

#include <cstddef>

namespace mlpoly {

// Tolerance defaults. Everything numeric that is configurable lives here.
namespace defaults {

inline constexpr double ln_gamma_rel_tol = 1e-13;
inline constexpr double rgamma_rel_tol = 1e-12;

inline constexpr std::size_t series_max_terms = 400;
/// A series stops once two consecutive terms are below stop_tol * |partial sum|.
inline constexpr double series_stop_tol = 1e-17;
/// Evaluations whose error estimate exceeds max(accept_rel*|value|, accept_abs) are refused.
inline constexpr double series_accept_rel = 1e-10;
inline constexpr double series_accept_abs = 1e-13;

/// Exponents closer than this are treated as equal in FracPoly.
inline constexpr double exponent_merge_tol = 1e-12;

inline constexpr double identity_rel_tol = 1e-9;
inline constexpr double identity_abs_floor = 1e-12;

}  // namespace defaults

struct SeriesConfig {
    std::size_t max_terms = defaults::series_max_terms;
    double stop_tol = defaults::series_stop_tol;
    double accept_rel = defaults::series_accept_rel;
    double accept_abs = defaults::series_accept_abs;
};

}  // namespace mlpoly
