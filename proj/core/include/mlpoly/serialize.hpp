#pragma once

#include <string>
#include <string_view>

#include "mlpoly/errors.hpp"
#include "mlpoly/fokker_planck.hpp"
#include "mlpoly/frac_poly.hpp"
#include "mlpoly/sheffer.hpp"

namespace mlpoly {

/// v rounded to 15 significant digits.
double round_output(double v);

/// Shortest decimal that round-trips the value rounded to 15 significant digits.
std::string format_number(double v);

/// [{"c": coeff, "mu": exponent}, ...], exponents ascending.
std::string to_json(const FracPoly& p);
FracPoly frac_poly_from_json(std::string_view text);

/// Coefficient array [c0, c1, ...].
std::string to_json(const PowerSeries& s);
PowerSeries power_series_from_json(std::string_view text);

/// {"meta": {...}, "data": {"grid": [...], "values": [...]}}
std::string to_json(const SolutionProfile& profile);
/// Header "grid,value", one point per line, LF endings.
std::string to_csv(const SolutionProfile& profile);

}  // namespace mlpoly
