#include "mlpoly/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace mlpoly {
namespace {

using nlohmann::json;

json number(double v) {
    if (!std::isfinite(v)) return json(nullptr);
    return json(round_output(v));
}

json parse(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

double round_output(double v) {
    if (!std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return number(v).dump();
}

std::string to_json(const FracPoly& p) {
    json arr = json::array();
    for (const Monomial& m : p.terms()) arr.push_back({{"c", number(m.coeff)}, {"mu", number(m.exponent)}});
    return arr.dump();
}

FracPoly frac_poly_from_json(std::string_view text) {
    const json j = parse(text);
    if (!j.is_array()) throw DomainError("FracPoly JSON must be an array");
    std::vector<Monomial> terms;
    for (const json& t : j) {
        if (!t.is_object() || !t.contains("c") || !t.contains("mu") || !t["c"].is_number() || !t["mu"].is_number()) {
            throw DomainError("FracPoly JSON entries need numeric \"c\" and \"mu\"");
        }
        terms.push_back({t["c"].get<double>(), t["mu"].get<double>()});
    }
    return FracPoly(std::move(terms));
}

std::string to_json(const PowerSeries& s) {
    json arr = json::array();
    for (double c : s.coeffs()) arr.push_back(number(c));
    return arr.dump();
}

PowerSeries power_series_from_json(std::string_view text) {
    const json j = parse(text);
    if (!j.is_array()) throw DomainError("PowerSeries JSON must be an array");
    std::vector<double> c;
    for (const json& v : j) {
        if (!v.is_number()) throw DomainError("PowerSeries JSON entries must be numbers");
        c.push_back(v.get<double>());
    }
    return PowerSeries(std::move(c));
}

std::string to_json(const SolutionProfile& profile) {
    profile.validate();
    json meta = json::object();
    for (const auto& [k, v] : profile.meta) meta[k] = v;
    json grid = json::array();
    json values = json::array();
    for (double g : profile.grid) grid.push_back(number(g));
    for (double v : profile.values) values.push_back(number(v));
    nlohmann::ordered_json out;
    out["meta"] = meta;
    out["data"] = {{"grid", grid}, {"values", values}};
    return out.dump(2) + "\n";
}

std::string to_csv(const SolutionProfile& profile) {
    profile.validate();
    std::ostringstream out;
    out << "grid,value\n";
    for (std::size_t i = 0; i < profile.grid.size(); ++i) {
        out << format_number(profile.grid[i]) << ',' << format_number(profile.values[i]) << '\n';
    }
    return out.str();
}

}  // namespace mlpoly
