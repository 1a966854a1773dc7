#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lfc/numerics.hpp"
#include "lfc/power_series.hpp"
#include "lfc/solver.hpp"
#include "lfc/testlib.hpp"

namespace lfc {

using json = nlohmann::json;

inline json number_or_null(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

// Series wire format: {alpha, center, coeffs}. Round-trips exactly for
// finite values (shortest-round-trip double printing).
inline json series_to_json(const PowerSeries& s)
{
    return json{{"alpha", s.order().alpha()}, {"center", s.center()}, {"coeffs", s.coeffs()}};
}

inline PowerSeries series_from_json(const json& j)
{
    return PowerSeries(Order(j.at("alpha").get<double>()), j.at("center").get<double>(),
                       j.at("coeffs").get<std::vector<double>>());
}

// Report wire format:
// {status, root, residual, iterations, L_hat, a_posteriori, trace:[{k,x,step}]}.
// Non-finite numbers (the +inf a-posteriori sentinel, a diverged residual)
// serialize as null.
inline json report_to_json(const ConvergenceReport& r)
{
    json trace = json::array();
    for (std::size_t k = 0; k < r.trace.iterates.size(); ++k) {
        json row{{"k", k}, {"x", r.trace.iterates[k]}};
        row["step"] = k == 0 ? json(nullptr) : json(r.trace.fractal_steps[k - 1]);
        trace.push_back(std::move(row));
    }
    return json{{"status", to_string(r.status)},
                {"root", number_or_null(r.root)},
                {"residual", number_or_null(r.residual)},
                {"iterations", r.iterations()},
                {"L_hat", r.contraction.L_hat},
                {"a_posteriori", number_or_null(r.a_posteriori)},
                {"trace", std::move(trace)}};
}

inline json holder_to_json(const HolderFit& f)
{
    return json{{"exponent", f.exponent},
                {"log_coefficient", f.log_coefficient},
                {"r_squared", f.r_squared},
                {"samples", f.samples}};
}

inline json testfn_to_json(const TestFunction& t)
{
    json j{{"name", t.name}};
    if (t.known_root)
        j["known_root"] = *t.known_root;
    if (t.known_fixed_point)
        j["known_fixed_point"] = *t.known_fixed_point;
    if (t.known_holder_exponent) {
        j["known_holder_exponent"] = *t.known_holder_exponent;
        j["holder_x0"] = t.holder_x0;
    }
    if (!t.valid_alpha.empty())
        j["valid_alpha"] = t.valid_alpha;
    if (t.fn.series)
        j["series"] = series_to_json(*t.fn.series);
    return j;
}

}  // namespace lfc
