#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lfc/errors.hpp"
#include "lfc/fractal_number.hpp"
#include "lfc/gamma.hpp"
#include "lfc/power_series.hpp"

namespace lfc {

// A scalar black box, optionally carrying a series form (which enables the
// exact series-based operators) and/or an explicit alpha-derivative callable
// (used by newton_solve when no series is attached).
struct RealFunction {
    std::function<double(double)> fn;
    std::optional<PowerSeries> series;
    std::function<double(double)> alpha_derivative;  // empty when unknown

    double operator()(double x) const { return fn(x); }
};

inline RealFunction make_function(std::function<double(double)> f)
{
    RealFunction r;
    r.fn = std::move(f);
    return r;
}

// Function whose values come from evaluating the series itself.
inline RealFunction make_series_function(const PowerSeries& s)
{
    RealFunction r;
    r.fn = [s](double x) { return eval(s, x); };
    r.series = s;
    return r;
}

namespace detail {
inline double checked_eval(const RealFunction& f, double x, const char* who)
{
    const double v = f(x);
    if (!std::isfinite(v))
        throw evaluation_error(std::string(who) + ": non-finite sample", x);
    return v;
}
}  // namespace detail

// Geometric step schedule h_i = h0 ratio^i, i = 0 .. count-1. The default
// spans 0.1 down to ~1.9e-7, six decades clear of the double noise floor.
struct StepSchedule {
    double h0 = 1e-1;
    double ratio = 0.5;
    int count = 20;

    void validate() const
    {
        if (!(h0 > 0.0) || !(ratio > 0.0 && ratio < 1.0) || count < 3)
            throw configuration_error("StepSchedule: needs h0 > 0, ratio in (0,1), count >= 3");
    }
};

// Result of the log-log increment regression.
struct HolderFit {
    double exponent = 0.0;         // estimated alpha-hat
    double log_coefficient = 0.0;  // log C in |df| ~ C h^alpha
    double r_squared = 0.0;
    int samples = 0;
};

enum class QuadBackend { literal_eq3, measure, series };

// Backend selector and partition count for the local fractional integral.
// The default, literal_eq3 at N = 1, reproduces the identity
// I[a,b] 1 = (b-a)^alpha / Gamma(1+alpha) exactly.
struct QuadratureSpec {
    QuadBackend backend = QuadBackend::literal_eq3;
    int partitions = 1;
};

// One finite-h sample of the difference quotient
// Gamma(1+a) (f(x0+h) - f(x0)) / spow(h, a).
inline double lfd_quotient(const RealFunction& f, double x0, double h, Order order)
{
    if (h == 0.0)
        throw std::invalid_argument("lfd_quotient: h must be nonzero");
    const double fh = detail::checked_eval(f, x0 + h, "lfd_quotient");
    const double f0 = detail::checked_eval(f, x0, "lfd_quotient");
    const double q = gamma_fn(1.0 + order.alpha()) * (fh - f0) / spow(h, order.alpha());
    if (!std::isfinite(q))
        throw evaluation_error("lfd_quotient: quotient overflowed", h);
    return q;
}

struct LfdEstimate {
    double estimate = 0.0;
    bool converged = false;
    std::vector<double> trail;  // two-sided averaged quotients, one per step
};

// Drives the difference quotient along the decreasing schedule, averaging the
// +h and -h samples. The limit is declared converged when the last three
// samples either plateau (agree to rtol = 1e-6 with a unit floor) or decay
// geometrically in magnitude: a trail falling like a power of h identifies
// the limit 0, the smooth-function regime at alpha < 1. The estimate is the
// final sample either way; the trail is returned for diagnosis.
inline LfdEstimate lfd_limit_estimate(const RealFunction& f, double x0, Order order,
                                      const StepSchedule& sched = {})
{
    sched.validate();
    LfdEstimate out;
    double h = sched.h0;
    for (int i = 0; i < sched.count; ++i, h *= sched.ratio) {
        double plus, minus;
        try {
            plus = lfd_quotient(f, x0, h, order);
            minus = lfd_quotient(f, x0, -h, order);
        } catch (const evaluation_error&) {
            throw evaluation_error("lfd_limit_estimate: non-finite sample at step", h);
        }
        out.trail.push_back(0.5 * (plus + minus));
    }
    const auto& t = out.trail;
    const std::size_t n = t.size();
    const double rtol = 1e-6;
    const double scale = std::max(1.0, std::fabs(t[n - 1]));
    const bool plateau = std::fabs(t[n - 1] - t[n - 2]) <= rtol * scale
                         && std::fabs(t[n - 2] - t[n - 3]) <= rtol * scale;
    const double decay = 0.97;
    const bool to_zero = std::fabs(t[n - 1]) <= decay * std::fabs(t[n - 2])
                         && std::fabs(t[n - 2]) <= decay * std::fabs(t[n - 3]);
    out.converged = plateau || to_zero;
    out.estimate = t[n - 1];
    return out;
}

// Least-squares fit of log|f(x0+h) - f(x0)| against log h over the schedule.
// The slope is the measurable local Holder exponent; the intercept estimates
// log C. Steps with a vanishing increment are skipped.
inline HolderFit holder_fit(const RealFunction& f, double x0, const StepSchedule& sched = {})
{
    sched.validate();
    const double f0 = detail::checked_eval(f, x0, "holder_fit");
    std::vector<double> lx, ly;
    double h = sched.h0;
    for (int i = 0; i < sched.count; ++i, h *= sched.ratio) {
        const double inc = std::fabs(detail::checked_eval(f, x0 + h, "holder_fit") - f0);
        if (inc > 0.0) {
            lx.push_back(std::log(h));
            ly.push_back(std::log(inc));
        }
    }
    if (lx.size() < 3)
        throw degenerate_fit_error(lx.empty()
                                       ? "holder_fit: all increments vanish (f locally constant)"
                                       : "holder_fit: fewer than 3 usable increments");

    const std::size_t n = lx.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    HolderFit fit;
    fit.exponent = sxy / sxx;
    fit.log_coefficient = my - fit.exponent * mx;
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ly[i] - (fit.exponent * lx[i] + fit.log_coefficient);
        ss_res += r * r;
        ss_tot += (ly[i] - my) * (ly[i] - my);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
    fit.r_squared = std::min(1.0, std::max(0.0, fit.r_squared));
    fit.samples = static_cast<int>(n);
    return fit;
}

// Local fractional integral of f over [a, b] in one of three conventions:
//
//   literal_eq3  (1/Gamma(1+a)) sum_{j<N} f(t_j) (dt)^a on the uniform
//                partition, deliberately without a refinement limit: for
//                alpha < 1 the sum grows like N^{1-alpha}, so N is an
//                explicit parameter. At N = 1 this is exactly
//                (b-a)^a / Gamma(1+a) for f == 1.
//   measure      (1/Gamma(1+a)) integral of f against d(t^a), midpoint rule
//                with weight a |t|^{a-1} (signed-power convention).
//   series       exact: the series antiderivative evaluated at b minus at a;
//                requires an attached series with center <= min(a, b).
//
// Orientation: I[a,b] = -I[b,a] and I[a,a] = 0, all backends.
inline double lf_integral(const RealFunction& f, double a, double b, Order order,
                          const QuadratureSpec& spec = {})
{
    if (spec.partitions < 1)
        throw configuration_error("lf_integral: partitions must be >= 1");
    if (a == b)
        return 0.0;
    if (a > b)
        return -lf_integral(f, b, a, order, spec);

    const double alpha = order.alpha();
    switch (spec.backend) {
    case QuadBackend::literal_eq3: {
        const int n = spec.partitions;
        const double dt = (b - a) / n;
        double sum = 0.0;  // fixed left-to-right order: bitwise reproducible
        for (int j = 0; j < n; ++j)
            sum += detail::checked_eval(f, a + j * dt, "lf_integral");
        return sum * std::pow(dt, alpha) / gamma_fn(1.0 + alpha);
    }
    case QuadBackend::measure: {
        const int n = spec.partitions;
        const double dt = (b - a) / n;
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
            const double tm = a + (j + 0.5) * dt;
            const double w = std::pow(std::fabs(tm), alpha - 1.0);
            const double v = detail::checked_eval(f, tm, "lf_integral") * w;
            if (!std::isfinite(v))
                throw evaluation_error("lf_integral: non-finite measure weight", tm);
            sum += v;
        }
        return sum * dt * alpha / gamma_fn(1.0 + alpha);
    }
    case QuadBackend::series: {
        if (!f.series)
            throw unsupported_backend_error(
                "lf_integral: series backend requires an attached series form");
        if (f.series->center() > a)
            throw std::domain_error("lf_integral: series center must satisfy center <= a");
        const PowerSeries anti = integral(*f.series);
        return eval(anti, b) - eval(anti, a);
    }
    }
    throw configuration_error("lf_integral: unknown backend");
}

}  // namespace lfc
