#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "lfc/errors.hpp"
#include "lfc/fractal_number.hpp"
#include "lfc/gamma.hpp"
#include "lfc/numerics.hpp"
#include "lfc/power_series.hpp"

namespace lfc {

struct IterationSettings {
    Order order;
    double tol = 1e-10;  // stopping threshold on the fractal step |dx|^alpha
    int max_iter = 200;
    int contraction_window = 5;  // tail length for the L-hat estimate
};

inline void validate(const IterationSettings& s)
{
    if (!(s.tol > 0.0))
        throw configuration_error("IterationSettings: tol must be positive");
    if (s.max_iter < 1)
        throw configuration_error("IterationSettings: max_iter must be >= 1");
    if (s.contraction_window < 2)
        throw configuration_error("IterationSettings: contraction_window must be >= 2");
    if (s.contraction_window > s.max_iter)
        throw configuration_error("IterationSettings: contraction_window must not exceed max_iter");
}

enum class SolveStatus { converged, max_iter_exceeded, diverged, non_contractive };

inline const char* to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::max_iter_exceeded: return "max_iter_exceeded";
    case SolveStatus::diverged: return "diverged";
    case SolveStatus::non_contractive: return "non_contractive";
    }
    return "unknown";
}

struct IterationTrace {
    std::vector<double> iterates;       // x_0 .. x_m
    std::vector<double> fractal_steps;  // |x_{k+1} - x_k|^alpha, size m
    std::vector<double> ratios;         // fractal_steps[k+1]/fractal_steps[k], size m-1
};

// Empirical surrogate for the contraction constant: the max step ratio over
// the tail window. uniform <=> L_hat < 1.
struct ContractionEstimate {
    double L_hat = 0.0;
    int window = 0;
    bool uniform = false;
};

struct ConvergenceReport {
    SolveStatus status = SolveStatus::max_iter_exceeded;
    double root = 0.0;  // last finite iterate
    IterationTrace trace;
    ContractionEstimate contraction;
    double a_posteriori = 0.0;  // +inf when L_hat >= 1
    double residual = 0.0;      // |f(root)| for Newton, rho(phi(root), root) for fixed point

    int iterations() const noexcept
    {
        return static_cast<int>(trace.iterates.size()) - 1;
    }
};

// last_step / (1 - L_hat), the telescoped tail of a geometric step sequence;
// +inf sentinel when L_hat >= 1.
inline double aposteriori_bound(double L_hat, double last_step)
{
    if (!(L_hat >= 0.0) || !(last_step >= 0.0))
        throw std::domain_error("aposteriori_bound: needs L_hat >= 0 and last_step >= 0");
    if (L_hat >= 1.0)
        return std::numeric_limits<double>::infinity();
    return last_step / (1.0 - L_hat);
}

// L^k dist0, valid for a certified contraction constant L < 1 and
// dist0 = rho_alpha(x*, x_0).
inline double apriori_bound(double L, double dist0, int k, Order /*order of dist0*/)
{
    if (!(L >= 0.0 && L < 1.0))
        throw bound_unavailable_error("apriori_bound: requires 0 <= L < 1");
    if (dist0 < 0.0 || k < 0)
        throw std::domain_error("apriori_bound: needs dist0 >= 0 and k >= 0");
    return std::pow(L, k) * dist0;
}

namespace detail {

// Tail estimate used by the solvers. A zero step inside the window means the
// iteration has already landed: L_hat = 0, uniform.
inline ContractionEstimate tail_contraction(const IterationTrace& tr, int window, bool converged)
{
    const auto& st = tr.fractal_steps;
    const int usable = std::min<int>(window, static_cast<int>(st.size()) - 1);
    if (usable < 1)
        return {0.0, 0, converged};
    const std::size_t first = st.size() - static_cast<std::size_t>(usable) - 1;
    for (std::size_t j = first; j < st.size(); ++j)
        if (st[j] == 0.0)
            return {0.0, usable, true};
    double L = 0.0;
    for (std::size_t j = first; j + 1 < st.size(); ++j)
        L = std::max(L, st[j + 1] / st[j]);
    return {L, usable, L < 1.0};
}

// Shared iteration loop. Stops on: fractal step <= tol (converged), k =
// max_iter (max_iter_exceeded), a non-finite next iterate (diverged; the
// non-finite point is not recorded, root stays the last finite iterate), or
// step ratios >= 1 for 3 * contraction_window consecutive steps
// (non_contractive).
template <class NextFn>
ConvergenceReport iterate(NextFn&& next, double x0, const IterationSettings& s)
{
    validate(s);
    ConvergenceReport rep;
    IterationTrace& tr = rep.trace;
    tr.iterates.push_back(x0);

    const double alpha = s.order.alpha();
    double x = x0;
    SolveStatus status = SolveStatus::max_iter_exceeded;
    int expanding_run = 0;

    for (int k = 0; k < s.max_iter; ++k) {
        const double xn = next(x);
        if (!std::isfinite(xn)) {
            status = SolveStatus::diverged;
            break;
        }
        const double step = std::pow(std::fabs(xn - x), alpha);
        tr.iterates.push_back(xn);
        tr.fractal_steps.push_back(step);
        if (tr.fractal_steps.size() >= 2) {
            // the previous step exceeded tol > 0, so the ratio is finite
            const std::size_t m = tr.fractal_steps.size();
            tr.ratios.push_back(tr.fractal_steps[m - 1] / tr.fractal_steps[m - 2]);
        }
        x = xn;
        if (step <= s.tol) {
            status = SolveStatus::converged;
            break;
        }
        if (!tr.ratios.empty() && tr.ratios.back() >= 1.0) {
            if (++expanding_run >= 3 * s.contraction_window) {
                status = SolveStatus::non_contractive;
                break;
            }
        } else {
            expanding_run = 0;
        }
    }

    rep.status = status;
    rep.root = x;
    rep.contraction = tail_contraction(tr, s.contraction_window, status == SolveStatus::converged);
    const double last_step = tr.fractal_steps.empty() ? 0.0 : tr.fractal_steps.back();
    rep.a_posteriori = aposteriori_bound(rep.contraction.L_hat, last_step);
    return rep;
}

}  // namespace detail

// Standalone tail-ratio estimate over a finished trace.
inline ContractionEstimate estimate_contraction(const IterationTrace& trace, int window)
{
    if (window < 1)
        throw configuration_error("estimate_contraction: window must be >= 1");
    if (static_cast<int>(trace.fractal_steps.size()) < window + 1)
        throw insufficient_data_error("estimate_contraction: trace shorter than window + 1 steps");
    return detail::tail_contraction(trace, window, false);
}

// x_{k+1} = phi(x_k) in real base coordinates; the fractal structure enters
// through the stopping metric, the step ratios and the error bounds. A
// non-finite phi output is reported as `diverged`, not thrown.
inline ConvergenceReport fixed_point_solve(const RealFunction& phi, double x0,
                                           const IterationSettings& s)
{
    ConvergenceReport rep = detail::iterate([&phi](double x) { return phi(x); }, x0, s);
    const double image = phi(rep.root);
    rep.residual = std::isfinite(image)
                       ? std::pow(std::fabs(image - rep.root), s.order.alpha())
                       : std::numeric_limits<double>::infinity();
    return rep;
}

enum class NewtonVariant { base_coordinate, fractal_coordinate };

// Newton-type update from the first-order truncation of the generalized
// Taylor expansion: solve 0 = f(x_k) + f^(a)(x_k)/Gamma(1+a) (x - x_k)^a
// for x. With s_k = -Gamma(1+a) f(x_k) / f^(a)(x_k):
//
//   base_coordinate     x_{k+1} = x_k + spow(s_k, 1/a)
//   fractal_coordinate  u_{k+1} = spow(x_k, a) + s_k, x_{k+1} = spow(u_{k+1}, 1/a)
//
// Both reduce to classical Newton at alpha = 1. The alpha-derivative comes
// from an explicit callable when attached, else from the series form.
inline ConvergenceReport newton_solve(const RealFunction& f, double x0,
                                      const IterationSettings& s, NewtonVariant variant)
{
    std::function<double(double)> deriv;
    if (f.alpha_derivative)
        deriv = f.alpha_derivative;
    else if (f.series)
        deriv = [d = lfd(*f.series)](double x) { return eval(d, x); };
    else
        throw configuration_error(
            "newton_solve: needs a series form or an alpha-derivative callable");

    const double alpha = s.order.alpha();
    const double g = gamma_fn(1.0 + alpha);
    const double inv_alpha = 1.0 / alpha;

    auto next = [&](double x) {
        const double fx = f(x);
        if (!std::isfinite(fx))
            return fx;  // reported as diverged
        const double dfx = deriv(x);
        if (!std::isfinite(dfx))
            return dfx;
        if (dfx == 0.0)
            throw derivative_vanishes_error(x);
        const double step = -g * fx / dfx;
        if (variant == NewtonVariant::base_coordinate)
            return x + spow(step, inv_alpha);
        return spow(spow(x, alpha) + step, inv_alpha);
    };

    ConvergenceReport rep = detail::iterate(next, x0, s);
    rep.residual = std::fabs(f(rep.root));
    return rep;
}

struct CertifiedContraction {
    double L = 0.0;
    bool certified = false;
};

// Grid certificate for |phi^(a)(x)| / Gamma(1+a) <= L on [a, b], using the
// exact series derivative. Sampling, not a proof: L is the max over `grid`
// uniform points.
inline CertifiedContraction contraction_certificate(const PowerSeries& phi, double a, double b,
                                                    int grid)
{
    if (!(a < b))
        throw std::invalid_argument("contraction_certificate: requires a < b");
    if (grid < 2)
        throw configuration_error("contraction_certificate: grid must be >= 2");
    const PowerSeries d = lfd(phi);
    const double g = gamma_fn(1.0 + phi.order().alpha());
    double L = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / (grid - 1);
        L = std::max(L, std::fabs(eval(d, x)) / g);
    }
    return {L, L < 1.0};
}

}  // namespace lfc
