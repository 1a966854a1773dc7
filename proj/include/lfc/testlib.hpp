#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lfc/errors.hpp"
#include "lfc/fractal_number.hpp"
#include "lfc/numerics.hpp"
#include "lfc/power_series.hpp"

namespace lfc {

// A catalogued target with whatever closed-form ground truth it has. An empty
// valid_alpha set means the metadata holds at any order; holder_x0 is the
// point at which the exponent metadata is measured.
struct TestFunction {
    std::string name;
    RealFunction fn;
    std::optional<double> known_root;
    std::optional<double> known_fixed_point;
    std::optional<double> known_holder_exponent;
    double holder_x0 = 0.0;
    std::vector<double> valid_alpha;
};

// sum_{k=0..terms} a^k cos(b^k pi x). Holder exponent -ln a / ln b wherever
// 0 < a < 1 < b and ab > 1. Fixed ascending-k summation: bit-for-bit
// reproducible.
inline double weierstrass_eval(double a, double b, int terms, double x)
{
    if (!(a > 0.0 && a < 1.0) || !(b > 1.0) || !(a * b > 1.0) || terms < 0)
        throw std::domain_error("weierstrass_eval: needs 0 < a < 1, b > 1, ab > 1, terms >= 0");
    double sum = 0.0, ak = 1.0, bk = 1.0;
    for (int k = 0; k <= terms; ++k) {
        sum += ak * std::cos(bk * std::numbers::pi * x);
        ak *= a;
        bk *= b;
    }
    return sum;
}

// Bisection to interval width <= tol. The independent oracle behind every
// catalogued root and the solver acceptance values.
inline double brute_force_root(const RealFunction& f, double a, double b, double tol)
{
    if (!(tol > 0.0))
        throw std::domain_error("brute_force_root: tol must be positive");
    double fa = f(a), fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if (!(fa * fb < 0.0))
        throw bracketing_error("brute_force_root: no sign change on [a, b]");
    while (b - a > tol) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b)
            break;  // interval at the rounding floor
        const double fm = f(m);
        if (fm == 0.0)
            return m;
        if (fa * fm < 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

namespace detail {
inline std::string num_label(double v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}
}  // namespace detail

// spow(x, k a) / Gamma(1 + k a): the k-th basis monomial, built as its own
// series so the callable and the series form agree exactly.
inline TestFunction monomial(int k, Order order)
{
    if (k < 0)
        throw std::domain_error("monomial: k must be >= 0");
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
    c[static_cast<std::size_t>(k)] = 1.0;
    TestFunction t;
    t.name = "monomial:" + std::to_string(k);
    t.fn = make_series_function(PowerSeries(order, 0.0, std::move(c)));
    if (k >= 1) {
        t.known_root = 0.0;
        t.known_holder_exponent = k * order.alpha();
        t.holder_x0 = 0.0;
    }
    return t;
}

// Raw signed power spow(x, p), without the basis normalization 1/Gamma(1+p).
// Picks up a series form when p is a whole number of alpha-steps.
inline TestFunction power_fn(double p, Order order)
{
    if (!(p > 0.0))
        throw std::domain_error("power_fn: exponent must be positive");
    TestFunction t;
    t.name = "power:" + detail::num_label(p);
    t.fn = make_function([p](double x) { return spow(x, p); });
    const double alpha = order.alpha();
    for (int k = 1; k <= 64; ++k)
        if (k * alpha == p) {
            std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
            c[static_cast<std::size_t>(k)] = gamma_fn(1.0 + p);
            t.fn.series = PowerSeries(order, 0.0, std::move(c));
            break;
        }
    t.known_root = 0.0;
    t.known_holder_exponent = p;
    t.holder_x0 = 0.0;
    return t;
}

inline TestFunction mittag_leffler_fn(Order order, int truncation = 60)
{
    TestFunction t;
    t.name = "mittag-leffler";
    t.fn = make_series_function(mittag_leffler(order, truncation));
    t.known_holder_exponent = order.alpha();
    t.holder_x0 = 0.0;
    return t;
}

// x -> c + b spow(x, alpha). The fixed point has closed forms at alpha = 1/2
// (quadratic in sqrt x) and alpha = 1 (affine), recorded when available.
// The callable is the direct formula; the attached series (c, b Gamma(1+a))
// carries the same map for the derivative-based operators.
inline TestFunction affine_fractal(double c, double b, Order order)
{
    const double alpha = order.alpha();
    TestFunction t;
    t.name = "affine:" + detail::num_label(c) + ":" + detail::num_label(b);
    t.fn = make_function([c, b, alpha](double x) { return c + b * spow(x, alpha); });
    t.fn.series = PowerSeries(order, 0.0, {c, b * gamma_fn(1.0 + alpha)});
    t.valid_alpha = {0.5, 1.0};
    if (alpha == 0.5) {
        const double disc = b * b + 4.0 * c;
        if (disc >= 0.0) {
            const double s = 0.5 * (b + std::sqrt(disc));
            t.known_fixed_point = s * s;
        }
    } else if (alpha == 1.0 && b != 1.0) {
        t.known_fixed_point = c / (1.0 - b);
    }
    if (b != 0.0) {
        t.known_holder_exponent = alpha;
        t.holder_x0 = 0.0;
    }
    return t;
}

inline TestFunction weierstrass_fn(double a, double b, int terms = 30)
{
    if (!(a > 0.0 && a < 1.0) || !(b > 1.0) || !(a * b > 1.0) || terms < 0)
        throw std::domain_error("weierstrass_fn: needs 0 < a < 1, b > 1, ab > 1, terms >= 0");
    TestFunction t;
    t.name = "weierstrass:" + detail::num_label(a) + ":" + detail::num_label(b);
    t.fn = make_function([a, b, terms](double x) { return weierstrass_eval(a, b, terms, x); });
    t.known_holder_exponent = -std::log(a) / std::log(b);
    t.holder_x0 = 0.37;  // a generic probe point away from the cosine maxima
    return t;
}

// Every metadatum is re-verified against the module's own oracles, so
// downstream tests never rest on a stale hand-typed constant.
inline void verify_catalog(const std::vector<TestFunction>& entries, Order order)
{
    const double alpha = order.alpha();
    for (const auto& t : entries) {
        if (t.known_root && !(std::fabs(t.fn(*t.known_root)) < 1e-10))
            throw std::logic_error("catalog: root metadata failed self-check for " + t.name);
        if (t.known_fixed_point
            && !(std::fabs(t.fn(*t.known_fixed_point) - *t.known_fixed_point) < 1e-10))
            throw std::logic_error("catalog: fixed-point metadata failed self-check for " + t.name);
        const bool applies =
            t.valid_alpha.empty()
            || std::find(t.valid_alpha.begin(), t.valid_alpha.end(), alpha) != t.valid_alpha.end();
        if (t.known_holder_exponent && applies) {
            const HolderFit fit = holder_fit(t.fn, t.holder_x0);
            if (!(std::fabs(fit.exponent - *t.known_holder_exponent) <= 0.1))
                throw std::logic_error("catalog: Holder exponent metadata failed self-check for "
                                       + t.name);
        }
    }
}

// The ground-truth battery: basis monomials, the Mittag-Leffler series, an
// affine fractal map with a known fixed point, a Weierstrass target, and the
// classical set {exp, cos, x^2 - 2} whose metadata is tagged alpha = 1.
inline std::vector<TestFunction> catalog(Order order)
{
    const double alpha = order.alpha();
    std::vector<TestFunction> out;

    for (int k = 1; k <= 8; ++k)
        out.push_back(monomial(k, order));
    out.push_back(mittag_leffler_fn(order));
    out.push_back(affine_fractal(1.0, 0.5, order));
    out.push_back(weierstrass_fn(0.5, 3.0, 30));

    TestFunction ident;
    ident.name = "identity";
    ident.fn = make_function([](double x) { return x; });
    // x = x^{m a} / Gamma(1 + m a) whenever m a == 1 lands exactly
    for (int m = 1; m <= 64; ++m)
        if (m * alpha == 1.0) {
            std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
            c[static_cast<std::size_t>(m)] = 1.0;
            ident.fn.series = PowerSeries(order, 0.0, std::move(c));
            break;
        }
    ident.known_root = 0.0;
    ident.known_holder_exponent = 1.0;
    ident.holder_x0 = 0.0;
    out.push_back(std::move(ident));

    TestFunction ex;
    ex.name = "exp";
    ex.fn = make_function([](double x) { return std::exp(x); });
    ex.valid_alpha = {1.0};
    ex.known_holder_exponent = 1.0;
    ex.holder_x0 = 0.0;
    if (alpha == 1.0) {
        ex.fn.series = mittag_leffler(order, 30);  // classical exp coefficients
        ex.fn.alpha_derivative = [](double x) { return std::exp(x); };
    }
    out.push_back(std::move(ex));

    TestFunction co;
    co.name = "cos";
    co.fn = make_function([](double x) { return std::cos(x); });
    co.valid_alpha = {1.0};
    co.known_fixed_point = 0.7390851332151607;  // cos p = p
    co.known_holder_exponent = 1.0;
    co.holder_x0 = 0.5;  // away from x = 0, where cos is stationary
    if (alpha == 1.0) {
        std::vector<double> c(31, 0.0);
        for (std::size_t k = 0; k < c.size(); k += 2)
            c[k] = (k % 4 == 0) ? 1.0 : -1.0;
        co.fn.series = PowerSeries(order, 0.0, std::move(c));
        co.fn.alpha_derivative = [](double x) { return -std::sin(x); };
    }
    out.push_back(std::move(co));

    TestFunction quad;
    quad.name = "quadratic";
    quad.fn = make_function([](double x) { return x * x - 2.0; });
    quad.valid_alpha = {1.0};
    quad.known_root = std::sqrt(2.0);
    quad.known_holder_exponent = 1.0;
    quad.holder_x0 = 1.0;
    if (alpha == 1.0) {
        quad.fn.series = PowerSeries(order, 0.0, {-2.0, 0.0, 2.0});
        quad.fn.alpha_derivative = [](double x) { return 2.0 * x; };
    }
    out.push_back(std::move(quad));

    verify_catalog(out, order);
    return out;
}

}  // namespace lfc
