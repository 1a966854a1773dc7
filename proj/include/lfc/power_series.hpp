#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "lfc/errors.hpp"
#include "lfc/fractal_number.hpp"
#include "lfc/gamma.hpp"

namespace lfc {

// Truncated generalized Taylor series
//
//     f(x) = sum_{k=0..K} c_k spow(x - x0, k a) / Gamma(1 + k a)
//
// with the raw derivative values c_k = f^{(k a)}(x0) stored as coefficients.
// Keeping the Gamma division out of the stored coefficients makes the
// derivative and the integral pure index shifts.
class PowerSeries {
public:
    PowerSeries(Order order, double center, std::vector<double> coeffs)
        : order_(order), center_(center), coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw std::invalid_argument("PowerSeries: needs at least the constant coefficient");
        if (!std::isfinite(center_))
            throw std::invalid_argument("PowerSeries: center must be finite");
        for (double c : coeffs_)
            if (!std::isfinite(c))
                throw std::invalid_argument("PowerSeries: coefficients must be finite");
    }

    const Order& order() const noexcept { return order_; }
    double center() const noexcept { return center_; }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    // K: index of the last retained term.
    int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

private:
    Order order_;
    double center_;
    std::vector<double> coeffs_;
};

// Term k of an evaluation overflowed double range.
class term_overflow_error : public std::range_error {
public:
    explicit term_overflow_error(int term)
        : std::range_error("PowerSeries eval: term " + std::to_string(term)
                           + " overflows double range"),
          term_(term) {}
    int term() const noexcept { return term_; }

private:
    int term_;
};

// Evaluation diagnostics. Terms whose Gamma(1 + k a) exceeds double range
// contribute an exact zero and are recorded here.
struct EvalInfo {
    std::vector<int> underflowed_terms;
};

inline double eval(const PowerSeries& s, double x, EvalInfo* info = nullptr)
{
    const double a = s.order().alpha();
    const auto& c = s.coeffs();
    const int K = s.truncation();
    const double dx = x - s.center();
    if (dx == 0.0)
        return c[0];  // every k >= 1 basis term vanishes at the center

    static const double log_max = std::log(std::numeric_limits<double>::max());
    const double log_dx = std::log(std::fabs(dx));

    std::vector<double> terms(static_cast<std::size_t>(K) + 1);
    terms[0] = c[0];
    for (int k = 1; k <= K; ++k) {
        if (c[k] == 0.0) {
            terms[k] = 0.0;
            continue;
        }
        const double lg = log_gamma(1.0 + k * a);
        if (lg > log_max) {
            // 1/Gamma underflows: exact zero contribution
            terms[k] = 0.0;
            if (info)
                info->underflowed_terms.push_back(k);
            continue;
        }
        const double t = c[k] * std::copysign(std::exp(k * a * log_dx - lg), dx);
        if (!std::isfinite(t))
            throw term_overflow_error(k);
        terms[k] = t;
    }

    // Sum in (approximately) ascending term magnitude to limit cancellation:
    // inside the unit interval around the center the terms decay with k, so
    // add tail-first there and head-first otherwise.
    double sum = 0.0;
    if (std::fabs(dx) < 1.0)
        for (int k = K; k >= 0; --k)
            sum += terms[k];
    else
        for (int k = 0; k <= K; ++k)
            sum += terms[k];
    return sum;
}

// D^alpha shifts coefficients down one slot: the basis satisfies
// D^alpha[dx^{k a}/Gamma(1+k a)] = dx^{(k-1) a}/Gamma(1+(k-1) a).
// The derivative of a constant series is the zero series of truncation 0.
inline PowerSeries lfd(const PowerSeries& s)
{
    const auto& c = s.coeffs();
    if (c.size() == 1)
        return PowerSeries(s.order(), s.center(), {0.0});
    return PowerSeries(s.order(), s.center(), std::vector<double>(c.begin() + 1, c.end()));
}

// Antiderivative with lower limit at the center, so the inserted constant
// term is 0 and lfd(integral(s)) == s coefficient for coefficient.
inline PowerSeries integral(const PowerSeries& s)
{
    std::vector<double> c;
    c.reserve(s.coeffs().size() + 1);
    c.push_back(0.0);
    c.insert(c.end(), s.coeffs().begin(), s.coeffs().end());
    return PowerSeries(s.order(), s.center(), std::move(c));
}

inline void check_compatible(const PowerSeries& s, const PowerSeries& t, const char* who)
{
    check_same_order(s.order(), t.order(), who);
    if (s.center() != t.center())
        throw mismatch_error(std::string(who) + ": series with different centers");
}

// Coefficient-wise sum over the common reliable prefix (min truncation);
// coefficients beyond either operand's data are never fabricated.
inline PowerSeries add(const PowerSeries& s, const PowerSeries& t)
{
    check_compatible(s, t, "PowerSeries add");
    const std::size_t n = std::min(s.coeffs().size(), t.coeffs().size());
    std::vector<double> c(n);
    for (std::size_t k = 0; k < n; ++k)
        c[k] = s.coeffs()[k] + t.coeffs()[k];
    return PowerSeries(s.order(), s.center(), std::move(c));
}

inline PowerSeries scale(const PowerSeries& s, double factor)
{
    std::vector<double> c(s.coeffs());
    for (double& v : c)
        v *= factor;
    return PowerSeries(s.order(), s.center(), std::move(c));
}

// Cauchy product in the monomial basis dx^{k a}: with normalized coefficients
// a_k = c_k / Gamma(1 + k a) the product has p_m = sum_{i+j=m} a_i b_j, and
// the returned raw coefficients are p_m Gamma(1 + m a). Truncates at
// K_s + K_t, the full reliable convolution.
inline PowerSeries mul(const PowerSeries& s, const PowerSeries& t)
{
    check_compatible(s, t, "PowerSeries mul");
    const double a = s.order().alpha();
    auto normalized = [a](const PowerSeries& u) {
        std::vector<double> n(u.coeffs().size());
        for (std::size_t k = 0; k < n.size(); ++k)
            n[k] = u.coeffs()[k] / gamma_fn(1.0 + static_cast<double>(k) * a);
        return n;
    };
    const std::vector<double> as = normalized(s);
    const std::vector<double> bs = normalized(t);
    std::vector<double> p(as.size() + bs.size() - 1, 0.0);
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = 0; j < bs.size(); ++j)
            p[i + j] += as[i] * bs[j];
    std::vector<double> c(p.size());
    for (std::size_t m = 0; m < p.size(); ++m)
        c[m] = p[m] == 0.0 ? 0.0 : p[m] * gamma_fn(1.0 + static_cast<double>(m) * a);
    return PowerSeries(s.order(), s.center(), std::move(c));
}

inline PowerSeries operator+(const PowerSeries& s, const PowerSeries& t) { return add(s, t); }
inline PowerSeries operator*(const PowerSeries& s, double factor) { return scale(s, factor); }
inline PowerSeries operator*(double factor, const PowerSeries& s) { return scale(s, factor); }
inline PowerSeries operator*(const PowerSeries& s, const PowerSeries& t) { return mul(s, t); }

// Remainder data for an order-n truncation: with M bounding |f^{((n+1) a)}|
// on the interval and order_index = n + 1,
//
//     |R_n(x)| <= M |x - x0|^{(n+1) a} / Gamma(1 + (n+1) a).
struct RemainderBound {
    Order order;
    double derivative_bound = 0.0;  // M
    int order_index = 1;            // n + 1
    double radius = 0.0;            // |x - x0|
};

inline double taylor_remainder(const RemainderBound& b)
{
    if (b.derivative_bound < 0.0 || b.radius < 0.0)
        throw std::domain_error("taylor_remainder: needs derivative_bound >= 0 and radius >= 0");
    if (b.order_index < 1)
        throw std::domain_error("taylor_remainder: order_index is n + 1 >= 1");
    if (b.derivative_bound == 0.0 || b.radius == 0.0)
        return 0.0;
    const double p = b.order_index * b.order.alpha();
    return b.derivative_bound * std::exp(p * std::log(b.radius) - log_gamma(1.0 + p));
}

// All-ones coefficient series sum_k x^{k a} / Gamma(1 + k a): the alpha
// analogue of exp, and a fixed point of lfd up to truncation.
inline PowerSeries mittag_leffler(Order order, int truncation)
{
    if (truncation < 0)
        throw std::invalid_argument("mittag_leffler: truncation must be >= 0");
    return PowerSeries(order, 0.0,
                       std::vector<double>(static_cast<std::size_t>(truncation) + 1, 1.0));
}

}  // namespace lfc
