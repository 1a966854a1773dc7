#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lfc/errors.hpp"

namespace lfc {

// Signed power sign(x)|x|^p: the total extension of x^p to negative bases.
// Odd in x, monotone increasing in x for p > 0, and spow(x, 1) == x.
inline double spow(double x, double p)
{
    if (x == 0.0)
        return 0.0;
    return std::copysign(std::pow(std::fabs(x), p), x);
}

// Fractal order alpha in (0, 1]. Orders are compared exactly: alpha is a
// configuration parameter, not a measured quantity.
class Order {
public:
    explicit Order(double alpha) : alpha_(alpha)
    {
        if (!(alpha > 0.0 && alpha <= 1.0))
            throw std::domain_error("Order: alpha must lie in (0, 1]");
    }
    double alpha() const noexcept { return alpha_; }
    friend bool operator==(const Order&, const Order&) noexcept = default;

private:
    double alpha_;
};

inline void check_same_order(const Order& a, const Order& b, const char* who)
{
    if (!(a == b))
        throw mismatch_error(std::string(who) + ": operands of different fractal order");
}

// An element x^alpha of the fractal real line, stored by its base x.
// (x +- y)^a = x^a +- y^a and (x y)^a = x^a y^a are identities in base
// coordinates, so arithmetic runs on bases and the power only enters through
// value() and the metrics.
class FractalNumber {
public:
    FractalNumber(double base, Order order) : base_(base), order_(order) {}
    double base() const noexcept { return base_; }
    const Order& order() const noexcept { return order_; }

    // Real magnitude of x^alpha under the signed-power convention.
    double value() const { return spow(base_, order_.alpha()); }

private:
    double base_;
    Order order_;
};

inline FractalNumber operator+(const FractalNumber& a, const FractalNumber& b)
{
    check_same_order(a.order(), b.order(), "FractalNumber operator+");
    return {a.base() + b.base(), a.order()};
}

inline FractalNumber operator-(const FractalNumber& a, const FractalNumber& b)
{
    check_same_order(a.order(), b.order(), "FractalNumber operator-");
    return {a.base() - b.base(), a.order()};
}

inline FractalNumber operator*(const FractalNumber& a, const FractalNumber& b)
{
    check_same_order(a.order(), b.order(), "FractalNumber operator*");
    return {a.base() * b.base(), a.order()};
}

// Snowflake metric |x - y|^alpha, the one-dimensional rho_alpha.
inline double metric(const FractalNumber& a, const FractalNumber& b)
{
    check_same_order(a.order(), b.order(), "metric");
    return std::pow(std::fabs(a.base() - b.base()), a.order().alpha());
}

// A point of the n-dimensional fractal space, stored by base coordinates.
class FractalPoint {
public:
    FractalPoint(std::vector<double> bases, Order order)
        : bases_(std::move(bases)), order_(order)
    {
        if (bases_.empty())
            throw std::invalid_argument("FractalPoint: needs at least one coordinate");
    }
    const std::vector<double>& bases() const noexcept { return bases_; }
    const Order& order() const noexcept { return order_; }
    std::size_t dim() const noexcept { return bases_.size(); }

private:
    std::vector<double> bases_;
    Order order_;
};

// rho_{alpha,2}(x, y) = (sum_i |x_i - y_i|^{2 alpha})^{1/2}.
// Reduces to the Euclidean distance at alpha = 1. The triangle inequality
// holds because |.|^alpha is subadditive per coordinate and the l2
// composition preserves it.
inline double metric(const FractalPoint& p, const FractalPoint& q)
{
    check_same_order(p.order(), q.order(), "metric");
    if (p.dim() != q.dim())
        throw mismatch_error("metric: points of different dimension");
    const double two_alpha = 2.0 * p.order().alpha();
    double sum = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i)
        sum += std::pow(std::fabs(p.bases()[i] - q.bases()[i]), two_alpha);
    return std::sqrt(sum);
}

}  // namespace lfc
