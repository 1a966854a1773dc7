#pragma once

#include <stdexcept>
#include <string>

namespace lfc {

// Operands live in different fractal spaces (unequal order or dimension).
struct mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Invalid knobs: bad schedules, bad iteration settings, missing derivative.
struct configuration_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A black-box function produced a non-finite sample. `where` is the argument
// or step size at which it happened.
class evaluation_error : public std::runtime_error {
public:
    evaluation_error(const std::string& msg, double where)
        : std::runtime_error(msg + " (at " + std::to_string(where) + ")"), where_(where) {}
    double where() const noexcept { return where_; }

private:
    double where_;
};

// Newton update hit f^(alpha)(x_k) == 0.
class derivative_vanishes_error : public std::runtime_error {
public:
    explicit derivative_vanishes_error(double iterate)
        : std::runtime_error("newton_solve: alpha-derivative vanished at iterate "
                             + std::to_string(iterate)),
          iterate_(iterate) {}
    double iterate() const noexcept { return iterate_; }

private:
    double iterate_;
};

struct insufficient_data_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An error bound was requested with L >= 1: no contraction, no bound.
struct bound_unavailable_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Log-log fit impossible: the increments |f(x0+h) - f(x0)| give fewer than
// three usable samples.
struct degenerate_fit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bisection needs a sign change.
struct bracketing_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Quadrature backend cannot serve the given function (series backend on a
// function without an attached series form).
struct unsupported_backend_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace lfc
