// lfc: local fractional calculus toolkit, command-line frontend.
//
// Subcommands: diff, integrate, solve, taylor, holder, check-metric, catalog.
// Output formats: table (human), json (fixed schemas), csv (plot-ready).
// Exit codes: 0 success/converged, 1 method ran but the property failed,
// 2 usage or input error.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <locale>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfc/lfc.hpp"

namespace {

using lfc::json;
using lfc::Order;
using lfc::PowerSeries;
using lfc::RealFunction;
using lfc::TestFunction;

enum class Format { table, json, csv };

struct OutputOptions {
    std::string format = "table";
    std::string path;  // empty: stdout

    Format fmt() const
    {
        if (format == "table")
            return Format::table;
        if (format == "json")
            return Format::json;
        if (format == "csv")
            return Format::csv;
        throw std::invalid_argument("unknown format: " + format);
    }
};

int table_digits()
{
    if (const char* env = std::getenv("FRACTAL_CALC_PRECISION")) {
        char* end = nullptr;
        const long d = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && d >= 1 && d <= 17)
            return static_cast<int>(d);
    }
    return 8;
}

std::string fmt_num(double v, int digits)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(digits) << v;
    return os.str();
}

// lossless, for csv cells
std::string fmt_csv(double v)
{
    return fmt_num(v, std::numeric_limits<double>::max_digits10);
}

void emit(const OutputOptions& out, const std::string& text)
{
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f)
        throw std::invalid_argument("cannot open output file: " + out.path);
    f << text;
}

// ---------------------------------------------------------------------------
// function-spec mini language:
//   series:[c0,c1,...]@center   inline series literal
//   const:v                     constant function
//   affine:c:b                  x -> c + b spow(x, alpha)
//   monomial:k                  spow(x, k alpha) / Gamma(1 + k alpha)
//   weierstrass:a:b[:K]
//   mittag-leffler[:K]
//   identity | exp | cos | quadratic   (catalog entries)
// ---------------------------------------------------------------------------

double parse_number(const std::string& s)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (used != s.size())
        throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

TestFunction parse_series_literal(const std::string& spec, Order order)
{
    // series:[c0,c1,...]@center
    const std::string body = spec.substr(7);
    const std::size_t at = body.rfind('@');
    if (body.size() < 3 || body.front() != '[' || at == std::string::npos
        || body[at - 1] != ']')
        throw std::invalid_argument("malformed series literal: " + spec);
    const std::string inner = body.substr(1, at - 2);
    const double center = parse_number(body.substr(at + 1));
    std::vector<double> coeffs;
    for (const std::string& tok : split(inner, ','))
        coeffs.push_back(parse_number(tok));
    TestFunction t;
    t.name = spec;
    t.fn = lfc::make_series_function(PowerSeries(order, center, std::move(coeffs)));
    return t;
}

TestFunction resolve_function(const std::string& spec, Order order)
{
    if (spec.rfind("series:", 0) == 0)
        return parse_series_literal(spec, order);
    if (spec.rfind("const:", 0) == 0) {
        const double v = parse_number(spec.substr(6));
        TestFunction t;
        t.name = spec;
        t.fn = lfc::make_function([v](double) { return v; });
        t.fn.series = PowerSeries(order, 0.0, {v});
        return t;
    }
    if (spec.rfind("affine:", 0) == 0) {
        const auto parts = split(spec.substr(7), ':');
        if (parts.size() != 2)
            throw std::invalid_argument("affine spec needs affine:c:b");
        return lfc::affine_fractal(parse_number(parts[0]), parse_number(parts[1]), order);
    }
    if (spec.rfind("monomial:", 0) == 0) {
        const double k = parse_number(spec.substr(9));
        if (k != std::floor(k) || k < 0.0)
            throw std::invalid_argument("monomial spec needs a whole k >= 0");
        return lfc::monomial(static_cast<int>(k), order);
    }
    if (spec.rfind("power:", 0) == 0)
        return lfc::power_fn(parse_number(spec.substr(6)), order);
    if (spec.rfind("weierstrass:", 0) == 0) {
        const auto parts = split(spec.substr(12), ':');
        if (parts.size() != 2 && parts.size() != 3)
            throw std::invalid_argument("weierstrass spec needs weierstrass:a:b[:K]");
        const int K = parts.size() == 3 ? static_cast<int>(parse_number(parts[2])) : 30;
        return lfc::weierstrass_fn(parse_number(parts[0]), parse_number(parts[1]), K);
    }
    if (spec == "mittag-leffler" || spec.rfind("mittag-leffler:", 0) == 0) {
        int K = 60;
        if (spec.size() > 14 && spec[14] == ':')
            K = static_cast<int>(parse_number(spec.substr(15)));
        return lfc::mittag_leffler_fn(order, K);
    }
    for (auto& t : lfc::catalog(order))
        if (t.name == spec)
            return t;
    throw std::invalid_argument("unknown function: " + spec);
}

lfc::StepSchedule parse_schedule(const std::string& s)
{
    const auto parts = split(s, ':');
    if (parts.size() != 3)
        throw std::invalid_argument("schedule needs h0:ratio:count");
    lfc::StepSchedule sched{parse_number(parts[0]), parse_number(parts[1]),
                            static_cast<int>(parse_number(parts[2]))};
    sched.validate();
    return sched;
}

// ---------------------------------------------------------------------------
// renderers
// ---------------------------------------------------------------------------

std::string render_json(const json& j)
{
    return j.dump(2) + "\n";
}

std::string render_holder_table(const std::string& name, double x0, const lfc::HolderFit& fit,
                                int digits)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "function: " << name << "\n"
       << "x0: " << fmt_num(x0, digits) << "\n"
       << "exponent: " << fmt_num(fit.exponent, digits) << "\n"
       << "log_coefficient: " << fmt_num(fit.log_coefficient, digits) << "\n"
       << "r_squared: " << fmt_num(fit.r_squared, digits) << "\n"
       << "samples: " << fit.samples << "\n";
    return os.str();
}

std::string render_report_table(const lfc::ConvergenceReport& rep, int digits)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "status: " << lfc::to_string(rep.status) << "\n"
       << "root: " << fmt_num(rep.root, digits) << "\n"
       << "residual: " << fmt_num(rep.residual, digits) << "\n"
       << "iterations: " << rep.iterations() << "\n"
       << "L_hat: " << fmt_num(rep.contraction.L_hat, digits) << "\n"
       << "a_posteriori: "
       << (std::isfinite(rep.a_posteriori) ? fmt_num(rep.a_posteriori, digits) : "unavailable")
       << "\n"
       << "trace:\n";
    const int w = digits + 9;
    os << std::left << std::setw(6) << "k" << std::setw(w) << "x" << std::setw(w) << "step"
       << "ratio\n";
    for (std::size_t k = 0; k < rep.trace.iterates.size(); ++k) {
        os << std::left << std::setw(6) << k << std::setw(w)
           << fmt_num(rep.trace.iterates[k], digits);
        if (k >= 1)
            os << std::setw(w) << fmt_num(rep.trace.fractal_steps[k - 1], digits);
        else
            os << std::setw(w) << "-";
        if (k >= 2)
            os << fmt_num(rep.trace.ratios[k - 2], digits);
        else
            os << "-";
        os << "\n";
    }
    return os.str();
}

std::string render_report_csv(const lfc::ConvergenceReport& rep)
{
    std::ostringstream os;
    os << "k,x,step,ratio\n";
    for (std::size_t k = 0; k < rep.trace.iterates.size(); ++k) {
        os << k << ',' << fmt_csv(rep.trace.iterates[k]) << ',';
        if (k >= 1)
            os << fmt_csv(rep.trace.fractal_steps[k - 1]);
        os << ',';
        if (k >= 2)
            os << fmt_csv(rep.trace.ratios[k - 2]);
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// diff
// ---------------------------------------------------------------------------

int cmd_diff(const std::string& spec, double x0, double alpha, const std::string& schedule,
             const std::string& method, const OutputOptions& out)
{
    const Order order(alpha);
    const TestFunction fn = resolve_function(spec, order);
    const int digits = table_digits();

    if (method == "limit") {
        const lfc::StepSchedule sched = parse_schedule(schedule);
        const lfc::LfdEstimate est = lfc::lfd_limit_estimate(fn.fn, x0, order, sched);
        switch (out.fmt()) {
        case Format::table: {
            std::ostringstream os;
            os.imbue(std::locale::classic());
            os << "function: " << fn.name << "\nmethod: limit\nalpha: " << fmt_num(alpha, digits)
               << "\nx0: " << fmt_num(x0, digits)
               << "\nestimate: " << fmt_num(est.estimate, digits)
               << "\nconverged: " << (est.converged ? "true" : "false") << "\ntrail:\n";
            os << std::left << std::setw(6) << "k" << std::setw(digits + 9) << "h"
               << "quotient\n";
            double h = sched.h0;
            for (std::size_t i = 0; i < est.trail.size(); ++i, h *= sched.ratio)
                os << std::left << std::setw(6) << i << std::setw(digits + 9)
                   << fmt_num(h, digits) << fmt_num(est.trail[i], digits) << "\n";
            emit(out, os.str());
            break;
        }
        case Format::json: {
            json trail = json::array();
            double h = sched.h0;
            for (std::size_t i = 0; i < est.trail.size(); ++i, h *= sched.ratio)
                trail.push_back({{"k", i}, {"h", h}, {"quotient", est.trail[i]}});
            emit(out, render_json(json{{"command", "diff"},
                                       {"function", fn.name},
                                       {"method", "limit"},
                                       {"alpha", alpha},
                                       {"x0", x0},
                                       {"estimate", est.estimate},
                                       {"converged", est.converged},
                                       {"trail", trail}}));
            break;
        }
        case Format::csv: {
            std::ostringstream os;
            os << "k,h,quotient\n";
            double h = sched.h0;
            for (std::size_t i = 0; i < est.trail.size(); ++i, h *= sched.ratio)
                os << i << ',' << fmt_csv(h) << ',' << fmt_csv(est.trail[i]) << "\n";
            emit(out, os.str());
            break;
        }
        }
        return 0;  // a non-converged limit is information, not failure
    }

    if (method == "series") {
        if (!fn.fn.series)
            throw std::invalid_argument("method=series needs a function with a series form");
        const double value = lfc::eval(lfc::lfd(*fn.fn.series), x0);
        switch (out.fmt()) {
        case Format::table: {
            std::ostringstream os;
            os.imbue(std::locale::classic());
            os << "function: " << fn.name << "\nmethod: series\nalpha: "
               << fmt_num(alpha, digits) << "\nx0: " << fmt_num(x0, digits)
               << "\nderivative: " << fmt_num(value, digits) << "\n";
            emit(out, os.str());
            break;
        }
        case Format::json:
            emit(out, render_json(json{{"command", "diff"},
                                       {"function", fn.name},
                                       {"method", "series"},
                                       {"alpha", alpha},
                                       {"x0", x0},
                                       {"derivative", value}}));
            break;
        case Format::csv:
            emit(out, "x0,derivative\n" + fmt_csv(x0) + "," + fmt_csv(value) + "\n");
            break;
        }
        return 0;
    }

    if (method == "holder") {
        const lfc::StepSchedule sched = parse_schedule(schedule);
        const lfc::HolderFit fit = lfc::holder_fit(fn.fn, x0, sched);
        switch (out.fmt()) {
        case Format::table:
            emit(out, render_holder_table(fn.name, x0, fit, digits));
            break;
        case Format::json: {
            json j = lfc::holder_to_json(fit);
            j["command"] = "diff";
            j["method"] = "holder";
            j["function"] = fn.name;
            j["x0"] = x0;
            emit(out, render_json(j));
            break;
        }
        case Format::csv: {
            std::ostringstream os;
            os << "h,increment\n";
            const double f0 = fn.fn(x0);
            double h = sched.h0;
            for (int i = 0; i < sched.count; ++i, h *= sched.ratio)
                os << fmt_csv(h) << ',' << fmt_csv(std::fabs(fn.fn(x0 + h) - f0)) << "\n";
            emit(out, os.str());
            break;
        }
        }
        return 0;
    }

    throw std::invalid_argument("unknown method: " + method);
}

// ---------------------------------------------------------------------------
// integrate
// ---------------------------------------------------------------------------

const char* literal_warning =
    "warning: the literal backend sums f(t_j) (dt)^alpha over a fixed partition; "
    "for alpha < 1 this grows like N^(1-alpha) under refinement, so N is a "
    "convention parameter, not a resolution knob\n";

int cmd_integrate(const std::string& spec, double a, double b, double alpha,
                  const std::string& backend, int partitions, const OutputOptions& out)
{
    const Order order(alpha);
    const TestFunction fn = resolve_function(spec, order);
    const int digits = table_digits();

    lfc::QuadratureSpec quad;
    quad.partitions = partitions;
    if (backend == "literal")
        quad.backend = lfc::QuadBackend::literal_eq3;
    else if (backend == "measure")
        quad.backend = lfc::QuadBackend::measure;
    else if (backend == "series")
        quad.backend = lfc::QuadBackend::series;
    else
        throw std::invalid_argument("unknown backend: " + backend);

    if (quad.backend == lfc::QuadBackend::literal_eq3)
        std::cerr << literal_warning;

    const double value = lfc::lf_integral(fn.fn, a, b, order, quad);

    switch (out.fmt()) {
    case Format::table: {
        std::ostringstream os;
        os.imbue(std::locale::classic());
        os << "function: " << fn.name << "\ninterval: [" << fmt_num(a, digits) << ", "
           << fmt_num(b, digits) << "]\nalpha: " << fmt_num(alpha, digits)
           << "\nbackend: " << backend << "\npartitions: " << partitions
           << "\nintegral: " << fmt_num(value, digits) << "\n";
        emit(out, os.str());
        break;
    }
    case Format::json: {
        json j{{"command", "integrate"}, {"function", fn.name}, {"a", a},
               {"b", b},                 {"alpha", alpha},      {"backend", backend},
               {"partitions", partitions}, {"value", value}};
        if (quad.backend == lfc::QuadBackend::literal_eq3)
            j["warning"] = "literal sum grows like N^(1-alpha) under refinement";
        emit(out, render_json(j));
        break;
    }
    case Format::csv:
        emit(out, "a,b,alpha,backend,partitions,value\n" + fmt_csv(a) + "," + fmt_csv(b) + ","
                      + fmt_csv(alpha) + "," + backend + "," + std::to_string(partitions) + ","
                      + fmt_csv(value) + "\n");
        break;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

int cmd_solve(const std::string& spec, double x0, double alpha, const std::string& mode,
              const std::string& variant, double tol, int max_iter, int window,
              const OutputOptions& out)
{
    const Order order(alpha);
    const TestFunction fn = resolve_function(spec, order);
    lfc::IterationSettings settings{order};
    settings.tol = tol;
    settings.max_iter = max_iter;
    // the default window shrinks with a small iteration budget
    settings.contraction_window = std::max(2, std::min(window, max_iter));

    lfc::ConvergenceReport rep;
    if (mode == "fixed") {
        rep = lfc::fixed_point_solve(fn.fn, x0, settings);
    } else if (mode == "newton") {
        lfc::NewtonVariant v;
        if (variant == "base")
            v = lfc::NewtonVariant::base_coordinate;
        else if (variant == "fractal")
            v = lfc::NewtonVariant::fractal_coordinate;
        else
            throw std::invalid_argument("unknown variant: " + variant);
        rep = lfc::newton_solve(fn.fn, x0, settings, v);
    } else {
        throw std::invalid_argument("unknown mode: " + mode);
    }

    switch (out.fmt()) {
    case Format::table:
        emit(out, render_report_table(rep, table_digits()));
        break;
    case Format::json:
        emit(out, render_json(lfc::report_to_json(rep)));
        break;
    case Format::csv:
        emit(out, render_report_csv(rep));
        break;
    }
    return rep.status == lfc::SolveStatus::converged ? 0 : 1;
}

// ---------------------------------------------------------------------------
// taylor
// ---------------------------------------------------------------------------

int cmd_taylor(const std::string& spec, double x, double alpha, int terms,
               const OutputOptions& out)
{
    const Order order(alpha);
    const TestFunction fn = resolve_function(spec, order);
    if (!fn.fn.series)
        throw std::invalid_argument("taylor needs a function with a series form");
    if (terms < 0)
        throw std::invalid_argument("terms must be >= 0");
    const PowerSeries& full = *fn.fn.series;
    const int K = std::min(terms, full.truncation());
    const double radius = std::fabs(x - full.center());
    const int digits = table_digits();

    // sup |f^{((k+1) a)}| over [center, x], sampled from the shifted series;
    // beyond the stored coefficients the remainder defaults to zero (the
    // series carries no more data).
    auto derivative_sup = [&](int k_plus_1) -> double {
        if (k_plus_1 > full.truncation())
            return 0.0;
        const std::vector<double> rest(full.coeffs().begin() + k_plus_1, full.coeffs().end());
        const PowerSeries shifted(order, full.center(), rest);
        double m = 0.0;
        for (int i = 0; i <= 32; ++i) {
            const double t = full.center() + (x - full.center()) * i / 32.0;
            m = std::max(m, std::fabs(lfc::eval(shifted, t)));
        }
        return m;
    };

    std::vector<double> partials(static_cast<std::size_t>(K) + 1);
    std::vector<double> remainders(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        const std::vector<double> prefix(full.coeffs().begin(), full.coeffs().begin() + k + 1);
        partials[static_cast<std::size_t>(k)] =
            lfc::eval(PowerSeries(order, full.center(), prefix), x);
        remainders[static_cast<std::size_t>(k)] = lfc::taylor_remainder(
            {order, derivative_sup(k + 1), k + 1, radius});
    }

    switch (out.fmt()) {
    case Format::table: {
        std::ostringstream os;
        os.imbue(std::locale::classic());
        os << "function: " << fn.name << "\nalpha: " << fmt_num(alpha, digits)
           << "\nx: " << fmt_num(x, digits) << "\nterms: " << K
           << "\nvalue: " << fmt_num(partials.back(), digits)
           << "\nremainder: " << fmt_num(remainders.back(), digits) << "\npartials:\n";
        os << std::left << std::setw(6) << "k" << std::setw(digits + 9) << "value"
           << "remainder\n";
        for (int k = 0; k <= K; ++k)
            os << std::left << std::setw(6) << k << std::setw(digits + 9)
               << fmt_num(partials[static_cast<std::size_t>(k)], digits)
               << fmt_num(remainders[static_cast<std::size_t>(k)], digits) << "\n";
        emit(out, os.str());
        break;
    }
    case Format::json: {
        json rows = json::array();
        for (int k = 0; k <= K; ++k)
            rows.push_back({{"k", k},
                            {"value", partials[static_cast<std::size_t>(k)]},
                            {"remainder", remainders[static_cast<std::size_t>(k)]}});
        emit(out, render_json(json{{"command", "taylor"},
                                   {"function", fn.name},
                                   {"alpha", alpha},
                                   {"x", x},
                                   {"terms", K},
                                   {"value", partials.back()},
                                   {"remainder", remainders.back()},
                                   {"partials", rows}}));
        break;
    }
    case Format::csv: {
        std::ostringstream os;
        os << "k,value,remainder\n";
        for (int k = 0; k <= K; ++k)
            os << k << ',' << fmt_csv(partials[static_cast<std::size_t>(k)]) << ','
               << fmt_csv(remainders[static_cast<std::size_t>(k)]) << "\n";
        emit(out, os.str());
        break;
    }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// holder
// ---------------------------------------------------------------------------

int cmd_holder(const std::string& spec, double x0, double alpha, const std::string& schedule,
               const OutputOptions& out)
{
    // alpha only builds the function; the fit itself is alpha-free
    const Order order(alpha);
    const TestFunction fn = resolve_function(spec, order);
    const lfc::StepSchedule sched = parse_schedule(schedule);
    const lfc::HolderFit fit = lfc::holder_fit(fn.fn, x0, sched);

    switch (out.fmt()) {
    case Format::table:
        emit(out, render_holder_table(fn.name, x0, fit, table_digits()));
        break;
    case Format::json: {
        json j = lfc::holder_to_json(fit);
        j["command"] = "holder";
        j["function"] = fn.name;
        j["x0"] = x0;
        emit(out, render_json(j));
        break;
    }
    case Format::csv: {
        std::ostringstream os;
        os << "h,increment\n";
        const double f0 = fn.fn(x0);
        double h = sched.h0;
        for (int i = 0; i < sched.count; ++i, h *= sched.ratio)
            os << fmt_csv(h) << ',' << fmt_csv(std::fabs(fn.fn(x0 + h) - f0)) << "\n";
        emit(out, os.str());
        break;
    }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// check-metric
// ---------------------------------------------------------------------------

std::vector<lfc::FractalPoint> read_points(const std::string& path, int dim, Order order)
{
    std::ifstream f(path);
    if (!f)
        throw std::invalid_argument("cannot open points file: " + path);
    std::vector<lfc::FractalPoint> pts;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        const auto cells = split(line, ',');
        if (static_cast<int>(cells.size()) != dim)
            throw std::invalid_argument("points file row has " + std::to_string(cells.size())
                                        + " columns, expected " + std::to_string(dim));
        std::vector<double> bases;
        for (const auto& c : cells)
            bases.push_back(parse_number(c));
        pts.emplace_back(std::move(bases), order);
    }
    if (pts.empty())
        throw std::invalid_argument("points file is empty");
    return pts;
}

int cmd_check_metric(double alpha, int dim, const std::string& path, const OutputOptions& out)
{
    const Order order(alpha);
    if (dim < 1)
        throw std::invalid_argument("dim must be >= 1");
    const auto pts = read_points(path, dim, order);
    const std::size_t n = pts.size();

    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d[i][j] = lfc::metric(pts[i], pts[j]);

    json violations = json::array();
    auto flag = [&](const char* kind, std::size_t i, std::size_t j, long k, double lhs,
                    double rhs) {
        json v{{"kind", kind}, {"i", i}, {"j", j}, {"lhs", lhs}, {"rhs", rhs}};
        if (k >= 0)
            v["k"] = k;
        violations.push_back(std::move(v));
    };

    std::size_t pairs = 0, triples = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i][i] != 0.0)
            flag("identity", i, i, -1, d[i][i], 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            ++pairs;
            if (!std::isfinite(d[i][j]))
                flag("non_finite", i, j, -1, d[i][j], 0.0);
            if (!(d[i][j] >= 0.0))
                flag("non_negative", i, j, -1, d[i][j], 0.0);
            if (d[i][j] != d[j][i])
                flag("symmetry", i, j, -1, d[i][j], d[j][i]);
            if (d[i][j] == 0.0 && pts[i].bases() != pts[j].bases())
                flag("indiscernible", i, j, -1, 0.0, 0.0);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || j == k)
                    continue;
                ++triples;
                const double lhs = d[i][k];
                const double rhs = d[i][j] + d[j][k];
                if (!(lhs <= rhs + 1e-12 * std::max(lhs, rhs)))
                    flag("triangle", i, j, static_cast<long>(k), lhs, rhs);
            }

    const int digits = table_digits();
    switch (out.fmt()) {
    case Format::table: {
        std::ostringstream os;
        os.imbue(std::locale::classic());
        os << "alpha: " << fmt_num(alpha, digits) << "\ndim: " << dim << "\npoints: " << n
           << "\npairs: " << pairs << "\ntriples: " << triples
           << "\nviolations: " << violations.size() << "\n";
        for (const auto& v : violations) {
            os << "  " << v["kind"].get<std::string>() << " i=" << v["i"] << " j=" << v["j"];
            if (v.contains("k"))
                os << " k=" << v["k"];
            os << "\n";
        }
        emit(out, os.str());
        break;
    }
    case Format::json:
        emit(out, render_json(json{{"command", "check-metric"},
                                   {"alpha", alpha},
                                   {"dim", dim},
                                   {"points", n},
                                   {"pairs", pairs},
                                   {"triples", triples},
                                   {"violations", violations}}));
        break;
    case Format::csv: {
        std::ostringstream os;
        os << "kind,i,j,k,lhs,rhs\n";
        for (const auto& v : violations) {
            os << v["kind"].get<std::string>() << ',' << v["i"] << ',' << v["j"] << ',';
            if (v.contains("k"))
                os << v["k"];
            os << ',' << fmt_csv(v["lhs"].get<double>()) << ','
               << fmt_csv(v["rhs"].get<double>()) << "\n";
        }
        emit(out, os.str());
        break;
    }
    }
    return violations.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

int cmd_catalog(double alpha, const OutputOptions& out)
{
    const Order order(alpha);
    const auto cat = lfc::catalog(order);
    const int digits = table_digits();

    switch (out.fmt()) {
    case Format::table: {
        std::ostringstream os;
        os.imbue(std::locale::classic());
        os << std::left << std::setw(20) << "name" << std::setw(14) << "root" << std::setw(14)
           << "fixed_point" << std::setw(14) << "holder" << "series\n";
        for (const auto& t : cat) {
            os << std::left << std::setw(20) << t.name << std::setw(14)
               << (t.known_root ? fmt_num(*t.known_root, digits) : "-") << std::setw(14)
               << (t.known_fixed_point ? fmt_num(*t.known_fixed_point, digits) : "-")
               << std::setw(14)
               << (t.known_holder_exponent ? fmt_num(*t.known_holder_exponent, digits) : "-")
               << (t.fn.series ? "yes" : "no") << "\n";
        }
        emit(out, os.str());
        break;
    }
    case Format::json: {
        json arr = json::array();
        for (const auto& t : cat)
            arr.push_back(lfc::testfn_to_json(t));
        emit(out, render_json(json{{"command", "catalog"}, {"alpha", alpha}, {"entries", arr}}));
        break;
    }
    case Format::csv: {
        std::ostringstream os;
        os << "name,known_root,known_fixed_point,known_holder_exponent,has_series\n";
        for (const auto& t : cat) {
            os << t.name << ',';
            if (t.known_root)
                os << fmt_csv(*t.known_root);
            os << ',';
            if (t.known_fixed_point)
                os << fmt_csv(*t.known_fixed_point);
            os << ',';
            if (t.known_holder_exponent)
                os << fmt_csv(*t.known_holder_exponent);
            os << ',' << (t.fn.series ? "yes" : "no") << "\n";
        }
        emit(out, os.str());
        break;
    }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"local fractional calculus toolkit"};
    app.require_subcommand(1);

    // diff
    std::string d_fn, d_schedule = "0.1:0.5:20", d_method = "limit";
    double d_x0 = 0.0, d_alpha = 1.0;
    OutputOptions d_out;
    CLI::App* diff = app.add_subcommand("diff", "local fractional derivative of a function");
    diff->add_option("function", d_fn, "function spec")->required();
    diff->add_option("x0", d_x0, "expansion point")->required();
    diff->add_option("--alpha", d_alpha, "fractal order in (0, 1]");
    diff->add_option("--schedule", d_schedule, "step schedule h0:ratio:count");
    diff->add_option("--method", d_method)->check(CLI::IsMember({"limit", "series", "holder"}));
    diff->add_option("--format", d_out.format)->check(CLI::IsMember({"table", "json", "csv"}));
    diff->add_option("--output", d_out.path, "write output to a file");

    // integrate
    std::string i_fn, i_backend = "literal";
    double i_a = 0.0, i_b = 1.0, i_alpha = 1.0;
    int i_parts = 1;
    OutputOptions i_out;
    CLI::App* integ = app.add_subcommand("integrate", "local fractional integral over [a, b]");
    integ->add_option("function", i_fn)->required();
    integ->add_option("a", i_a)->required();
    integ->add_option("b", i_b)->required();
    integ->add_option("--alpha", i_alpha);
    integ->add_option("--backend", i_backend)
        ->check(CLI::IsMember({"literal", "measure", "series"}));
    integ->add_option("--partitions", i_parts);
    integ->add_option("--format", i_out.format)->check(CLI::IsMember({"table", "json", "csv"}));
    integ->add_option("--output", i_out.path);

    // solve
    std::string s_fn, s_mode = "fixed", s_variant = "base";
    double s_x0 = 0.0, s_alpha = 1.0, s_tol = 1e-10;
    int s_max_iter = 200, s_window = 5;
    OutputOptions s_out;
    CLI::App* solve = app.add_subcommand("solve", "fixed-point or Newton iteration");
    solve->add_option("function", s_fn)->required();
    solve->add_option("x0", s_x0)->required();
    solve->add_option("--alpha", s_alpha);
    solve->add_option("--mode", s_mode)->check(CLI::IsMember({"fixed", "newton"}));
    solve->add_option("--variant", s_variant)->check(CLI::IsMember({"base", "fractal"}));
    solve->add_option("--tol", s_tol, "stop when the fractal step drops below tol");
    solve->add_option("--max-iter", s_max_iter);
    solve->add_option("--window", s_window, "tail length for the contraction estimate");
    solve->add_option("--format", s_out.format)->check(CLI::IsMember({"table", "json", "csv"}));
    solve->add_option("--output", s_out.path);

    // taylor
    std::string t_fn;
    double t_x = 0.0, t_alpha = 1.0;
    int t_terms = 20;
    OutputOptions t_out;
    CLI::App* taylor = app.add_subcommand("taylor", "truncated series value with remainder bound");
    taylor->add_option("function", t_fn)->required();
    taylor->add_option("x", t_x)->required();
    taylor->add_option("--alpha", t_alpha);
    taylor->add_option("--terms", t_terms);
    taylor->add_option("--format", t_out.format)->check(CLI::IsMember({"table", "json", "csv"}));
    taylor->add_option("--output", t_out.path);

    // holder
    std::string h_fn, h_schedule = "0.1:0.5:20";
    double h_x0 = 0.0, h_alpha = 1.0;
    OutputOptions h_out;
    CLI::App* holder = app.add_subcommand("holder", "Holder exponent fit (alpha-free)");
    holder->add_option("function", h_fn)->required();
    holder->add_option("x0", h_x0)->required();
    holder->add_option("--alpha", h_alpha, "used only to build the function");
    holder->add_option("--schedule", h_schedule);
    holder->add_option("--format", h_out.format)->check(CLI::IsMember({"table", "json", "csv"}));
    holder->add_option("--output", h_out.path);

    // check-metric
    double m_alpha = 1.0;
    int m_dim = 1;
    std::string m_points;
    OutputOptions m_out;
    CLI::App* metric = app.add_subcommand("check-metric", "verify metric axioms over a point file");
    metric->add_option("--alpha", m_alpha);
    metric->add_option("--dim", m_dim);
    metric->add_option("--points", m_points, "CSV of base coordinates")->required();
    metric->add_option("--format", m_out.format)->check(CLI::IsMember({"table", "json", "csv"}));
    metric->add_option("--output", m_out.path);

    // catalog
    double c_alpha = 1.0;
    OutputOptions c_out;
    CLI::App* cat = app.add_subcommand("catalog", "list the built-in test functions");
    cat->add_option("--alpha", c_alpha);
    cat->add_option("--format", c_out.format)->check(CLI::IsMember({"table", "json", "csv"}));
    cat->add_option("--output", c_out.path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (diff->parsed())
            return cmd_diff(d_fn, d_x0, d_alpha, d_schedule, d_method, d_out);
        if (integ->parsed())
            return cmd_integrate(i_fn, i_a, i_b, i_alpha, i_backend, i_parts, i_out);
        if (solve->parsed())
            return cmd_solve(s_fn, s_x0, s_alpha, s_mode, s_variant, s_tol, s_max_iter,
                             s_window, s_out);
        if (taylor->parsed())
            return cmd_taylor(t_fn, t_x, t_alpha, t_terms, t_out);
        if (holder->parsed())
            return cmd_holder(h_fn, h_x0, h_alpha, h_schedule, h_out);
        if (metric->parsed())
            return cmd_check_metric(m_alpha, m_dim, m_points, m_out);
        if (cat->parsed())
            return cmd_catalog(c_alpha, c_out);
    } catch (const lfc::derivative_vanishes_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const lfc::degenerate_fit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const lfc::evaluation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
