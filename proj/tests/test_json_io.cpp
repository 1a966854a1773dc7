#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "lfc/json_io.hpp"

using Catch::Approx;
using namespace lfc;

TEST_CASE("series round-trips exactly through its wire format", "[json]")
{
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    for (int i = 0; i < 50; ++i) {
        std::vector<double> c(1 + static_cast<std::size_t>(i % 9));
        for (double& v : c)
            v = d(rng);
        const PowerSeries s(Order(0.25 + 0.25 * (i % 4)), d(rng), c);

        const std::string text = series_to_json(s).dump();
        const PowerSeries back = series_from_json(json::parse(text));
        CHECK(back.order() == s.order());
        CHECK(back.center() == s.center());
        CHECK(back.coeffs() == s.coeffs());
    }
}

TEST_CASE("report schema", "[json]")
{
    const TestFunction affine = affine_fractal(1.0, 0.5, Order(0.5));
    const ConvergenceReport rep =
        fixed_point_solve(affine.fn, 2.0, IterationSettings{Order(0.5)});
    const json j = report_to_json(rep);

    for (const char* key :
         {"status", "root", "residual", "iterations", "L_hat", "a_posteriori", "trace"})
        CHECK(j.contains(key));
    CHECK(j["status"] == "converged");
    CHECK(j["iterations"].get<int>() == rep.iterations());
    CHECK(j["trace"].is_array());
    CHECK(j["trace"].size() == rep.trace.iterates.size());
    CHECK(j["trace"][0]["k"] == 0);
    CHECK(j["trace"][0]["step"].is_null());
    CHECK(j["trace"][1]["step"].get<double>() == rep.trace.fractal_steps[0]);
    CHECK(j["root"].get<double>() == rep.root);

    // the +inf sentinel serializes as null
    const RealFunction flip = make_function([](double x) { return -x; });
    const json nj = report_to_json(fixed_point_solve(flip, 1.0, IterationSettings{Order(1.0)}));
    CHECK(nj["status"] == "non_contractive");
    CHECK(nj["a_posteriori"].is_null());
}

TEST_CASE("holder fit schema", "[json]")
{
    const RealFunction root = make_function([](double x) { return spow(x, 0.5); });
    const json j = holder_to_json(holder_fit(root, 0.0));
    for (const char* key : {"exponent", "log_coefficient", "r_squared", "samples"})
        CHECK(j.contains(key));
    CHECK(j["exponent"].get<double>() == Approx(0.5).margin(1e-6));
    CHECK(j["samples"].get<int>() == 20);
}

TEST_CASE("catalog export", "[json]")
{
    const auto cat = catalog(Order(0.5));
    json arr = json::array();
    for (const auto& t : cat)
        arr.push_back(testfn_to_json(t));
    CHECK(arr.size() == cat.size());

    bool saw_affine = false;
    for (const auto& e : arr) {
        CHECK(e.contains("name"));
        if (e["name"] == "affine:1:0.5") {
            saw_affine = true;
            CHECK(e.contains("known_fixed_point"));
            CHECK(e.contains("series"));
            CHECK(e["series"]["coeffs"].is_array());
        }
    }
    CHECK(saw_affine);
}
