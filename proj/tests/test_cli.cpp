// End-to-end tests driving the built binary. The harness provides the path
// in LFC_CLI.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::filesystem::path temp_file(const std::string& tag)
{
    static int counter = 0;
    return std::filesystem::temp_directory_path()
           / ("lfc_cli_test_" + std::to_string(::getpid()) + "_" + tag + "_"
              + std::to_string(counter++));
}

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "")
{
    const char* cli = std::getenv("LFC_CLI");
    REQUIRE(cli != nullptr);
    const auto outp = temp_file("out");
    const auto errp = temp_file("err");
    const std::string cmd = env_prefix + std::string(cli) + " " + args + " >"
                            + outp.string() + " 2>" + errp.string();
    const int rc = std::system(cmd.c_str());
    CmdResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(outp);
    r.err = slurp(errp);
    std::filesystem::remove(outp);
    std::filesystem::remove(errp);
    return r;
}

}  // namespace

TEST_CASE("diff: limit, series and holder methods", "[cli]")
{
    // unnormalized power: constant quotient Gamma(1.5)
    const CmdResult a = run_cli("diff power:0.5 0 --alpha 0.5 --method limit --format json");
    CHECK(a.code == 0);
    const json ja = json::parse(a.out);
    CHECK(ja["estimate"].get<double>() == Catch::Approx(0.8862269).margin(1e-6));
    CHECK(ja["converged"].get<bool>());
    CHECK(ja["trail"].size() == 20);

    // normalized basis monomial: constant quotient 1
    const CmdResult m = run_cli("diff monomial:1 0 --alpha 0.5 --method limit --format json");
    CHECK(m.code == 0);
    CHECK(json::parse(m.out)["estimate"].get<double>() == Catch::Approx(1.0).margin(1e-9));

    const CmdResult b =
        run_cli("diff 'series:[0,0,1]@0' 1 --alpha 0.5 --method series --format json");
    CHECK(b.code == 0);
    CHECK(json::parse(b.out)["derivative"].get<double>()
          == Catch::Approx(1.1283792).margin(1e-6));

    const CmdResult c = run_cli("diff exp 0 --alpha 1 --method limit --format json");
    CHECK(c.code == 0);
    CHECK(json::parse(c.out)["estimate"].get<double>() == Catch::Approx(1.0).margin(1e-6));

    const CmdResult h = run_cli("diff power:0.5 0 --alpha 0.5 --method holder --format json");
    CHECK(h.code == 0);
    CHECK(json::parse(h.out)["exponent"].get<double>() == Catch::Approx(0.5).margin(1e-6));

    // series method without a series form is an input error
    const CmdResult e = run_cli("diff exp 0 --alpha 0.5 --method series");
    CHECK(e.code == 2);
}

TEST_CASE("integrate: backends, identity and warning banner", "[cli]")
{
    const CmdResult n1 =
        run_cli("integrate const:1 0 1 --alpha 0.5 --backend literal --partitions 1 --format json");
    CHECK(n1.code == 0);
    CHECK(json::parse(n1.out)["value"].get<double>() == Catch::Approx(1.1283792).margin(1e-6));
    CHECK(n1.err.find("warning") != std::string::npos);

    const CmdResult n4 =
        run_cli("integrate const:1 0 1 --alpha 0.5 --backend literal --partitions 4 --format json");
    CHECK(n4.code == 0);
    CHECK(json::parse(n4.out)["value"].get<double>() == Catch::Approx(2.2567584).margin(1e-6));
    CHECK(n4.err.find("warning") != std::string::npos);

    const CmdResult z = run_cli("integrate const:1 0 0 --alpha 0.7 --backend measure --format json");
    CHECK(z.code == 0);
    CHECK(json::parse(z.out)["value"].get<double>() == 0.0);
    CHECK(z.err.empty());

    // series backend needs a series form
    const CmdResult e = run_cli("integrate cos 0 1 --alpha 0.5 --backend series");
    CHECK(e.code == 2);
}

TEST_CASE("solve: fixed point, newton and exit codes", "[cli]")
{
    const CmdResult fixed =
        run_cli("solve affine:1:0.5 2 --alpha 0.5 --mode fixed --format json");
    CHECK(fixed.code == 0);
    const json jf = json::parse(fixed.out);
    CHECK(jf["status"] == "converged");
    CHECK(jf["root"].get<double>() == Catch::Approx(1.6403882).margin(1e-7));
    for (const char* key :
         {"status", "root", "residual", "iterations", "L_hat", "a_posteriori", "trace"})
        CHECK(jf.contains(key));
    CHECK(jf["trace"][0]["step"].is_null());

    const CmdResult newton = run_cli(
        "solve 'series:[-1,0,1]@0' 4 --alpha 0.5 --mode newton --variant base "
        "--tol 1e-3 --max-iter 5000 --format json");
    CHECK(newton.code == 0);
    const json jn = json::parse(newton.out);
    CHECK(jn["trace"][1]["x"].get<double>() == Catch::Approx(2.6120870).margin(1e-6));
    CHECK(jn["root"].get<double>() == Catch::Approx(1.0).margin(5e-3));

    const CmdResult ident = run_cli("solve identity 3 --alpha 1 --mode fixed --format json");
    CHECK(ident.code == 0);
    const json ji = json::parse(ident.out);
    CHECK(ji["root"].get<double>() == 3.0);
    CHECK(ji["iterations"].get<int>() == 1);

    // csv trace format
    const CmdResult csv = run_cli("solve cos 1 --alpha 1 --mode fixed --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("k,x,step,ratio\n", 0) == 0);

    // a non-converged run exits 1
    const CmdResult slow = run_cli("solve cos 1 --alpha 1 --mode fixed --max-iter 3");
    CHECK(slow.code == 1);

    // divergence exits 1
    const CmdResult div = run_cli("solve quadratic 1e200 --alpha 1 --mode fixed");
    CHECK(div.code == 1);
}

TEST_CASE("taylor: value and remainder column", "[cli]")
{
    const CmdResult t =
        run_cli("taylor mittag-leffler 0.25 --alpha 0.5 --terms 40 --format json");
    CHECK(t.code == 0);
    const json jt = json::parse(t.out);
    CHECK(jt["value"].get<double>() == Catch::Approx(1.9523605).margin(1e-6));
    CHECK(jt["remainder"].get<double>() < 1e-12);
    CHECK(jt["partials"].size() == 41);

    const CmdResult e = run_cli("taylor weierstrass:0.5:3 0.25 --alpha 0.5 --terms 10");
    CHECK(e.code == 2);  // no series form
}

TEST_CASE("holder command", "[cli]")
{
    const CmdResult h = run_cli("holder weierstrass:0.5:3 0.37 --format json");
    CHECK(h.code == 0);
    const double exp = json::parse(h.out)["exponent"].get<double>();
    CHECK(exp == Catch::Approx(0.6309297).margin(0.1));

    const CmdResult c = run_cli("holder const:4 0.0");
    CHECK(c.code == 1);  // degenerate fit: locally constant
}

TEST_CASE("check-metric", "[cli]")
{
    const auto good = temp_file("pts_good");
    std::ofstream(good) << "0\n1\n4\n";
    const CmdResult ok =
        run_cli("check-metric --alpha 0.5 --dim 1 --points " + good.string() + " --format json");
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["violations"].empty());
    std::filesystem::remove(good);

    const auto bad = temp_file("pts_bad");
    std::ofstream(bad) << "0\nnan\n4\n";
    const CmdResult nf =
        run_cli("check-metric --alpha 0.5 --dim 1 --points " + bad.string() + " --format json");
    CHECK(nf.code == 1);
    CHECK_FALSE(json::parse(nf.out)["violations"].empty());
    std::filesystem::remove(bad);

    const auto malformed = temp_file("pts_malformed");
    std::ofstream(malformed) << "0,1\n2\n";
    const CmdResult mf =
        run_cli("check-metric --alpha 0.5 --dim 2 --points " + malformed.string());
    CHECK(mf.code == 2);
    std::filesystem::remove(malformed);

    const CmdResult missing = run_cli("check-metric --alpha 0.5 --dim 1 --points /no/such/file");
    CHECK(missing.code == 2);
}

TEST_CASE("catalog listing", "[cli]")
{
    const CmdResult c = run_cli("catalog --alpha 0.5 --format json");
    CHECK(c.code == 0);
    const json jc = json::parse(c.out);
    CHECK(jc["entries"].size() >= 12);
    bool saw_ml = false;
    for (const auto& e : jc["entries"])
        if (e["name"] == "mittag-leffler")
            saw_ml = true;
    CHECK(saw_ml);
}

TEST_CASE("usage errors exit 2", "[cli]")
{
    CHECK(run_cli("diff nosuchfn 0 --alpha 0.5").code == 2);
    CHECK(run_cli("diff power:0.5 0 --alpha 1.5").code == 2);   // order out of range
    CHECK(run_cli("diff power:0.5 0 --method bogus").code == 2);
    CHECK(run_cli("nosuchcommand").code == 2);
    CHECK(run_cli("diff 'series:[1,2@0' 0").code == 2);  // malformed literal
}

TEST_CASE("outputs are byte-deterministic", "[cli]")
{
    const std::string cmds[] = {
        "diff power:0.5 0 --alpha 0.5 --method limit --format json",
        "integrate const:1 0 1 --alpha 0.5 --backend measure --partitions 64 --format json",
        "solve affine:1:0.5 2 --alpha 0.5 --mode fixed --format table",
        "solve affine:1:0.5 2 --alpha 0.5 --mode fixed --format csv",
        "taylor mittag-leffler 0.25 --alpha 0.5 --terms 40 --format table",
        "holder weierstrass:0.5:3 0.37 --format csv",
        "catalog --alpha 0.5 --format json",
    };
    for (const auto& cmd : cmds) {
        const CmdResult a = run_cli(cmd);
        const CmdResult b = run_cli(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("precision env var controls table digits", "[cli]")
{
    const CmdResult wide = run_cli("solve affine:1:0.5 2 --alpha 0.5 --mode fixed",
                                   "FRACTAL_CALC_PRECISION=12 ");
    CHECK(wide.code == 0);
    CHECK(wide.out.find("1.6403882032") != std::string::npos);

    const CmdResult dflt = run_cli("solve affine:1:0.5 2 --alpha 0.5 --mode fixed");
    CHECK(dflt.out.find("root: 1.6403882\n") != std::string::npos);
}

TEST_CASE("--output writes the rendered bytes to a file", "[cli]")
{
    const auto path = temp_file("redirect");
    const CmdResult direct = run_cli("catalog --alpha 0.5 --format json");
    const CmdResult filed = run_cli("catalog --alpha 0.5 --format json --output " + path.string());
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(path) == direct.out);
    std::filesystem::remove(path);
}
