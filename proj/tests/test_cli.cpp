#include "doctest.h"

#include "obj_grammar.hpp"

#include "minsurf/cli.hpp"
#include "minsurf/json_io.hpp"

#include <fstream>
#include <sstream>

using namespace minsurf;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "minsurf");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(MINSURF_TEST_TMP) + "/" + name; }

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("eval at the Jun base point")
{
    const Run r = run({"eval", "--family", "jun", "--p", "0,1", "--z", "0,0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("u=0 v=1 F=0") != std::string::npos);
}

TEST_CASE("eval --json round-trips")
{
    const Run r = run({"eval", "--family", "strip", "--alpha", "2pi/3", "--z", "0.4,0", "--json"});
    REQUIRE(r.code == 0);
    const EvalRecord rec = eval_record_from_json(Json::parse(r.out));
    const EvalRecord direct = eval_record(DomainCase::strip(Angle::pi_fraction(2, 3)), {0.4, 0.0});
    CHECK(rec.h == direct.h);
    CHECK(rec.f == direct.f);
    CHECK(rec.p.F == direct.p.F);
    CHECK(rec.domain.alpha.is_pi_fraction(2, 3));
}

TEST_CASE("symbolic gamma routes to the special branch, a float near pi/4 is rejected")
{
    CHECK(run({"eval", "--family", "halfplane", "--gamma", "pi/4", "--z", "0.3,0.2"}).code == 0);
    const Run bad = run({"eval", "--family", "halfplane", "--gamma", "0.7853981633974483", "--z", "0.3,0.2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("IllConditioned") != std::string::npos);
}

TEST_CASE("argument errors exit 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"eval", "--family", "slit"}).code == 2);
    CHECK(run({"eval", "--family", "disk", "--z", "0,0"}).code == 2);
    CHECK(run({"eval", "--family", "slit", "--z", "1,0"}).code == 2);
    CHECK(run({"eval", "--family", "slit", "--z", "0.1"}).code == 2);
    CHECK(run({"eval", "--family", "slit", "--gamma", "pi/4", "--z", "0,0"}).code == 2);
    CHECK(run({"eval", "--family", "halfplane", "--z", "0,0"}).code == 2);
    CHECK(run({"eval", "--family", "jun", "--p", "0,-1", "--z", "0,0"}).code == 2);
    CHECK(run({"eval", "--family", "slit", "--sign", "x", "--z", "0,0"}).code == 2);
    CHECK(run({"verify", "--family", "slit", "--grid", "20by24"}).code == 2);
    CHECK(run({"verify", "--family", "slit", "--rmax", "0.995"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("help exits 0")
{
    const Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify exit codes")
{
    const Run ok = run({"verify", "--family", "slit", "--grid", "20x24"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("all checks passed") != std::string::npos);
    const Run js = run({"verify", "--family", "halfplane", "--gamma", "3pi/4", "--grid", "10x16", "--json"});
    CHECK(js.code == 0);
    CHECK(Json::parse(js.out).at("all_pass").get<bool>());
    // Accepted as a general angle, but too close to pi/4 for the checks.
    const Run near = run({"verify", "--family", "halfplane", "--gamma", "0.7854", "--grid", "20x24"});
    CHECK(near.code == 1);
    CHECK(near.out.find("some checks FAILED") != std::string::npos);
}

TEST_CASE("mesh and figure write files")
{
    const std::string obj = tmp("cli_s.obj");
    const Run m = run({"mesh", "--family", "halfplane", "--gamma", "pi/4", "--out", obj, "--format", "obj", "--grid",
        "6x12"});
    REQUIRE(m.code == 0);
    std::string why;
    const auto parsed = objcheck::parse_strict(slurp(obj), &why);
    REQUIRE_MESSAGE(parsed.has_value(), why);
    CHECK(parsed->vertices.size() == 6 * 12 + 1);

    const std::string csv = tmp("cli_s.csv");
    CHECK(run({"mesh", "--family", "slit", "--out", csv, "--grid", "3x8"}).code == 0);
    CHECK(slurp(csv).rfind("r,theta,u,v,F\n", 0) == 0);
    CHECK(run({"mesh", "--family", "slit", "--out", tmp("noext"), "--grid", "3x8"}).code == 2);
    CHECK(run({"mesh", "--family", "slit", "--out", csv, "--format", "stl"}).code == 2);

    const std::string fig = tmp("cli_fig.json");
    const Run f = run({"figure", "--family", "jun", "--p", "1,2", "--out", fig, "--rings", "0.5,0.9", "--spokes",
        "4"});
    REQUIRE(f.code == 0);
    const FigureData back = figure_from_json(Json::parse(slurp(fig)));
    CHECK(back.curves.size() == 6);
    CHECK(run({"figure", "--family", "slit", "--out", fig, "--rings", "0.5,1.5"}).code == 2);
}
