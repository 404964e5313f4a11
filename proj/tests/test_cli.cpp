#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

std::string g_binary;

struct run_result {
    int exit_code = -1;
    std::string out;
};

run_result run_cli(const std::string& args) {
    run_result r;
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json as_json(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("orbit emits exact rational points and termination causes") {
    run_result r = run_cli("orbit --point 1,1 --fwd 3");
    REQUIRE(r.exit_code == 0);
    auto j = as_json(r.out);
    CHECK(j["schema_version"] == 1);
    auto pts = j["points"];
    REQUIRE(pts.size() == 4);
    CHECK(pts[0]["x"] == "1");
    CHECK(pts[1]["x"] == "2");
    CHECK(pts[1]["y"] == "-1");
    CHECK(pts[2]["x"] == "1");
    CHECK(pts[2]["y"] == "-2");
    CHECK(pts[3]["x"] == "1/2");
    CHECK(pts[3]["y"] == "-5/2");
    CHECK(j["forward"]["termination"] == "alive");
}

TEST_CASE("orbit stops on the discontinuities") {
    run_result r = run_cli("orbit --point 0,1 --fwd 3");
    REQUIRE(r.exit_code == 0);
    auto j = as_json(r.out);
    CHECK(j["forward"]["termination"] == "hit_y_zero");
    CHECK(j["forward"]["time"] == 1);

    run_result rb = run_cli("orbit --point 1,-1 --bwd 1");
    auto jb = as_json(rb.out);
    CHECK(jb["backward"]["termination"] == "hit_anti_diagonal");
    CHECK(jb["backward"]["time"] == 0);
}

TEST_CASE("orbit accepts decimals and rational fractions") {
    run_result r = run_cli("orbit --point 0.25,-1.5 --fwd 1");
    REQUIRE(r.exit_code == 0);
    auto j = as_json(r.out);
    CHECK(j["points"][0]["x"] == "1/4");
    CHECK(j["points"][0]["y"] == "-3/2");
    run_result r2 = run_cli("orbit --point 3/7,5/2 --fwd 0 --format csv");
    CHECK(r2.out == "t,x,y\n0,3/7,5/2\n");
}

TEST_CASE("orbit float mode") {
    run_result r = run_cli("orbit --point 1,1 --fwd 2 --mode float --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("t,x,y") == 0);
    CHECK(r.out.find("1,2,-1") != std::string::npos);
}

TEST_CASE("parse failures exit with code 2") {
    CHECK(run_cli("orbit --point nonsense --fwd 1").exit_code == 2);
    CHECK(run_cli("orbit --point 1,1 --format yaml").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("resource ceilings exit with code 3") {
    run_result r = run_cli("code --point 1,3 --window 40 --max-bits 20000");
    CHECK(r.exit_code == 3);
}

TEST_CASE("coding output carries words, sequences, and markers") {
    run_result r = run_cli("code --point 1,1 --window 6");
    REQUIRE(r.exit_code == 0);
    auto j = as_json(r.out);
    CHECK(j["i_word"]["entries"][0] == 1);
    CHECK(j["i_word"]["status"] == "truncated");
    CHECK(j["h_i"]["future"].is_array());
    std::string display = j["h_i"]["display"];
    CHECK(display.find(';') != std::string::npos);

    run_result csv = run_cli("code --point 1,1 --window 4 --format csv");
    CHECK(csv.out.find("t,s_i,s_j") == 0);

    // the mirror flag negates every symbol
    auto plain = as_json(run_cli("code --point 1,1 --window 4").out);
    auto mirrored = as_json(run_cli("code --point 1,1 --window 4 --mirror").out);
    auto f1 = plain["h_i"]["future"], f2 = mirrored["h_i"]["future"];
    REQUIRE(f1.size() == f2.size());
    for (std::size_t k = 0; k < f1.size(); ++k)
        CHECK(f1[k].get<int>() == -f2[k].get<int>());
}

TEST_CASE("curve export formats") {
    run_result r = run_cli("curves --family R --level 1 --samples 24 --format csv");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("family,level,branch,side,t,x,y") == 0);
    // spot-check a data row against the closed form (t - 1/t, t)
    std::size_t nl = r.out.find('\n');
    std::string row = r.out.substr(nl + 1, r.out.find('\n', nl + 1) - nl - 1);
    double t = 0, x = 0, y = 0;
    char fam;
    int lvl, br, side;
    REQUIRE(std::sscanf(row.c_str(), "%c,%d,%d,%d,%lf,%lf,%lf", &fam, &lvl, &br, &side, &t,
                        &x, &y) == 7);
    CHECK(std::abs(x - (t - 1.0 / t)) < 1e-9);
    CHECK(std::abs(y - t) < 1e-9);

    run_result l = run_cli("curves --family L --level 1 --samples 16 --format csv");
    std::size_t nl2 = l.out.find('\n');
    std::string row2 = l.out.substr(nl2 + 1, l.out.find('\n', nl2 + 1) - nl2 - 1);
    REQUIRE(std::sscanf(row2.c_str(), "%c,%d,%d,%d,%lf,%lf,%lf", &fam, &lvl, &br, &side, &t,
                        &x, &y) == 7);
    CHECK(std::abs(x - (t - 1.0 / t)) < 1e-9);
    CHECK(std::abs(y - (-2.0 * t + 1.0 / t)) < 1e-9);

    // level 3 has one polyline per branch: 1 + |D(3)| of them
    auto j3 = as_json(run_cli("curves --family R --level 3 --samples 8 --format json").out);
    CHECK(j3["branches"].size() == 8);
}

TEST_CASE("decode round trip and not-found diagnostics") {
    run_result r = run_cli("decode --iword 1 --jword 1 --box 0,3,0,3 --tol 1/16");
    REQUIRE(r.exit_code == 0);
    auto j = as_json(r.out);
    CHECK(j["found"] == true);
    CHECK(j["recode_verified"] == true);

    run_result nf = run_cli(
        "decode --iword 30 --jword 1 --box 0,1,0,1 --max-refinements 4");
    CHECK(nf.exit_code == 4);
    auto jn = as_json(nf.out);
    CHECK(jn["found"] == false);
}

TEST_CASE("periodic search through the decode subcommand") {
    run_result r =
        run_cli("decode --icycle 1,-1 --jcycle -1,1 --box -2,0,0,1 --tol 1/32");
    REQUIRE(r.exit_code == 0);
    auto j = as_json(r.out);
    CHECK(j["found"] == true);
    CHECK(j["hyperbolic"] == true);
    CHECK(j["exact_point"]["x"] == "-1");
    CHECK(j["exact_point"]["y"] == "1/2");
}

TEST_CASE("boole subcommands") {
    auto j = as_json(run_cli("boole code --x 7/3 --depth 12").out);
    CHECK(j["word"]["entries"][0] == 4);
    CHECK(j["symbols"][0] == 2);

    auto d = as_json(run_cli("boole decode --prefix 1 --tol 1/1000000").out);
    CHECK(d["interval"][0] == "0");
    CHECK(d["interval"][1] == "1");

    CHECK(run_cli("boole check-measure --samples 50").exit_code == 0);
}

TEST_CASE("verification suite is deterministic and gates on failures") {
    run_result a = run_cli("verify --suite core --seed 42");
    run_result b = run_cli("verify --suite core --seed 42");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto j = as_json(a.out);
    CHECK(j["passed"] == true);
    CHECK(j["seed"] == 42);
    bool saw_check = false;
    for (const auto& c : j["checks"])
        if (c["status"] == "pass") saw_check = true;
    CHECK(saw_check);
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    if (argc > 1) {
        g_binary = argv[1];
        ctx.applyCommandLine(1, argv);
    } else {
        ctx.applyCommandLine(argc, argv);
    }
    return ctx.run();
}
