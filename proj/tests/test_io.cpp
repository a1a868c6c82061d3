#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "concordia/corpus.hpp"
#include "concordia/jsonio.hpp"
#include "testutil.hpp"

using namespace concordia;
using testutil::im;

#ifndef CONCORDIA_BIN
#define CONCORDIA_BIN "./concordia"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CONCORDIA_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/concordia_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("seifert JSON round trip") {
    SeifertMatrix kj = knot_K_J();
    json j = seifert_to_json(kj);
    SeifertMatrix back = parse_seifert(j.dump(), "inline");
    REQUIRE(back.matrix() == kj.matrix());
    REQUIRE(back.label() == "K_J");

    SeifertMatrix text = parse_seifert("0 2\n1 0\n", "inline");
    REQUIRE(text.matrix() == kj.matrix());

    try {
        parse_seifert("{\"matrix\": [[0, 2], [1]]}", "inline");
        FAIL("expected Parse");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::Parse);
    }
}

TEST_CASE("certificate input files") {
    CrossingTriple t = parse_triple(R"({"A": [], "a": [], "b": -1})", "inline");
    REQUIRE(t.plus.matrix() == im({{-1, 1}, {0, -1}}));

    Genus2MutationPair p =
        parse_genus2_pair(R"({"A": [[0,2],[1,0]], "C": [[-1,1],[0,-1]], "b": [1, 0]})", "inline");
    REQUIRE(p.V.matrix() == genus2_sample().V.matrix());

    AmphicheiralData d = parse_amphicheiral(
        R"({"A": [[0,0,0,1],[0,0,-1,0],[0,0,0,0],[0,0,0,0]],
            "T": [[0,0,1,0],[0,0,0,1],[1,0,0,0],[0,1,0,0]],
            "a": [1,0,0,0], "b": 1})",
        "inline");
    REQUIRE(d.epsilon == -1);
    REQUIRE(build_v_epsilon(d).matrix() == build_v_epsilon(amphicheiral_sample()).matrix());
}

TEST_CASE("cli: polynomials") {
    RunResult r = run_cli("alexander K_J");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output == "-2*t^1 + 5*t^0 + -2*t^-1\n");

    REQUIRE(run_cli("alexander unknot").output == "1*t^0\n");
    REQUIRE(run_cli("conway K_J").output == "-2*z^2 + 1*z^0\n");

    std::string bad = write_temp("bad.txt", "1 2\n3\n");
    REQUIRE(run_cli("alexander " + bad).exit_code == 2);
}

TEST_CASE("cli: signatures") {
    REQUIRE(run_cli("signature trefoil_R --at 1/2").output == "-2\n");
    REQUIRE(run_cli("signature trefoil_R --at 1/6").exit_code == 3);
    RunResult prof = run_cli("signature K_J --profile 12");
    REQUIRE(prof.exit_code == 0);
    for (char c : prof.output)
        if (c == '-') FAIL("expected all zero profile");
    RunResult csv = run_cli("signature trefoil_R --profile 6 --csv");
    REQUIRE(csv.output.rfind("a,b,angle_numerator,value\n", 0) == 0);
}

TEST_CASE("cli: covers and certificates") {
    RunResult cover = run_cli("cover K_J --q 3 --p 7");
    REQUIRE(cover.exit_code == 0);
    REQUIRE(cover.output.find("order 49") != std::string::npos);
    REQUIRE(cover.output.find("{2,4}") != std::string::npos);

    RunResult cover_json = run_cli("cover K_J --q 3 --p 7 --json");
    json cj = json::parse(cover_json.output);
    REQUIRE(cj["order"] == "49");
    REQUIRE(cj["snf"].size() == 2);

    std::string triple = write_temp("triple.json", R"({"A": [], "a": [], "b": -1})");
    RunResult wd = run_cli("witt-diff " + triple + " --samples 10 --json");
    REQUIRE(wd.exit_code == 0);
    json wj = json::parse(wd.output);
    REQUIRE(wj["verdict"] == "verified");

    std::string pair = write_temp("pair.json", R"({"A": [[0,2],[1,0]], "C": [[-1,1],[0,-1]], "b": [1,0]})");
    REQUIRE(run_cli("mutate-genus2 " + pair + " --samples 8").exit_code == 0);

    std::string amph = write_temp("amph.json",
                                  R"({"A": [[0,0,0,1],[0,0,-1,0],[0,0,0,0],[0,0,0,0]],
                                      "T": [[0,0,1,0],[0,0,0,1],[1,0,0,0],[0,1,0,0]],
                                      "a": [1,0,0,0], "b": 1})");
    RunResult am = run_cli("amphicheiral " + amph + " --samples 8 --json");
    REQUIRE(am.exit_code == 0);
    json aj = json::parse(am.output);
    REQUIRE(aj["sliceness"]["verified"] == true);

    REQUIRE(run_cli("genus-gap trefoil_R --n 1").exit_code == 4);

    // two mirrored trefoils pass the s7 precondition
    std::string j2 = write_temp("j2.txt", "1 0 0 0\n-1 1 0 0\n0 0 1 0\n0 0 -1 1\n");
    RunResult gap = run_cli("genus-gap " + j2 + " --n 1 --json");
    REQUIRE(gap.exit_code == 0);
    json gj = json::parse(gap.output);
    REQUIRE(gj["s7"] == 8);
    REQUIRE(gj["concluded"] == true);
}

TEST_CASE("cli: selftest determinism") {
    RunResult a = run_cli("selftest --seed 7 --samples 5");
    RunResult b = run_cli("selftest --seed 7 --samples 5");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.output == b.output);
}
