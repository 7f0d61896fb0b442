#include <doctest.h>

#include <sstream>

#include "freeavg/cli.hpp"

using namespace freeavg;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(FREEAVG_DATA_DIR) + "/" + file; }

// The report without the trailing timing line.
std::string without_time(const std::string& out)
{
    std::istringstream in(out);
    std::string line, body;
    while (std::getline(in, line))
        if (line.rfind("time: ", 0) != 0) body += line + "\n";
    return body;
}

}  // namespace

TEST_CASE("mul, op and inv")
{
    CHECK(run({"mul", "[x [y]]@2", "[z]^-1"}).out == "[x [y]]@2 [z]^-1\n");
    CHECK(run({"mul", "[z]^-1", "[z]@3"}).out == "[z]^-1 [z]@3\n");
    CHECK(run({"mul", "[x [y]]@2", "[z]@3"}).out == "[x [y [z]]]@4\n");
    CHECK(run({"op", "[x [y]]@2"}).out == "[x [y]]@3\n");
    CHECK(run({"op", "[z]^-1"}).out == "[[z]^-1]\n");
    CHECK(run({"op", "[x]@3 y [z]@2"}).out == "[x [y [z]]]@4\n");
    CHECK(run({"op", "x", "--iter", "3"}).out == "[x]@3\n");
    CHECK(run({"inv", "x [y]"}).out == "[y]^-1 x^-1\n");
    CHECK(run({"inv", "1"}).out == "1\n");

    Result r = run({"mul", "[x][y]", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "[x [y]]\n");
    CHECK(r.err.find("not in normal form") != std::string::npos);
}

TEST_CASE("normalize")
{
    CHECK(run({"normalize", "[x][y]"}).out == "[x [y]]\n");
    CHECK(run({"normalize", "[x][y]", "--oracle", "--strategy", "outermost"}).out == "[x [y]]\n");
    Result t = run({"normalize", "[x][y]", "--oracle", "--trace"});
    CHECK(t.code == kExitOk);
    CHECK(t.out == "R1 0: [x] [y] => [x [y]]\n[x [y]]\n");

    CHECK(run({"normalize", "[x [y]]", "--check-only"}).out == "normal\n");
    Result bad = run({"normalize", "[x][y]", "--check-only"});
    CHECK(bad.code == kExitMathFailure);
    CHECK(bad.out.rfind("not normal: ", 0) == 0);
}

TEST_CASE("usage and parse errors exit 2")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"mul", "[x"}).code == kExitUsage);
    Result p = run({"mul", "[x", "y"});
    CHECK(p.code == kExitUsage);
    CHECK_FALSE(p.err.empty());
    CHECK(run({"op", "x", "--iter", "-1"}).code == kExitUsage);
    CHECK(run({"normalize", "x", "--strategy", "sideways"}).code == kExitUsage);
    CHECK(run({"check", "--suite", "nope"}).code == kExitUsage);
    CHECK(run({"check", "--trials", "many"}).code == kExitUsage);
}

TEST_CASE("check is deterministic and reports counts")
{
    Result a = run({"check", "--suite", "assoc", "--trials", "200", "--seed", "7"});
    CHECK(a.code == kExitOk);
    CHECK(a.out.find("suite assoc: 200 trials") != std::string::npos);
    CHECK(a.out.find("result: PASS") != std::string::npos);
    CHECK(a.out.find("time: ") != std::string::npos);
    Result b = run({"check", "--suite", "assoc", "--trials", "200", "--seed", "7"});
    CHECK(without_time(a.out) == without_time(b.out));

    for (const char* s : {"closure", "oracle", "hom"})
        CHECK(run({"check", "--suite", s, "--trials", "100", "--seed", "1"}).code == kExitOk);

    Result f = run({"check", "--suite", "averaging", "--trials", "300", "--seed", "7"});
    CHECK(f.code == kExitMathFailure);
    CHECK(f.out.find("minimal:") != std::string::npos);
    CHECK(f.out.find("result: FAIL") != std::string::npos);
}

TEST_CASE("eval")
{
    Result r = run({"eval", "--group", data("z2.json"), "--map", "x=1", "[x]"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "0\n");
    CHECK(run({"eval", "--group", data("z2.json"), "--map", "x=1,y=0", "[x][y]"}).out ==
          run({"eval", "--group", data("z2.json"), "--map", "x=1,y=0", "[x [y]]"}).out);
    CHECK(run({"eval", "--group", data("s3_sign.json"), "--map", "x=(12)", "[x]"}).code == kExitOk);

    CHECK(run({"eval", "--group", data("z2.json"), "--map", "x=1", "[y]"}).code == kExitUsage);
    CHECK(run({"eval", "--group", data("z2.json"), "--map", "x=7", "x"}).code == kExitUsage);
    CHECK(run({"eval", "--group", "/nonexistent.json", "--map", "x=1", "x"}).code == kExitUsage);
    Result c = run({"eval", "--group", data("z2_constant.json"), "--map", "x=1", "x"});
    CHECK(c.code == kExitMathFailure);
    CHECK_FALSE(c.out.empty());
}

TEST_CASE("search-ops")
{
    Result r = run({"search-ops", "--group", data("z2.json")});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "(0->0, 1->0)\n(0->0, 1->1)\n(0->1, 1->0)\n3 averaging operators\n");
    CHECK(run({"search-ops", "--group", data("s3_sign.json"), "--pointed"}).out.find("8 pointed averaging operators") !=
          std::string::npos);
}

TEST_CASE("hopf-check")
{
    Result ok = run({"hopf-check", "--group", data("z2.json")});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("(group: ok, algebra: ok)") != std::string::npos);
    CHECK(run({"hopf-check", "--group", data("z2.json"), "--op", data("z2_identity_op.json")}).code == kExitOk);
    Result bad = run({"hopf-check", "--group", data("z2_constant.json")});
    CHECK(bad.code == kExitMathFailure);
    CHECK(bad.out.find("(group: fail, algebra: fail)") != std::string::npos);
}

TEST_CASE("lie-check")
{
    Result ok = run({"lie-check", "--structure", data("lie_solvable2.json"), "--operator", data("op_projection_e1.json")});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out == "averaging: ok\nleibniz: ok\n");
    Result bad = run({"lie-check", "--structure", data("lie_solvable2.json"), "--operator", data("op_projection_e2.json")});
    CHECK(bad.code == kExitMathFailure);
    CHECK(bad.out.find("(e1, e2)") != std::string::npos);
    CHECK(bad.out.find("leibniz: skipped") != std::string::npos);
    CHECK(run({"lie-check", "--structure", data("lie_abelian3.json"), "--operator", data("op_random3.json")}).code == kExitOk);
    CHECK(run({"lie-check", "--structure", data("lie_solvable2.json"), "--operator", data("op_random3.json")}).code ==
          kExitUsage);
}
