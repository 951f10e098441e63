#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

// End-to-end checks of the installed command surface; POLGAME_CLI is the
// binary path injected by the build.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(POLGAME_CLI) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("exit-code contract: 0 provable, 1 not, 2 error") {
    CHECK(run("prove \"() |-o ()\"").exit_code == 0);
    CHECK(run("prove \"() |-o ( a:{} )\"").exit_code == 1);
    CHECK(run("prove \"() |-o\"").exit_code == 2);
    CHECK(run("prove \"() |-o ()\" --engine warp").exit_code == 2);
    for (const char* engine : {"linear", "dp", "naive"}) {
        CHECK(run(std::string("prove \"() |-o ()\" --engine ") + engine).exit_code == 0);
        CHECK(run(std::string("prove \"( a:{} ) |-o ()\" --engine ") + engine).exit_code == 0);
        CHECK(run(std::string("prove \"() |-o ( a:{} )\" --engine ") + engine).exit_code == 1);
    }
}

TEST_CASE("profile of the worked example") {
    auto r = run("profile \"oxr((2:{2:()}),{1:(),1:(2:{})})\" --measured");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[1,2,6,8,8]\n");
    CHECK(run("profile \"oxr((2:{2:()}),{1:(),1:(2:{})})\" --formula").out == "[1,2,6,8,8]\n");
}

TEST_CASE("eval --count reports the exponential leaf count") {
    auto r = run("eval \"bang((3:{2:()}))\" --engine naive --count");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"leaves\":48") != std::string::npos);
}

TEST_CASE("normalize runs the worked composition") {
    auto r = run(
        "normalize \"( a -> >c . ( ), b -> >e . ( ) ) ; <b . { e -> >a . ( ), f -> >b . ( ) } "
        ":: ( a:{}, b:{} ) |- { a:(), b:() }\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == ">a . ( )\n");
}

TEST_CASE("random generation is deterministic for a fixed seed") {
    auto a = run("random --depth 4 --max-branch 3 --seed 7");
    auto b = run("random --depth 4 --max-branch 3 --seed 7");
    auto c = run("random --depth 4 --max-branch 3 --seed 8");
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("json records carry the stable envelope") {
    auto r = run("eval \"()\" --engine dp --json");
    CHECK(r.exit_code == 0);
    for (const char* key : {"\"command\":", "\"seed\":", "\"engine\":", "\"verdict\":",
                            "\"stats\":"})
        CHECK(r.out.find(key) != std::string::npos);
    auto p = run("profile \"()\" --json");
    CHECK(p.out.find("\"value\":[1]") != std::string::npos);
}

TEST_CASE("budget failures exit 2 where the linear engine still answers") {
    auto naive = run("eval \"bang((6:{6:()}))\" --engine naive");
    CHECK(naive.exit_code == 2);
    CHECK(naive.out.find("budget") != std::string::npos);
    auto linear = run("eval \"bang((6:{6:()}))\" --engine linear");
    CHECK(linear.exit_code == 0);
}

TEST_CASE("stdin input") {
    std::string cmd = std::string("echo '()' | ") + POLGAME_CLI + " eval - --engine linear 2>&1";
    std::array<char, 256> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    CHECK(WEXITSTATUS(pclose(p)) == 0);
    CHECK(out == "true\n");
}

TEST_CASE("extract emits a typechecking witness or fails with exit 1") {
    auto ok = run("extract \"( a:{}, b:{} ) |-o ( a:{ c:(), d:() }, b:{ e:(), f:() } )\"");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("->") != std::string::npos);
    CHECK(run("extract \"() |-o ( a:{} )\"").exit_code == 1);
}

TEST_CASE("wall-clock timeout exits 2 with a diagnostic") {
    // the expansion needs a few hundred ms; the deadline fires first
    auto r = run("eval \"bang((5:{5:()}))\" --engine naive --max-nodes 10000000 "
                 "--timeout-ms 50");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("timed out") != std::string::npos);
}

TEST_CASE("bench suites emit canonical rows") {
    auto growth = run("bench --suite growth --json");
    CHECK(growth.exit_code == 0);
    CHECK(growth.out.find("\"family\":\"L\"") != std::string::npos);
    CHECK(growth.out.find("\"family\":\"A\"") != std::string::npos);
    auto engines = run("bench --suite engines --sizes 3 --json --max-nodes 200000");
    CHECK(engines.exit_code == 0);
    CHECK(engines.out.find("\"engine\":\"linear\"") != std::string::npos);
    auto sc = run("bench --suite shortcircuit --sizes 2,3");
    CHECK(sc.exit_code == 0);
    CHECK(sc.out.find("mean_sc") != std::string::npos);
}
