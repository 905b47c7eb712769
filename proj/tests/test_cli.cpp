#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "berezin/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "berezin");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = berezin::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// writes to a unique temp file, removed on destruction
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
               "/berezin_cli_test_" + std::to_string(counter++) + ".json";
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* kDiamond = R"({"n": 4, "edges": [
    {"from": 1, "to": 2, "weight": "1"},
    {"from": 1, "to": 3, "weight": "1"},
    {"from": 2, "to": 4, "weight": "1"},
    {"from": 3, "to": 4, "weight": "1"}]})";

} // namespace

TEST_CASE("schur golden output") {
    auto r = run({"schur", "--shape", "(2,1)", "--nvars", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "x1^2*x2 + x1*x2^2\n");
}

TEST_CASE("schur-ext golden output") {
    auto r = run({"schur-ext", "--shape", "(2,1)", "--nvars", "1", "--symbolic-a"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/3*a^3*x1^3 - 1/3*a*x1^3\n");

    auto r2 = run({"schur-ext", "--shape", "(2,1)", "--nvars", "2", "--param-a", "1"});
    CHECK(r2.code == 0);
    CHECK(r2.out == "x1^2*x2 + x1*x2^2\n");

    CHECK(run({"schur-ext", "--shape", "(2,1)", "--nvars", "1"}).code == 2);
    CHECK(run({"schur-ext", "--shape", "(2,1)", "--nvars", "1", "--param-a", "1",
               "--symbolic-a"}).code == 2);
}

TEST_CASE("ssyt listing") {
    auto r = run({"ssyt", "--shape", "(2,1)/(1)", "--nvars", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, r.out.find('\n')) == "4 tableaux");

    auto rj = run({"ssyt", "--shape", "(1)", "--nvars", "2", "--json"});
    CHECK(rj.code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["result"] == "2");
    CHECK(j["tableaux"].size() == 2);
}

TEST_CASE("lgv-check on the diamond") {
    TempFile g(kDiamond);
    auto r = run({"lgv-check", "--graph", g.path, "--sources", "1", "--sinks", "3",
                  "--trials", "3", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    auto rj = run({"lgv-check", "--graph", g.path, "--sources", "1", "--sinks", "4",
                   "--trials", "3", "--seed", "7", "--json"});
    CHECK(rj.code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["checks"][0]["pass"] == true);
    CHECK(j["checks"][0]["report"]["numerator"] == "2");
}

TEST_CASE("lemma1-check") {
    TempFile g(R"({"n": 1, "edges": [{"from": 1, "to": 1, "weight": "w"}]})");
    auto r = run({"lemma1-check", "--graph", g.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("-w + 1") != std::string::npos);
}

TEST_CASE("transfer-check") {
    TempFile f(R"({"N": 2, "layers": [
        {"edges": [{"from": 1, "to": 2, "weight": "x1"}]},
        {"edges": [{"from": 1, "to": 2, "weight": "x2"}]}]})");
    auto r = run({"transfer-check", "--layers", f.path, "--sources", "1", "--sinks", "2",
                  "--trials", "3", "--seed", "11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("x1 + x2") != std::string::npos);
}

TEST_CASE("grassmann-det and minor-check") {
    TempFile g(R"({"n": 2, "edges": [
        {"from": 1, "to": 2, "weight": "u"},
        {"from": 2, "to": 1, "weight": "v"}]})");
    auto r = run({"grassmann-det", "--graph", g.path});
    CHECK(r.code == 0);
    CHECK(r.out == "-u*v + 1\n");

    auto rm = run({"minor-check", "--graph", g.path, "--sources", "1", "--sinks", "2"});
    CHECK(rm.code == 0);
    CHECK(rm.out.find("PASS") != std::string::npos);

    auto re = run({"minor-check", "--graph", g.path, "--sources", "1", "--sinks", ""});
    CHECK(re.code == 2);
}

TEST_CASE("gaussian-check") {
    auto r1 = run({"gaussian-check", "--size", "1", "--trials", "1", "--seed", "5"});
    CHECK(r1.code == 0);
    CHECK(r1.out.find("symbolic 1x1: PASS") != std::string::npos);

    auto r2 = run({"gaussian-check", "--size", "2", "--trials", "3", "--seed", "5"});
    CHECK(r2.code == 0);
}

TEST_CASE("convolve-check and conjugate-check") {
    CHECK(run({"convolve-check", "--shape", "(2,1)", "--nvars", "2"}).code == 0);
    CHECK(run({"conjugate-check", "--shape", "(2,1)", "--nvars", "2"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"schur"}).code == 2);                                     // missing flags
    CHECK(run({"schur", "--shape", "(1,2)", "--nvars", "2"}).code == 2); // not a partition
    CHECK(run({"schur", "--shape", "oops", "--nvars", "2"}).code == 2);
    CHECK(run({"lgv-check", "--graph", "/nonexistent.json", "--sources", "1", "--sinks",
               "1", "--trials", "1", "--seed", "1"}).code == 2);
    TempFile bad("{not json");
    CHECK(run({"lgv-check", "--graph", bad.path, "--sources", "1", "--sinks", "1",
               "--trials", "1", "--seed", "1"}).code == 2);
    TempFile g(kDiamond);
    CHECK(run({"lgv-check", "--graph", g.path, "--sources", "1,2", "--sinks", "4",
               "--trials", "1", "--seed", "1"}).code == 2); // |A| != |B|
}

TEST_CASE("identical argv and seed give byte-identical output") {
    TempFile g(kDiamond);
    std::vector<std::string> argv{"lgv-check", "--graph", g.path, "--sources", "1",
                                  "--sinks", "4", "--trials", "3", "--seed", "99",
                                  "--json"};
    auto r1 = run(argv);
    auto r2 = run(argv);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);

    auto s1 = run({"schur-ext", "--shape", "(3,1)", "--nvars", "2", "--symbolic-a"});
    auto s2 = run({"schur-ext", "--shape", "(3,1)", "--nvars", "2", "--symbolic-a"});
    CHECK(s1.out == s2.out);
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).code == 0);
}
