#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "originlab/cli.hpp"
#include "originlab/json_io.hpp"

using namespace originlab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
    const fs::path dir = fs::temp_directory_path() / "originlab_cli_test";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("pnd") {
    auto r = run({"pnd", "--n", "30", "--d", "15", "--exact"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/2\n");
    CHECK(r.err.find("originlab 0.1.0") != std::string::npos);
    CHECK(r.err.find("config_hash=") != std::string::npos);
    r = run({"pnd", "--n", "5", "--d", "2", "--exact"});
    CHECK(r.out == "11/16\n");
    r = run({"pnd", "--n", "5", "--d", "2"});
    CHECK(r.out == "0.6875\n");
    CHECK(run({"pnd", "--n", "5"}).code == cli::kExitConfig);
}

TEST_CASE("classify") {
    const auto seg = temp_file("seg.txt", "# segment through the origin\n1 1\n-1 -1\n");
    auto r = run({"classify", "--points", seg.string()});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("class") == "Boundary");
    CHECK(j.at("verified") == true);

    const auto frac = temp_file("frac.txt", "-3/4, 1\n1/2, -1\n1/2, 1/2\n");
    r = run({"classify", "--points", frac.string(), "--method", "cone"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("class") == "Interior");

    const auto dec = temp_file("dec.txt", "0.5 0\n-0.25 0\n");
    CHECK(run({"classify", "--points", dec.string()}).code == cli::kExitConfig);
    r = run({"classify", "--points", dec.string(), "--dyadic-bits", "8"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("class") == "Boundary");
    CHECK(run({"classify", "--points", "/nonexistent/file"}).code == cli::kExitConfig);
}

TEST_CASE("lp-check exit codes") {
    const auto bounded = temp_file("b.json", R"({"A": [["1","0"],["0","1"]], "c": ["1","1"]})");
    auto r = run({"lp-check", "--input", bounded.string()});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("verdict") == "Bounded");

    const auto unbounded = temp_file("u.csv", "1,0\n0,1\nc,-1,0\n");
    r = run({"lp-check", "--input", unbounded.string(), "--sandwich"});
    CHECK(r.code == cli::kExitUnbounded);
    const Json j = Json::parse(r.out);
    CHECK(j.at("verdict") == "Unbounded");
    CHECK(j.at("sandwich").at("pass") == true);

    const auto zero = temp_file("z.csv", "1,0\nc,0,0\n");
    CHECK(run({"lp-check", "--input", zero.string()}).code == cli::kExitConfig);
}

TEST_CASE("unknown subcommands and help") {
    auto r = run({"frobnicate"});
    CHECK(r.code == cli::kExitConfig);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == cli::kExitConfig);
    for (const char* sub : {"pnd", "classify", "lp-check", "simulate", "enumerate", "sweep", "decay", "sparse", "asym"}) {
        r = run({sub, "--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("Usage") != std::string::npos);
    }
}

TEST_CASE("simulate round-trips its own output") {
    auto r = run({"simulate", "--dist", "gaussian", "--n", "8", "--d", "3", "--trials", "300", "--seed", "99"});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("master_seed=99") != std::string::npos);
    const auto result = temp_file("result.json", r.out);
    const auto again = run({"simulate", "--config", result.string(), "--threads", "2"});
    REQUIRE(again.code == 0);
    CHECK(again.out == r.out);

    const auto audit = fs::temp_directory_path() / "originlab_cli_test" / "audit.csv";
    r = run({"simulate", "--kind", "lp", "--n", "5", "--d", "2", "--trials", "20", "--seed", "1", "--audit",
             audit.string(), "--cost", "1,1", "--debug-sandwich"});
    REQUIRE(r.code == 0);
    std::ifstream in(audit);
    std::string first;
    std::getline(in, first);
    CHECK(first == "trial,class");
    CHECK(Json::parse(r.out).at("sandwich").at("violations") == 0);
}

TEST_CASE("simulate generates a seed when none is given") {
    const auto r = run({"simulate", "--n", "3", "--d", "1", "--trials", "10"});
    CHECK(r.code == 0);
    CHECK(r.err.find("(generated)") != std::string::npos);
}

TEST_CASE("configuration errors exit with 2") {
    CHECK(run({"simulate", "--n", "3", "--d", "1", "--trials", "0", "--seed", "1"}).code == cli::kExitConfig);
    CHECK(run({"simulate", "--dist", "uniform", "--n", "3", "--d", "1", "--seed", "1"}).code == cli::kExitConfig);
    CHECK(run({"decay", "--dist", "gaussian", "--d-list", "3", "--seed", "1"}).code == cli::kExitConfig);
    CHECK(run({"enumerate", "--n", "10", "--d", "3"}).code == cli::kExitConfig);
    CHECK(run({"asym", "--d", "2", "--n", "4", "--atoms", "1:1/2,-2:1/2", "--seed", "1"}).code == cli::kExitConfig);
}

TEST_CASE("table commands") {
    auto r = run({"enumerate", "--n", "3", "--d", "1"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("probabilities").at("contains") == "3/4");

    r = run({"sweep", "--d", "2", "--n-min", "2", "--n-max", "5", "--trials", "200", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x,freq,lo,hi,theory\n", 0) == 0);
    CHECK(r.err.find("exact_crossing=4") != std::string::npos);

    r = run({"decay", "--d-list", "2,3", "--trials", "500", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x,freq,lo,hi,theory\n", 0) == 0);

    r = run({"sparse", "--d", "3", "--n", "6", "--p-grid", "0.5,1", "--trials", "200", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.err.find("critical_p=") != std::string::npos);

    r = run({"asym", "--d", "2", "--n", "6", "--trials", "300", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("report").contains("gap"));
}

TEST_CASE("thread count from the environment does not change results") {
    const std::vector<std::string> args{"simulate", "--n", "8", "--d", "3", "--trials", "400", "--seed", "5"};
    ::setenv("ORIGINLAB_THREADS", "1", 1);
    const auto a = run(args);
    ::setenv("ORIGINLAB_THREADS", "4", 1);
    const auto b = run(args);
    ::unsetenv("ORIGINLAB_THREADS");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
