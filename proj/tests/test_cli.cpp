#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qmzv/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qmzv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = qmzv::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string first_token(const std::string& s) { return s.substr(0, s.find_first_of(" \n")); }

}  // namespace

TEST_CASE("value command") {
    auto r = run({"value", "--n", "7", "--m", "2", "--s", "2", "--method", "closed"});
    CHECK(r.code == 0);
    CHECK(first_token(r.out) == "1");
    CHECK(r.out.find("closed") != std::string::npos);
    CHECK(first_token(run({"value", "--n", "5", "--m", "0", "--s", "3"}).out) == "1");
    CHECK(first_token(run({"value", "--n", "9", "--m", "3", "--s", "1", "--method", "product"}).out) == "14");
    for (const char* method : {"brute", "product", "stirling", "bell", "det", "closed"})
        CHECK(first_token(run({"value", "--n", "8", "--m", "2", "--s", "2", "--method", method}).out) ==
              first_token(run({"value", "--n", "8", "--m", "2", "--s", "2", "--method", "brute"}).out));
}

TEST_CASE("value formats") {
    auto j = nlohmann::json::parse(run({"value", "--n", "7", "--m", "2", "--s", "3", "--format", "json"}).out);
    CHECK(j["value"] == "17/7");
    CHECK(j["method"] == "product");
    CHECK(!j.contains("approx"));
    auto ja = nlohmann::json::parse(
        run({"value", "--n", "7", "--m", "2", "--s", "3", "--format", "json", "--approx"}).out);
    CHECK(ja["approx"].get<std::string>().rfind("2.428571428571", 0) == 0);
    auto csv = run({"value", "--n", "7", "--m", "2", "--s", "3", "--format", "csv"}).out;
    CHECK(csv == "n,m,s,method,value\n7,2,3,product,17/7\n");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == qmzv::exit_bad_arguments);
    CHECK(run({"frobnicate"}).code == qmzv::exit_bad_arguments);
    CHECK(run({"value", "--n", "7", "--m", "2"}).code == qmzv::exit_bad_arguments);
    CHECK(run({"value", "--n", "1", "--m", "0", "--s", "1"}).code == qmzv::exit_bad_arguments);
    CHECK(run({"value", "--n", "7", "--m", "2", "--s", "2", "--method", "guess"}).code == qmzv::exit_bad_arguments);
    CHECK(run({"value", "--n", "x", "--m", "2", "--s", "2"}).code == qmzv::exit_bad_arguments);
    CHECK(run({"value", "--n", "7", "--m", "1", "--s", "1", "--format", "xml"}).code == qmzv::exit_bad_arguments);
    CHECK(run({"table", "hexagons"}).code == qmzv::exit_bad_arguments);
    CHECK(run({"verify", "nothing"}).code == qmzv::exit_bad_arguments);
    auto budget = run({"value", "--n", "40", "--m", "20", "--s", "1", "--method", "brute", "--budget", "1000"});
    CHECK(budget.code == qmzv::exit_budget);
    CHECK(!budget.err.empty());
    CHECK(run({"value", "--n", "9", "--m", "2", "--s", "4", "--method", "closed"}).code == qmzv::exit_unsupported);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget from the environment") {
    ::setenv("QMZV_BUDGET", "10", 1);
    CHECK(run({"value", "--n", "12", "--m", "5", "--s", "1", "--method", "brute"}).code == qmzv::exit_budget);
    // the flag wins over the environment
    CHECK(run({"value", "--n", "12", "--m", "5", "--s", "1", "--method", "brute", "--budget", "1000"}).code == 0);
    ::setenv("QMZV_BUDGET", "zero", 1);
    CHECK(run({"value", "--n", "12", "--m", "5", "--s", "1", "--method", "brute"}).code == qmzv::exit_bad_arguments);
    ::unsetenv("QMZV_BUDGET");
    CHECK(run({"value", "--n", "12", "--m", "5", "--s", "1", "--method", "brute"}).code == 0);
}

TEST_CASE("table command") {
    // C(5, m)/(m + 1)
    CHECK(run({"table", "zeta", "--n", "6", "--s", "1"}).out == "1 5/2 10/3 5/2 1 1/6\n");
    CHECK(run({"table", "stirling1", "--r", "1", "--s", "1", "--q", "1", "--nmax", "4"}).out ==
          "1\n1 1\n2 3 1\n6 11 6 1\n");
    CHECK(run({"table", "stirling2", "--r", "1", "--s", "1", "--q", "1", "--n-max", "4"}).out ==
          "1\n1 1\n1 3 1\n1 7 6 1\n");
    CHECK(run({"table", "rstirling", "--r", "2", "--nmax", "4"}).out == "1\n2 1\n6 5 1\n");
    CHECK(run({"table", "bernoulli", "--kind", "norlund", "--nmax", "4"}).out == "1 -1/2 5/6 -9/4 251/30\n");
    CHECK(run({"table", "bernoulli", "--kind", "order", "--alpha", "1", "--nmax", "4"}).out == "1 -1/2 1/6 0 -1/30\n");
    CHECK(run({"table", "bernoulli", "--kind", "degenerate", "--n", "2", "--nmax", "3"}).out == "1 -1/4 1/8 -3/32\n");
    CHECK(run({"table", "bernoulli", "--kind", "sideways"}).code == qmzv::exit_bad_arguments);
    CHECK(run({"table", "stirling1", "--r", "1", "--s", "1", "--nmax", "3"}).out == "1\n1 1\nq + 1 q + 2 1\n");
    CHECK(run({"table", "stirling1", "--r", "1", "--s", "1", "--q", "zeta:3", "--nmax", "3"}).code == 0);

    auto j = nlohmann::json::parse(run({"table", "zeta", "--n-max", "4", "--s", "2", "--format", "json"}).out);
    CHECK(j["table"] == "zeta");
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][2]["values"][0] == "1");
    auto csv = run({"table", "zeta", "--n", "3", "--s", "1", "--format", "csv"}).out;
    CHECK(csv == "row,col,value\n3,0,1\n3,1,1\n3,2,1/3\n");
}

TEST_CASE("poly command") {
    CHECK(run({"poly", "--m", "1", "--s", "2"}).out == "-1/12*n^2 + 1/2*n - 5/12\n");
    auto j = nlohmann::json::parse(run({"poly", "--m", "1", "--s", "3", "--format", "json"}).out);
    CHECK(j["degree"] == 2);
    CHECK(j["coefficients"] == nlohmann::json::array({"-3/8", "1/2", "-1/8"}));
}

TEST_CASE("verify command") {
    auto r = run({"verify", "s2", "--n-max", "20", "--m-max", "8", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["suite"] == "s2");
    CHECK(j["cases"].get<unsigned>() > 0);
    CHECK(j["failures"].empty());
    CHECK(j.contains("elapsed_ms"));
    CHECK(run({"verify", "routes", "--n-max", "6", "--s-max", "2"}).code == 0);
    CHECK(run({"verify", "logf", "--s-max", "2", "--trunc", "8"}).code == 0);
}

TEST_CASE("verify reports are independent of the job count") {
    auto strip = [](std::string s) {
        auto j = nlohmann::json::parse(s);
        j.erase("elapsed_ms");
        return j.dump();
    };
    const auto one = run({"verify", "routes", "--n-max", "7", "--s-max", "2", "--format", "json"});
    const auto four = run({"verify", "routes", "--n-max", "7", "--s-max", "2", "--format", "json", "--jobs", "4"});
    CHECK(strip(one.out) == strip(four.out));
    CHECK(run({"table", "zeta", "--n-max", "9", "--s", "3"}).out == run({"table", "zeta", "--n-max", "9", "--s", "3"}).out);
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "qmzv_cli_test.json";
    std::filesystem::remove(path);
    auto r = run({"value", "--n", "7", "--m", "2", "--s", "2", "--format", "json", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    CHECK(j["value"] == "1");
    std::filesystem::remove(path);
    CHECK(run({"value", "--n", "7", "--m", "2", "--s", "2", "--out", "/nonexistent/dir/x"}).code ==
          qmzv::exit_bad_arguments);
}

TEST_CASE("installed binary") {
    const std::string cmd = std::string(QMZV_CLI_PATH) + " value --n 9 --m 3 --s 1 > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    const std::string bad = std::string(QMZV_CLI_PATH) + " value --n 9 --m 2 --s 4 --method closed 2> /dev/null";
    const int status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == qmzv::exit_unsupported);
}
