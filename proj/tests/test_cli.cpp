#include "bns/cache.hpp"
#include "bns/golden.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace bns;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(BNS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe))
        output.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("count subcommand") {
    CHECK(run("count --method conjecture -n 12 -s 6 --no-cache").output == "55294096\n");
    CHECK(run("count --method oracle -n 2 -s 1 --no-cache").output == "1\n");
    CHECK(run("count --method oracle -n 9 -s 5 --no-cache").output == "0\n");
    CHECK(run("count --method brute -n 4 -s 2 --no-cache").output == "4\n");
    CHECK(run("count --method oracle --serial -n 7 -s 3 --no-cache").output ==
          "7007\n");
}

TEST_CASE("guard violations exit with code 2") {
    CHECK(run("count --method mir -n 12 -s 5 --no-cache").exit_code == 2);
    CHECK(run("count --method brute -n 5 -s 1 --no-cache").exit_code == 2);
    CHECK(run("count --method oracle -n 4 -s 9 --no-cache").exit_code == 2);
}

TEST_CASE("verify subcommand") {
    const RunResult r = run("verify --n-max 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("all checks passed") != std::string::npos);

    // Deterministic: two runs produce byte-identical reports.
    CHECK(run("verify --n-max 5").output == run("verify --n-max 5").output);

    CHECK(run("verify --n-max 8 --golden-only").exit_code == 0);
}

TEST_CASE("asymp outputs") {
    const RunResult arctic = run("asymp arctic --samples 5");
    CHECK(arctic.exit_code == 0);
    CHECK(arctic.output.rfind("omega,x,y,residual\n", 0) == 0);

    const RunResult arctic_json = run("asymp --format json arctic --samples 3");
    CHECK(arctic_json.exit_code == 0);
    const auto parsed = nlohmann::json::parse(arctic_json.output);
    CHECK(parsed.is_array());
    CHECK(parsed.size() == 3);

    const RunResult cdf = run("asymp cdf -n 10");
    CHECK(cdf.exit_code == 0);
    CHECK(cdf.output.find("10,3,0.250822") != std::string::npos);

    const RunResult tw = run("asymp tw --sigma-min 0 --sigma-max 0 --steps 1");
    CHECK(tw.exit_code == 0);
    CHECK(tw.output.find("0.96937282835526") != std::string::npos);
}

TEST_CASE("cache round trip through the CLI") {
    const std::string dir =
        (std::filesystem::temp_directory_path() / "bns_cache_test").string();
    std::filesystem::remove_all(dir);
    const std::string prefix = "BNS_CACHE_DIR=" + dir + " " + BNS_CLI_PATH;

    FILE* pipe = popen((prefix + " count --method conjecture -n 10 -s 5").c_str(), "r");
    REQUIRE(pipe != nullptr);
    pclose(pipe);

    ResultCache cache(dir);
    const auto record = cache.lookup("conjecture", 10, 5);
    REQUIRE(record.has_value());
    CHECK(record->value == "184041");
    CHECK(ExactInt(record->value) == *golden_value(10, 5));
    CHECK(record->tool_version == kToolVersion);

    // Record serialization round-trips.
    const ResultRecord back = ResultRecord::from_json(record->to_json());
    CHECK(back.method == record->method);
    CHECK(back.n == 10);
    CHECK(back.s == 5);
    CHECK(back.value == record->value);
    std::filesystem::remove_all(dir);
}

TEST_CASE("versioned data file matches the embedded table") {
    std::ifstream in(golden_data_path());
    REQUIRE(in.good());
    const auto data = nlohmann::json::parse(in);
    const auto& table = golden_table();
    REQUIRE(data.at("entries").size() == table.size());
    for (const auto& e : data.at("entries")) {
        const auto key = std::make_pair(e.at("n").get<int>(), e.at("s").get<int>());
        REQUIRE(table.count(key) == 1);
        CHECK(table.at(key) == ExactInt(e.at("value").get<std::string>()));
    }
}
