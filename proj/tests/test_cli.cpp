/**
 * @file test_cli.cpp
 * @brief End-to-end tests of the command-line tool: outputs and exit codes.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "skein/jones_2bridge.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SKEIN_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("jones: JSON output matches the library and round-trips") {
    const Run r = run("jones --algebra sl2 --color 1 --link 2 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto parsed = skein::jones_result_from_json(j);
    CHECK(parsed == skein::colored_jones(skein::Algebra::A1, skein::TwoBridgeSpec({1}), 1));
    CHECK(j.at("display") == "-q^(1/2) - q^(5/2)");
    CHECK(run("jones --algebra sl2 --color 1 --link 2 --format json").out == r.out);
}

TEST_CASE("jones: trivial color and sl3") {
    const Run r = run("jones --algebra sl2 --color 0 --link 2,-2 --format json");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("display") == "1");
    const Run s = run("jones --algebra sl3 --color 1 --link 4 --format json");
    REQUIRE(s.code == 0);
    CHECK(skein::jones_result_from_json(nlohmann::json::parse(s.out)) ==
          skein::colored_jones(skein::Algebra::A2, skein::TwoBridgeSpec({2}), 1));
    CHECK(run("jones --link=-2,4 --color 1 --format latex").code == 0);
}

TEST_CASE("expand and bubble") {
    const Run r = run("expand --algebra sl2 --n 1 --m 1 --kind half --format json");
    REQUIRE(r.code == 0);
    const auto e = skein::twist_expansion_from_json(nlohmann::json::parse(r.out));
    CHECK(e.coefficients.at(0) == skein::RationalFunction(skein::LaurentPoly::q_power(-1, 4)));
    CHECK(e.coefficients.at(1) == skein::RationalFunction(skein::LaurentPoly::q_power(1, 4)));
    CHECK(run("expand --algebra sl3 --n 1 --m 1 --kind full").code == 0);
    const Run b = run("bubble --algebra sl2 --n 2 --m 2 --k 1 --l 1 --format json");
    REQUIRE(b.code == 0);
    CHECK(nlohmann::json::parse(b.out).at("coefficients").size() == 2);
}

TEST_CASE("exit codes") {
    CHECK(run("jones --link 3").code == 2);
    CHECK(run("jones --link 2,x").code == 2);
    CHECK(run("jones --algebra sl5 --link 2").code == 2);
    CHECK(run("expand --algebra sl2 --kind half_pos").code == 2);
    CHECK(run("bubble --n 1 --m 1 --k 2").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify --suite nope").code == 2);
    CHECK(run("jones --link 2,2 --color 2 --format json").code == 0);
}

TEST_CASE("verify: machine-readable report") {
    const Run r = run("verify --suite qident --max-n 4");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("passed") == true);
    CHECK(j.at("suites").at(0).at("suite") == "qident");
}

TEST_CASE("verify: resource limits surface as failed checks") {
    CHECK(run("verify --suite jones --max-n 2 --max-terms 2").code == 1);
}
