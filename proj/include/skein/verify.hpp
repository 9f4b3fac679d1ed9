/**
 * @file verify.hpp
 * @brief Formula-versus-oracle verification suites.
 *
 * Each suite runs a family of exact checks and records one Check per instance.
 * The suites are shared by the command-line `verify` command and the acceptance
 * test binary; every Check carries the acceptance criterion (1-10) it supports.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "skein/common.hpp"

namespace skein::verify {

struct Check {
    std::string suite;
    std::string name;  ///< instance description, e.g. "idempotent n=3"
    int criterion = 0;
    bool passed = false;
    std::string detail;  ///< mismatch or exception text for failures
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0.0;

    bool passed() const;
    std::size_t failures() const;
};

struct VerifyOptions {
    int max_n = -1;  ///< -1: the suite's default scale
    unsigned seed = 1;  ///< seed for randomized reduction orders
    std::size_t max_terms = kDefaultMaxTerms;
};

/// Names accepted by run_suite: qident, jw, clasp, twist, bubble, jones.
const std::vector<std::string>& suite_names();

/// Default max_n of a suite (the acceptance scale).
int default_max_n(const std::string& suite);

/// Run one suite. Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts = {});

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const SuiteReport& r);

}  // namespace skein::verify
