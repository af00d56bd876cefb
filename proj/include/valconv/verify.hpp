#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace valconv {

struct CheckResult {
    int criterion = 0;   // acceptance criterion the check belongs to (1..11)
    std::string name;
    double measured = 0.0; // worst deviation observed (violation count for structural checks)
    double limit = 0.0;    // pass needs measured <= limit and the runtime cap held
    bool pass = false;
    double seconds = 0.0;
    std::string details;
};

struct VerifyOptions {
    std::uint64_t seed = 20260819u;
    double grid_spacing = 1e-3; // sampling step of the one dimensional engine
    double tolerance = 0.0;     // > 0 replaces the default limit of value-agreement checks
};

// suites: "algebra", "oned", "steiner", "tau", "all"
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt = {});

bool all_pass(const std::vector<CheckResult>& checks);

} // namespace valconv
