#pragma once

#include <string>
#include <vector>

namespace isotower::selftest {

struct Options {
    long long samples = 500;
    unsigned long long seed = 42;
    double tol = 0.0;  // 0 selects each check's own tolerance
};

struct CheckResult {
    std::string name;
    long long samples = 0;
    long long failures = 0;
    double worst = 0.0;
    double tol = 0.0;
    bool pass = true;
    std::string note;
};

std::vector<CheckResult> run_facial(const Options& opt);
std::vector<CheckResult> run_opcalc(const Options& opt);
std::vector<CheckResult> run_tower(const Options& opt);
std::vector<CheckResult> run_kresidue(const Options& opt);

// suite: "all", "facial", "opcalc", "tower" or "kresidue".
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt);

} // namespace isotower::selftest
