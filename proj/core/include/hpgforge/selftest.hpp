#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hpgforge::selftest {

struct Result {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string note;
};

// Runs the ten acceptance checks, printing one PASS/FAIL line per check.
std::vector<Result> run_all(std::ostream& out);

// Convenience: true iff every check passed.
bool all_passed(const std::vector<Result>& rs);

}  // namespace hpgforge::selftest
