#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace coha {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::size_t checks = 0;
    std::string detail;  // first failure, or a summary
    double seconds = 0;
};

// Runs the ten end-to-end checks in order. When `out` is set, one line per
// criterion is written as soon as it finishes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, unsigned threads, std::ostream* out);

}  // namespace coha
