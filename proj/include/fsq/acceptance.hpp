#pragma once

#include <string>
#include <vector>

namespace fsq {

struct AcceptanceResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;  // short summary, or the first failure
    double seconds;
};

// Runs the full acceptance battery (12 criteria) with fixed seeds; results
// are ordered by id and deterministic.
std::vector<AcceptanceResult> run_acceptance();

}  // namespace fsq
