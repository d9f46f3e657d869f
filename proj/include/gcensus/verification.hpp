#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcensus/graph.hpp"

namespace gcensus {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Fixed roster of small instances, one per construction kind, all of order
// at most 120. Shared by the identity and oracle batteries.
std::vector<std::pair<std::string, Graph>> small_construction_suite();

// Runs the numbered verification checks (all of them when `only` is empty).
// Each check is independent; failures carry a diagnostic detail string.
std::vector<CheckResult> run_verification_suite(const std::vector<int>& only = {});

}  // namespace gcensus
