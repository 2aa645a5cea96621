#pragma once

#include <string>
#include <vector>

namespace padic {

// One acceptance criterion: a named check with pinned tolerances.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // deterministic summary (worst residuals, counts)
};

// Runs criteria 1-11 (the per-identity checks) with fixed seeds.
std::vector<CriterionResult> run_core_criteria();

// Runs all criteria including the determinism check (which re-runs the
// core suite under a different thread cap and compares serializations).
std::vector<CriterionResult> run_acceptance();

std::string acceptance_to_json(const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace padic
