#pragma once

#include <string>
#include <vector>

namespace nlpot {

struct CriterionResult {
    int index = 0;
    std::string name;
    std::string detail;  // measured vs required
    bool pass = false;
};

// Runs the full acceptance suite (13 criteria); each entry reports one criterion.
std::vector<CriterionResult> run_acceptance_suite();

}  // namespace nlpot
