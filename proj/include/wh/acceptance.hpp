#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wh {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct CriterionInfo {
    int id;
    std::string name;
    std::vector<std::string> tags;
    double budget_seconds;
};

const std::vector<CriterionInfo>& acceptance_criteria();

// Runs the criteria whose id is listed (all when empty) and whose name or
// tags contain `filter` (all when empty). Prints one PASS/FAIL line each.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, const std::string& filter,
                                            const std::string& fixture_dir, std::ostream& out);

std::string default_fixture_dir();

}  // namespace wh
