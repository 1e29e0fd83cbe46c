#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qg {

struct CheckResult {
    std::string name;
    bool pass = false;
    // first differing entry of a matrix identity, when there is one
    std::optional<std::pair<int, int>> witness;
    std::string detail;
};

struct Report {
    std::string check;
    int n = 0;
    int qsign = 0; // 0 when no R-matrix is involved
    std::vector<CheckResult> results;

    bool pass() const;
    void add(std::string name, bool ok, std::string detail = {},
             std::optional<std::pair<int, int>> witness = std::nullopt);
    nlohmann::json to_json() const;
};

} // namespace qg
