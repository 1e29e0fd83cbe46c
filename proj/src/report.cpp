#include "qgroupoid/report.hpp"

namespace qg {

bool Report::pass() const
{
    for (const auto &r : results)
        if (!r.pass)
            return false;
    return true;
}

void Report::add(std::string name, bool ok, std::string detail, std::optional<std::pair<int, int>> witness)
{
    results.push_back({std::move(name), ok, witness, std::move(detail)});
}

nlohmann::json Report::to_json() const
{
    nlohmann::json rs = nlohmann::json::array();
    for (const auto &r : results) {
        nlohmann::json j = {{"relation", r.name}, {"status", r.pass ? "pass" : "fail"}};
        if (r.witness)
            j["witness_entry"] = {r.witness->first, r.witness->second};
        if (!r.detail.empty())
            j["detail"] = r.detail;
        rs.push_back(std::move(j));
    }
    nlohmann::json out = {{"check", check}, {"n", n}, {"status", pass() ? "pass" : "fail"}, {"relations", rs}};
    if (qsign != 0)
        out["r_matrix_argument"] = qsign > 0 ? "q" : "q^-1";
    return out;
}

} // namespace qg
