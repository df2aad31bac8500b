#pragma once

#include <nlohmann/json.hpp>

#include "stanley/bounds.hpp"
#include "stanley/decomposition.hpp"
#include "stanley/experiment.hpp"

namespace stanley {

inline nlohmann::json to_json(const StanleySpace& s) {
    nlohmann::json vars = nlohmann::json::array();
    for (int j : s.free_vars) vars.push_back("x" + std::to_string(j + 1));
    return {{"generator", s.generator.str()}, {"freeVars", std::move(vars)}};
}

inline nlohmann::json spaces_json(const std::vector<StanleySpace>& spaces) {
    nlohmann::json out = nlohmann::json::array();
    for (const StanleySpace& s : spaces) out.push_back(to_json(s));
    return out;
}

inline nlohmann::json to_json(const StanleyDecomposition& d) {
    return {{"numerator", d.module.numerator().str()},
            {"denominator", d.module.denominator().str()},
            {"n", d.module.vars()},
            {"spaces", spaces_json(d.spaces)}};
}

inline nlohmann::json to_json(const SupportShape& s) {
    return {{"t", s.t}, {"r", s.r}, {"p", s.p}, {"n", s.n}};
}

inline nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const BoundEntry& e : r.entries) {
        nlohmann::json je = {{"name", e.name},
                             {"kind", to_string(e.kind)},
                             {"applicable", e.applicable},
                             {"citation", e.citation}};
        if (e.value) {
            je["value"] = e.value->str();
            je["floor"] = e.value->floored();
        } else {
            je["value"] = nullptr;
            je["floor"] = nullptr;
        }
        entries.push_back(std::move(je));
    }
    nlohmann::json out = {{"shape", to_json(r.shape)},
                          {"intersection", r.intersection.str()},
                          {"entries", std::move(entries)},
                          {"notes", r.notes}};
    if (r.exact) out["exact"] = *r.exact;
    else out["exact"] = nullptr;
    return out;
}

inline nlohmann::json to_json(const experiment::SuiteResult& s) {
    return {{"name", s.name},
            {"cases", s.cases},
            {"violations", s.violations},
            {"messages", s.messages}};
}

}  // namespace stanley
