#include "rcdc/serialize.hpp"

namespace rcdc {

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json out;
    out["mode"] = report.mode == VerifyMode::Rainbow ? "rainbow" : "strong";
    out["verdict"] = report.verdict;
    auto failures = nlohmann::json::array();
    for (const auto& [u, v] : report.failures) failures.push_back({u, v});
    out["failures"] = std::move(failures);
    auto witnesses = nlohmann::json::array();
    for (const auto& [pair, path] : report.witnesses) {
        witnesses.push_back({{"from", pair.first}, {"to", pair.second}, {"path", path}});
    }
    out["witnesses"] = std::move(witnesses);
    return out;
}

nlohmann::json to_json(const SolveResult& result, const Digraph& d) {
    nlohmann::json out;
    out["target"] = result.target == SolveTarget::Rc ? "rc" : "src";
    switch (result.status) {
        case SolveStatus::Exact: out["status"] = "exact"; break;
        case SolveStatus::Bounds: out["status"] = "bounds"; break;
        case SolveStatus::BudgetExceeded: out["status"] = "budget-exceeded"; break;
    }
    if (result.value) out["value"] = *result.value;
    out["lower"] = result.lower;
    out["upper"] = result.upper;
    out["nodes"] = result.stats.nodes;
    if (result.certificate)
        out["certificate"] = coloring_to_string(d, *result.certificate);
    return out;
}

nlohmann::json to_json(const PredictedValue& value) {
    nlohmann::json out;
    out["family"] = value.family;
    out["params"] = value.params;
    out["rc"] = value.rc ? nlohmann::json(*value.rc) : nlohmann::json(nullptr);
    out["src"] = value.src ? nlohmann::json(*value.src) : nlohmann::json(nullptr);
    out["applicable"] = value.applicable;
    out["reason"] = value.reason;
    return out;
}

}  // namespace rcdc
