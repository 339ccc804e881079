#pragma once

// JSON shapes of the reports. Scalars are emitted as strings ("p/q" for the
// exact backend, 17-significant-digit decimals for float) so nothing is lost.

#include "seqspace/discrepancy.hpp"
#include "seqspace/duals.hpp"
#include "seqspace/transforms.hpp"
#include "seqspace/verify.hpp"

#include "json.hpp"

#include <vector>

namespace seqspace {

template <Scalar T>
nlohmann::json scalar_json(const T& x) {
    return to_string(x);
}

template <Scalar T>
nlohmann::json scalars_json(const std::vector<T>& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const T& x : xs) arr.push_back(to_string(x));
    return arr;
}

/// { space, tail_sup, last_delta, partial_p_sum?, verdict }
template <Scalar T>
nlohmann::json to_json(const MembershipReport<T>& r) {
    nlohmann::json j{{"space", space_name(r.space)},
                     {"tail_sup", scalar_json(r.tail_sup)},
                     {"last_delta", scalar_json(r.last_delta)}};
    if (r.partial_p_sum) j["partial_p_sum"] = scalar_json(*r.partial_p_sum);
    j["verdict"] = verdict_name(r.verdict);
    return j;
}

template <Scalar T>
nlohmann::json to_json(const ConditionReport<T>& r) {
    nlohmann::json j{{"id", condition_name(r.condition)},
                     {"value", scalar_json(r.value)},
                     {"trend", scalars_json(r.trend)},
                     {"verdict", verdict_name(r.verdict)}};
    if (!r.detail.empty()) j["detail"] = scalars_json(r.detail);
    return j;
}

/// { dual, source_space, conditions: [{id, value, trend, verdict}], aggregate }
template <Scalar T>
nlohmann::json to_json(const DualReport<T>& r) {
    nlohmann::json conditions = nlohmann::json::array();
    for (const auto& c : r.conditions) conditions.push_back(to_json(c));
    return {{"dual", dual_name(r.dual)},
            {"source_space", space_name(r.source)},
            {"conditions", conditions},
            {"aggregate", verdict_name(r.aggregate)}};
}

template <Scalar T>
nlohmann::json to_json(const EntryMismatch<T>& m) {
    return {{"n", m.n}, {"k", m.k}, {"printed", scalar_json(m.printed)}, {"reference", scalar_json(m.reference)}};
}

template <Scalar T>
nlohmann::json to_json(const DiscrepancyReport<T>& r) {
    nlohmann::json j{{"variant", variant_name(r.variant)},
                     {"reference", r.reference},
                     {"N", r.order},
                     {"verdict", r.agrees() ? "agree" : "mismatch"},
                     {"max_abs_deviation", scalar_json(r.max_abs_deviation)},
                     {"mismatch_count", r.mismatches.size()}};
    const auto first = r.first_mismatch();
    j["first_mismatch"] = first ? to_json(*first) : nlohmann::json(nullptr);
    const auto structural = r.first_structural_mismatch();
    j["first_structural_mismatch"] = structural ? to_json(*structural) : nlohmann::json(nullptr);
    if (!r.observations.empty()) {
        nlohmann::json obs = nlohmann::json::object();
        for (const auto& [key, value] : r.observations) obs[key] = scalar_json(value);
        j["observations"] = obs;
    }
    return j;
}

template <Scalar T>
nlohmann::json to_json(const VerifyReport<T>& r) {
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& s : r.suites) {
        suites.push_back({{"name", s.name},
                          {"forward_residual", scalar_json(s.forward_residual)},
                          {"reverse_residual", scalar_json(s.reverse_residual)},
                          {"oracle_residual", scalar_json(s.oracle_residual)},
                          {"pass", s.pass}});
    }
    nlohmann::json j{{"N", r.order}, {"suites", suites}};
    if (r.variant) j["paper_variant"] = to_json(*r.variant);
    j["pass"] = r.pass;
    return j;
}

} // namespace seqspace
