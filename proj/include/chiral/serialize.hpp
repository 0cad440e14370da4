#pragma once

// JSON encodings (schema "1").
//
//   AbGroup       {"rank": 1, "factors": [2, 12]}
//   GradedGroup   {"top": 7, "groups": {"0": AbGroup, "1": AbGroup, ...}}
//   descriptor    {"schema": "1", "expression": ..., "dim": ..., ...}

#include <string>

#include <json.hpp>

#include "chiral/analysis.hpp"
#include "chiral/graded_group.hpp"
#include "chiral/manifold.hpp"

namespace chiral {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

inline json to_json(const AbGroup& g) {
    return json{{"rank", g.rank()}, {"factors", g.invariant_factors()}};
}

inline AbGroup ab_group_from_json(const json& j) {
    return AbGroup::normalize(j.at("factors").get<std::vector<Int>>(), j.at("rank").get<Int>());
}

inline json to_json(const GradedGroup& h) {
    json groups = json::object();
    for (const auto& [d, g] : h.nonzero()) groups[std::to_string(d)] = to_json(g);
    return json{{"top", h.top()}, {"groups", groups}};
}

inline GradedGroup graded_group_from_json(const json& j) {
    GradedGroup h(j.at("top").get<int>());
    for (const auto& [key, value] : j.at("groups").items()) h.set(std::stoi(key), ab_group_from_json(value));
    return h;
}

inline json to_json(const DegreeSet& s) {
    json j{{"upper_bound", bound_name(s.upper.kind)}};
    if (s.upper.kind == BoundKind::PerfectPowers) j["exponent"] = s.upper.exponent;
    j["exact"] = s.exact;
    j["known_subset"] = s.known;
    j["text"] = to_string(s);
    j["rules"] = s.rules;
    return j;
}

inline json to_json(const AxiomFact& f) {
    json j{{"kind", fact_name(f.kind)}};
    if (f.kind == FactKind::ExternallyProvenStronglyChiral) j["citation"] = f.citation;
    if (f.kind == FactKind::KnownDegreeSet) j["degrees"] = to_json(f.degrees);
    return j;
}

inline json to_json(const ChiralityVerdict& v) {
    return json{{"verdict", verdict_name(v.verdict)}, {"trace", v.trace}, {"blockers", v.blockers}};
}

inline json to_json(const Violation& v) {
    return json{{"kind", violation_name(v.kind)}, {"message", v.message}};
}

/// Full descriptor dump, including derived cohomology and validation results.
inline json to_json(const ManifoldDescriptor& m) {
    json facts = json::array();
    for (const auto& f : m.facts) facts.push_back(to_json(f));
    json violations = json::array();
    for (const auto& v : validate_realizability(m)) violations.push_back(to_json(v));
    const DualityReport duality = check_poincare_duality(m.homology, m.dim);
    json dual{{"ok", duality.ok}};
    if (!duality.ok) dual["message"] = duality.message;

    return json{{"schema", kSchemaVersion},
                {"expression", to_string(m.expr)},
                {"dim", m.dim},
                {"homology", to_json(m.homology)},
                {"cohomology", to_json(m.cohomology())},
                {"euler_characteristic", m.euler_characteristic()},
                {"pi1", to_string(m.pi1)},
                {"connectivity", m.connectivity},
                {"facts", facts},
                {"validation", json{{"poincare_duality", dual}, {"violations", violations}}}};
}

}  // namespace chiral
