#pragma once

#include <string>

#include "json.hpp"

#include "shg/arith.hpp"
#include "shg/bounds.hpp"
#include "shg/extract.hpp"
#include "shg/family.hpp"
#include "shg/solver.hpp"

namespace shg {

// Exact values are emitted as JSON numbers while they fit 64 bits and as
// decimal strings beyond that, so no consumer ever sees a rounded count.
inline nlohmann::json json_count(u128 v) {
    if (fits_u64(v)) return nlohmann::json(to_u64(v));
    return nlohmann::json(to_decimal(v));
}

inline nlohmann::json to_json(const Edge& e) {
    nlohmann::json a = nlohmann::json::array();
    for (Vertex v : e) a.push_back(v);
    return a;
}

// Family indices are 1-based in every report, matching the text formats.
inline nlohmann::json to_json(const Matching& m) {
    nlohmann::json a = nlohmann::json::array();
    for (const MatchingEntry& e : m.entries)
        a.push_back({{"family", e.family + 1}, {"edge", to_json(e.edge)}});
    return a;
}

inline nlohmann::json to_json(const BoundReport& r) {
    return {
        {"schema", 1},
        {"n", r.n},
        {"k", r.k},
        {"t", r.t},
        {"cover_bound", json_count(r.cover)},
        {"clique_bound", json_count(r.clique)},
        {"erdos_bound", json_count(r.erdos)},
        {"regime", regime_name(r.regime)},
        {"in_conjecture_range", r.in_conjecture_range},
        {"in_cover_range", r.in_cover_range},
        {"in_theorem_range", r.in_theorem_range},
    };
}

inline nlohmann::json to_json(const ExtractionReport& r) {
    nlohmann::json trace = nlohmann::json::array();
    for (CaseTag tag : r.case_trace) trace.push_back(case_tag_name(tag));
    return {
        {"schema", 1},
        {"matching", to_json(r.matching)},
        {"recursion_depth", r.recursion_depth},
        {"case_trace", trace},
    };
}

}  // namespace shg
