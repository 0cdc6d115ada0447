#pragma once

#include <string>
#include <vector>

#include "burgbounds/bounds.hpp"
#include "burgbounds/compare.hpp"

namespace burgbounds {

// Everything one compute run produces, with the assumptions that produced it
// echoed alongside so no number travels without its provenance.
struct ReportBundle {
    std::string dataset_label;
    std::string version;

    Interval theta{0.005, 0.01};
    double z = 1.959964;
    double confidence_level_pct = 95.0;
    double pop_scale = 100000.0;
    double hh_scale = 1000.0;
    std::string std_basis;

    std::vector<BoundsResult> results;
    // Consecutive-year comparisons per city, all three metrics side by side.
    std::vector<ComparisonVerdict> comparisons;
};

ReportBundle make_bundle(const Dataset& ds, const std::vector<BoundsResult>& results,
                         const EngineOptions& opts);

// Deterministic serialization: fixed key order, fixed display rounding.
std::string bundle_to_json(const ReportBundle& bundle);

const std::vector<std::string>& bundle_table_names();
std::string table_to_csv(const ReportBundle& bundle, const std::string& table);

std::string verdict_to_json(const ComparisonVerdict& v);
std::string findings_to_json(const std::string& label, const std::vector<Finding>& findings);

}  // namespace burgbounds
