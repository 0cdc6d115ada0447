#include "burgbounds/domain.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

namespace burgbounds {

HierarchyAssumption::HierarchyAssumption(Interval t) : theta(t) {
    if (theta.lb() < 0.0 || theta.ub() >= 1.0) {
        throw InvalidArgumentError("hierarchy upgrade fraction must satisfy 0 <= lb <= ub < 1");
    }
}

HierarchyAssumption default_hierarchy_assumption() {
    return HierarchyAssumption(Interval(0.005, 0.01));
}

bool Dataset::operator==(const Dataset& other) const {
    return label == other.label && records == other.records &&
           reporting == other.reporting && hierarchy == other.hierarchy &&
           confidence.level_pct == other.confidence.level_pct &&
           confidence.z == other.confidence.z;
}

const char* severity_name(Severity s) noexcept {
    return s == Severity::error ? "error" : "warning";
}

std::string city_key(const std::string& city) {
    std::string key = city;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return key;
}

std::vector<Finding> validate(const Dataset& ds) {
    std::vector<Finding> findings;
    std::set<std::pair<std::string, int>> seen;

    for (const auto& rec : ds.records) {
        auto key = std::make_pair(city_key(rec.city), rec.year);
        if (!seen.insert(key).second) {
            findings.push_back({Severity::error, "duplicate_city_year", rec.city, rec.year,
                                "duplicate record for " + rec.city + " " +
                                    std::to_string(rec.year)});
        }
        if (rec.b_p < 0) {
            findings.push_back({Severity::error, "negative_count", rec.city, rec.year,
                                "police-reported count is negative"});
        }
        if (!(rec.pph > 0.0)) {
            findings.push_back({Severity::error, "nonpositive_pph", rec.city, rec.year,
                                "persons per household must be positive"});
        }
        if (!rec.n_s && !rec.n_f) {
            findings.push_back({Severity::error, "missing_population", rec.city, rec.year,
                                "no population estimate from either program"});
        } else if (!rec.n_s || !rec.n_f) {
            const char* present = rec.n_s ? "state" : "federal";
            findings.push_back({Severity::warning, "single_population", rec.city, rec.year,
                                std::string("only the ") + present +
                                    " population estimate is available; rate bounds for this"
                                    " record are incomplete"});
        }
        if (ds.reporting.find(rec.year) == ds.reporting.end()) {
            findings.push_back({Severity::error, "missing_reporting_year", rec.city, rec.year,
                                "no reporting rate estimate for year " +
                                    std::to_string(rec.year)});
        }
    }

    std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        return std::tie(a.city, a.year, a.code) < std::tie(b.city, b.year, b.code);
    });
    return findings;
}

}  // namespace burgbounds
