#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burgbounds/interval.hpp"

namespace burgbounds {

// One jurisdiction-year of inputs: the police-reported residential burglary
// count, up to two independent population estimates, and the city's average
// persons-per-household figure.
struct CityYearRecord {
    std::string city;
    int year = 0;
    std::int64_t b_p = 0;                    // police-reported burglaries
    std::optional<std::int64_t> n_s;         // state program population estimate
    std::optional<std::int64_t> n_f;         // federal program population estimate
    double pph = 0.0;                        // persons per household

    bool operator==(const CityYearRecord&) const = default;
};

// National survey reporting rate for one year, in percent.
struct ReportingRateEstimate {
    int year = 0;
    double rate_pct = 0.0;
    double se_pct = 0.0;

    bool operator==(const ReportingRateEstimate&) const = default;
};

// Assumed range for the hierarchy-rule upgrade fraction theta. The police
// count understates burglaries known to police by a factor of 1 + theta.
struct HierarchyAssumption {
    Interval theta;

    explicit HierarchyAssumption(Interval t);

    bool operator==(const HierarchyAssumption&) const = default;
};

HierarchyAssumption default_hierarchy_assumption();

struct Dataset {
    std::string label;
    std::vector<CityYearRecord> records;
    std::map<int, ReportingRateEstimate> reporting;
    HierarchyAssumption hierarchy = default_hierarchy_assumption();
    ConfidenceSpec confidence;

    bool operator==(const Dataset& other) const;
};

enum class Severity { warning, error };

struct Finding {
    Severity severity = Severity::error;
    std::string code;
    std::string city;   // empty for dataset-level findings
    int year = 0;       // 0 when not tied to a year
    std::string message;

    bool operator==(const Finding&) const = default;
};

const char* severity_name(Severity s) noexcept;

// Lowercased copy used as the canonical lookup key for city names.
std::string city_key(const std::string& city);

// Consistency checks over an assembled dataset. Pure and deterministic:
// findings come back sorted by (city, year, code). An empty result means the
// dataset is fit for the bounds pipeline; warnings alone do not block it.
std::vector<Finding> validate(const Dataset& ds);

// Thrown when a dataset fails validation with error-severity findings.
class ValidationError : public Error {
public:
    ValidationError(const std::string& message, std::vector<Finding> findings)
        : Error(ErrorKind::validation, message), findings_(std::move(findings)) {}

    const std::vector<Finding>& findings() const noexcept { return findings_; }

private:
    std::vector<Finding> findings_;
};

}  // namespace burgbounds
