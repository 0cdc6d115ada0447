#pragma once

#include <string>
#include <vector>

#include "burgbounds/bounds.hpp"

namespace burgbounds {

enum class Metric { b_a, rate_pop, rate_hh };

const char* metric_name(Metric m) noexcept;
Metric parse_metric(const std::string& name);

enum class Verdict { sign_identified_a_higher, sign_identified_b_higher, not_identified };

const char* verdict_name(Verdict v) noexcept;

struct ComparisonSubject {
    std::string city;
    int year = 0;
    Metric metric = Metric::b_a;
};

// Interval-overlap sign identification of two estimates, with the
// conventional point comparison carried alongside for contrast. The percent
// change is always relative to subject A's point estimate.
struct ComparisonVerdict {
    ComparisonSubject subject_a;
    ComparisonSubject subject_b;
    Interval interval_a{0, 0};
    Interval interval_b{0, 0};
    double point_a = 0.0;
    double point_b = 0.0;
    double point_pct_change = 0.0;
    Verdict verdict = Verdict::not_identified;
    bool incomplete = false;
};

// (new - old) / old * 100.
double percent_change(double old_value, double new_value);

struct MeasuredValue {
    Interval interval{0, 0};
    double point = 0.0;
    bool incomplete = false;
};

// Disjoint intervals identify the sign of the difference; any overlap,
// including a shared endpoint, does not.
ComparisonVerdict compare(const ComparisonSubject& sa, const MeasuredValue& a,
                          const ComparisonSubject& sb, const MeasuredValue& b);

// Over-time comparison within one city; A is the earlier operand as given.
ComparisonVerdict compare_years(const std::vector<BoundsResult>& results,
                                const std::string& city, int year_a, int year_b,
                                Metric metric);

// Cross-city comparison within one year.
ComparisonVerdict compare_cities(const std::vector<BoundsResult>& results,
                                 const std::string& city_a, const std::string& city_b,
                                 int year, Metric metric);

// The metric's interval and conventional point estimate for one result.
MeasuredValue measured_value(const BoundsResult& r, Metric metric);

const BoundsResult& find_result(const std::vector<BoundsResult>& results,
                                const std::string& city, int year);

}  // namespace burgbounds
