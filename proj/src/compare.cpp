#include "burgbounds/compare.hpp"

#include <cmath>

namespace burgbounds {

const char* metric_name(Metric m) noexcept {
    switch (m) {
        case Metric::b_a: return "b_a";
        case Metric::rate_pop: return "rate_pop";
        case Metric::rate_hh: return "rate_hh";
    }
    return "b_a";
}

Metric parse_metric(const std::string& name) {
    if (name == "b_a") return Metric::b_a;
    if (name == "rate_pop") return Metric::rate_pop;
    if (name == "rate_hh") return Metric::rate_hh;
    throw LookupError("unknown metric '" + name + "' (expected b_a, rate_pop, or rate_hh)");
}

const char* verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::sign_identified_a_higher: return "SIGN_IDENTIFIED_A_HIGHER";
        case Verdict::sign_identified_b_higher: return "SIGN_IDENTIFIED_B_HIGHER";
        case Verdict::not_identified: return "NOT_IDENTIFIED";
    }
    return "NOT_IDENTIFIED";
}

double percent_change(double old_value, double new_value) {
    if (old_value == 0.0) {
        throw DomainError("percent change is undefined for a zero baseline");
    }
    return (new_value - old_value) / old_value * 100.0;
}

ComparisonVerdict compare(const ComparisonSubject& sa, const MeasuredValue& a,
                          const ComparisonSubject& sb, const MeasuredValue& b) {
    ComparisonVerdict v;
    v.subject_a = sa;
    v.subject_b = sb;
    v.interval_a = a.interval;
    v.interval_b = b.interval;
    v.point_a = a.point;
    v.point_b = b.point;
    // NaN marks an undefined change (zero baseline); serializers render null.
    v.point_pct_change =
        a.point == 0.0 ? std::nan("") : percent_change(a.point, b.point);
    v.incomplete = a.incomplete || b.incomplete;
    if (!overlaps(a.interval, b.interval)) {
        v.verdict = a.interval.lb() > b.interval.ub() ? Verdict::sign_identified_a_higher
                                                      : Verdict::sign_identified_b_higher;
    } else {
        v.verdict = Verdict::not_identified;
    }
    return v;
}

MeasuredValue measured_value(const BoundsResult& r, Metric metric) {
    switch (metric) {
        case Metric::b_a:
            return {r.b_a, static_cast<double>(r.b_p), r.incomplete};
        case Metric::rate_pop:
            return {r.rate_pop, r.std_rate_pop, r.incomplete};
        case Metric::rate_hh:
            return {r.rate_hh, r.std_rate_hh, r.incomplete};
    }
    return {r.b_a, static_cast<double>(r.b_p), r.incomplete};
}

const BoundsResult& find_result(const std::vector<BoundsResult>& results,
                                const std::string& city, int year) {
    std::string key = city_key(city);
    for (const auto& r : results) {
        if (r.year == year && city_key(r.city) == key) return r;
    }
    throw LookupError("no result for city '" + city + "' in year " + std::to_string(year));
}

ComparisonVerdict compare_years(const std::vector<BoundsResult>& results,
                                const std::string& city, int year_a, int year_b,
                                Metric metric) {
    const BoundsResult& a = find_result(results, city, year_a);
    const BoundsResult& b = find_result(results, city, year_b);
    return compare({a.city, year_a, metric}, measured_value(a, metric),
                   {b.city, year_b, metric}, measured_value(b, metric));
}

ComparisonVerdict compare_cities(const std::vector<BoundsResult>& results,
                                 const std::string& city_a, const std::string& city_b,
                                 int year, Metric metric) {
    const BoundsResult& a = find_result(results, city_a, year);
    const BoundsResult& b = find_result(results, city_b, year);
    return compare({a.city, year, metric}, measured_value(a, metric),
                   {b.city, year, metric}, measured_value(b, metric));
}

}  // namespace burgbounds
