#pragma once

#include <string>

#include "burgbounds/errors.hpp"

namespace burgbounds {

// A closed numeric range [lb, ub]. This is the carrier for every partially
// identified quantity in the pipeline: counts, rates, and probabilities.
class Interval {
public:
    // Rejects lb > ub and non-finite endpoints.
    Interval(double lb, double ub);

    double lb() const noexcept { return lb_; }
    double ub() const noexcept { return ub_; }
    double width() const noexcept { return ub_ - lb_; }

    bool contains(double x) const noexcept { return lb_ <= x && x <= ub_; }

    // True when other is a subset of this interval (closed containment).
    bool contains(const Interval& other) const noexcept {
        return lb_ <= other.lb_ && other.ub_ <= ub_;
    }

    bool operator==(const Interval& other) const noexcept = default;

private:
    double lb_;
    double ub_;
};

// Two-sided normal confidence band. The level is informational; z is what
// the arithmetic uses.
struct ConfidenceSpec {
    double level_pct = 95.0;
    double z = 1.959964;  // exact 97.5% normal quantile to 6 decimals
};

// Result of turning a surveyed percentage into a probability interval.
// Clamping to [0, 1] is rare but possible with large standard errors.
struct ProbabilityInterval {
    Interval value;
    bool clamped = false;
};

// [point - z*se, point + z*se], converted from percent to a fraction and
// clamped into [0, 1]. Full precision; display rounding is a separate step.
ProbabilityInterval confidence_interval(double point_pct, double se_pct,
                                        const ConfidenceSpec& spec = {});

// [k*lb, k*ub]. Only nonnegative factors appear in this pipeline.
Interval scale(const Interval& iv, double k);

// [numer.lb / denom.ub, numer.ub / denom.lb]: dividing by an uncertain
// positive quantity widens the result in both directions.
Interval divide_by(const Interval& numer, const Interval& denom);

// Closed-interval overlap; a shared endpoint counts as overlap.
bool overlaps(const Interval& a, const Interval& b) noexcept;

}  // namespace burgbounds
