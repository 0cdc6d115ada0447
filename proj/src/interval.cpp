#include "burgbounds/interval.hpp"

#include <cmath>

namespace burgbounds {

Interval::Interval(double lb, double ub) : lb_(lb), ub_(ub) {
    if (!std::isfinite(lb) || !std::isfinite(ub)) {
        throw InvalidArgumentError("interval endpoints must be finite");
    }
    if (lb > ub) {
        throw InvalidArgumentError("interval lower bound " + std::to_string(lb) +
                                   " exceeds upper bound " + std::to_string(ub));
    }
}

ProbabilityInterval confidence_interval(double point_pct, double se_pct,
                                        const ConfidenceSpec& spec) {
    if (point_pct < 0.0 || point_pct > 100.0) {
        throw InvalidArgumentError("point percentage must lie in [0, 100]");
    }
    if (se_pct < 0.0) {
        throw InvalidArgumentError("standard error must be nonnegative");
    }
    if (spec.z <= 0.0) {
        throw InvalidArgumentError("confidence multiplier z must be positive");
    }
    double half = spec.z * se_pct;
    double lo = (point_pct - half) / 100.0;
    double hi = (point_pct + half) / 100.0;
    bool clamped = false;
    if (lo < 0.0) {
        lo = 0.0;
        clamped = true;
    }
    if (hi > 1.0) {
        hi = 1.0;
        clamped = true;
    }
    return ProbabilityInterval{Interval(lo, hi), clamped};
}

Interval scale(const Interval& iv, double k) {
    if (!(k >= 0.0)) {
        throw InvalidArgumentError("scale factor must be nonnegative");
    }
    return Interval(iv.lb() * k, iv.ub() * k);
}

Interval divide_by(const Interval& numer, const Interval& denom) {
    if (!(denom.lb() > 0.0)) {
        throw DomainError("division requires a strictly positive denominator interval");
    }
    if (numer.lb() < 0.0) {
        throw DomainError("division requires a nonnegative numerator interval");
    }
    return Interval(numer.lb() / denom.ub(), numer.ub() / denom.lb());
}

bool overlaps(const Interval& a, const Interval& b) noexcept {
    return a.lb() <= b.ub() && b.lb() <= a.ub();
}

}  // namespace burgbounds
