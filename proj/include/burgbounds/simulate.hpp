#pragma once

#include <cstdint>
#include <string>

#include "burgbounds/interval.hpp"

namespace burgbounds {

// Synthetic ground truth for exercising the bounds pipeline: a known actual
// count, a true reporting probability, and a true upgrade fraction (the share
// of burglaries known to police that the hierarchy rule reclassifies).
struct SimScenario {
    std::int64_t true_count = 0;
    double p_r_true = 0.0;
    double upgrade_frac_true = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    Interval assumed_theta{0.005, 0.01};
    Interval assumed_pr{0.5, 0.6};

    // Invariant checks; throws on violation.
    void validate() const;
};

struct DeterministicCoverage {
    bool covered = false;
    // False when the true parameters fall outside the assumed intervals, in
    // which case containment is not guaranteed.
    bool within_assumptions = false;
};

struct CoverageReport {
    std::string generator;
    std::int64_t trials = 0;
    std::int64_t covered_count = 0;
    bool covered_expectation = false;
    double coverage_rate = 0.0;
    double mean_interval_width = 0.0;
};

// Name of the random number scheme, echoed into every report so runs can be
// reproduced elsewhere.
const char* generator_name() noexcept;

// One observable police count: burglaries reported by victims thinned again
// by hierarchy-rule upgrades. Deterministic in (seed, trial_index).
std::int64_t simulate_observation(const SimScenario& sc, std::int64_t trial_index);

// Noise-free soundness check: pushes the exact expected police count through
// the bounds pipeline and asks whether the true count is inside. Guaranteed
// true whenever the true parameters lie within the assumed intervals.
DeterministicCoverage deterministic_coverage(const SimScenario& sc);

// Monte Carlo coverage of the pipeline under binomial observation noise.
CoverageReport run_coverage(const SimScenario& sc);

// JSON round-trip for scenario files and report emission.
SimScenario scenario_from_json(const std::string& text);
std::string scenario_to_json(const SimScenario& sc);
std::string report_to_json(const CoverageReport& report, const SimScenario& sc);

}  // namespace burgbounds
