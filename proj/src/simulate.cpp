#include "burgbounds/simulate.hpp"

#include <cmath>

#include <json.hpp>

#include "burgbounds/bounds.hpp"

namespace burgbounds {

namespace {

// SplitMix64 step (Steele, Lea, Flood 2014). Each trial gets its own stream
// keyed on (seed, trial_index), so trials can run in any order.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

SplitMix64 trial_stream(std::uint64_t seed, std::int64_t trial_index) {
    SplitMix64 keyer(seed);
    std::uint64_t k1 = keyer.next();
    return SplitMix64(k1 ^ (static_cast<std::uint64_t>(trial_index) * 0xD1B54A32D192ED03ULL));
}

std::int64_t draw_binomial(SplitMix64& rng, std::int64_t n, double p) {
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        if (rng.next_unit() < p) ++hits;
    }
    return hits;
}

// Containment with a hair of relative slack so that exact-endpoint scenarios
// survive floating-point round-off.
bool contains_with_slack(const Interval& iv, double x) {
    double eps = 1e-9 * std::max(1.0, std::abs(x));
    return iv.lb() - eps <= x && x <= iv.ub() + eps;
}

Interval pipeline_interval(double observed_bp, const SimScenario& sc) {
    Interval bk(observed_bp * (1.0 + sc.assumed_theta.lb()),
                observed_bp * (1.0 + sc.assumed_theta.ub()));
    return actual_count_bounds(bk, sc.assumed_pr);
}

}  // namespace

void SimScenario::validate() const {
    if (true_count <= 0) {
        throw InvalidArgumentError("true_count must be positive");
    }
    if (!(p_r_true > 0.0 && p_r_true <= 1.0)) {
        throw InvalidArgumentError("p_r_true must lie in (0, 1]");
    }
    if (!(upgrade_frac_true >= 0.0 && upgrade_frac_true < 1.0)) {
        throw InvalidArgumentError("upgrade_frac_true must lie in [0, 1)");
    }
    if (trials < 1) {
        throw InvalidArgumentError("trials must be at least 1");
    }
    if (!(assumed_pr.lb() > 0.0)) {
        throw InvalidArgumentError("assumed_pr must be strictly positive");
    }
    if (assumed_theta.lb() < 0.0 || assumed_theta.ub() >= 1.0) {
        throw InvalidArgumentError("assumed_theta must satisfy 0 <= lb <= ub < 1");
    }
}

const char* generator_name() noexcept { return "splitmix64/bernoulli-sum"; }

std::int64_t simulate_observation(const SimScenario& sc, std::int64_t trial_index) {
    sc.validate();
    SplitMix64 rng = trial_stream(sc.seed, trial_index);
    std::int64_t known = draw_binomial(rng, sc.true_count, sc.p_r_true);
    std::int64_t upgraded = draw_binomial(rng, known, sc.upgrade_frac_true);
    return known - upgraded;
}

DeterministicCoverage deterministic_coverage(const SimScenario& sc) {
    sc.validate();
    double expected_bp = static_cast<double>(sc.true_count) * sc.p_r_true *
                         (1.0 - sc.upgrade_frac_true);
    Interval ba = pipeline_interval(expected_bp, sc);

    double theta_true = sc.upgrade_frac_true / (1.0 - sc.upgrade_frac_true);
    DeterministicCoverage out;
    out.within_assumptions = contains_with_slack(sc.assumed_pr, sc.p_r_true) &&
                             contains_with_slack(sc.assumed_theta, theta_true);
    out.covered = contains_with_slack(ba, static_cast<double>(sc.true_count));
    return out;
}

CoverageReport run_coverage(const SimScenario& sc) {
    sc.validate();
    CoverageReport report;
    report.generator = generator_name();
    report.trials = sc.trials;
    report.covered_expectation = deterministic_coverage(sc).covered;

    double width_sum = 0.0;
    for (std::int64_t t = 0; t < sc.trials; ++t) {
        std::int64_t bp = simulate_observation(sc, t);
        Interval ba = pipeline_interval(static_cast<double>(bp), sc);
        if (ba.contains(static_cast<double>(sc.true_count))) {
            ++report.covered_count;
        }
        width_sum += ba.width();
    }
    report.coverage_rate =
        static_cast<double>(report.covered_count) / static_cast<double>(sc.trials);
    report.mean_interval_width = width_sum / static_cast<double>(sc.trials);
    return report;
}

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Interval interval_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("scenario field '" + field + "' must be a [lb, ub] pair");
    }
    double lb = j[0].get<double>();
    double ub = j[1].get<double>();
    if (lb > ub) {
        throw ParseError("scenario field '" + field + "' has lb > ub");
    }
    return Interval(lb, ub);
}

}  // namespace

SimScenario scenario_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("scenario: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("scenario must be a JSON object");
    }
    for (const char* field : {"true_count", "p_r_true", "upgrade_frac_true", "trials",
                              "seed", "assumed_theta", "assumed_pr"}) {
        if (!doc.contains(field)) {
            throw ParseError(std::string("scenario field '") + field + "' required");
        }
    }
    SimScenario sc;
    sc.true_count = doc["true_count"].get<std::int64_t>();
    sc.p_r_true = doc["p_r_true"].get<double>();
    sc.upgrade_frac_true = doc["upgrade_frac_true"].get<double>();
    sc.trials = doc["trials"].get<std::int64_t>();
    sc.seed = doc["seed"].get<std::uint64_t>();
    sc.assumed_theta = interval_from_json(doc["assumed_theta"], "assumed_theta");
    sc.assumed_pr = interval_from_json(doc["assumed_pr"], "assumed_pr");
    sc.validate();
    return sc;
}

std::string scenario_to_json(const SimScenario& sc) {
    ordered_json doc;
    doc["true_count"] = sc.true_count;
    doc["p_r_true"] = sc.p_r_true;
    doc["upgrade_frac_true"] = sc.upgrade_frac_true;
    doc["trials"] = sc.trials;
    doc["seed"] = sc.seed;
    doc["assumed_theta"] = {sc.assumed_theta.lb(), sc.assumed_theta.ub()};
    doc["assumed_pr"] = {sc.assumed_pr.lb(), sc.assumed_pr.ub()};
    return doc.dump(2) + "\n";
}

std::string report_to_json(const CoverageReport& report, const SimScenario& sc) {
    ordered_json doc;
    doc["generator"] = report.generator;
    doc["scenario"] = ordered_json::parse(scenario_to_json(sc));
    doc["trials"] = report.trials;
    doc["covered_count"] = report.covered_count;
    doc["covered_expectation"] = report.covered_expectation;
    doc["coverage_rate"] = report.coverage_rate;
    doc["mean_interval_width"] = report.mean_interval_width;
    return doc.dump(2) + "\n";
}

}  // namespace burgbounds
