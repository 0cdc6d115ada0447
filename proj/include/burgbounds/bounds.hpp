#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burgbounds/domain.hpp"
#include "burgbounds/interval.hpp"

namespace burgbounds {

// Which population estimate feeds the conventional point-estimate rates.
enum class PopulationBasis { state, federal, mid };

const char* population_basis_name(PopulationBasis b) noexcept;
PopulationBasis parse_population_basis(const std::string& name);

struct EngineOptions {
    double pop_scale = 100000.0;  // persons per rate unit
    double hh_scale = 1000.0;     // households per rate unit
    PopulationBasis std_basis = PopulationBasis::state;
};

// All derived quantities for one city-year. Intervals are carried at full
// precision; rounding happens at serialization.
struct BoundsResult {
    std::string city;
    int year = 0;
    std::int64_t b_p = 0;

    Interval b_k{0, 0};       // burglaries known to police
    Interval b_a{0, 0};       // actual burglaries
    Interval rate_pop{0, 0};  // per pop_scale persons
    Interval rate_hh{0, 0};   // per hh_scale households

    double std_rate_pop = 0.0;  // conventional point estimates
    double std_rate_hh = 0.0;
    std::string std_basis;  // which population estimate produced them

    std::optional<std::int64_t> h_s;
    std::optional<std::int64_t> h_f;

    bool incomplete = false;  // single population estimate only
};

// Undo the hierarchy-rule undercount: [b_p*(1+theta.lb), b_p*(1+theta.ub)].
Interval known_count_bounds(std::int64_t b_p, const Interval& theta);

// Scale counts known to police up by the uncertain reporting probability.
Interval actual_count_bounds(const Interval& bk, const Interval& pr);

// Population divided by persons-per-household, rounded to the nearest whole
// household.
std::int64_t households(std::int64_t n, double pph);

// Outer limits of the rate: lowest count over the largest population through
// highest count over the smallest. With a single estimate the result is the
// plain ratio and the caller should flag the record incomplete.
Interval rate_bounds_population(const Interval& ba, std::optional<std::int64_t> n_s,
                                std::optional<std::int64_t> n_f, double scale = 100000.0);

Interval rate_bounds_household(const Interval& ba, std::optional<std::int64_t> h_s,
                               std::optional<std::int64_t> h_f, double scale = 1000.0);

struct StandardRates {
    double rate_pop = 0.0;
    double rate_hh = 0.0;
};

// The conventional point estimates that ignore underreporting entirely.
StandardRates standard_rates(std::int64_t b_p, std::int64_t n, double pph,
                             double pop_scale = 100000.0, double hh_scale = 1000.0);

// Full pipeline over a validated dataset, one result per record, ordered by
// (city, year). Refuses to run when validation reports errors.
std::vector<BoundsResult> compute_all(const Dataset& ds, const EngineOptions& opts = {});

}  // namespace burgbounds
