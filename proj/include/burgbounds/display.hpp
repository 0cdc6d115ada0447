#pragma once

#include <cstdint>
#include <string>

namespace burgbounds {

// Display rounding, applied only at serialization. Counts and population
// rates print as whole numbers, household rates with two decimals, survey
// percentages and percent changes with one.

// Round half away from zero to a whole count.
std::int64_t round_count(double v) noexcept;

// Round half away from zero at `decimals` places; normalizes -0.
double round_places(double v, int decimals) noexcept;

// Fixed-point text of round_places(v, decimals).
std::string fixed_text(double v, int decimals);

}  // namespace burgbounds
