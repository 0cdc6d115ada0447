#include "burgbounds/display.hpp"

#include <cmath>
#include <cstdio>

namespace burgbounds {

std::int64_t round_count(double v) noexcept { return std::llround(v); }

double round_places(double v, int decimals) noexcept {
    double factor = std::pow(10.0, decimals);
    return std::round(v * factor) / factor + 0.0;
}

std::string fixed_text(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, round_places(v, decimals));
    return buf;
}

}  // namespace burgbounds
