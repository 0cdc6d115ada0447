#pragma once

#include <string>

#include "burgbounds/report.hpp"

namespace burgbounds {

// Dot-and-interval chart of one metric: a vertical bar per city-year for the
// identification interval, a point marker for the conventional estimate, and
// an asterisk on entries computed from a single population estimate. Output
// is a self-contained SVG document with deterministic bytes.
std::string chart_svg(const ReportBundle& bundle, Metric metric);

}  // namespace burgbounds
