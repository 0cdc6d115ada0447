#include "burgbounds/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "burgbounds/display.hpp"

namespace burgbounds {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

// Largest 1/2/5 * 10^k step that yields at most `max_ticks` intervals.
double nice_step(double range, int max_ticks) {
    if (range <= 0.0) return 1.0;
    double rough = range / max_ticks;
    double mag = std::pow(10.0, std::floor(std::log10(rough)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * m >= rough) return mag * m;
    }
    return mag * 10.0;
}

std::string metric_title(const ReportBundle& b, Metric m) {
    switch (m) {
        case Metric::rate_pop:
            return "Residential Burglary Rate per " +
                   std::to_string(round_count(b.pop_scale)) + " Persons";
        case Metric::rate_hh:
            return "Residential Burglary Rate per " +
                   std::to_string(round_count(b.hh_scale)) + " Households";
        case Metric::b_a:
            return "Actual Residential Burglaries";
    }
    return "";
}

std::string tick_label(Metric m, double v) {
    if (m == Metric::rate_hh) return fixed_text(v, v < 10 ? 1 : 0);
    return std::to_string(round_count(v));
}

// Charts draw the display-rounded values, so every plotted number is exactly
// one that appears in the report tables.
double display_value(Metric m, double v) {
    if (m == Metric::rate_hh) return round_places(v, 2);
    return static_cast<double>(round_count(v));
}

}  // namespace

std::string chart_svg(const ReportBundle& bundle, Metric metric) {
    if (bundle.results.empty()) {
        throw InvalidArgumentError("cannot chart an empty result set");
    }

    // group results by city, preserving the deterministic result order
    std::vector<std::string> cities;
    std::map<std::string, std::vector<const BoundsResult*>> by_city;
    for (const auto& r : bundle.results) {
        auto key = city_key(r.city);
        if (by_city[key].empty()) cities.push_back(r.city);
        by_city[key].push_back(&r);
    }
    std::size_t max_years = 0;
    double vmax = 0.0;
    bool any_incomplete = false;
    for (const auto& r : bundle.results) {
        MeasuredValue mv = measured_value(r, metric);
        vmax = std::max({vmax, display_value(metric, mv.interval.ub()),
                         display_value(metric, mv.point)});
        any_incomplete = any_incomplete || r.incomplete;
    }
    for (const auto& [key, seq] : by_city) {
        max_years = std::max(max_years, seq.size());
    }

    const double margin_left = 76.0;
    const double margin_right = 18.0;
    const double margin_top = 46.0;
    const double margin_bottom = any_incomplete ? 96.0 : 78.0;
    const double slot_w = 26.0;
    const double group_gap = 18.0;
    const double plot_h = 380.0;

    double plot_w =
        static_cast<double>(cities.size()) * (static_cast<double>(max_years) * slot_w) +
        (static_cast<double>(cities.size()) - 1.0) * group_gap;
    double width = margin_left + plot_w + margin_right;
    double height = margin_top + plot_h + margin_bottom;

    double step = nice_step(vmax, 6);
    double y_top = step * std::ceil(vmax / step);
    if (y_top <= 0.0) y_top = step;
    auto y_of = [&](double v) { return margin_top + plot_h * (1.0 - v / y_top); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
           "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
           num(height) + "\">\n";
    svg += "<rect width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(width / 2.0) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
           escape_xml(metric_title(bundle, metric)) + "</text>\n";

    // y axis with gridlines
    for (double v = 0.0; v <= y_top + step / 2.0; v += step) {
        double y = y_of(v);
        svg += "<line x1=\"" + num(margin_left) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(margin_left + plot_w) + "\" y2=\"" + num(y) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(margin_left - 8.0) + "\" y=\"" + num(y + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
               "fill=\"#333333\">" +
               escape_xml(tick_label(metric, v)) + "</text>\n";
    }
    svg += "<line x1=\"" + num(margin_left) + "\" y1=\"" + num(margin_top) + "\" x2=\"" +
           num(margin_left) + "\" y2=\"" + num(margin_top + plot_h) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + num(margin_left) + "\" y1=\"" + num(margin_top + plot_h) +
           "\" x2=\"" + num(margin_left + plot_w) + "\" y2=\"" + num(margin_top + plot_h) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    double x0 = margin_left;
    for (const auto& city : cities) {
        const auto& seq = by_city[city_key(city)];
        double group_w = static_cast<double>(max_years) * slot_w;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const BoundsResult& r = *seq[i];
            MeasuredValue mv = measured_value(r, metric);
            double cx = x0 + (static_cast<double>(i) + 0.5) * slot_w;
            double y_lb = y_of(display_value(metric, mv.interval.lb()));
            double y_ub = y_of(display_value(metric, mv.interval.ub()));
            double cap = slot_w * 0.3;
            svg += "<line x1=\"" + num(cx) + "\" y1=\"" + num(y_ub) + "\" x2=\"" + num(cx) +
                   "\" y2=\"" + num(y_lb) + "\" stroke=\"#4477aa\" stroke-width=\"2.5\"/>\n";
            for (double ye : {y_ub, y_lb}) {
                svg += "<line x1=\"" + num(cx - cap) + "\" y1=\"" + num(ye) + "\" x2=\"" +
                       num(cx + cap) + "\" y2=\"" + num(ye) +
                       "\" stroke=\"#4477aa\" stroke-width=\"2\"/>\n";
            }
            svg += "<circle cx=\"" + num(cx) + "\" cy=\"" +
                   num(y_of(display_value(metric, mv.point))) +
                   "\" r=\"3.2\" fill=\"#ee6677\"/>\n";
            if (r.incomplete) {
                svg += "<text x=\"" + num(cx) + "\" y=\"" + num(y_ub - 6.0) +
                       "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                       "font-size=\"13\" fill=\"#333333\">*</text>\n";
            }
            svg += "<text x=\"" + num(cx) + "\" y=\"" + num(margin_top + plot_h + 14.0) +
                   "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"9\" "
                   "fill=\"#666666\">" +
                   std::to_string(r.year % 100) + "</text>\n";
        }
        svg += "<text x=\"" + num(x0 + group_w / 2.0) + "\" y=\"" +
               num(margin_top + plot_h + 32.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" "
               "fill=\"#333333\">" +
               escape_xml(city) + "</text>\n";
        x0 += group_w + group_gap;
    }

    // legend and annotations
    double ly = margin_top + plot_h + 52.0;
    svg += "<line x1=\"" + num(margin_left) + "\" y1=\"" + num(ly) + "\" x2=\"" +
           num(margin_left) + "\" y2=\"" + num(ly - 12.0) +
           "\" stroke=\"#4477aa\" stroke-width=\"2.5\"/>\n";
    svg += "<text x=\"" + num(margin_left + 8.0) + "\" y=\"" + num(ly - 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">interval "
           "estimate</text>\n";
    svg += "<circle cx=\"" + num(margin_left + 110.0) + "\" cy=\"" + num(ly - 6.0) +
           "\" r=\"3.2\" fill=\"#ee6677\"/>\n";
    svg += "<text x=\"" + num(margin_left + 118.0) + "\" y=\"" + num(ly - 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">standard "
           "point estimate</text>\n";
    if (any_incomplete) {
        svg += "<text x=\"" + num(margin_left) + "\" y=\"" + num(ly + 16.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">* single "
               "population estimate; bounds use that estimate for both limits</text>\n";
    }
    svg += "<text x=\"" + num(width - margin_right) + "\" y=\"" + num(height - 8.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"9\" "
           "fill=\"#999999\">" +
           escape_xml(bundle.dataset_label) + " | theta [" + fixed_text(bundle.theta.lb(), 3) +
           ", " + fixed_text(bundle.theta.ub(), 3) + "] | z " + fixed_text(bundle.z, 6) +
           "</text>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace burgbounds
