#include "burgbounds/report.hpp"

#include <cmath>
#include <map>

#include <json.hpp>

#include "burgbounds/display.hpp"
#include "burgbounds/version.hpp"

namespace burgbounds {

using ordered_json = nlohmann::ordered_json;

namespace {

// Rounded value with metric-appropriate precision: counts and population
// rates as whole numbers, household rates at two decimals.
ordered_json metric_number(Metric m, double v) {
    if (m == Metric::rate_hh) return round_places(v, 2);
    return round_count(v);
}

ordered_json pct_change_number(double v) {
    if (std::isnan(v)) return nullptr;
    return round_places(v, 1);
}

ordered_json verdict_body(const ComparisonVerdict& v) {
    Metric m = v.subject_a.metric;
    ordered_json j;
    j["metric"] = metric_name(m);
    j["subject_a"] = {{"city", v.subject_a.city}, {"year", v.subject_a.year}};
    j["subject_b"] = {{"city", v.subject_b.city}, {"year", v.subject_b.year}};
    j["interval_a"] = {metric_number(m, v.interval_a.lb()), metric_number(m, v.interval_a.ub())};
    j["interval_b"] = {metric_number(m, v.interval_b.lb()), metric_number(m, v.interval_b.ub())};
    j["point_a"] = metric_number(m, v.point_a);
    j["point_b"] = metric_number(m, v.point_b);
    j["point_pct_change"] = pct_change_number(v.point_pct_change);
    j["pct_change_basis"] = "a";  // denominator is subject A's point estimate
    j["verdict"] = verdict_name(v.verdict);
    j["incomplete"] = v.incomplete;
    return j;
}

}  // namespace

ReportBundle make_bundle(const Dataset& ds, const std::vector<BoundsResult>& results,
                         const EngineOptions& opts) {
    ReportBundle bundle;
    bundle.dataset_label = ds.label;
    bundle.version = BURGBOUNDS_VERSION;
    bundle.theta = ds.hierarchy.theta;
    bundle.z = ds.confidence.z;
    bundle.confidence_level_pct = ds.confidence.level_pct;
    bundle.pop_scale = opts.pop_scale;
    bundle.hh_scale = opts.hh_scale;
    bundle.std_basis = population_basis_name(opts.std_basis);
    bundle.results = results;

    // consecutive years per city, in result order
    std::map<std::string, std::vector<const BoundsResult*>> by_city;
    for (const auto& r : bundle.results) {
        by_city[city_key(r.city)].push_back(&r);
    }
    for (const auto& r : bundle.results) {
        const auto& seq = by_city[city_key(r.city)];
        if (seq.front() != &r) continue;  // one pass per city, keyed on first record
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            for (Metric m : {Metric::b_a, Metric::rate_pop, Metric::rate_hh}) {
                bundle.comparisons.push_back(
                    compare_years(bundle.results, seq[i]->city, seq[i]->year,
                                  seq[i + 1]->year, m));
            }
        }
    }
    return bundle;
}

namespace {

ordered_json metadata_json(const ReportBundle& b) {
    ordered_json meta;
    meta["dataset"] = b.dataset_label;
    meta["version"] = b.version;
    ordered_json assumptions;
    assumptions["theta"] = {b.theta.lb(), b.theta.ub()};
    assumptions["z"] = b.z;
    assumptions["confidence_level_pct"] = b.confidence_level_pct;
    assumptions["scale_population"] = b.pop_scale;
    assumptions["scale_household"] = b.hh_scale;
    assumptions["standard_rate_basis"] = b.std_basis;
    meta["assumptions"] = assumptions;
    return meta;
}

ordered_json table_rows(const ReportBundle& b, const std::string& table) {
    ordered_json rows = ordered_json::array();
    if (table == "comparisons") {
        for (const auto& v : b.comparisons) {
            ordered_json row;
            row["city"] = v.subject_a.city;
            row["metric"] = metric_name(v.subject_a.metric);
            row["year_a"] = v.subject_a.year;
            row["year_b"] = v.subject_b.year;
            Metric m = v.subject_a.metric;
            row["point_a"] = metric_number(m, v.point_a);
            row["point_b"] = metric_number(m, v.point_b);
            row["point_pct_change"] = pct_change_number(v.point_pct_change);
            row["lb_a"] = metric_number(m, v.interval_a.lb());
            row["ub_a"] = metric_number(m, v.interval_a.ub());
            row["lb_b"] = metric_number(m, v.interval_b.lb());
            row["ub_b"] = metric_number(m, v.interval_b.ub());
            row["verdict"] = verdict_name(v.verdict);
            row["incomplete"] = v.incomplete;
            rows.push_back(std::move(row));
        }
        return rows;
    }
    for (const auto& r : b.results) {
        ordered_json row;
        row["city"] = r.city;
        row["year"] = r.year;
        if (table == "known_counts") {
            row["lb"] = round_count(r.b_k.lb());
            row["ub"] = round_count(r.b_k.ub());
        } else if (table == "actual_counts") {
            row["lb"] = round_count(r.b_a.lb());
            row["ub"] = round_count(r.b_a.ub());
        } else if (table == "rates_population") {
            row["lb"] = round_count(r.rate_pop.lb());
            row["ub"] = round_count(r.rate_pop.ub());
            row["incomplete"] = r.incomplete;
        } else if (table == "rates_household") {
            row["lb"] = round_places(r.rate_hh.lb(), 2);
            row["ub"] = round_places(r.rate_hh.ub(), 2);
            row["incomplete"] = r.incomplete;
        } else if (table == "standard_rates") {
            row["b_p"] = r.b_p;
            row["rate_pop"] = round_count(r.std_rate_pop);
            row["rate_hh"] = round_places(r.std_rate_hh, 2);
            row["basis"] = r.std_basis;
        } else {
            throw LookupError("unknown table '" + table + "'");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

const std::vector<std::string>& bundle_table_names() {
    static const std::vector<std::string> names = {
        "known_counts",   "actual_counts",  "rates_population",
        "rates_household", "standard_rates", "comparisons",
    };
    return names;
}

std::string bundle_to_json(const ReportBundle& bundle) {
    ordered_json doc;
    doc["metadata"] = metadata_json(bundle);
    ordered_json tables;
    for (const auto& name : bundle_table_names()) {
        tables[name] = table_rows(bundle, name);
    }
    doc["tables"] = tables;
    return doc.dump(2) + "\n";
}

namespace {

const std::vector<std::string>& table_columns(const std::string& table) {
    static const std::map<std::string, std::vector<std::string>> columns = {
        {"known_counts", {"city", "year", "lb", "ub"}},
        {"actual_counts", {"city", "year", "lb", "ub"}},
        {"rates_population", {"city", "year", "lb", "ub", "incomplete"}},
        {"rates_household", {"city", "year", "lb", "ub", "incomplete"}},
        {"standard_rates", {"city", "year", "b_p", "rate_pop", "rate_hh", "basis"}},
        {"comparisons",
         {"city", "metric", "year_a", "year_b", "point_a", "point_b",
          "point_pct_change", "lb_a", "ub_a", "lb_b", "ub_b", "verdict", "incomplete"}},
    };
    auto it = columns.find(table);
    if (it == columns.end()) {
        throw LookupError("unknown table '" + table + "'");
    }
    return it->second;
}

}  // namespace

std::string table_to_csv(const ReportBundle& bundle, const std::string& table) {
    const std::vector<std::string>& columns = table_columns(table);
    ordered_json rows = table_rows(bundle, table);
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out += (i ? "," : "") + columns[i];
    }
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out += ",";
            const auto& cell = row[columns[i]];
            if (cell.is_null()) {
                // undefined value, e.g. percent change over a zero baseline
            } else if (cell.is_string()) {
                out += cell.get<std::string>();
            } else if (cell.is_boolean()) {
                out += cell.get<bool>() ? "true" : "false";
            } else if (cell.is_number_integer()) {
                out += std::to_string(cell.get<std::int64_t>());
            } else {
                // household rates and percent changes carry fixed decimals
                int decimals = (table == "comparisons") ? 1 : 2;
                if (table == "comparisons" &&
                    row["metric"].get<std::string>() == "rate_hh" &&
                    columns[i] != "point_pct_change") {
                    decimals = 2;
                }
                out += fixed_text(cell.get<double>(), decimals);
            }
        }
        out += "\n";
    }
    return out;
}

std::string verdict_to_json(const ComparisonVerdict& v) {
    return verdict_body(v).dump(2) + "\n";
}

std::string findings_to_json(const std::string& label, const std::vector<Finding>& findings) {
    ordered_json doc;
    doc["dataset"] = label;
    int errors = 0;
    int warnings = 0;
    ordered_json items = ordered_json::array();
    for (const auto& f : findings) {
        (f.severity == Severity::error ? errors : warnings)++;
        ordered_json item;
        item["severity"] = severity_name(f.severity);
        item["code"] = f.code;
        item["city"] = f.city;
        item["year"] = f.year;
        item["message"] = f.message;
        items.push_back(std::move(item));
    }
    doc["errors"] = errors;
    doc["warnings"] = warnings;
    doc["findings"] = items;
    return doc.dump(2) + "\n";
}

}  // namespace burgbounds
