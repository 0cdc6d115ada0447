// Command-line front end for the burgbounds shared library. Talks to the
// engine exclusively through the C API; everything here is argument parsing,
// file plumbing, and text rendering.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "burgbounds.h"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int exit_code_for(bb_status rc) {
    return rc == BB_ERR_INTERNAL ? kExitInternal : kExitUsage;
}

int report_failure(bb_status rc) {
    std::cerr << "error: " << bb_last_error() << "\n";
    return exit_code_for(rc);
}

struct StringOut {
    char* value = nullptr;
    ~StringOut() { bb_string_free(value); }
};

struct DatasetHandle {
    bb_dataset* value = nullptr;
    ~DatasetHandle() { bb_dataset_free(value); }
};

struct ResultsHandle {
    bb_results* value = nullptr;
    ~ResultsHandle() { bb_results_free(value); }
};

struct CommonArgs {
    bool embedded = false;
    std::string manifest;
    std::string out_dir = ".";
    std::string format = "json";
    bb_options options{};
};

void add_common_flags(CLI::App* cmd, CommonArgs& args, bool with_format = true) {
    auto* embedded = cmd->add_flag("--embedded", args.embedded,
                                   "Use the built-in NC 2009-2011 reference dataset");
    cmd->add_option("--manifest", args.manifest, "Manifest JSON naming the four input CSVs")
        ->excludes(embedded);
    cmd->add_option("--out", args.out_dir, "Output directory")->capture_default_str();
    if (with_format) {
        cmd->add_option("--format", args.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
    }
    cmd->add_option("--theta-lb", args.options.theta_lb,
                    "Hierarchy-rule upgrade fraction, lower bound")
        ->capture_default_str();
    cmd->add_option("--theta-ub", args.options.theta_ub,
                    "Hierarchy-rule upgrade fraction, upper bound")
        ->capture_default_str();
    cmd->add_option("--z", args.options.z, "Normal quantile for the reporting-rate interval")
        ->capture_default_str();
    std::map<std::string, int> basis{{"state", BB_POP_STATE},
                                     {"federal", BB_POP_FEDERAL},
                                     {"mid", BB_POP_MID}};
    cmd->add_option("--pop-basis", args.options.pop_basis,
                    "Population estimate behind the standard point rates")
        ->transform(CLI::CheckedTransformer(basis, CLI::ignore_case))
        ->default_str("state");
}

int open_dataset(const CommonArgs& args, DatasetHandle& ds) {
    if (!args.embedded && args.manifest.empty()) {
        std::cerr << "error: choose a dataset with --embedded or --manifest <path>\n";
        return kExitUsage;
    }
    bb_status rc = args.embedded ? bb_dataset_embedded(&ds.value)
                                 : bb_dataset_load_manifest(args.manifest.c_str(), &ds.value);
    if (rc != BB_OK) return report_failure(rc);
    return kExitOk;
}

int compute_results(const CommonArgs& args, DatasetHandle& ds, ResultsHandle& results) {
    if (int rc = open_dataset(args, ds)) return rc;
    bb_status rc = bb_compute(ds.value, &args.options, &results.value);
    if (rc != BB_OK) return report_failure(rc);
    return kExitOk;
}

bool write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        std::cerr << "error: cannot write " << path.string() << "\n";
        return false;
    }
    return true;
}

std::string cell_text(const json& cell) {
    if (cell.is_null()) return "";
    if (cell.is_string()) return cell.get<std::string>();
    if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
    std::ostringstream os;
    os << cell;
    return os.str();
}

// Pads each column to its widest cell; good enough for terminal tables.
void print_table(std::ostream& os, const std::string& name, const json& rows) {
    os << "== " << name << " ==\n";
    if (rows.empty()) {
        os << "(empty)\n\n";
        return;
    }
    std::vector<std::string> columns;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) columns.push_back(it.key());
    std::vector<std::size_t> widths;
    for (const auto& c : columns) widths.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            line.push_back(cell_text(row[columns[i]]));
            widths[i] = std::max(widths[i], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            os << (i ? "  " : "") << line[i]
               << std::string(widths[i] - line[i].size(), ' ');
        }
        os << "\n";
    };
    emit(columns);
    for (const auto& line : cells) emit(line);
    os << "\n";
}

int cmd_compute(const CommonArgs& args) {
    DatasetHandle ds;
    ResultsHandle results;
    if (int rc = compute_results(args, ds, results)) return rc;

    StringOut bundle;
    if (bb_status rc = bb_results_bundle_json(results.value, &bundle.value); rc != BB_OK) {
        return report_failure(rc);
    }
    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create " << args.out_dir << ": " << ec.message() << "\n";
        return kExitUsage;
    }
    fs::path out(args.out_dir);
    if (!write_file(out / "report.json", bundle.value)) return kExitUsage;
    std::cerr << "wrote " << (out / "report.json").string() << "\n";

    json doc = json::parse(std::string(bundle.value));
    const char* tables[] = {"known_counts",    "actual_counts",  "rates_population",
                            "rates_household", "standard_rates", "comparisons"};
    if (args.format == "csv") {
        for (const char* table : tables) {
            StringOut csv;
            if (bb_status rc = bb_results_table_csv(results.value, table, &csv.value);
                rc != BB_OK) {
                return report_failure(rc);
            }
            if (!write_file(out / (std::string(table) + ".csv"), csv.value)) {
                return kExitUsage;
            }
            std::cerr << "wrote " << (out / (std::string(table) + ".csv")).string() << "\n";
        }
    } else if (args.format == "text") {
        for (const char* table : tables) {
            print_table(std::cout, table, doc["tables"][table]);
        }
    }
    return kExitOk;
}

void print_verdict_text(const json& v) {
    const std::string metric = v["metric"].get<std::string>();
    auto subject = [&](const json& s) {
        return s["city"].get<std::string>() + " " + std::to_string(s["year"].get<int>());
    };
    auto interval = [&](const json& iv) {
        std::ostringstream os;
        os << "[" << iv[0] << ", " << iv[1] << "]";
        return os.str();
    };
    std::cout << "metric:   " << metric << "\n"
              << "A         " << subject(v["subject_a"]) << ": " << interval(v["interval_a"])
              << "  point " << v["point_a"] << "\n"
              << "B         " << subject(v["subject_b"]) << ": " << interval(v["interval_b"])
              << "  point " << v["point_b"] << "\n";
    if (!v["point_pct_change"].is_null()) {
        std::cout << "points:   " << v["point_pct_change"]
                  << "% change (relative to A)\n";
    }
    std::cout << "verdict:  " << v["verdict"].get<std::string>() << "\n";
    if (v["incomplete"].get<bool>()) {
        std::cout << "caveat:   at least one side uses a single population estimate\n";
    }
}

int cmd_compare(const CommonArgs& args, const std::vector<std::string>& cities,
                const std::vector<int>& years, const std::string& city, int year,
                const std::string& metric) {
    DatasetHandle ds;
    ResultsHandle results;
    if (int rc = compute_results(args, ds, results)) return rc;

    StringOut verdict;
    bb_status rc;
    if (!cities.empty()) {
        if (cities.size() != 2 || year == 0) {
            std::cerr << "error: cross-city comparison needs --cities A B and --year Y\n";
            return kExitUsage;
        }
        rc = bb_results_compare_cities(results.value, cities[0].c_str(), cities[1].c_str(),
                                       year, metric.c_str(), &verdict.value);
    } else {
        if (city.empty() || years.size() != 2) {
            std::cerr << "error: over-time comparison needs --city C and --years Y1 Y2\n";
            return kExitUsage;
        }
        rc = bb_results_compare_years(results.value, city.c_str(), years[0], years[1],
                                      metric.c_str(), &verdict.value);
    }
    if (rc != BB_OK) return report_failure(rc);

    if (args.format == "text") {
        print_verdict_text(json::parse(std::string(verdict.value)));
    } else {
        std::cout << verdict.value;
    }
    return kExitOk;
}

int cmd_chart(const CommonArgs& args, const std::string& metric) {
    DatasetHandle ds;
    ResultsHandle results;
    if (int rc = compute_results(args, ds, results)) return rc;

    StringOut svg;
    if (bb_status rc = bb_results_chart_svg(results.value, metric.c_str(), &svg.value);
        rc != BB_OK) {
        return report_failure(rc);
    }
    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create " << args.out_dir << ": " << ec.message() << "\n";
        return kExitUsage;
    }
    fs::path path = fs::path(args.out_dir) / ("chart_" + metric + ".svg");
    if (!write_file(path, svg.value)) return kExitUsage;
    std::cerr << "wrote " << path.string() << "\n";
    return kExitOk;
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_dir) {
    std::ifstream in(scenario_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open scenario " << scenario_path << "\n";
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    StringOut report;
    if (bb_status rc = bb_simulate(buffer.str().c_str(), &report.value); rc != BB_OK) {
        return report_failure(rc);
    }
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create " << out_dir << ": " << ec.message() << "\n";
        return kExitUsage;
    }
    fs::path path = fs::path(out_dir) / "coverage_report.json";
    if (!write_file(path, report.value)) return kExitUsage;
    std::cout << report.value;
    std::cerr << "wrote " << path.string() << "\n";
    return kExitOk;
}

int cmd_validate(const CommonArgs& args) {
    DatasetHandle ds;
    if (int rc = open_dataset(args, ds)) return rc;

    StringOut findings;
    if (bb_status rc = bb_dataset_findings_json(ds.value, &findings.value); rc != BB_OK) {
        return report_failure(rc);
    }
    json doc = json::parse(std::string(findings.value));
    if (args.format == "text") {
        std::cout << "dataset: " << doc["dataset"].get<std::string>() << "\n"
                  << doc["errors"].get<int>() << " error(s), " << doc["warnings"].get<int>()
                  << " warning(s)\n";
        for (const auto& f : doc["findings"]) {
            std::cout << "  [" << f["severity"].get<std::string>() << "] "
                      << f["city"].get<std::string>() << " " << f["year"].get<int>() << ": "
                      << f["message"].get<std::string>() << " (" << f["code"].get<std::string>()
                      << ")\n";
        }
    } else {
        std::cout << findings.value;
    }
    return doc["errors"].get<int>() > 0 ? kExitUsage : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval estimates of residential burglary incidence and rates"};
    app.set_version_flag("--version", std::string(bb_version()));
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    CommonArgs compute_args;
    bb_options_init(&compute_args.options);
    auto* compute = app.add_subcommand(
        "compute", "Run the bounds pipeline and write the report bundle");
    add_common_flags(compute, compute_args);

    CommonArgs compare_args;
    bb_options_init(&compare_args.options);
    auto* compare =
        app.add_subcommand("compare", "Classify a comparison as sign-identified or not");
    add_common_flags(compare, compare_args);
    std::vector<std::string> cities;
    std::vector<int> years;
    std::string city;
    int year = 0;
    std::string compare_metric = "rate_pop";
    compare->add_option("--cities", cities, "Two cities to compare")->expected(2);
    compare->add_option("--year", year, "Year for a cross-city comparison");
    compare->add_option("--city", city, "City for an over-time comparison");
    compare->add_option("--years", years, "Two years to compare")->expected(2);
    compare->add_option("--metric", compare_metric, "b_a, rate_pop, or rate_hh")
        ->capture_default_str();

    CommonArgs chart_args;
    bb_options_init(&chart_args.options);
    auto* chart = app.add_subcommand("chart", "Render a dot-and-interval SVG chart");
    add_common_flags(chart, chart_args, /*with_format=*/false);
    std::string chart_metric = "rate_pop";
    chart->add_option("--metric", chart_metric, "rate_pop, rate_hh, or b_a")
        ->capture_default_str();

    std::string scenario_path;
    std::string simulate_out = ".";
    auto* simulate =
        app.add_subcommand("simulate", "Run a Monte Carlo coverage study from a scenario file");
    simulate->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    simulate->add_option("--out", simulate_out, "Output directory")->capture_default_str();

    CommonArgs validate_args;
    bb_options_init(&validate_args.options);
    auto* validate = app.add_subcommand("validate", "Check a dataset and list findings");
    add_common_flags(validate, validate_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(compute_args);
        if (compare->parsed()) {
            return cmd_compare(compare_args, cities, years, city, year, compare_metric);
        }
        if (chart->parsed()) return cmd_chart(chart_args, chart_metric);
        if (simulate->parsed()) return cmd_simulate(scenario_path, simulate_out);
        if (validate->parsed()) return cmd_validate(validate_args);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
