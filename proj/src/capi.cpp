#include "burgbounds.h"

#include <cstring>
#include <string>

#include "burgbounds/bounds.hpp"
#include "burgbounds/chart.hpp"
#include "burgbounds/compare.hpp"
#include "burgbounds/ingest.hpp"
#include "burgbounds/report.hpp"
#include "burgbounds/simulate.hpp"
#include "burgbounds/version.hpp"

using namespace burgbounds;

struct bb_dataset {
    Dataset ds;
};

struct bb_results {
    ReportBundle bundle;
};

namespace {

thread_local std::string t_last_error = "no error";

bb_status status_of(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_argument: return BB_ERR_INVALID_ARGUMENT;
        case ErrorKind::validation: return BB_ERR_VALIDATION;
        case ErrorKind::parse: return BB_ERR_PARSE;
        case ErrorKind::io: return BB_ERR_IO;
        case ErrorKind::domain: return BB_ERR_DOMAIN;
        case ErrorKind::lookup: return BB_ERR_LOOKUP;
        case ErrorKind::internal: return BB_ERR_INTERNAL;
    }
    return BB_ERR_INTERNAL;
}

bb_status fail(bb_status code, const std::string& message) {
    t_last_error = message;
    return code;
}

// Runs fn, translating exceptions into status codes at the ABI boundary.
template <typename Fn>
bb_status guarded(Fn&& fn) {
    try {
        fn();
        return BB_OK;
    } catch (const Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::exception& e) {
        return fail(BB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BB_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bb_status require(bool ok, const char* what) {
    return ok ? BB_OK : fail(BB_ERR_INVALID_ARGUMENT, std::string(what) + " must not be NULL");
}

EngineOptions engine_options(const bb_options* opts) {
    EngineOptions eo;
    if (opts) {
        eo.pop_scale = opts->pop_scale;
        eo.hh_scale = opts->hh_scale;
        switch (opts->pop_basis) {
            case BB_POP_STATE: eo.std_basis = PopulationBasis::state; break;
            case BB_POP_FEDERAL: eo.std_basis = PopulationBasis::federal; break;
            case BB_POP_MID: eo.std_basis = PopulationBasis::mid; break;
            default:
                throw InvalidArgumentError("pop_basis must be 0 (state), 1 (federal), or 2 (mid)");
        }
        if (!(eo.pop_scale > 0.0) || !(eo.hh_scale > 0.0)) {
            throw InvalidArgumentError("rate scales must be positive");
        }
    }
    return eo;
}

}  // namespace

extern "C" {

const char* bb_version(void) { return BURGBOUNDS_VERSION; }

const char* bb_last_error(void) { return t_last_error.c_str(); }

void bb_options_init(bb_options* opts) {
    if (!opts) return;
    opts->theta_lb = 0.005;
    opts->theta_ub = 0.01;
    opts->z = 1.959964;
    opts->pop_basis = BB_POP_STATE;
    opts->pop_scale = 100000.0;
    opts->hh_scale = 1000.0;
}

bb_status bb_dataset_embedded(bb_dataset** out) {
    if (auto rc = require(out != nullptr, "out")) return rc;
    return guarded([&] { *out = new bb_dataset{embedded_reference()}; });
}

bb_status bb_dataset_load_manifest(const char* manifest_path, bb_dataset** out) {
    if (auto rc = require(manifest_path && out, "manifest_path/out")) return rc;
    return guarded([&] { *out = new bb_dataset{load(read_manifest(manifest_path))}; });
}

bb_status bb_dataset_load_files(const char* counts_csv, const char* populations_csv,
                                const char* pph_csv, const char* reporting_csv,
                                const char* label, bb_dataset** out) {
    if (auto rc = require(counts_csv && populations_csv && pph_csv && reporting_csv && out,
                          "paths/out")) {
        return rc;
    }
    return guarded([&] {
        SourceManifest m;
        m.counts_path = counts_csv;
        m.populations_path = populations_csv;
        m.pph_path = pph_csv;
        m.reporting_path = reporting_csv;
        m.dataset_label = label ? label : "unlabeled";
        *out = new bb_dataset{load(m)};
    });
}

void bb_dataset_free(bb_dataset* ds) { delete ds; }

bb_status bb_dataset_findings_json(const bb_dataset* ds, char** out_json) {
    if (auto rc = require(ds && out_json, "ds/out_json")) return rc;
    return guarded([&] {
        *out_json = dup_string(findings_to_json(ds->ds.label, validate(ds->ds)));
    });
}

bb_status bb_dataset_save(const bb_dataset* ds, const char* dir) {
    if (auto rc = require(ds && dir, "ds/dir")) return rc;
    return guarded([&] { save(ds->ds, dir); });
}

bb_status bb_compute(const bb_dataset* ds, const bb_options* opts, bb_results** out) {
    if (auto rc = require(ds && out, "ds/out")) return rc;
    return guarded([&] {
        Dataset working = ds->ds;
        if (opts) {
            working.hierarchy = HierarchyAssumption(Interval(opts->theta_lb, opts->theta_ub));
            if (!(opts->z > 0.0)) {
                throw InvalidArgumentError("z must be positive");
            }
            working.confidence.z = opts->z;
        }
        EngineOptions eo = engine_options(opts);
        auto results = compute_all(working, eo);
        *out = new bb_results{make_bundle(working, results, eo)};
    });
}

void bb_results_free(bb_results* results) { delete results; }

bb_status bb_results_bundle_json(const bb_results* results, char** out_json) {
    if (auto rc = require(results && out_json, "results/out_json")) return rc;
    return guarded([&] { *out_json = dup_string(bundle_to_json(results->bundle)); });
}

bb_status bb_results_table_csv(const bb_results* results, const char* table,
                               char** out_csv) {
    if (auto rc = require(results && table && out_csv, "results/table/out_csv")) return rc;
    return guarded([&] { *out_csv = dup_string(table_to_csv(results->bundle, table)); });
}

bb_status bb_results_chart_svg(const bb_results* results, const char* metric,
                               char** out_svg) {
    if (auto rc = require(results && metric && out_svg, "results/metric/out_svg")) return rc;
    return guarded([&] {
        *out_svg = dup_string(chart_svg(results->bundle, parse_metric(metric)));
    });
}

bb_status bb_results_compare_cities(const bb_results* results, const char* city_a,
                                    const char* city_b, int year, const char* metric,
                                    char** out_json) {
    if (auto rc = require(results && city_a && city_b && metric && out_json,
                          "results/cities/metric/out_json")) {
        return rc;
    }
    return guarded([&] {
        auto v = compare_cities(results->bundle.results, city_a, city_b, year,
                                parse_metric(metric));
        *out_json = dup_string(verdict_to_json(v));
    });
}

bb_status bb_results_compare_years(const bb_results* results, const char* city,
                                   int year_a, int year_b, const char* metric,
                                   char** out_json) {
    if (auto rc = require(results && city && metric && out_json,
                          "results/city/metric/out_json")) {
        return rc;
    }
    return guarded([&] {
        auto v = compare_years(results->bundle.results, city, year_a, year_b,
                               parse_metric(metric));
        *out_json = dup_string(verdict_to_json(v));
    });
}

bb_status bb_simulate(const char* scenario_json, char** out_report_json) {
    if (auto rc = require(scenario_json && out_report_json, "scenario_json/out")) return rc;
    return guarded([&] {
        SimScenario sc = scenario_from_json(scenario_json);
        CoverageReport report = run_coverage(sc);
        *out_report_json = dup_string(report_to_json(report, sc));
    });
}

void bb_string_free(char* s) { delete[] s; }

}  // extern "C"
