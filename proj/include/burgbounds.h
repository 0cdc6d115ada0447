/*
 * burgbounds C API
 *
 * Interval (partial-identification) estimates of residential burglary
 * incidence and rates from police-reported counts, hierarchy-rule adjustment
 * bounds, survey reporting rates, and dual population denominators.
 *
 * All functions that can fail return a bb_status; on failure a thread-local
 * message is available from bb_last_error(). Strings produced through char**
 * out-parameters are heap-allocated and must be released with
 * bb_string_free(). Handles are opaque and single-owner.
 */

#ifndef BURGBOUNDS_H
#define BURGBOUNDS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bb_dataset bb_dataset;
typedef struct bb_results bb_results;

typedef enum bb_status {
    BB_OK = 0,
    BB_ERR_INVALID_ARGUMENT = 1,
    BB_ERR_VALIDATION = 2,
    BB_ERR_PARSE = 3,
    BB_ERR_IO = 4,
    BB_ERR_DOMAIN = 5,
    BB_ERR_LOOKUP = 6,
    BB_ERR_INTERNAL = 7
} bb_status;

typedef enum bb_pop_basis {
    BB_POP_STATE = 0,
    BB_POP_FEDERAL = 1,
    BB_POP_MID = 2
} bb_pop_basis;

/* Analysis assumptions; initialize with bb_options_init before use. */
typedef struct bb_options {
    double theta_lb;   /* hierarchy-rule upgrade fraction, lower bound */
    double theta_ub;   /* upper bound */
    double z;          /* normal quantile for the reporting-rate interval */
    int pop_basis;     /* bb_pop_basis for the conventional point rates */
    double pop_scale;  /* persons per population-rate unit */
    double hh_scale;   /* households per household-rate unit */
} bb_options;

const char* bb_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* bb_last_error(void);

/* Fills in the defaults: theta [0.005, 0.01], z 1.959964, state basis,
 * per-100000-persons and per-1000-households scales. */
void bb_options_init(bb_options* opts);

/* ---- datasets ---- */

/* The compiled-in North Carolina 2009-2011 reference dataset. */
bb_status bb_dataset_embedded(bb_dataset** out);

/* Loads the four CSV sources named by a manifest JSON file. Fails atomically
 * on parse problems or error-severity validation findings. */
bb_status bb_dataset_load_manifest(const char* manifest_path, bb_dataset** out);

bb_status bb_dataset_load_files(const char* counts_csv, const char* populations_csv,
                                const char* pph_csv, const char* reporting_csv,
                                const char* label, bb_dataset** out);

void bb_dataset_free(bb_dataset* ds);

/* Validation findings for a loaded dataset (warnings and errors) as JSON. */
bb_status bb_dataset_findings_json(const bb_dataset* ds, char** out_json);

/* Writes the dataset back out as CSV files plus manifest.json in dir. */
bb_status bb_dataset_save(const bb_dataset* ds, const char* dir);

/* ---- bounds pipeline ---- */

/* Runs the full pipeline; opts may be NULL for defaults. */
bb_status bb_compute(const bb_dataset* ds, const bb_options* opts, bb_results** out);

void bb_results_free(bb_results* results);

/* The full report bundle (metadata, assumptions, all tables) as JSON with
 * deterministic bytes. */
bb_status bb_results_bundle_json(const bb_results* results, char** out_json);

/* One table as CSV. Tables: known_counts, actual_counts, rates_population,
 * rates_household, standard_rates, comparisons. */
bb_status bb_results_table_csv(const bb_results* results, const char* table,
                               char** out_csv);

/* Dot-and-interval SVG chart for metric "rate_pop", "rate_hh", or "b_a". */
bb_status bb_results_chart_svg(const bb_results* results, const char* metric,
                               char** out_svg);

/* Sign-identification verdict between two cities in one year, as JSON. */
bb_status bb_results_compare_cities(const bb_results* results, const char* city_a,
                                    const char* city_b, int year, const char* metric,
                                    char** out_json);

/* Sign-identification verdict between two years of one city, as JSON. */
bb_status bb_results_compare_years(const bb_results* results, const char* city,
                                   int year_a, int year_b, const char* metric,
                                   char** out_json);

/* ---- simulation ---- */

/* Runs the Monte Carlo coverage study described by a scenario JSON document
 * and returns the coverage report as JSON. */
bb_status bb_simulate(const char* scenario_json, char** out_report_json);

void bb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* BURGBOUNDS_H */
