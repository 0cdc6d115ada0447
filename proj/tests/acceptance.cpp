// Acceptance suite: every release criterion in one binary, one line each.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "burgbounds/bounds.hpp"
#include "burgbounds/compare.hpp"
#include "burgbounds/display.hpp"
#include "burgbounds/ingest.hpp"
#include "burgbounds/report.hpp"
#include "burgbounds/simulate.hpp"
#include "golden_values.hpp"

using namespace burgbounds;

namespace {

int g_failed_criteria = 0;

// Collects check failures for one criterion and prints the verdict line.
class Criterion {
public:
    Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

    void check(bool ok, const std::string& detail) {
        ++checks_;
        if (!ok) {
            ++failures_;
            if (first_failure_.empty()) first_failure_ = detail;
        }
    }

    ~Criterion() {
        if (failures_ == 0) {
            std::printf("[PASS] %2d %s (%d checks)\n", number_, title_.c_str(), checks_);
        } else {
            std::printf("[FAIL] %2d %s (%d/%d checks failed; first: %s)\n", number_,
                        title_.c_str(), failures_, checks_, first_failure_.c_str());
            ++g_failed_criteria;
        }
    }

private:
    int number_;
    std::string title_;
    int checks_ = 0;
    int failures_ = 0;
    std::string first_failure_;
};

const BoundsResult& result_for(const std::vector<BoundsResult>& results,
                               const std::string& city, int year) {
    return find_result(results, city, year);
}

std::string spot(const std::string& city, int year, const char* what, double got,
                 double want) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s %d %s: got %.4f, expected %.4f", city.c_str(), year,
                  what, got, want);
    return buf;
}

void criterion_known_counts(const std::vector<BoundsResult>& results) {
    Criterion c(1, "known-count bounds reproduce the golden table exactly");
    for (const auto& row : golden::kKnownCounts) {
        for (int i = 0; i < 3; ++i) {
            const auto& r = result_for(results, row.city, 2009 + i);
            c.check(round_count(r.b_k.lb()) == row.lb[i],
                    spot(row.city, 2009 + i, "lb", r.b_k.lb(), double(row.lb[i])));
            c.check(round_count(r.b_k.ub()) == row.ub[i],
                    spot(row.city, 2009 + i, "ub", r.b_k.ub(), double(row.ub[i])));
        }
    }
}

void criterion_actual_counts(const std::vector<BoundsResult>& results) {
    Criterion c(2, "actual-count bounds match the golden table within 1");
    for (const auto& row : golden::kActualCounts) {
        for (int i = 0; i < 3; ++i) {
            const auto& r = result_for(results, row.city, 2009 + i);
            c.check(std::llabs(round_count(r.b_a.lb()) - row.lb[i]) <= 1,
                    spot(row.city, 2009 + i, "lb", r.b_a.lb(), double(row.lb[i])));
            c.check(std::llabs(round_count(r.b_a.ub()) - row.ub[i]) <= 1,
                    spot(row.city, 2009 + i, "ub", r.b_a.ub(), double(row.ub[i])));
        }
    }
}

void criterion_households(const std::vector<BoundsResult>& results) {
    Criterion c(3, "household estimates match the golden table within 1");
    for (const auto& row : golden::kHouseholds) {
        for (int i = 0; i < 3; ++i) {
            const auto& r = result_for(results, row.city, 2009 + i);
            c.check(r.h_s && std::llabs(*r.h_s - row.h_s[i]) <= 1,
                    spot(row.city, 2009 + i, "h_s", r.h_s ? double(*r.h_s) : -1.0,
                         double(row.h_s[i])));
            if (row.h_f[i] == golden::kMissing) {
                c.check(!r.h_f.has_value(), row.city + std::string(" h_f should be absent"));
            } else {
                c.check(r.h_f && std::llabs(*r.h_f - row.h_f[i]) <= 1,
                        spot(row.city, 2009 + i, "h_f", r.h_f ? double(*r.h_f) : -1.0,
                             double(row.h_f[i])));
            }
        }
    }
}

void criterion_worked_example() {
    Criterion c(4, "worked example: [1005,1010] over [0.540,0.606] and the 1745 point");
    Interval ba = actual_count_bounds(Interval(1005, 1010), Interval(0.540, 0.606));
    c.check(round_count(ba.lb()) == 1658, spot("example", 0, "lb", ba.lb(), 1658));
    c.check(round_count(ba.ub()) == 1870, spot("example", 0, "ub", ba.ub(), 1870));
    double point = 1000.0 / 0.573;
    c.check(round_count(point) == 1745, spot("example", 0, "point", point, 1745));
}

void criterion_rate_intervals(const std::vector<BoundsResult>& results) {
    Criterion c(5, "published rate intervals, population within 1 and household within 0.05");
    struct PopCase {
        const char* city;
        int year;
        std::int64_t lb, ub;
    };
    const PopCase pop_cases[] = {
        {"Charlotte", 2009, 1655, 1967}, {"Raleigh", 2011, 1046, 1245},
        {"Charlotte", 2011, 1456, 1704}, {"Wilmington", 2009, 1925, 2216},
        {"Durham", 2009, 2069, 2398},    {"Durham", 2011, 2570, 3068},
    };
    for (const auto& pc : pop_cases) {
        const auto& r = result_for(results, pc.city, pc.year);
        c.check(std::llabs(round_count(r.rate_pop.lb()) - pc.lb) <= 1,
                spot(pc.city, pc.year, "rate_pop lb", r.rate_pop.lb(), double(pc.lb)));
        c.check(std::llabs(round_count(r.rate_pop.ub()) - pc.ub) <= 1,
                spot(pc.city, pc.year, "rate_pop ub", r.rate_pop.ub(), double(pc.ub)));
    }
    struct HhCase {
        const char* city;
        int year;
        double lb, ub;
    };
    const HhCase hh_cases[] = {
        {"Charlotte", 2009, 40.72, 48.40},
        {"Wilmington", 2009, 42.16, 48.53},
    };
    for (const auto& hc : hh_cases) {
        const auto& r = result_for(results, hc.city, hc.year);
        c.check(std::abs(r.rate_hh.lb() - hc.lb) <= 0.05,
                spot(hc.city, hc.year, "rate_hh lb", r.rate_hh.lb(), hc.lb));
        c.check(std::abs(r.rate_hh.ub() - hc.ub) <= 0.05,
                spot(hc.city, hc.year, "rate_hh ub", r.rate_hh.ub(), hc.ub));
    }
}

void criterion_verdicts(const std::vector<BoundsResult>& results) {
    Criterion c(6, "published comparisons resolve to the published verdicts");
    auto expect = [&](const ComparisonVerdict& v, Verdict want, const std::string& name) {
        c.check(v.verdict == want, name + ": got " + verdict_name(v.verdict));
    };
    expect(compare_cities(results, "Charlotte", "Raleigh", 2011, Metric::rate_pop),
           Verdict::sign_identified_a_higher, "Charlotte/Raleigh 2011 rate_pop");
    expect(compare_cities(results, "Charlotte", "Raleigh", 2011, Metric::rate_hh),
           Verdict::sign_identified_a_higher, "Charlotte/Raleigh 2011 rate_hh");
    expect(compare_cities(results, "Charlotte", "Wilmington", 2009, Metric::rate_pop),
           Verdict::not_identified, "Charlotte/Wilmington 2009 rate_pop");
    expect(compare_years(results, "Charlotte", 2010, 2011, Metric::b_a),
           Verdict::not_identified, "Charlotte 2010->2011 counts");
    expect(compare_years(results, "Asheville", 2010, 2011, Metric::b_a),
           Verdict::sign_identified_b_higher, "Asheville 2010->2011 counts");
    expect(compare_years(results, "Durham", 2009, 2011, Metric::rate_pop),
           Verdict::sign_identified_b_higher, "Durham 2009->2011 rates");
}

void criterion_point_estimates(const std::vector<BoundsResult>& results) {
    Criterion c(7, "standard point rates and percent changes");
    struct RateCase {
        const char* city;
        int year;
        std::int64_t rate;
    };
    const RateCase rate_cases[] = {
        {"Charlotte", 2009, 1051},
        {"Charlotte", 2011, 818},
        {"Raleigh", 2011, 597},
        {"Wilmington", 2009, 1184},
    };
    for (const auto& rc : rate_cases) {
        const auto& r = result_for(results, rc.city, rc.year);
        c.check(round_count(r.std_rate_pop) == rc.rate,
                spot(rc.city, rc.year, "std_rate_pop", r.std_rate_pop, double(rc.rate)));
    }

    auto pct = [&](double got, double want, const char* name) {
        c.check(std::abs(got - want) <= 0.1, spot(name, 0, "pct", got, want));
    };
    pct(compare_years(results, "Charlotte", 2010, 2011, Metric::b_a).point_pct_change,
        -13.0, "Charlotte counts 2010->2011");
    pct(compare_years(results, "Asheville", 2010, 2011, Metric::b_a).point_pct_change,
        21.4, "Asheville counts 2010->2011");
    pct(compare_years(results, "Charlotte", 2009, 2011, Metric::rate_pop).point_pct_change,
        -22.2, "Charlotte rate 2009->2011");
    pct(compare_years(results, "Durham", 2009, 2011, Metric::rate_pop).point_pct_change,
        14.9, "Durham rate 2009->2011");
}

void criterion_confidence_intervals() {
    Criterion c(8, "survey confidence bounds display at one decimal");
    for (const auto& row : golden::kReporting) {
        auto ci = confidence_interval(row.rate_pct, row.se_pct);
        double display_lb = round_places(ci.value.lb() * 100.0, 1);
        double display_ub = round_places(ci.value.ub() * 100.0, 1);
        c.check(display_lb == row.display_lb,
                spot("year", row.year, "lb", display_lb, row.display_lb));
        c.check(display_ub == row.display_ub,
                spot("year", row.year, "ub", display_ub, row.display_ub));
    }
}

void criterion_properties() {
    Criterion c(9, "algebra soundness, nesting, widening, and simulated coverage");

    // interval division soundness over >= 10^4 grid cases
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> count_dist(0.0, 50000.0);
    std::uniform_real_distribution<double> width_dist(0.0, 1000.0);
    std::uniform_real_distribution<double> prob_dist(0.05, 0.95);
    int grid_cases = 0;
    bool grid_ok = true;
    for (int trial = 0; trial < 150 && grid_ok; ++trial) {
        double nl = count_dist(rng);
        Interval numer(nl, nl + width_dist(rng));
        double pl = prob_dist(rng);
        Interval denom(pl, std::min(1.0, pl + 0.1));
        Interval q = divide_by(numer, denom);
        for (int i = 0; i <= 9; ++i) {
            for (int j = 0; j <= 9; ++j) {
                double x = numer.lb() + numer.width() * i / 9.0;
                double p = denom.lb() + denom.width() * j / 9.0;
                double ratio = x / p;
                grid_ok = grid_ok && q.lb() <= ratio + 1e-9 * ratio &&
                          ratio <= q.ub() + 1e-9 * ratio;
                ++grid_cases;
            }
        }
    }
    c.check(grid_ok && grid_cases >= 10000,
            "division soundness grid (" + std::to_string(grid_cases) + " cases)");

    // nesting and monotonicity of the count pipeline
    bool nesting_ok = true;
    bool monotone_ok = true;
    const Interval theta(0.005, 0.01);
    for (int bp = 100; bp <= 10000 && nesting_ok && monotone_ok; bp += 700) {
        Interval pr(0.5, 0.65);
        Interval ba = actual_count_bounds(known_count_bounds(bp, theta), pr);
        Interval ba_sub = actual_count_bounds(known_count_bounds(bp, Interval(0.006, 0.009)),
                                              Interval(0.52, 0.63));
        nesting_ok = ba.lb() <= ba_sub.lb() && ba_sub.ub() <= ba.ub();
        Interval ba_next = actual_count_bounds(known_count_bounds(bp + 1, theta), pr);
        monotone_ok = ba_next.lb() > ba.lb() && ba_next.ub() > ba.ub();
    }
    c.check(nesting_ok, "nested assumptions nest the results");
    c.check(monotone_ok, "larger counts strictly raise the bounds");

    // widening a comparison interval never creates identification
    bool widen_ok = true;
    for (int i = 0; i < 50; ++i) {
        double gap = (i - 25) * 3.0;
        MeasuredValue a{Interval(100.0, 150.0), 120.0, false};
        MeasuredValue b{Interval(150.0 + gap, 200.0 + gap), 170.0, false};
        auto base = compare({"a", 1, Metric::b_a}, a, {"b", 1, Metric::b_a}, b);
        MeasuredValue a_wide{Interval(90.0, 160.0), 120.0, false};
        auto wide = compare({"a", 1, Metric::b_a}, a_wide, {"b", 1, Metric::b_a}, b);
        if (base.verdict == Verdict::not_identified) {
            widen_ok = widen_ok && wide.verdict == Verdict::not_identified;
        }
    }
    c.check(widen_ok, "widening never creates identification");

    // deterministic coverage across the 10x10 in-assumption grid
    bool det_ok = true;
    SimScenario sc;
    sc.true_count = 10000;
    sc.trials = 1;
    sc.seed = 1;
    sc.assumed_theta = Interval(0.005, 0.01);
    sc.assumed_pr = Interval(0.539680612, 0.606319388);
    for (int i = 0; i <= 9; ++i) {
        for (int j = 0; j <= 9; ++j) {
            sc.p_r_true = sc.assumed_pr.lb() + sc.assumed_pr.width() * i / 9.0;
            double theta_true =
                sc.assumed_theta.lb() + sc.assumed_theta.width() * j / 9.0;
            sc.upgrade_frac_true = theta_true / (1.0 + theta_true);
            auto dc = deterministic_coverage(sc);
            det_ok = det_ok && dc.covered && dc.within_assumptions;
        }
    }
    c.check(det_ok, "deterministic coverage on the in-assumption grid");

    // stochastic coverage at scale
    SimScenario mc;
    mc.true_count = 100000;
    mc.p_r_true = 0.573;
    mc.upgrade_frac_true = 0.0075 / 1.0075;
    mc.trials = 1000;
    mc.seed = 20090101;
    mc.assumed_theta = Interval(0.005, 0.01);
    mc.assumed_pr = Interval(0.539680612, 0.606319388);
    auto report = run_coverage(mc);
    c.check(report.coverage_rate >= 0.99,
            "stochastic coverage " + std::to_string(report.coverage_rate));
}

void criterion_round_trip() {
    Criterion c(10, "dataset round-trip and byte-identical report output");
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "burgbounds_acceptance_roundtrip";
    fs::remove_all(dir);

    Dataset original = embedded_reference();
    SourceManifest m = save(original, dir.string());
    Dataset reloaded = load(m);
    c.check(reloaded == original, "save/load round-trip equality");

    EngineOptions opts;
    auto run = [&] {
        Dataset ds = embedded_reference();
        return bundle_to_json(make_bundle(ds, compute_all(ds, opts), opts));
    };
    std::string first = run();
    std::string second = run();
    c.check(!first.empty() && first == second, "bundle bytes identical across runs");
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();

    auto results = compute_all(embedded_reference());

    criterion_known_counts(results);
    criterion_actual_counts(results);
    criterion_households(results);
    criterion_worked_example();
    criterion_rate_intervals(results);
    criterion_verdicts(results);
    criterion_point_estimates(results);
    criterion_confidence_intervals();
    criterion_properties();
    criterion_round_trip();

    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    {
        Criterion c(11, "acceptance suite runtime under 60 seconds");
        c.check(elapsed.count() < 60.0, std::to_string(elapsed.count()) + "s");
    }

    if (g_failed_criteria > 0) {
        std::printf("%d criterion(s) failed\n", g_failed_criteria);
        return 1;
    }
    std::printf("all criteria passed in %.2fs\n", elapsed.count());
    return 0;
}
