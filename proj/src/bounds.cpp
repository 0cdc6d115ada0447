#include "burgbounds/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace burgbounds {

const char* population_basis_name(PopulationBasis b) noexcept {
    switch (b) {
        case PopulationBasis::state: return "state";
        case PopulationBasis::federal: return "federal";
        case PopulationBasis::mid: return "mid";
    }
    return "state";
}

PopulationBasis parse_population_basis(const std::string& name) {
    if (name == "state") return PopulationBasis::state;
    if (name == "federal") return PopulationBasis::federal;
    if (name == "mid") return PopulationBasis::mid;
    throw InvalidArgumentError("unknown population basis '" + name +
                               "' (expected state, federal, or mid)");
}

Interval known_count_bounds(std::int64_t b_p, const Interval& theta) {
    if (b_p < 0) {
        throw InvalidArgumentError("police-reported count must be nonnegative");
    }
    double bp = static_cast<double>(b_p);
    return Interval(bp * (1.0 + theta.lb()), bp * (1.0 + theta.ub()));
}

Interval actual_count_bounds(const Interval& bk, const Interval& pr) {
    if (!(pr.lb() > 0.0)) {
        throw DomainError("reporting probability bounds must be strictly positive");
    }
    return divide_by(bk, pr);
}

std::int64_t households(std::int64_t n, double pph) {
    if (n <= 0) {
        throw InvalidArgumentError("population must be positive");
    }
    if (!(pph > 0.0)) {
        throw InvalidArgumentError("persons per household must be positive");
    }
    return std::llround(static_cast<double>(n) / pph);
}

namespace {

Interval rate_bounds(const Interval& ba, std::optional<std::int64_t> a,
                     std::optional<std::int64_t> b, double scale, const char* what) {
    if (!a && !b) {
        throw DomainError(std::string("no ") + what + " estimate available");
    }
    std::int64_t hi = std::max(a.value_or(0), b.value_or(0));
    std::int64_t lo = a && b ? std::min(*a, *b) : hi;
    if (lo <= 0) {
        throw DomainError(std::string(what) + " estimate must be positive");
    }
    return Interval(ba.lb() / static_cast<double>(hi) * scale,
                    ba.ub() / static_cast<double>(lo) * scale);
}

}  // namespace

Interval rate_bounds_population(const Interval& ba, std::optional<std::int64_t> n_s,
                                std::optional<std::int64_t> n_f, double scale) {
    return rate_bounds(ba, n_s, n_f, scale, "population");
}

Interval rate_bounds_household(const Interval& ba, std::optional<std::int64_t> h_s,
                               std::optional<std::int64_t> h_f, double scale) {
    return rate_bounds(ba, h_s, h_f, scale, "household");
}

StandardRates standard_rates(std::int64_t b_p, std::int64_t n, double pph,
                             double pop_scale, double hh_scale) {
    if (n <= 0) {
        throw InvalidArgumentError("population must be positive");
    }
    if (!(pph > 0.0)) {
        throw InvalidArgumentError("persons per household must be positive");
    }
    double pop = static_cast<double>(n);
    StandardRates out;
    out.rate_pop = static_cast<double>(b_p) / pop * pop_scale;
    out.rate_hh = static_cast<double>(b_p) / (pop / pph) * hh_scale;
    return out;
}

namespace {

// Picks the population behind the conventional rates, falling back to
// whatever is available when the requested basis is missing.
std::pair<double, std::string> std_basis_population(const CityYearRecord& rec,
                                                    PopulationBasis basis) {
    auto present = [](std::optional<std::int64_t> v) {
        return v ? std::optional<double>(static_cast<double>(*v)) : std::nullopt;
    };
    std::optional<double> ns = present(rec.n_s);
    std::optional<double> nf = present(rec.n_f);
    switch (basis) {
        case PopulationBasis::state:
            if (ns) return {*ns, "state"};
            return {*nf, "federal (state unavailable)"};
        case PopulationBasis::federal:
            if (nf) return {*nf, "federal"};
            return {*ns, "state (federal unavailable)"};
        case PopulationBasis::mid:
            if (ns && nf) return {(*ns + *nf) / 2.0, "mid"};
            if (ns) return {*ns, "state (federal unavailable)"};
            return {*nf, "federal (state unavailable)"};
    }
    return {*ns, "state"};
}

}  // namespace

std::vector<BoundsResult> compute_all(const Dataset& ds, const EngineOptions& opts) {
    auto findings = validate(ds);
    std::vector<Finding> errors;
    for (const auto& f : findings) {
        if (f.severity == Severity::error) errors.push_back(f);
    }
    if (!errors.empty()) {
        std::string msg = "dataset has " + std::to_string(errors.size()) +
                          " validation error(s); first: " + errors.front().message;
        throw ValidationError(msg, std::move(errors));
    }

    std::vector<const CityYearRecord*> ordered;
    ordered.reserve(ds.records.size());
    for (const auto& rec : ds.records) ordered.push_back(&rec);
    std::sort(ordered.begin(), ordered.end(),
              [](const CityYearRecord* a, const CityYearRecord* b) {
                  auto ka = city_key(a->city);
                  auto kb = city_key(b->city);
                  return std::tie(ka, a->year) < std::tie(kb, b->year);
              });

    std::vector<BoundsResult> results;
    results.reserve(ordered.size());
    for (const CityYearRecord* rec : ordered) {
        const ReportingRateEstimate& rr = ds.reporting.at(rec->year);
        Interval pr =
            confidence_interval(rr.rate_pct, rr.se_pct, ds.confidence).value;

        BoundsResult r;
        r.city = rec->city;
        r.year = rec->year;
        r.b_p = rec->b_p;
        r.b_k = known_count_bounds(rec->b_p, ds.hierarchy.theta);
        r.b_a = actual_count_bounds(r.b_k, pr);
        if (rec->n_s) r.h_s = households(*rec->n_s, rec->pph);
        if (rec->n_f) r.h_f = households(*rec->n_f, rec->pph);
        r.rate_pop = rate_bounds_population(r.b_a, rec->n_s, rec->n_f, opts.pop_scale);
        r.rate_hh = rate_bounds_household(r.b_a, r.h_s, r.h_f, opts.hh_scale);
        r.incomplete = !(rec->n_s && rec->n_f);

        auto [n_std, basis] = std_basis_population(*rec, opts.std_basis);
        StandardRates std_rates = standard_rates(
            rec->b_p, static_cast<std::int64_t>(std::llround(n_std)), rec->pph,
            opts.pop_scale, opts.hh_scale);
        r.std_rate_pop = std_rates.rate_pop;
        r.std_rate_hh = std_rates.rate_hh;
        r.std_basis = basis;

        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace burgbounds
