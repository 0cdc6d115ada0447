#include "burgbounds/ingest.hpp"

namespace burgbounds {

namespace {

// UCR residential burglary counts, SBI/FBI population estimates, and census
// persons-per-household for the 10 most populous North Carolina cities,
// 2009-2011. A population of -1 marks an unavailable estimate.
struct CityRow {
    const char* city;
    double pph;
    std::int64_t b_p[3];
    std::int64_t n_s[3];
    std::int64_t n_f[3];
};

constexpr CityRow kCities[] = {
    {"Asheville", 2.13, {545, 457, 555}, {78267, 78804, 82846}, {74923, 83393, 84450}},
    {"Cary", 2.68, {348, 395, 270}, {141269, 147282, 136203}, {133757, 135234, 136949}},
    {"Charlotte", 2.46, {7766, 7305, 6352}, {738768, 752799, 776787}, {777708, 779541, 789478}},
    {"Durham", 2.30, {2840, 2984, 3283}, {221675, 227524, 222978}, {227492, 228330, 231225}},
    {"Fayetteville", 2.48, {3753, 3405, 3714}, {205285, 205555, 206132}, {173995, 200564, 203107}},
    {"Greensboro", 2.34, {3766, 3487, 3279}, {257581, 261519, 263279}, {253191, 269666, -1}},
    {"High Point", 2.51, {1126, 1032, 973}, {100648, 102216, 104788}, {103675, 104371, 105695}},
    {"Raleigh", 2.35, {2488, 2442, 2364}, {367514, 373100, 395716}, {406005, 403892, 409014}},
    {"Wilmington", 2.19, {1178, 1109, 1130}, {99485, 99911, 104422}, {101438, 106476, 107826}},
    {"Winston-Salem", 2.42, {3641, 3699, 3925}, {222574, 229338, 224566}, {230978, 229617, 232529}},
};

// NCVS residential burglary reporting rates and standard errors, percent.
constexpr struct {
    int year;
    double rate_pct;
    double se_pct;
} kReporting[] = {
    {2009, 57.3, 1.7},
    {2010, 58.8, 1.9},
    {2011, 52.0, 1.8},
};

}  // namespace

Dataset embedded_reference() {
    Dataset ds;
    ds.label = "nc-burglary-2009-2011";
    for (const auto& row : kCities) {
        for (int i = 0; i < 3; ++i) {
            CityYearRecord rec;
            rec.city = row.city;
            rec.year = 2009 + i;
            rec.b_p = row.b_p[i];
            if (row.n_s[i] >= 0) rec.n_s = row.n_s[i];
            if (row.n_f[i] >= 0) rec.n_f = row.n_f[i];
            rec.pph = row.pph;
            ds.records.push_back(std::move(rec));
        }
    }
    for (const auto& rr : kReporting) {
        ds.reporting[rr.year] = {rr.year, rr.rate_pct, rr.se_pct};
    }
    return ds;
}

}  // namespace burgbounds
