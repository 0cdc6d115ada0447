#include "burgbounds/ingest.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

#include "csv.hpp"

namespace burgbounds {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string where(const std::string& path, std::size_t line) {
    return path + ":" + std::to_string(line);
}

void check_field_count(const csv::Table& table, const csv::Row& row,
                       const std::string& path) {
    if (row.fields.size() != table.header.size()) {
        throw ParseError(where(path, row.line) + ": expected " +
                         std::to_string(table.header.size()) + " fields, got " +
                         std::to_string(row.fields.size()));
    }
}

}  // namespace

SourceManifest read_manifest(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) {
        throw IoError("cannot open manifest " + manifest_path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(manifest_path + ": " + e.what());
    }
    for (const char* key : {"counts", "populations", "pph", "reporting"}) {
        if (!doc.contains(key) || !doc[key].is_string()) {
            throw ParseError(manifest_path + ": missing string field '" + key + "'");
        }
    }
    fs::path base = fs::path(manifest_path).parent_path();
    auto resolve = [&](const std::string& p) {
        fs::path fp(p);
        return fp.is_absolute() ? fp.string() : (base / fp).string();
    };
    SourceManifest m;
    m.counts_path = resolve(doc["counts"].get<std::string>());
    m.populations_path = resolve(doc["populations"].get<std::string>());
    m.pph_path = resolve(doc["pph"].get<std::string>());
    m.reporting_path = resolve(doc["reporting"].get<std::string>());
    m.dataset_label = doc.value("label", std::string("unlabeled"));
    return m;
}

Dataset load(const SourceManifest& manifest) {
    Dataset ds;
    ds.label = manifest.dataset_label;

    // counts.csv drives the record set
    csv::Table counts = csv::read_file(manifest.counts_path);
    auto ccols = csv::resolve_columns(counts, {"city", "year", "b_p"}, manifest.counts_path);
    if (counts.rows.empty()) {
        throw ParseError(manifest.counts_path + ": no records");
    }
    std::map<std::pair<std::string, int>, std::size_t> seen;
    for (const auto& row : counts.rows) {
        check_field_count(counts, row, manifest.counts_path);
        CityYearRecord rec;
        rec.city = row.fields[ccols[0]];
        std::string at = where(manifest.counts_path, row.line);
        if (rec.city.empty()) {
            throw ParseError(at + ": empty city name");
        }
        rec.year = static_cast<int>(csv::parse_int(row.fields[ccols[1]], at));
        rec.b_p = csv::parse_int(row.fields[ccols[2]], at);
        if (rec.b_p < 0) {
            throw ParseError(at + ": negative burglary count");
        }
        auto key = std::make_pair(city_key(rec.city), rec.year);
        auto [it, inserted] = seen.emplace(key, row.line);
        if (!inserted) {
            throw ParseError(at + ": duplicate record for " + rec.city + " " +
                             std::to_string(rec.year) + " (first at line " +
                             std::to_string(it->second) + ")");
        }
        ds.records.push_back(std::move(rec));
    }

    // populations.csv: either estimate may be empty, not both
    csv::Table pops = csv::read_file(manifest.populations_path);
    auto pcols = csv::resolve_columns(pops, {"city", "year", "n_s", "n_f"},
                                      manifest.populations_path);
    std::map<std::pair<std::string, int>,
             std::pair<std::optional<std::int64_t>, std::optional<std::int64_t>>>
        populations;
    for (const auto& row : pops.rows) {
        check_field_count(pops, row, manifest.populations_path);
        std::string at = where(manifest.populations_path, row.line);
        auto key = std::make_pair(city_key(row.fields[pcols[0]]),
                                  static_cast<int>(csv::parse_int(row.fields[pcols[1]], at)));
        auto n_s = csv::parse_optional_int(row.fields[pcols[2]], at);
        auto n_f = csv::parse_optional_int(row.fields[pcols[3]], at);
        if ((n_s && *n_s <= 0) || (n_f && *n_f <= 0)) {
            throw ParseError(at + ": population estimates must be positive");
        }
        if (!populations.emplace(key, std::make_pair(n_s, n_f)).second) {
            throw ParseError(at + ": duplicate population row");
        }
    }

    // pph.csv: one persons-per-household figure per city
    csv::Table pph = csv::read_file(manifest.pph_path);
    auto hcols = csv::resolve_columns(pph, {"city", "pph"}, manifest.pph_path);
    std::map<std::string, double> pph_by_city;
    for (const auto& row : pph.rows) {
        check_field_count(pph, row, manifest.pph_path);
        std::string at = where(manifest.pph_path, row.line);
        double v = csv::parse_real(row.fields[hcols[1]], at);
        if (!(v > 0.0)) {
            throw ParseError(at + ": persons per household must be positive");
        }
        if (!pph_by_city.emplace(city_key(row.fields[hcols[0]]), v).second) {
            throw ParseError(at + ": duplicate pph row");
        }
    }

    // reporting.csv
    csv::Table rep = csv::read_file(manifest.reporting_path);
    auto rcols = csv::resolve_columns(rep, {"year", "rate_pct", "se_pct"},
                                      manifest.reporting_path);
    for (const auto& row : rep.rows) {
        check_field_count(rep, row, manifest.reporting_path);
        std::string at = where(manifest.reporting_path, row.line);
        ReportingRateEstimate rr;
        rr.year = static_cast<int>(csv::parse_int(row.fields[rcols[0]], at));
        rr.rate_pct = csv::parse_real(row.fields[rcols[1]], at);
        rr.se_pct = csv::parse_real(row.fields[rcols[2]], at);
        if (!(rr.rate_pct > 0.0 && rr.rate_pct < 100.0)) {
            throw ParseError(at + ": reporting rate must lie strictly between 0 and 100");
        }
        if (rr.se_pct < 0.0) {
            throw ParseError(at + ": standard error must be nonnegative");
        }
        if (!ds.reporting.emplace(rr.year, rr).second) {
            throw ParseError(at + ": duplicate reporting year " + std::to_string(rr.year));
        }
    }

    // join the auxiliary tables onto the records
    for (auto& rec : ds.records) {
        auto key = std::make_pair(city_key(rec.city), rec.year);
        if (auto it = populations.find(key); it != populations.end()) {
            rec.n_s = it->second.first;
            rec.n_f = it->second.second;
        }
        if (auto it = pph_by_city.find(key.first); it != pph_by_city.end()) {
            rec.pph = it->second;
        }
    }

    auto findings = validate(ds);
    std::vector<Finding> errors;
    for (const auto& f : findings) {
        if (f.severity == Severity::error) errors.push_back(f);
    }
    if (!errors.empty()) {
        std::string msg = "dataset '" + ds.label + "' failed validation: " +
                          errors.front().message;
        if (errors.size() > 1) {
            msg += " (+" + std::to_string(errors.size() - 1) + " more)";
        }
        throw ValidationError(msg, std::move(errors));
    }
    return ds;
}

namespace {

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << content;
    if (!out) {
        throw IoError("write failed for " + path);
    }
}

}  // namespace

SourceManifest save(const Dataset& ds, const std::string& dir) {
    fs::path base(dir);
    std::error_code ec;
    fs::create_directories(base, ec);
    if (ec) {
        throw IoError("cannot create directory " + dir + ": " + ec.message());
    }

    std::vector<const CityYearRecord*> ordered;
    for (const auto& rec : ds.records) ordered.push_back(&rec);
    std::sort(ordered.begin(), ordered.end(),
              [](const CityYearRecord* a, const CityYearRecord* b) {
                  auto ka = city_key(a->city);
                  auto kb = city_key(b->city);
                  return std::tie(ka, a->year) < std::tie(kb, b->year);
              });

    std::string counts = "city,year,b_p\n";
    std::string pops = "city,year,n_s,n_f\n";
    for (const CityYearRecord* rec : ordered) {
        std::string city = csv::quote_if_needed(rec->city);
        counts += city + "," + std::to_string(rec->year) + "," + std::to_string(rec->b_p) + "\n";
        pops += city + "," + std::to_string(rec->year) + ",";
        if (rec->n_s) pops += std::to_string(*rec->n_s);
        pops += ",";
        if (rec->n_f) pops += std::to_string(*rec->n_f);
        pops += "\n";
    }

    std::string pph = "city,pph\n";
    std::set<std::string> pph_done;
    for (const CityYearRecord* rec : ordered) {
        if (pph_done.insert(city_key(rec->city)).second) {
            pph += csv::quote_if_needed(rec->city) + "," + format_fixed(rec->pph, 2) + "\n";
        }
    }

    std::string reporting = "year,rate_pct,se_pct\n";
    for (const auto& [year, rr] : ds.reporting) {
        reporting += std::to_string(year) + "," + format_fixed(rr.rate_pct, 1) + "," +
                     format_fixed(rr.se_pct, 1) + "\n";
    }

    SourceManifest m;
    m.counts_path = (base / "counts.csv").string();
    m.populations_path = (base / "populations.csv").string();
    m.pph_path = (base / "pph.csv").string();
    m.reporting_path = (base / "reporting.csv").string();
    m.dataset_label = ds.label;

    write_text_file(m.counts_path, counts);
    write_text_file(m.populations_path, pops);
    write_text_file(m.pph_path, pph);
    write_text_file(m.reporting_path, reporting);

    nlohmann::ordered_json manifest;
    manifest["label"] = ds.label;
    manifest["counts"] = "counts.csv";
    manifest["populations"] = "populations.csv";
    manifest["pph"] = "pph.csv";
    manifest["reporting"] = "reporting.csv";
    write_text_file((base / "manifest.json").string(), manifest.dump(2) + "\n");

    return m;
}

}  // namespace burgbounds
