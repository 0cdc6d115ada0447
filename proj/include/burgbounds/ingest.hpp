#pragma once

#include <string>

#include "burgbounds/domain.hpp"

namespace burgbounds {

// The four independent source files behind a dataset, kept separate so the
// provenance of each input stays visible.
struct SourceManifest {
    std::string counts_path;       // city,year,b_p
    std::string populations_path;  // city,year,n_s,n_f
    std::string pph_path;          // city,pph
    std::string reporting_path;    // year,rate_pct,se_pct
    std::string dataset_label;
};

// Reads a manifest JSON file ({"label", "counts", "populations", "pph",
// "reporting"}); relative paths resolve against the manifest's directory.
SourceManifest read_manifest(const std::string& manifest_path);

// Loads and fully validates a dataset. Fails atomically: any parse problem or
// error-severity finding raises; warnings do not.
Dataset load(const SourceManifest& manifest);

// Writes the dataset back out as the four CSV files plus manifest.json in
// `dir`, using the canonical field formatting. Returns the manifest that
// reloads it.
SourceManifest save(const Dataset& ds, const std::string& dir);

// The North Carolina 2009-2011 residential burglary reference dataset
// compiled into the library: 10 cities, three years, three survey reporting
// rates. Greensboro's 2011 federal population estimate is unavailable.
Dataset embedded_reference();

}  // namespace burgbounds
