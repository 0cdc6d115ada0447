#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "burgbounds/ingest.hpp"

using namespace burgbounds;
namespace fs = std::filesystem;

namespace {

// Scratch directory per test run; contents are overwritten freely.
fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "burgbounds_ingest_tests";
    fs::create_directories(dir);
    return dir;
}

void write(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    REQUIRE(out.good());
}

struct Fixture {
    fs::path dir;
    SourceManifest manifest;

    Fixture() {
        dir = scratch_dir() / "case";
        fs::remove_all(dir);
        fs::create_directories(dir);
        manifest.counts_path = (dir / "counts.csv").string();
        manifest.populations_path = (dir / "populations.csv").string();
        manifest.pph_path = (dir / "pph.csv").string();
        manifest.reporting_path = (dir / "reporting.csv").string();
        manifest.dataset_label = "fixture";
        write(manifest.counts_path, "city,year,b_p\nAlpha,2009,100\nBeta,2009,250\n");
        write(manifest.populations_path,
              "city,year,n_s,n_f\nAlpha,2009,50000,51000\nBeta,2009,80000,\n");
        write(manifest.pph_path, "city,pph\nAlpha,2.50\nBeta,2.10\n");
        write(manifest.reporting_path, "year,rate_pct,se_pct\n2009,55.0,1.5\n");
    }
};

}  // namespace

TEST_CASE("load assembles records from the four sources") {
    Fixture fx;
    Dataset ds = load(fx.manifest);
    CHECK(ds.label == "fixture");
    REQUIRE(ds.records.size() == 2);
    CHECK(ds.records[0].city == "Alpha");
    CHECK(ds.records[0].b_p == 100);
    CHECK(ds.records[0].n_s == 50000);
    CHECK(ds.records[0].n_f == 51000);
    CHECK(ds.records[0].pph == 2.50);
    CHECK_FALSE(ds.records[1].n_f.has_value());  // empty field means absent
    CHECK(ds.reporting.at(2009).rate_pct == 55.0);
}

TEST_CASE("load failures name the file and line") {
    Fixture fx;

    SUBCASE("missing file") {
        fs::remove(fx.manifest.pph_path);
        CHECK_THROWS_AS(load(fx.manifest), IoError);
    }

    SUBCASE("empty counts file") {
        write(fx.manifest.counts_path, "city,year,b_p\n");
        CHECK_THROWS_WITH_AS(load(fx.manifest),
                             doctest::Contains("no records"), ParseError);
    }

    SUBCASE("duplicate city-year names both lines") {
        write(fx.manifest.counts_path,
              "city,year,b_p\nAlpha,2009,100\nAlpha,2009,100\n");
        try {
            load(fx.manifest);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            std::string msg = e.what();
            CHECK(msg.find(":3") != std::string::npos);
            CHECK(msg.find("duplicate") != std::string::npos);
        }
    }

    SUBCASE("unparseable number") {
        write(fx.manifest.counts_path, "city,year,b_p\nAlpha,2009,many\n");
        CHECK_THROWS_WITH_AS(load(fx.manifest),
                             doctest::Contains("unparseable"), ParseError);
    }

    SUBCASE("unknown column") {
        write(fx.manifest.counts_path, "city,year,b_p,extra\nAlpha,2009,100,1\n");
        CHECK_THROWS_WITH_AS(load(fx.manifest),
                             doctest::Contains("unknown column"), ParseError);
    }

    SUBCASE("missing column") {
        write(fx.manifest.reporting_path, "year,rate_pct\n2009,55.0\n");
        CHECK_THROWS_WITH_AS(load(fx.manifest),
                             doctest::Contains("missing column"), ParseError);
    }

    SUBCASE("validation errors abort the load atomically") {
        write(fx.manifest.reporting_path, "year,rate_pct,se_pct\n2008,55.0,1.5\n");
        CHECK_THROWS_AS(load(fx.manifest), ValidationError);
    }
}

TEST_CASE("quoted fields and CRLF endings parse") {
    Fixture fx;
    write(fx.manifest.counts_path,
          "city,year,b_p\r\n\"Port, East\",2009,10\r\n");
    write(fx.manifest.populations_path,
          "city,year,n_s,n_f\n\"Port, East\",2009,50000,51000\nAlpha,2009,50000,51000\n"
          "Beta,2009,80000,\n");
    write(fx.manifest.pph_path, "city,pph\n\"Port, East\",2.50\n");
    Dataset ds = load(fx.manifest);
    REQUIRE(ds.records.size() == 1);
    CHECK(ds.records[0].city == "Port, East");
}

TEST_CASE("embedded reference dataset matches its documented shape") {
    Dataset ds = embedded_reference();
    CHECK(ds.records.size() == 30);
    CHECK(ds.reporting.size() == 3);

    bool found_charlotte = false;
    bool found_fayetteville = false;
    for (const auto& rec : ds.records) {
        if (rec.city == "Charlotte" && rec.year == 2009) {
            found_charlotte = true;
            CHECK(rec.b_p == 7766);
        }
        if (rec.city == "Fayetteville" && rec.year == 2009) {
            found_fayetteville = true;
            CHECK(rec.n_s == 205285);
            CHECK(rec.n_f == 173995);
        }
        if (rec.city == "Greensboro" && rec.year == 2011) {
            CHECK_FALSE(rec.n_f.has_value());
        }
    }
    CHECK(found_charlotte);
    CHECK(found_fayetteville);
    CHECK(ds.reporting.at(2010).rate_pct == 58.8);
    CHECK(ds.reporting.at(2010).se_pct == 1.9);
    CHECK(ds.hierarchy.theta == Interval(0.005, 0.01));
    CHECK(ds.confidence.z == 1.959964);
}

TEST_CASE("save then load round-trips exactly") {
    fs::path dir = scratch_dir() / "roundtrip";
    fs::remove_all(dir);

    Dataset original = embedded_reference();
    SourceManifest m = save(original, dir.string());
    Dataset reloaded = load(m);
    CHECK(reloaded == original);

    SUBCASE("manifest file reload agrees too") {
        Dataset via_manifest = load(read_manifest((dir / "manifest.json").string()));
        CHECK(via_manifest == original);
    }
}

TEST_CASE("shipped fixture files equal the embedded dataset byte for byte") {
    // the repo ships the serialized form under data/nc
    fs::path repo_data = fs::path(BURGBOUNDS_SOURCE_DIR) / "data" / "nc";
    REQUIRE(fs::exists(repo_data / "manifest.json"));

    Dataset from_files = load(read_manifest((repo_data / "manifest.json").string()));
    CHECK(from_files == embedded_reference());

    fs::path dir = scratch_dir() / "fixture_bytes";
    fs::remove_all(dir);
    save(embedded_reference(), dir.string());
    for (const char* name : {"counts.csv", "populations.csv", "pph.csv", "reporting.csv",
                             "manifest.json"}) {
        std::ifstream a(repo_data / name, std::ios::binary);
        std::ifstream b(dir / name, std::ios::binary);
        std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
        std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
        CHECK_MESSAGE(sa == sb, name);
    }
}
