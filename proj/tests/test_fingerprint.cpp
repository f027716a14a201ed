#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "qfloor/fingerprint.hpp"
#include "qfloor/synthetic.hpp"

using namespace qfloor;
namespace fs = std::filesystem;

namespace {

// Scratch directory next to the test binary, recreated per process.
const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        auto path = fs::temp_directory_path() / "qfloor-tests";
        fs::remove_all(path);
        fs::create_directories(path);
        return path;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& contents) {
    const auto path = scratch_dir() / name;
    std::ofstream out(path);
    out << contents;
    return path.string();
}

RssRecord make_record(const std::string& building, int floor,
                      std::map<std::string, double> rss) {
    RssRecord record;
    record.building_id = building;
    record.floor = floor;
    record.location_id = building + "-" + std::to_string(floor);
    record.rss = std::move(rss);
    return record;
}

}  // namespace

TEST_CASE("binarize marks heard sources") {
    const std::vector<std::string> ap_order = {"AP1", "AP2"};
    CHECK(binarize(make_record("B0", 0, {{"AP1", -50.0}}), ap_order) ==
          SignVector::parse("1,-1"));
    CHECK(binarize(make_record("B0", 0, {}), ap_order) == SignVector::parse("-1,-1"));
    // below a configured threshold counts as unheard
    CHECK(binarize(make_record("B0", 0, {{"AP1", -95.0}}), ap_order, -90.0) ==
          SignVector::parse("-1,-1"));
    CHECK(binarize(make_record("B0", 0, {{"AP1", -89.0}}), ap_order, -90.0) ==
          SignVector::parse("1,-1"));
}

TEST_CASE("select_aps ranks by detection count with lexicographic ties") {
    std::vector<RssRecord> records;
    records.push_back(make_record("B0", 0, {{"AP2", -40}, {"AP3", -40}, {"AP1", -40}}));
    records.push_back(make_record("B0", 0, {{"AP3", -42}, {"AP9", -42}}));
    records.push_back(make_record("B0", 1, {{"AP3", -44}, {"AP2", -44}, {"AP5", -44}}));

    // counts: AP3=3, AP2=2, AP1=1, AP5=1, AP9=1 -> ties AP1 < AP5 < AP9
    CHECK(select_aps(records, 4) == std::vector<std::string>{"AP3", "AP2", "AP1", "AP5"});

    // invariant under record permutation
    std::vector<RssRecord> shuffled = {records[2], records[0], records[1]};
    CHECK(select_aps(shuffled, 4) == select_aps(records, 4));

    CHECK_THROWS_AS(select_aps(records, 3), std::invalid_argument);
    CHECK_THROWS_AS(select_aps(records, 8), std::invalid_argument);
}

TEST_CASE("build_db splits deterministically and stratifies by floor") {
    SyntheticConfig config;
    config.floors_per_building = {3};
    config.samples_per_floor = 40;
    config.seed = 5;
    const auto records = generate_synthetic(config);
    const auto ap_order = select_aps(records, 4);

    const auto first = build_db(records, ap_order, {0.7, 11});
    const auto second = build_db(records, ap_order, {0.7, 11});
    CHECK(first.test.size() == second.test.size());
    CHECK(first.db.m() == second.db.m());
    for (std::size_t i = 0; i < first.test.size(); ++i) {
        CHECK(first.test[i].signs == second.test[i].signs);
        CHECK(first.test[i].true_floor == second.test[i].true_floor);
    }
    CHECK(first.test.size() == 36);  // 30% of 40 per floor, all three floors

    const auto different = build_db(records, ap_order, {0.7, 12});
    const bool same_split = [&] {
        if (different.test.size() != first.test.size()) return false;
        for (std::size_t i = 0; i < first.test.size(); ++i) {
            if (!(different.test[i].signs == first.test[i].signs)) return false;
        }
        return true;
    }();
    CHECK_FALSE(same_split);

    CHECK_THROWS_AS(build_db(records, ap_order, {1.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_db(records, ap_order, {0.0, 1}), std::invalid_argument);
}

TEST_CASE("build_db collapses duplicate vectors within a floor") {
    std::vector<RssRecord> records;
    for (int i = 0; i < 10; ++i) {
        records.push_back(make_record("B0", 0, {{"AP1", -50}}));
        records.push_back(make_record("B0", 1, {{"AP2", -50}}));
    }
    const std::vector<std::string> ap_order = {"AP1", "AP2"};
    const auto data = build_db(records, ap_order, {0.7, 1});
    CHECK(data.db.m() == 2);  // one deduped sample per floor
    int total_multiplicity = 0;
    for (const auto& sample : data.db.samples) {
        total_multiplicity += sample.multiplicity;
    }
    CHECK(total_multiplicity == 14);  // 7 training records per floor
}

TEST_CASE("a floor with a single record goes to training with a warning") {
    std::vector<RssRecord> records;
    for (int i = 0; i < 6; ++i) {
        records.push_back(make_record("B0", 0, {{"AP1", -50.0 - i}}));
    }
    records.push_back(make_record("B0", 7, {{"AP2", -60}}));

    const auto data = build_db(records, {"AP1", "AP2"}, {0.5, 3});
    CHECK(data.warnings.size() == 1);
    CHECK(data.warnings[0].find("floor 7") != std::string::npos);
    for (const auto& sample : data.test) {
        CHECK(sample.true_floor == 0);
    }
}

TEST_CASE("padding appends unheard entries and preserves the dot-product argmax") {
    CHECK(pad_to_power_of_two(SignVector::parse("1,1,-1")) == SignVector::parse("1,1,-1,-1"));
    CHECK(pad_to_power_of_two(SignVector::parse("1,1,-1,1")) == SignVector::parse("1,1,-1,1"));

    const auto padded_order = pad_to_power_of_two(std::vector<std::string>{"A", "B", "C"});
    CHECK(padded_order == std::vector<std::string>{"A", "B", "C", "PAD3"});

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t length = 3 + rng() % 10;  // mostly non-powers of two
        const auto user = oracle::random_sign_vector(length, rng);
        std::vector<SignVector> fingerprints;
        for (int f = 0; f < 12; ++f) {
            fingerprints.push_back(oracle::random_sign_vector(length, rng));
        }
        auto argmax = [](const std::vector<double>& scores) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < scores.size(); ++i) {
                if (scores[i] > scores[best]) best = i;
            }
            return best;
        };
        std::vector<double> raw, padded;
        const auto padded_user = pad_to_power_of_two(user);
        for (const auto& fp : fingerprints) {
            raw.push_back(oracle::normalized_dot(fp, user));
            padded.push_back(oracle::normalized_dot(pad_to_power_of_two(fp), padded_user));
        }
        CHECK(argmax(raw) == argmax(padded));
    }
}

TEST_CASE("csv ingestion maps the sentinel to absence") {
    const auto path = write_file("tiny.csv",
                                 "AP001,AP002,FLOOR,BUILDINGID,SPACEID\n"
                                 "-64,100,2,B0,101\n"
                                 "100,100,0,B0,102\n");
    const auto records = ingest_csv(path, PipelineConfig{});
    REQUIRE(records.size() == 2);
    CHECK(records[0].rss == std::map<std::string, double>{{"AP001", -64.0}});
    CHECK(records[0].floor == 2);
    CHECK(records[0].building_id == "B0");
    CHECK(records[0].location_id == "101");
    CHECK(records[1].rss.empty());
}

TEST_CASE("csv ingestion rejects bad inputs with line numbers") {
    CHECK_THROWS_WITH_AS(ingest_csv((scratch_dir() / "missing.csv").string(), PipelineConfig{}),
                         doctest::Contains("missing.csv"), std::runtime_error);

    const auto empty = write_file("empty.csv", "");
    CHECK_THROWS_AS(ingest_csv(empty, PipelineConfig{}), std::runtime_error);

    const auto negative_floor = write_file("negfloor.csv",
                                           "AP001,FLOOR,BUILDINGID,SPACEID\n"
                                           "-64,2,B0,1\n"
                                           "-70,-1,B0,2\n");
    CHECK_THROWS_WITH_AS(ingest_csv(negative_floor, PipelineConfig{}),
                         doctest::Contains(":3"), std::runtime_error);

    const auto bad_rss = write_file("badrss.csv",
                                    "AP001,FLOOR,BUILDINGID,SPACEID\n"
                                    "12,2,B0,1\n");
    CHECK_THROWS_WITH_AS(ingest_csv(bad_rss, PipelineConfig{}),
                         doctest::Contains("outside [-110, 0]"), std::runtime_error);

    const auto no_layout = write_file("nolayout.csv", "X,Y,Z\n1,2,3\n");
    CHECK_THROWS_WITH_AS(ingest_csv(no_layout, PipelineConfig{}),
                         doctest::Contains("unknown column layout"), std::runtime_error);
}

TEST_CASE("db and test-set files round-trip") {
    SyntheticConfig config;
    config.floors_per_building = {2, 2};
    config.samples_per_floor = 10;
    const auto records = generate_synthetic(config);
    const auto ap_order = select_aps(records, 4);
    const auto data = build_db(records, ap_order, {0.6, 2});

    const auto db_path = (scratch_dir() / "db.fp").string();
    const auto test_path = (scratch_dir() / "test.fp").string();
    save_db(data.db, db_path);
    save_test_set(data.test, data.db.ap_order, test_path);

    const auto db = load_db(db_path);
    CHECK(db.ap_order == data.db.ap_order);
    REQUIRE(db.m() == data.db.m());
    for (std::size_t i = 0; i < db.m(); ++i) {
        CHECK(db.samples[i].signs == data.db.samples[i].signs);
        CHECK(db.samples[i].floor == data.db.samples[i].floor);
        CHECK(db.samples[i].building_id == data.db.samples[i].building_id);
    }

    const auto test = load_test_set(test_path);
    REQUIRE(test.size() == data.test.size());
    for (std::size_t i = 0; i < test.size(); ++i) {
        CHECK(test[i].signs == data.test[i].signs);
        CHECK(test[i].true_floor == data.test[i].true_floor);
    }
}

TEST_CASE("config file parsing") {
    const auto path = write_file("pipeline.conf",
                                 "# survey ingestion settings\n"
                                 "sentinel_value = 100\n"
                                 "threshold_dbm = -90\n"
                                 "ap_prefix = WAP\n"
                                 "n_target = 8\n"
                                 "train_fraction = 0.6\n"
                                 "seed = 99\n");
    const auto config = load_config(path);
    CHECK(config.sentinel_value == 100.0);
    REQUIRE(config.threshold_dbm.has_value());
    CHECK(*config.threshold_dbm == -90.0);
    CHECK(config.ap_prefixes == std::vector<std::string>{"WAP"});
    CHECK(config.n_target == 8);
    CHECK(config.train_fraction == 0.6);
    CHECK(config.seed == 99);

    const auto bad = write_file("bad.conf", "not_a_key = 3\n");
    CHECK_THROWS_WITH_AS(load_config(bad), doctest::Contains("unknown config key"),
                         std::runtime_error);
}

TEST_CASE("synthetic records ingest identically through the csv round-trip") {
    SyntheticConfig config;
    config.floors_per_building = {3};
    config.samples_per_floor = 5;
    const auto records = generate_synthetic(config);
    const auto path = (scratch_dir() / "synth.csv").string();
    write_records_csv(records, path);

    const auto loaded = ingest_csv(path, PipelineConfig{});
    REQUIRE(loaded.size() == records.size());
    const auto ap_order = select_aps(records, 4);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(loaded[i].floor == records[i].floor);
        CHECK(loaded[i].building_id == records[i].building_id);
        // binarization is insensitive to the integer rounding in the CSV
        CHECK(binarize(loaded[i], ap_order) == binarize(records[i], ap_order));
    }
}
