#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qfloor/sign_vector.hpp"

namespace qfloor {

// One survey row: RSS per heard AP, tagged with ground truth. APs absent
// from the map were not detected.
struct RssRecord {
    std::string building_id;
    int floor = 0;
    std::string location_id;
    std::map<std::string, double> rss;  // AP id -> dBm, in [-110, 0]
};

// Ingestion / pipeline settings, loadable from a key-value config file.
struct PipelineConfig {
    double sentinel_value = 100.0;            // "not detected" marker in the CSV
    std::optional<double> threshold_dbm;      // below it an AP counts as unheard
    std::vector<std::string> ap_prefixes = {"WAP", "AP"};
    std::string location_column = "SPACEID";
    int n_target = 16;
    double train_fraction = 0.7;
    std::uint64_t seed = 0;
};

PipelineConfig load_config(const std::string& path);

// Reads a survey CSV: AP columns (by configured prefix) plus FLOOR,
// BUILDINGID and the location column. Sentinel-valued entries map to
// absence. Malformed rows are reported with their 1-based line number.
std::vector<RssRecord> ingest_csv(const std::string& path, const PipelineConfig& config);

// Entry i is +1 iff ap_order[i] was detected (and is at or above the
// threshold when one is configured).
SignVector binarize(const RssRecord& record, const std::vector<std::string>& ap_order,
                    std::optional<double> threshold = std::nullopt);

// The n_target most frequently detected APs, ties broken by lexicographic
// id; output ordered by (count desc, id asc). n_target must be a power of
// two and at most the number of observed APs.
std::vector<std::string> select_aps(const std::vector<RssRecord>& records, int n_target);

struct FingerprintSample {
    SignVector signs;
    int floor = 0;
    std::string location_id;
    std::string building_id;
    int multiplicity = 1;  // collapsed duplicates within the floor
};

struct FingerprintDB {
    std::vector<std::string> ap_order;
    std::vector<FingerprintSample> samples;

    std::size_t n() const { return ap_order.size(); }
    std::size_t m() const { return samples.size(); }
    std::set<int> floor_set() const;
};

struct TestSample {
    SignVector signs;
    int true_floor = 0;
    std::string building_id;
    std::string location_id;
};

struct SplitOptions {
    double train_fraction = 0.7;  // in (0, 1)
    std::uint64_t seed = 0;
};

struct DatasetSplit {
    FingerprintDB db;
    std::vector<TestSample> test;
    std::vector<std::string> warnings;
};

// Seeded split stratified by floor label; floors with fewer than two records
// go entirely to training with a warning. Training vectors that collide
// within a floor are collapsed into one sample with its multiplicity.
DatasetSplit build_db(const std::vector<RssRecord>& records,
                      const std::vector<std::string>& ap_order, const SplitOptions& split,
                      std::optional<double> threshold = std::nullopt);

// Compact text format: header "N <n> M <m>", the ap_order line, then one
// "<building> <floor> <location> <+/- bitstring>" line per sample.
void save_db(const FingerprintDB& db, const std::string& path);
FingerprintDB load_db(const std::string& path);

// The test set reuses the same format; floor is the ground truth.
void save_test_set(const std::vector<TestSample>& test,
                   const std::vector<std::string>& ap_order, const std::string& path);
std::vector<TestSample> load_test_set(const std::string& path);

}  // namespace qfloor
