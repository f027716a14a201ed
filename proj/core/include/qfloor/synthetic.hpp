#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qfloor/fingerprint.hpp"

namespace qfloor {

// Multi-building survey generator. Each floor carries aps_per_floor APs; an
// AP is heard across its own building within hearability_radius floors, and
// every heard/unheard decision is then flipped with flip_probability.
struct SyntheticConfig {
    std::vector<int> floors_per_building = {4, 4, 5, 3};
    int aps_per_floor = 2;
    int hearability_radius = 1;
    double flip_probability = 0.05;
    int samples_per_floor = 30;
    std::uint64_t seed = 1;
};

std::vector<RssRecord> generate_synthetic(const SyntheticConfig& config);

// Writes records as an ingestable CSV (AP columns, FLOOR, BUILDINGID,
// SPACEID; absent APs get the sentinel value).
void write_records_csv(const std::vector<RssRecord>& records, const std::string& path,
                       double sentinel_value = 100.0);

}  // namespace qfloor
