#include "qfloor/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <stdexcept>

namespace qfloor {

namespace {

struct PlacedAp {
    std::string id;
    int building = 0;
    int floor = 0;
};

std::string ap_name(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "AP%03d", index);
    return buf;
}

}  // namespace

std::vector<RssRecord> generate_synthetic(const SyntheticConfig& config) {
    if (config.floors_per_building.empty() || config.aps_per_floor < 1 ||
        config.samples_per_floor < 1) {
        throw std::invalid_argument("synthetic config needs buildings, APs and samples");
    }
    if (config.hearability_radius < 0 || config.flip_probability < 0.0 ||
        config.flip_probability > 1.0) {
        throw std::invalid_argument("bad hearability radius or flip probability");
    }

    std::vector<PlacedAp> aps;
    int ap_index = 1;
    for (std::size_t b = 0; b < config.floors_per_building.size(); ++b) {
        for (int f = 0; f < config.floors_per_building[b]; ++f) {
            for (int k = 0; k < config.aps_per_floor; ++k) {
                aps.push_back({ap_name(ap_index++), int(b), f});
            }
        }
    }

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::uniform_real_distribution<double> jitter(-3.0, 3.0);

    std::vector<RssRecord> records;
    for (std::size_t b = 0; b < config.floors_per_building.size(); ++b) {
        for (int f = 0; f < config.floors_per_building[b]; ++f) {
            for (int s = 0; s < config.samples_per_floor; ++s) {
                RssRecord record;
                record.building_id = "B" + std::to_string(b);
                record.floor = f;
                record.location_id =
                    "B" + std::to_string(b) + "-" + std::to_string(f) + "-" + std::to_string(s);
                for (const auto& ap : aps) {
                    const bool same_building = ap.building == int(b);
                    const int distance = same_building ? std::abs(ap.floor - f) : 99;
                    bool heard = same_building && distance <= config.hearability_radius;
                    if (uniform(rng) < config.flip_probability) heard = !heard;
                    if (!heard) continue;
                    const double base = -45.0 - 12.0 * std::min(distance, 4);
                    record.rss.emplace(ap.id,
                                       std::clamp(base + jitter(rng), -104.0, -30.0));
                }
                records.push_back(std::move(record));
            }
        }
    }
    return records;
}

void write_records_csv(const std::vector<RssRecord>& records, const std::string& path,
                       double sentinel_value) {
    if (records.empty()) {
        throw std::invalid_argument("no records to write");
    }
    std::set<std::string> ap_ids;
    for (const auto& record : records) {
        for (const auto& [ap, _] : record.rss) ap_ids.insert(ap);
    }

    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    for (const auto& ap : ap_ids) {
        out << ap << ',';
    }
    out << "FLOOR,BUILDINGID,SPACEID\n";
    for (const auto& record : records) {
        for (const auto& ap : ap_ids) {
            const auto it = record.rss.find(ap);
            if (it == record.rss.end()) {
                out << sentinel_value << ',';
            } else {
                out << std::llround(it->second) << ',';
            }
        }
        out << record.floor << ',' << record.building_id << ',' << record.location_id << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed for " + path);
    }
}

}  // namespace qfloor
