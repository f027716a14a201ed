#include "qfloor/fingerprint.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qfloor {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) {
        fields.push_back(trim(field));
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

[[noreturn]] void malformed(const std::string& path, std::size_t line_number,
                            const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line_number) +
                             ": malformed row: " + what);
}

bool parse_double(const std::string& token, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(token, &used);
        return used == token.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_int(const std::string& token, int& out) {
    try {
        std::size_t used = 0;
        out = std::stoi(token, &used);
        return used == token.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path);
    }
    PipelineConfig config;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;

        std::string key, value;
        const auto eq = line.find('=');
        if (eq != std::string::npos) {
            key = trim(line.substr(0, eq));
            value = trim(line.substr(eq + 1));
        } else {
            const auto space = line.find_first_of(" \t");
            if (space == std::string::npos) {
                throw std::runtime_error(path + ":" + std::to_string(line_number) +
                                         ": expected 'key = value'");
            }
            key = trim(line.substr(0, space));
            value = trim(line.substr(space + 1));
        }

        auto bad_value = [&]() {
            throw std::runtime_error(path + ":" + std::to_string(line_number) +
                                     ": bad value '" + value + "' for " + key);
        };
        if (key == "sentinel_value") {
            if (!parse_double(value, config.sentinel_value)) bad_value();
        } else if (key == "threshold_dbm") {
            double threshold = 0.0;
            if (!parse_double(value, threshold)) bad_value();
            config.threshold_dbm = threshold;
        } else if (key == "ap_prefix") {
            config.ap_prefixes.clear();
            std::stringstream prefixes(value);
            std::string prefix;
            while (std::getline(prefixes, prefix, ',')) {
                config.ap_prefixes.push_back(trim(prefix));
            }
            if (config.ap_prefixes.empty()) bad_value();
        } else if (key == "location_column") {
            config.location_column = value;
        } else if (key == "n_target") {
            if (!parse_int(value, config.n_target)) bad_value();
        } else if (key == "train_fraction") {
            if (!parse_double(value, config.train_fraction)) bad_value();
        } else if (key == "seed") {
            try {
                config.seed = std::stoull(value);
            } catch (const std::exception&) {
                bad_value();
            }
        } else {
            throw std::runtime_error(path + ":" + std::to_string(line_number) +
                                     ": unknown config key '" + key + "'");
        }
    }
    return config;
}

std::vector<RssRecord> ingest_csv(const std::string& path, const PipelineConfig& config) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open dataset file " + path);
    }

    std::string header_line;
    if (!std::getline(in, header_line) || trim(header_line).empty()) {
        throw std::runtime_error(path + ": empty dataset file");
    }
    const auto header = split_csv_line(header_line);

    auto is_ap_column = [&](const std::string& name) {
        return std::any_of(config.ap_prefixes.begin(), config.ap_prefixes.end(),
                           [&](const std::string& prefix) {
                               return !prefix.empty() && name.starts_with(prefix);
                           });
    };

    std::vector<std::size_t> ap_columns;
    std::vector<std::string> ap_names;
    std::optional<std::size_t> floor_col, building_col, location_col;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == "FLOOR") {
            floor_col = c;
        } else if (header[c] == "BUILDINGID") {
            building_col = c;
        } else if (header[c] == config.location_column) {
            location_col = c;
        } else if (is_ap_column(header[c])) {
            ap_columns.push_back(c);
            ap_names.push_back(header[c]);
        }
    }
    if (ap_columns.empty() || !floor_col || !building_col || !location_col) {
        throw std::runtime_error(path + ": unknown column layout (need AP columns, FLOOR, "
                                        "BUILDINGID and " +
                                 config.location_column + ")");
    }

    std::vector<RssRecord> records;
    std::string line;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            malformed(path, line_number,
                      "expected " + std::to_string(header.size()) + " fields, got " +
                          std::to_string(fields.size()));
        }

        RssRecord record;
        if (!parse_int(fields[*floor_col], record.floor)) {
            malformed(path, line_number, "non-integer FLOOR '" + fields[*floor_col] + "'");
        }
        if (record.floor < 0) {
            malformed(path, line_number,
                      "FLOOR " + std::to_string(record.floor) + " outside the declared range");
        }
        record.building_id = fields[*building_col];
        record.location_id = fields[*location_col];

        for (std::size_t k = 0; k < ap_columns.size(); ++k) {
            const auto& token = fields[ap_columns[k]];
            double value = 0.0;
            if (!parse_double(token, value)) {
                malformed(path, line_number,
                          "non-numeric RSS '" + token + "' in column " + ap_names[k]);
            }
            if (value == config.sentinel_value) continue;  // not detected
            if (value < -110.0 || value > 0.0) {
                malformed(path, line_number,
                          "RSS " + token + " outside [-110, 0] in column " + ap_names[k]);
            }
            record.rss.emplace(ap_names[k], value);
        }
        records.push_back(std::move(record));
    }
    if (records.empty()) {
        throw std::runtime_error(path + ": no data rows");
    }
    return records;
}

SignVector binarize(const RssRecord& record, const std::vector<std::string>& ap_order,
                    std::optional<double> threshold) {
    std::vector<std::int8_t> entries(ap_order.size(), -1);
    for (std::size_t i = 0; i < ap_order.size(); ++i) {
        const auto it = record.rss.find(ap_order[i]);
        if (it == record.rss.end()) continue;
        if (threshold && it->second < *threshold) continue;
        entries[i] = 1;
    }
    return SignVector(std::move(entries));
}

std::vector<std::string> select_aps(const std::vector<RssRecord>& records, int n_target) {
    if (n_target < 2 || (n_target & (n_target - 1)) != 0) {
        throw std::invalid_argument("AP count " + std::to_string(n_target) +
                                    " is not a power of two >= 2");
    }
    std::map<std::string, std::size_t> detections;  // ordered: ties resolve lexicographically
    for (const auto& record : records) {
        for (const auto& [ap, _] : record.rss) {
            ++detections[ap];
        }
    }
    if (detections.size() < std::size_t(n_target)) {
        throw std::invalid_argument("only " + std::to_string(detections.size()) +
                                    " APs observed, need " + std::to_string(n_target));
    }
    std::vector<std::pair<std::string, std::size_t>> ranked(detections.begin(), detections.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::string> ap_order;
    ap_order.reserve(n_target);
    for (int i = 0; i < n_target; ++i) {
        ap_order.push_back(ranked[i].first);
    }
    return ap_order;
}

std::set<int> FingerprintDB::floor_set() const {
    std::set<int> floors;
    for (const auto& sample : samples) floors.insert(sample.floor);
    return floors;
}

DatasetSplit build_db(const std::vector<RssRecord>& records,
                      const std::vector<std::string>& ap_order, const SplitOptions& split,
                      std::optional<double> threshold) {
    if (records.empty()) {
        throw std::invalid_argument("no records to split");
    }
    if (!(split.train_fraction > 0.0 && split.train_fraction < 1.0)) {
        throw std::invalid_argument("train fraction must be strictly between 0 and 1");
    }

    std::map<int, std::vector<std::size_t>> by_floor;
    for (std::size_t i = 0; i < records.size(); ++i) {
        by_floor[records[i].floor].push_back(i);
    }

    DatasetSplit result;
    std::vector<std::size_t> train_indices, test_indices;
    std::mt19937_64 rng(split.seed);
    for (auto& [floor, indices] : by_floor) {
        if (indices.size() < 2) {
            result.warnings.push_back("floor " + std::to_string(floor) + " has " +
                                      std::to_string(indices.size()) +
                                      " record(s); placed entirely in training");
            train_indices.insert(train_indices.end(), indices.begin(), indices.end());
            continue;
        }
        std::shuffle(indices.begin(), indices.end(), rng);
        auto n_train = static_cast<std::size_t>(
            std::llround(split.train_fraction * double(indices.size())));
        n_train = std::clamp<std::size_t>(n_train, 1, indices.size() - 1);
        train_indices.insert(train_indices.end(), indices.begin(), indices.begin() + n_train);
        test_indices.insert(test_indices.end(), indices.begin() + n_train, indices.end());
    }
    std::sort(train_indices.begin(), train_indices.end());
    std::sort(test_indices.begin(), test_indices.end());

    result.db.ap_order = ap_order;
    std::map<std::pair<int, std::string>, std::size_t> seen;  // (floor, bits) -> sample slot
    for (auto i : train_indices) {
        auto signs = binarize(records[i], ap_order, threshold);
        const auto key = std::make_pair(records[i].floor, to_bitstring(signs));
        if (auto it = seen.find(key); it != seen.end()) {
            ++result.db.samples[it->second].multiplicity;
            continue;
        }
        seen.emplace(key, result.db.samples.size());
        result.db.samples.push_back({std::move(signs), records[i].floor,
                                     records[i].location_id, records[i].building_id, 1});
    }

    for (auto i : test_indices) {
        result.test.push_back({binarize(records[i], ap_order, threshold), records[i].floor,
                               records[i].building_id, records[i].location_id});
    }
    return result;
}

namespace {

void save_samples(const std::vector<std::string>& ap_order, std::size_t count,
                  const std::string& path,
                  const std::function<void(std::ostream&, std::size_t)>& write_row) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << "N " << ap_order.size() << " M " << count << '\n';
    for (std::size_t i = 0; i < ap_order.size(); ++i) {
        out << (i ? " " : "") << ap_order[i];
    }
    out << '\n';
    for (std::size_t i = 0; i < count; ++i) {
        write_row(out, i);
    }
    if (!out) {
        throw std::runtime_error("write failed for " + path);
    }
}

struct ParsedSampleFile {
    std::vector<std::string> ap_order;
    std::vector<FingerprintSample> samples;
};

ParsedSampleFile load_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::string tag_n, tag_m;
    std::size_t n = 0, m = 0;
    if (!(in >> tag_n >> n >> tag_m >> m) || tag_n != "N" || tag_m != "M") {
        throw std::runtime_error(path + ": bad header, expected 'N <n> M <m>'");
    }
    ParsedSampleFile parsed;
    parsed.ap_order.resize(n);
    for (auto& ap : parsed.ap_order) {
        if (!(in >> ap)) {
            throw std::runtime_error(path + ": truncated AP order line");
        }
    }
    parsed.samples.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        FingerprintSample sample;
        std::string bits;
        if (!(in >> sample.building_id >> sample.floor >> sample.location_id >> bits)) {
            throw std::runtime_error(path + ": truncated sample line " + std::to_string(i + 1));
        }
        sample.signs = SignVector::from_bitstring(bits);
        if (sample.signs.size() != n) {
            throw std::runtime_error(path + ": sample " + std::to_string(i + 1) + " has " +
                                     std::to_string(sample.signs.size()) + " entries, expected " +
                                     std::to_string(n));
        }
        parsed.samples.push_back(std::move(sample));
    }
    return parsed;
}

}  // namespace

void save_db(const FingerprintDB& db, const std::string& path) {
    save_samples(db.ap_order, db.samples.size(), path, [&](std::ostream& out, std::size_t i) {
        const auto& s = db.samples[i];
        out << s.building_id << ' ' << s.floor << ' ' << s.location_id << ' '
            << to_bitstring(s.signs) << '\n';
    });
}

FingerprintDB load_db(const std::string& path) {
    auto parsed = load_samples(path);
    return {std::move(parsed.ap_order), std::move(parsed.samples)};
}

void save_test_set(const std::vector<TestSample>& test,
                   const std::vector<std::string>& ap_order, const std::string& path) {
    save_samples(ap_order, test.size(), path, [&](std::ostream& out, std::size_t i) {
        const auto& s = test[i];
        out << s.building_id << ' ' << s.true_floor << ' ' << s.location_id << ' '
            << to_bitstring(s.signs) << '\n';
    });
}

std::vector<TestSample> load_test_set(const std::string& path) {
    auto parsed = load_samples(path);
    std::vector<TestSample> test;
    test.reserve(parsed.samples.size());
    for (auto& s : parsed.samples) {
        test.push_back({std::move(s.signs), s.floor, std::move(s.building_id),
                        std::move(s.location_id)});
    }
    return test;
}

}  // namespace qfloor
