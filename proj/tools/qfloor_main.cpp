// qfloor: quantum binary-neuron floor localization pipeline.
//
// Subcommands: synth, ingest, encode, match, evaluate, resources.
// Exit codes: 0 success, 1 evaluation failure, 2 input or usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfloor/baselines.hpp"
#include "qfloor/eval.hpp"
#include "qfloor/fingerprint.hpp"
#include "qfloor/hsgs.hpp"
#include "qfloor/neuron.hpp"
#include "qfloor/synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qfloor;

namespace {

// Input-side problems (bad flags, missing or malformed files) exit with 2;
// failures past validation exit with 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

fs::path resolve_out(const std::string& path) {
    const char* root = std::getenv("QFLOOR_OUTPUT_ROOT");
    fs::path p(path);
    if (root && *root && p.is_relative()) {
        return fs::path(root) / p;
    }
    return p;
}

void write_text_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path);
    out << contents;
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

std::optional<std::int64_t> parse_mode(const std::string& mode) {
    if (mode == "exact") return std::nullopt;
    if (mode.starts_with("shots:")) {
        try {
            const std::int64_t shots = std::stoll(mode.substr(6));
            if (shots < 1) throw std::invalid_argument("");
            return shots;
        } catch (const std::exception&) {
            throw UsageError("bad shot count in --mode '" + mode + "'");
        }
    }
    throw UsageError("unknown --mode '" + mode + "' (expected exact or shots:<k>)");
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            values.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw UsageError("bad N value '" + token + "'");
        }
    }
    if (values.empty()) {
        throw UsageError("empty N list");
    }
    return values;
}

SignVector parse_vector_arg(const std::string& literal) {
    try {
        return SignVector::parse(literal);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

json config_json(const PipelineConfig& config) {
    json j;
    j["sentinel_value"] = config.sentinel_value;
    if (config.threshold_dbm) {
        j["threshold_dbm"] = *config.threshold_dbm;
    } else {
        j["threshold_dbm"] = nullptr;
    }
    j["ap_prefix"] = config.ap_prefixes;
    j["location_column"] = config.location_column;
    j["n_target"] = config.n_target;
    j["train_fraction"] = config.train_fraction;
    j["seed"] = config.seed;
    return j;
}

void write_manifest(const fs::path& dir, json manifest) {
    write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

// ---- synth ----------------------------------------------------------------

struct SynthArgs {
    std::string floors = "4,4,5,3";
    int aps_per_floor = 2;
    int radius = 1;
    double flip_prob = 0.05;
    int samples_per_floor = 30;
    std::uint64_t seed = 1;
    std::string out;
};

int run_synth(const SynthArgs& args) {
    SyntheticConfig config;
    config.floors_per_building.clear();
    for (int f : parse_n_list(args.floors)) {
        if (f < 1) throw UsageError("each building needs at least one floor");
        config.floors_per_building.push_back(f);
    }
    config.aps_per_floor = args.aps_per_floor;
    config.hearability_radius = args.radius;
    config.flip_probability = args.flip_prob;
    config.samples_per_floor = args.samples_per_floor;
    config.seed = args.seed;

    const auto records = generate_synthetic(config);
    const auto out = resolve_out(args.out);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    write_records_csv(records, out.string());
    std::cout << "wrote " << records.size() << " records to " << out.string() << "\n";
    return 0;
}

// ---- ingest ---------------------------------------------------------------

struct IngestArgs {
    std::string data;
    std::string config_path;
    std::optional<int> n_target;
    std::optional<double> split;
    std::optional<std::uint64_t> seed;
    std::optional<double> threshold;
    std::optional<double> sentinel;
    std::string out;
};

PipelineConfig merged_config(const IngestArgs& args) {
    PipelineConfig config;
    if (!args.config_path.empty()) {
        try {
            config = load_config(args.config_path);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
    if (args.n_target) config.n_target = *args.n_target;
    if (args.split) config.train_fraction = *args.split;
    if (args.seed) config.seed = *args.seed;
    if (args.threshold) config.threshold_dbm = *args.threshold;
    if (args.sentinel) config.sentinel_value = *args.sentinel;
    return config;
}

int run_ingest(const IngestArgs& args) {
    const auto config = merged_config(args);
    if (config.n_target < 2 || (config.n_target & (config.n_target - 1)) != 0) {
        throw UsageError("--n must be a power of two >= 2, got " +
                         std::to_string(config.n_target));
    }

    std::vector<RssRecord> records;
    std::vector<std::string> ap_order;
    DatasetSplit data;
    try {
        records = ingest_csv(args.data, config);
        ap_order = select_aps(records, config.n_target);
        data = build_db(records, ap_order, {config.train_fraction, config.seed},
                        config.threshold_dbm);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }

    const auto out = resolve_out(args.out);
    fs::create_directories(out);
    save_db(data.db, (out / "db.fp").string());
    save_test_set(data.test, data.db.ap_order, (out / "test.fp").string());

    json manifest;
    manifest["command"] = "ingest";
    manifest["dataset"] = args.data;
    manifest["config"] = config_json(config);
    manifest["output"] = {{"db", "db.fp"}, {"test", "test.fp"}};
    write_manifest(out, manifest);

    for (const auto& warning : data.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
    std::map<int, std::size_t> histogram;
    for (const auto& sample : data.db.samples) histogram[sample.floor] += sample.multiplicity;
    std::cout << "N " << data.db.n() << "  M " << data.db.m() << "  test "
              << data.test.size() << "\n";
    std::cout << "training records per floor:\n";
    for (const auto& [floor, count] : histogram) {
        std::cout << "  floor " << floor << ": " << count << "\n";
    }
    std::cout << "wrote " << (out / "db.fp").string() << ", " << (out / "test.fp").string()
              << "\n";
    return 0;
}

// ---- encode ---------------------------------------------------------------

struct EncodeArgs {
    std::string phi;
    std::string psi;
    std::string db_path;
    int db_index = -1;
    bool full = false;
    bool entangling = false;
    std::string out;
};

int run_encode(const EncodeArgs& args) {
    SignVector phi;
    if (!args.phi.empty()) {
        phi = parse_vector_arg(args.phi);
    } else if (!args.db_path.empty() && args.db_index >= 0) {
        FingerprintDB db;
        try {
            db = load_db(args.db_path);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        if (std::size_t(args.db_index) >= db.m()) {
            throw UsageError("--index " + std::to_string(args.db_index) +
                             " outside database of M = " + std::to_string(db.m()));
        }
        phi = db.samples[args.db_index].signs;
    } else {
        throw UsageError("need --phi or (--db and --index)");
    }

    Circuit circuit;
    try {
        const auto canon_phi = canonicalize(phi);
        if (canon_phi.global_sign < 0) {
            std::cerr << "note: vector canonicalized with a global -1\n";
        }
        if (args.full) {
            if (args.psi.empty()) throw UsageError("--full needs --psi");
            const auto canon_psi = canonicalize(parse_vector_arg(args.psi));
            circuit = build_neuron_circuit(canon_phi.vector, canon_psi.vector);
        } else if (args.entangling) {
            const auto source = args.psi.empty() ? canon_phi : canonicalize(parse_vector_arg(args.psi));
            circuit = synthesize_entangling(source.vector);
        } else {
            circuit = synthesize_encoding(canon_phi.vector);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }

    const auto text = to_text(circuit);
    if (args.out.empty()) {
        std::cout << text;
    } else {
        const auto out = resolve_out(args.out);
        if (out.has_parent_path()) fs::create_directories(out.parent_path());
        write_text_file(out, text);
    }
    return 0;
}

// ---- match ----------------------------------------------------------------

struct MatchArgs {
    std::string db_path;
    std::string sample;
    std::string test_path;
    int test_index = -1;
    std::string method = "quantum";
    std::string mode = "exact";
    std::uint64_t seed = 0;
};

int run_match(const MatchArgs& args) {
    FingerprintDB db;
    SignVector psi;
    std::optional<int> true_floor;
    try {
        db = load_db(args.db_path);
        if (!args.sample.empty()) {
            psi = SignVector::parse(args.sample);
        } else if (!args.test_path.empty() && args.test_index >= 0) {
            const auto test = load_test_set(args.test_path);
            if (std::size_t(args.test_index) >= test.size()) {
                throw std::invalid_argument("--index outside the test set");
            }
            psi = test[args.test_index].signs;
            true_floor = test[args.test_index].true_floor;
        } else {
            throw std::invalid_argument("need --sample or (--test and --index)");
        }
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }

    EvalOptions options{method_from_string(args.method), parse_mode(args.mode), args.seed, 1};
    const auto result = match_sample(db, psi, options);

    for (std::size_t i = 0; i < result.scores.size(); ++i) {
        const auto& sample = db.samples[i];
        std::cout << (int(i) == result.chosen_index ? "> " : "  ") << i << "  "
                  << sample.building_id << " floor " << sample.floor << " " << sample.location_id
                  << "  score " << result.scores[i] << "\n";
    }
    std::cout << "estimated floor: " << result.estimated_floor;
    if (true_floor) {
        std::cout << "  (true floor: " << *true_floor << ")";
    }
    std::cout << "\n";
    return 0;
}

// ---- evaluate ---------------------------------------------------------------

struct EvaluateArgs {
    std::string db_path;
    std::string test_path;
    std::string data;
    std::vector<std::string> methods;
    std::string mode = "exact";
    std::uint64_t seed = 0;
    int jobs = 0;
    std::string sweep_n;
    bool resources = false;
    std::optional<double> split;
    std::int64_t resources_m = 100;
    std::string out;
};

int run_evaluate(const EvaluateArgs& args) {
    const auto shots = parse_mode(args.mode);
    if (args.methods.empty()) {
        throw UsageError("need at least one --method");
    }
    std::vector<SimilarityMethod> methods;
    for (const auto& name : args.methods) {
        try {
            methods.push_back(method_from_string(name));
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }

    FingerprintDB db;
    std::vector<TestSample> test;
    std::vector<RssRecord> records;
    const bool have_db = !args.db_path.empty();
    try {
        if (have_db) {
            db = load_db(args.db_path);
            test = load_test_set(args.test_path);
            if (!test.empty() && test.front().signs.size() != db.n()) {
                throw std::invalid_argument(
                    "test vectors have " + std::to_string(test.front().signs.size()) +
                    " entries but the database uses N = " + std::to_string(db.n()));
            }
        }
        if (!args.data.empty()) {
            records = ingest_csv(args.data, PipelineConfig{});
        }
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (!args.sweep_n.empty() && records.empty()) {
        throw UsageError("--sweep-n needs --data with the raw survey CSV");
    }
    if (!have_db && args.sweep_n.empty() && !args.resources) {
        throw UsageError("need --db/--test, --sweep-n or --resources");
    }

    const auto out = resolve_out(args.out);
    fs::create_directories(out);

    json manifest;
    manifest["command"] = "evaluate";
    manifest["db"] = args.db_path;
    manifest["test"] = args.test_path;
    if (!args.data.empty()) manifest["dataset"] = args.data;
    manifest["methods"] = args.methods;
    manifest["mode"] = shots ? "shots" : "exact";
    manifest["shots"] = shots.value_or(0);
    manifest["seed"] = args.seed;
    if (!args.sweep_n.empty()) manifest["sweep_n"] = args.sweep_n;
    manifest["resources"] = args.resources;
    write_manifest(out, manifest);

    for (auto method : methods) {
        EvalOptions options{method, shots, args.seed, args.jobs};
        const auto name = to_string(method);
        if (have_db) {
            const auto report = evaluate(db, test, options);
            write_text_file(out / ("report_" + name + ".json"), report_to_json(report));
            write_text_file(out / ("cdf_" + name + ".csv"), cdf_to_csv(report));
            std::cout << name << ": accuracy " << report.accuracy << " over " << test.size()
                      << " samples (qubits " << report.qubits_used << ")\n";
        }
        if (!args.sweep_n.empty()) {
            const SplitOptions split{args.split.value_or(0.7), args.seed};
            const auto points =
                accuracy_vs_n(records, parse_n_list(args.sweep_n), options, split);
            write_text_file(out / ("sweep_" + name + ".csv"), accuracy_table_to_csv(points));
            for (const auto& point : points) {
                std::cout << name << " N=" << point.n << ": accuracy " << point.accuracy
                          << "\n";
            }
        }
    }

    if (args.resources) {
        std::vector<int> n_values;
        for (int n = 4; n <= 1024; n *= 2) n_values.push_back(n);
        const auto m = have_db ? std::int64_t(db.m()) : args.resources_m;
        write_text_file(out / "complexity.csv", complexity_to_csv(complexity_report(n_values, m)));
    }
    std::cout << "outputs in " << out.string() << "\n";
    return 0;
}

// ---- resources --------------------------------------------------------------

struct ResourcesArgs {
    std::string n_list = "4,8,16,32,64,128,256,512,1024";
    std::int64_t m = 100;
    std::string out;
};

int run_resources(const ResourcesArgs& args) {
    std::vector<ComplexityRow> rows;
    try {
        rows = complexity_report(parse_n_list(args.n_list), args.m);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto csv = complexity_to_csv(rows);
    if (args.out.empty()) {
        std::cout << csv;
    } else {
        const auto out = resolve_out(args.out);
        if (out.has_parent_path()) fs::create_directories(out.parent_path());
        write_text_file(out, csv);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum binary-neuron floor localization pipeline"};
    app.require_subcommand(1);

    SynthArgs synth;
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic multi-building survey");
    synth_cmd->add_option("--floors", synth.floors, "floors per building, comma separated");
    synth_cmd->add_option("--aps-per-floor", synth.aps_per_floor, "APs installed per floor");
    synth_cmd->add_option("--radius", synth.radius, "hearability radius in floors");
    synth_cmd->add_option("--flip-prob", synth.flip_prob, "heard/unheard flip probability");
    synth_cmd->add_option("--samples-per-floor", synth.samples_per_floor, "records per floor");
    synth_cmd->add_option("--seed", synth.seed, "generator seed");
    synth_cmd->add_option("--out", synth.out, "output CSV path")->required();

    IngestArgs ingest;
    auto* ingest_cmd = app.add_subcommand("ingest", "binarize a survey CSV into db/test files");
    ingest_cmd->add_option("--data", ingest.data, "survey CSV path")->required();
    ingest_cmd->add_option("--config", ingest.config_path, "key-value config file");
    ingest_cmd->add_option("--n", ingest.n_target, "number of APs to select (power of two)");
    ingest_cmd->add_option("--split", ingest.split, "training fraction in (0,1)");
    ingest_cmd->add_option("--seed", ingest.seed, "split seed");
    ingest_cmd->add_option("--threshold", ingest.threshold, "dBm below which an AP is unheard");
    ingest_cmd->add_option("--sentinel", ingest.sentinel, "not-detected sentinel value");
    ingest_cmd->add_option("--out", ingest.out, "output directory")->required();

    EncodeArgs encode;
    auto* encode_cmd = app.add_subcommand("encode", "dump synthesized circuits");
    encode_cmd->add_option("--phi", encode.phi, "fingerprint vector literal, e.g. 1,1,1,-1");
    encode_cmd->add_option("--psi", encode.psi, "user vector literal");
    encode_cmd->add_option("--db", encode.db_path, "fingerprint database file");
    encode_cmd->add_option("--index", encode.db_index, "fingerprint index inside --db");
    encode_cmd->add_flag("--full", encode.full, "full neuron circuit (needs --psi)");
    encode_cmd->add_flag("--entangling", encode.entangling, "entangling stage only");
    encode_cmd->add_option("--out", encode.out, "write to file instead of stdout");

    MatchArgs match;
    auto* match_cmd = app.add_subcommand("match", "match one sample against a database");
    match_cmd->add_option("--db", match.db_path, "fingerprint database file")->required();
    match_cmd->add_option("--sample", match.sample, "sample vector literal");
    match_cmd->add_option("--test", match.test_path, "test-set file");
    match_cmd->add_option("--index", match.test_index, "sample index inside --test");
    match_cmd->add_option("--method", match.method,
                          "classical | classical-abs | quantum | swap-test | random");
    match_cmd->add_option("--mode", match.mode, "exact or shots:<k>");
    match_cmd->add_option("--seed", match.seed, "shot seed");

    EvaluateArgs evaluate;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "run the localization experiments");
    evaluate_cmd->add_option("--db", evaluate.db_path, "fingerprint database file");
    evaluate_cmd->add_option("--test", evaluate.test_path, "test-set file");
    evaluate_cmd->add_option("--data", evaluate.data, "raw survey CSV (for --sweep-n)");
    evaluate_cmd->add_option("--method", evaluate.methods,
                             "method, repeatable: classical | classical-abs | quantum | "
                             "swap-test | random");
    evaluate_cmd->add_option("--mode", evaluate.mode, "exact or shots:<k>");
    evaluate_cmd->add_option("--seed", evaluate.seed, "base seed for shots/random");
    evaluate_cmd->add_option("--jobs", evaluate.jobs, "worker threads (0 = all cores)");
    evaluate_cmd->add_option("--sweep-n", evaluate.sweep_n, "accuracy sweep, e.g. 4,8,16");
    evaluate_cmd->add_option("--split", evaluate.split, "training fraction for --sweep-n");
    evaluate_cmd->add_flag("--resources", evaluate.resources, "also write complexity.csv");
    evaluate_cmd->add_option("--m", evaluate.resources_m,
                             "fingerprint size for --resources without --db");
    evaluate_cmd->add_option("--out", evaluate.out, "output directory")->required();

    ResourcesArgs resources;
    auto* resources_cmd = app.add_subcommand("resources", "cost model table");
    resources_cmd->add_option("--n", resources.n_list, "N values, comma separated");
    resources_cmd->add_option("--m", resources.m, "fingerprint size M");
    resources_cmd->add_option("--out", resources.out, "write CSV to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (synth_cmd->parsed()) return run_synth(synth);
        if (ingest_cmd->parsed()) return run_ingest(ingest);
        if (encode_cmd->parsed()) return run_encode(encode);
        if (match_cmd->parsed()) return run_match(match);
        if (evaluate_cmd->parsed()) return run_evaluate(evaluate);
        if (resources_cmd->parsed()) return run_resources(resources);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "evaluation failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
