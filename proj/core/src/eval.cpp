#include "qfloor/eval.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qfloor/neuron.hpp"

namespace qfloor {

namespace {

int resolved_jobs(int jobs) {
    if (jobs < 0) {
        throw std::invalid_argument("job count must be >= 0");
    }
    if (jobs == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? int(hw) : 1;
    }
    return jobs;
}

// Static slicing over [0, count); results land in preallocated slots, so the
// output is independent of scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
    const int workers = std::min<std::size_t>(resolved_jobs(jobs), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                body(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

int qubits_for(SimilarityMethod method, int n_sources) {
    const int n = std::bit_width(unsigned(n_sources)) - 1;
    switch (method) {
        case SimilarityMethod::QuantumNeuron: return 1 + n;
        case SimilarityMethod::SwapTest: return 1 + 2 * n;
        default: return 0;
    }
}

struct PairOutcome {
    double score = 0.0;
    std::int64_t gates = 0;
};

PairOutcome score_pair(const FingerprintSample& fingerprint, const SignVector& psi,
                       const EvalOptions& options, std::size_t sample_index,
                       std::size_t fingerprint_index) {
    PairOutcome outcome;
    switch (options.method) {
        case SimilarityMethod::ClassicalDot:
            outcome.score = classical_dot(fingerprint.signs, psi);
            break;
        case SimilarityMethod::ClassicalAbsDot:
            outcome.score = classical_absdot(fingerprint.signs, psi);
            break;
        case SimilarityMethod::QuantumNeuron: {
            const auto canon_phi = canonicalize(fingerprint.signs);
            const auto canon_psi = canonicalize(psi);
            outcome.gates =
                gate_count(build_neuron_circuit(canon_phi.vector, canon_psi.vector)).total;
            if (options.shots) {
                const ShotConfig config{
                    *options.shots,
                    derive_pair_seed(options.seed, sample_index, fingerprint_index)};
                outcome.score =
                    activation_sampled(fingerprint.signs, psi, config).activation_magnitude;
            } else {
                outcome.score = activation_exact(fingerprint.signs, psi).activation_magnitude;
            }
            break;
        }
        case SimilarityMethod::SwapTest: {
            const auto canon_phi = canonicalize(fingerprint.signs);
            const auto canon_psi = canonicalize(psi);
            outcome.gates =
                gate_count(build_swap_test_circuit(canon_phi.vector, canon_psi.vector)).total;
            if (options.shots) {
                const ShotConfig config{
                    *options.shots,
                    derive_pair_seed(options.seed, sample_index, fingerprint_index)};
                outcome.score = swap_test_similarity(fingerprint.signs, psi, config).value;
            } else {
                outcome.score = swap_test_similarity(fingerprint.signs, psi).value;
            }
            break;
        }
        case SimilarityMethod::Random:
            throw std::logic_error("random method has no pairwise score");
    }
    return outcome;
}

}  // namespace

MatchResult match_sample(const FingerprintDB& db, const SignVector& psi,
                         const EvalOptions& options, std::size_t sample_index) {
    if (db.samples.empty()) {
        throw std::invalid_argument("fingerprint database is empty");
    }
    if (psi.size() != db.n()) {
        throw std::invalid_argument("sample has " + std::to_string(psi.size()) +
                                    " entries but the database uses N = " +
                                    std::to_string(db.n()));
    }

    MatchResult result;
    result.method = options.method;

    if (options.method == SimilarityMethod::Random) {
        result.estimated_floor =
            random_floor(db.floor_set(), derive_pair_seed(options.seed, sample_index, 0));
        return result;
    }

    result.scores.resize(db.samples.size());
    for (std::size_t i = 0; i < db.samples.size(); ++i) {
        result.scores[i] = score_pair(db.samples[i], psi, options, sample_index, i).score;
    }
    result.chosen_index = 0;
    for (std::size_t i = 1; i < result.scores.size(); ++i) {
        if (result.scores[i] > result.scores[result.chosen_index]) {
            result.chosen_index = int(i);  // strict: ties keep the lowest index
        }
    }
    result.estimated_floor = db.samples[result.chosen_index].floor;
    return result;
}

EvalReport evaluate(const FingerprintDB& db, const std::vector<TestSample>& test,
                    const EvalOptions& options) {
    if (test.empty()) {
        throw std::invalid_argument("test set is empty");
    }
    if (db.samples.empty()) {
        throw std::invalid_argument("fingerprint database is empty");
    }

    EvalReport report;
    report.method = options.method;
    report.exact = !options.shots.has_value();
    report.shots = options.shots.value_or(0);
    report.n = int(db.n());
    report.m = std::int64_t(db.m());
    report.qubits_used = options.method == SimilarityMethod::Random
                             ? 0
                             : qubits_for(options.method, int(db.n()));
    report.floor_errors.resize(test.size());

    std::vector<std::int64_t> gates_per_sample(test.size(), 0);

    parallel_for(test.size(), options.jobs, [&](std::size_t s) {
        if (options.method == SimilarityMethod::Random) {
            const int estimated =
                random_floor(db.floor_set(), derive_pair_seed(options.seed, s, 0));
            report.floor_errors[s] = std::abs(estimated - test[s].true_floor);
            return;
        }
        std::int64_t gates = 0;
        double best = 0.0;
        int best_index = -1;
        for (std::size_t i = 0; i < db.samples.size(); ++i) {
            const auto outcome = score_pair(db.samples[i], test[s].signs, options, s, i);
            gates += outcome.gates;
            if (best_index < 0 || outcome.score > best) {
                best = outcome.score;
                best_index = int(i);
            }
        }
        gates_per_sample[s] = gates;
        report.floor_errors[s] = std::abs(db.samples[best_index].floor - test[s].true_floor);
    });

    for (auto g : gates_per_sample) report.total_gate_count += g;

    std::size_t exact_hits = 0;
    int max_error = 0;
    for (int e : report.floor_errors) {
        if (e == 0) ++exact_hits;
        max_error = std::max(max_error, e);
    }
    report.accuracy = double(exact_hits) / double(test.size());

    std::vector<std::size_t> counts(max_error + 1, 0);
    for (int e : report.floor_errors) ++counts[e];
    std::size_t cumulative = 0;
    for (int e = 0; e <= max_error; ++e) {
        cumulative += counts[e];
        report.cdf.push_back({e, double(cumulative) / double(test.size())});
    }
    return report;
}

std::vector<ComplexityRow> complexity_report(const std::vector<int>& n_values, std::int64_t m) {
    if (m < 1) {
        throw std::invalid_argument("fingerprint size M must be >= 1");
    }
    std::vector<ComplexityRow> rows;
    for (int n : n_values) {
        if (n < 2 || (n & (n - 1)) != 0) {
            throw std::invalid_argument("N = " + std::to_string(n) +
                                        " is not a power of two >= 2");
        }
        ComplexityRow row;
        row.n = n;
        const int log_n = std::bit_width(unsigned(n)) - 1;
        row.classical_cost = m * std::int64_t(n);
        row.quantum_cost = m * std::int64_t(log_n);
        row.qubits = 1 + log_n;

        // one representative circuit evaluation, timed on the simulator
        std::mt19937_64 rng{std::uint64_t(n)};
        std::vector<std::int8_t> phi(n, 1), psi(n, 1);
        for (int i = 1; i < n; ++i) {
            phi[i] = rng() & 1 ? 1 : -1;
            psi[i] = rng() & 1 ? 1 : -1;
        }
        const SignVector phi_v{phi}, psi_v{psi};
        const auto start = std::chrono::steady_clock::now();
        constexpr int kReps = 5;
        for (int rep = 0; rep < kReps; ++rep) {
            (void)activation_exact(phi_v, psi_v);
        }
        const auto elapsed = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start);
        row.sim_seconds_per_eval = elapsed.count() / kReps;
        rows.push_back(row);
    }
    return rows;
}

std::vector<AccuracyPoint> accuracy_vs_n(const std::vector<RssRecord>& records,
                                         const std::vector<int>& n_values,
                                         const EvalOptions& options, const SplitOptions& split,
                                         std::optional<double> threshold) {
    std::vector<AccuracyPoint> points;
    for (int n : n_values) {
        const auto ap_order = select_aps(records, n);
        const auto data = build_db(records, ap_order, split, threshold);
        const auto report = evaluate(data.db, data.test, options);
        points.push_back({n, report.accuracy});
    }
    return points;
}

std::string report_to_json(const EvalReport& report) {
    nlohmann::json j;
    j["method"] = to_string(report.method);
    j["mode"] = report.exact ? "exact" : "shots";
    j["shots"] = report.shots;
    j["n"] = report.n;
    j["m"] = report.m;
    j["test_size"] = report.floor_errors.size();
    j["accuracy"] = report.accuracy;
    j["qubits_used"] = report.qubits_used;
    j["total_gate_count"] = report.total_gate_count;
    j["floor_errors"] = report.floor_errors;
    auto& cdf = j["cdf"] = nlohmann::json::array();
    for (const auto& point : report.cdf) {
        cdf.push_back({{"error", point.error}, {"cumulative_fraction", point.cumulative}});
    }
    return j.dump(2) + "\n";
}

std::string cdf_to_csv(const EvalReport& report) {
    std::ostringstream out;
    out << "error,cumulative_fraction\n";
    for (const auto& point : report.cdf) {
        out << point.error << ',' << point.cumulative << '\n';
    }
    return out.str();
}

std::string complexity_to_csv(const std::vector<ComplexityRow>& rows) {
    std::ostringstream out;
    out << "n,classical_cost,quantum_cost,qubits,sim_seconds_per_eval\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.classical_cost << ',' << row.quantum_cost << ','
            << row.qubits << ',' << row.sim_seconds_per_eval << '\n';
    }
    return out.str();
}

std::string accuracy_table_to_csv(const std::vector<AccuracyPoint>& points) {
    std::ostringstream out;
    out << "n,accuracy\n";
    for (const auto& point : points) {
        out << point.n << ',' << point.accuracy << '\n';
    }
    return out.str();
}

}  // namespace qfloor
