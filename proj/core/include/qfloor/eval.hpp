#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfloor/baselines.hpp"
#include "qfloor/fingerprint.hpp"
#include "qfloor/shots.hpp"
#include "qfloor/sign_vector.hpp"

namespace qfloor {

struct EvalOptions {
    SimilarityMethod method = SimilarityMethod::ClassicalAbsDot;
    std::optional<std::int64_t> shots;  // nullopt = exact mode
    std::uint64_t seed = 0;             // base seed for shots / random floors
    int jobs = 1;                       // 0 = all available execution units
};

struct MatchResult {
    std::vector<double> scores;  // one per fingerprint index; empty for random
    SimilarityMethod method = SimilarityMethod::ClassicalAbsDot;
    int chosen_index = -1;       // argmax, ties broken by lowest index
    int estimated_floor = 0;
    std::optional<int> true_floor;
};

struct CdfPoint {
    int error = 0;             // |estimated - true| in floors
    double cumulative = 0.0;   // fraction of samples with error <= this
};

struct EvalReport {
    SimilarityMethod method = SimilarityMethod::ClassicalAbsDot;
    bool exact = true;
    std::int64_t shots = 0;
    int n = 0;
    std::int64_t m = 0;
    std::vector<int> floor_errors;  // per test sample, in test order
    double accuracy = 0.0;          // fraction with error 0
    std::vector<CdfPoint> cdf;      // nondecreasing, ends at 1.0
    int qubits_used = 0;            // 0 for classical and random methods
    std::int64_t total_gate_count = 0;
};

// Scores one online sample against every fingerprint and picks the argmax
// floor. sample_index feeds the per-pair seed derivation in sampled mode.
MatchResult match_sample(const FingerprintDB& db, const SignVector& psi,
                         const EvalOptions& options, std::size_t sample_index = 0);

EvalReport evaluate(const FingerprintDB& db, const std::vector<TestSample>& test,
                    const EvalOptions& options);

struct ComplexityRow {
    int n = 0;
    std::int64_t classical_cost = 0;  // M * N
    std::int64_t quantum_cost = 0;    // M * log2(N)
    int qubits = 0;                   // 1 + log2(N)
    double sim_seconds_per_eval = 0;  // measured simulator time, not quantum runtime
};

// Arithmetic cost model over the given N values, plus a measured per-circuit
// simulation wall time for context.
std::vector<ComplexityRow> complexity_report(const std::vector<int>& n_values, std::int64_t m);

struct AccuracyPoint {
    int n = 0;
    double accuracy = 0.0;
};

// For each N: select the top-N APs, rebuild the split with the fixed seed,
// evaluate, and report the accuracy.
std::vector<AccuracyPoint> accuracy_vs_n(const std::vector<RssRecord>& records,
                                         const std::vector<int>& n_values,
                                         const EvalOptions& options, const SplitOptions& split,
                                         std::optional<double> threshold = std::nullopt);

std::string report_to_json(const EvalReport& report);
std::string cdf_to_csv(const EvalReport& report);
std::string complexity_to_csv(const std::vector<ComplexityRow>& rows);
std::string accuracy_table_to_csv(const std::vector<AccuracyPoint>& points);

}  // namespace qfloor
