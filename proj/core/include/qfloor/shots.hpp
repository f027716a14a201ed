#pragma once

#include <cstddef>
#include <cstdint>

namespace qfloor {

struct ShotConfig {
    std::int64_t shots = 1024;  // >= 1
    std::uint64_t seed = 0;
};

// Number of 1-outcomes among config.shots Bernoulli trials with the given
// success probability. A fresh generator is seeded per call, so identical
// (probability, shots, seed) triples always yield identical counts.
std::int64_t sample_ones(double probability_one, const ShotConfig& config);

// Per-(sample, fingerprint) shot seed, reproducible under any evaluation
// order: base ^ sample_index ^ (fingerprint_index * large odd constant).
std::uint64_t derive_pair_seed(std::uint64_t base_seed, std::size_t sample_index,
                               std::size_t fingerprint_index);

// splitmix64 finalizer. Nearby seed values (1, 2, 3, ...) produce heavily
// correlated mt19937_64 initial states; scrambling restores independent-
// looking streams while staying a pure function of the seed.
std::uint64_t scramble_seed(std::uint64_t seed);

}  // namespace qfloor
