#include "qfloor/shots.hpp"

#include <random>
#include <stdexcept>

namespace qfloor {

std::int64_t sample_ones(double probability_one, const ShotConfig& config) {
    if (!(probability_one >= 0.0 && probability_one <= 1.0)) {
        throw std::invalid_argument("probability " + std::to_string(probability_one) +
                                    " outside [0, 1]");
    }
    if (config.shots < 1) {
        throw std::invalid_argument("shot count must be >= 1");
    }
    if (probability_one == 0.0) return 0;
    if (probability_one == 1.0) return config.shots;

    std::mt19937_64 rng(scramble_seed(config.seed));
    std::binomial_distribution<std::int64_t> dist(config.shots, probability_one);
    return dist(rng);
}

std::uint64_t scramble_seed(std::uint64_t seed) {
    seed += 0x9e3779b97f4a7c15ULL;
    seed = (seed ^ (seed >> 30)) * 0xbf58476d1ce4e5b9ULL;
    seed = (seed ^ (seed >> 27)) * 0x94d049bb133111ebULL;
    return seed ^ (seed >> 31);
}

std::uint64_t derive_pair_seed(std::uint64_t base_seed, std::size_t sample_index,
                               std::size_t fingerprint_index) {
    return base_seed ^ static_cast<std::uint64_t>(sample_index) ^
           (static_cast<std::uint64_t>(fingerprint_index) * 0x9e3779b97f4a7c15ULL);
}

}  // namespace qfloor
