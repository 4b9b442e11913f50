#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace eiv {

// SplitMix64 finalizer. Used to turn (master seed, index...) tuples into
// statistically independent engine seeds, so Monte Carlo reps and bootstrap
// resamples each get their own stream and can run in any order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a + 0x632be59bd9b4e019ULL * splitmix64(b + 1));
}

// A seeded random stream. One instance per logical task; not shared across
// threads.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    // Child stream addressed by up to three indices under a master seed.
    static RngStream derive(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                            std::uint64_t c = 0) {
        return RngStream(mix_seed(mix_seed(mix_seed(master, a), b), c));
    }

    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                                     std::uint64_t c = 0) {
        return mix_seed(mix_seed(mix_seed(master, a), b), c);
    }

    double uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }

    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(gen_);
    }

    double normal(double stddev) { return normal_(gen_) * stddev; }

    // Exponential(1) via inversion; uniform01 is in [0,1) so 1-u stays off 0.
    double exponential() {
        double u = uniform01();
        return -std::log(1.0 - u);
    }

    std::uint64_t next_u64() { return gen_(); }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace eiv
