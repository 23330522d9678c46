#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace relaycap {

// Deterministic random source. std::mt19937_64 has a standard-defined output
// sequence, but the std <random> distributions do not, so all distributions
// are implemented here. Identical seeds give identical streams on every
// platform and every build.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Stream-splitting rule: child k of seed s is seeded with
    // splitmix64(s + (k+1) * 0x9E3779B97F4A7C15). Callers that parallelize
    // across scenarios/days derive one child per stream index.
    static std::uint64_t child_seed(std::uint64_t seed, std::uint64_t stream) {
        return splitmix64(seed + (stream + 1) * 0x9E3779B97F4A7C15ULL);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection sampling to avoid modulo bias.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Standard normal via Box-Muller; the spare value is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = next_double();
        } while (u1 <= 0.0);
        u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Poisson by Knuth's product method; adequate for the rates used here.
    long poisson(double lambda) {
        if (lambda <= 0.0) return 0;
        if (lambda > 60.0) {
            // Split large rates to keep the product method stable.
            long a = poisson(lambda / 2.0);
            long b = poisson(lambda - lambda / 2.0);
            return a + b;
        }
        const double limit = std::exp(-lambda);
        long k = 0;
        double prod = next_double();
        while (prod > limit) {
            ++k;
            prod *= next_double();
        }
        return k;
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace relaycap
