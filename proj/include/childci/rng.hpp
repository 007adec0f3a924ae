#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>

namespace childci {

// splitmix64 finalizer; full-avalanche 64-bit mix.
inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Stable per-stream seed derivation so independent streams (sessions, tests)
// never share state. O(1) in the stream index.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed + 0x9E3779B97F4A7C15ULL * (stream + 0x632BE59BD9B4E019ULL));
}

// FNV-1a, used to fold string ids into seed streams.
inline std::uint64_t hash64(const std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

// mt19937_64 core with hand-rolled distributions. The std::* distributions
// are implementation-defined, so streams would differ across standard
// libraries; everything here is pinned by construction.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // [0,1), 53-bit resolution.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Inclusive bounds; modulo draw (bias < 2^-50 for any sane span).
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller with the paired value cached.
    double normal() {
        if (spare_) {
            const double z = *spare_;
            spare_.reset();
            return z;
        }
        const double u1 = 1.0 - uniform();  // (0,1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        return r * std::cos(a);
    }

    double normal(double mu, double sigma) { return mu + sigma * normal(); }

    // Knuth's product method; fine for the small means used here.
    int poisson(double lambda) {
        if (lambda <= 0) return 0;
        const double limit = std::exp(-lambda);
        int k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

  private:
    std::mt19937_64 gen_;
    std::optional<double> spare_;
};

}  // namespace childci
