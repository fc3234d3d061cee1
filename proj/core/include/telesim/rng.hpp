#pragma once

#include <cstdint>
#include <random>

namespace telesim {

/// Deterministic random source. All randomness in the library flows through
/// this class so that a 64-bit seed reproduces every run bit-for-bit.
/// std::mt19937_64 has a standard-mandated output sequence; the uniform and
/// normal transforms below are implemented here (not via std:: distributions,
/// whose output is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal deviate (Box-Muller, pair cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Counter-based stream derivation (splitmix64 finalizer): trial k of a
    /// run seeded with `master` uses derive_stream(master, k), so any trial
    /// is reproducible in isolation.
    static std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
        std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace telesim
