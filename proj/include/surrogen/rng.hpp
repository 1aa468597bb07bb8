#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace surrogen {

// splitmix64 finalizer (Steele, Lea & Flood 2014). Used both as the
// per-step output mix of RandomStream and as the documented mixing
// function that derives independent per-surrogate streams from
// (seed, index): stream_seed = mix64(seed ^ mix64(index)).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic 64-bit stream (splitmix64). Cheap to seed, safe to use
// one instance per thread; never shared between threads.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) noexcept : state_(seed) {}

    // Independent stream for surrogate `index` of a batch seeded with `seed`.
    // Results depend only on (seed, index), not on creation order.
    static RandomStream for_index(std::uint64_t seed, std::uint64_t index) noexcept {
        return RandomStream(mix64(seed ^ mix64(index)));
    }

    std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform phase on (-pi, pi]: u = 0 maps to +pi, u -> 1 approaches -pi.
    double next_phase() noexcept {
        return std::numbers::pi - next_unit() * (2.0 * std::numbers::pi);
    }

    bool next_bit() noexcept { return (next_u64() >> 63) != 0; }

    // Standard normal via Box-Muller; u1 is drawn from (0, 1] so the log
    // is always finite. Pairs are generated together and the spare cached.
    double next_gaussian() noexcept {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 =
            static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace surrogen
