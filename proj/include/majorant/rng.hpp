// Seeded sampling helpers. All randomness in the library flows through this
// generator so that a fixed seed reproduces every draw; the raw-bits-to-double
// conversion is spelled out rather than left to distribution objects, which
// the standard does not pin down.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace majorant {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives a stream seed for sub-task `index` of a run seeded with `seed`.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double angle() { return 2.0 * std::numbers::pi_v<double> * uniform01(); }

    // Uniform w.r.t. area in the closed disk of the given radius.
    std::complex<double> in_disk(double radius) {
        const double modulus = radius * std::sqrt(uniform01());
        return std::polar(modulus, angle());
    }

    uint64_t bits() { return engine_(); }

    // Uniform integer in [0, n).
    int below(int n) { return static_cast<int>(engine_() % static_cast<uint64_t>(n)); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace majorant
