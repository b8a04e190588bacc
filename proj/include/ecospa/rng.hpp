#pragma once

#include <cstdint>
#include <random>

#include "ecospa/matrix.hpp"

namespace ecospa {

// Seeded random source. The engine is mt19937_64 (bit-exact stream per the
// standard); the normal transform is an explicit Box-Muller so that fills
// are reproducible across standard-library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller, one spare cached.
    double normal();

    // Uniform integer in [0, n).
    std::size_t uniform_index(std::size_t n);

    Matrix normal_matrix(std::size_t rows, std::size_t cols, double stddev = 1.0,
                         double mean = 0.0);

    // Derived seed for an independent sub-stream (per-trial fan-out).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace ecospa
