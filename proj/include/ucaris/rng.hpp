#pragma once

#include <cstdint>

#include "ucaris/linalg.hpp"

namespace ucaris {

/// xoshiro256++ stream seeded via splitmix64. Fully specified so that results
/// are identical across platforms and standard-library versions.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double uniform();

    /// Uniform integer in [0, n).
    int uniform_int(int n);

    /// Circularly-symmetric complex Gaussian with E|z|^2 = var.
    cplx cgaussian(double var);

private:
    std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Stateless substream derivation: (seed, a, b) -> independent stream seed.
/// Used as (scenario seed, sweep-point index, trial index) so that worker
/// count and scheduling never change results.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

}  // namespace ucaris
