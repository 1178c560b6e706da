#include "ucaris/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace ucaris {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t st = seed;
    std::uint64_t h = splitmix64(st);
    st = h ^ (0x9E3779B97F4A7C15ULL * (a + 0x9E53ULL));
    h = splitmix64(st);
    st = h ^ (0xBF58476D1CE4E5B9ULL * (b + 0xC2B2ULL));
    return splitmix64(st);
}

RngStream::RngStream(std::uint64_t seed) {
    std::uint64_t st = seed;
    for (auto& word : s_) word = splitmix64(st);
}

static inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int RngStream::uniform_int(int n) {
    if (n <= 0) throw std::invalid_argument("uniform_int: n must be positive");
    return static_cast<int>(uniform() * n);  // n is small here; modulo bias negligible
}

cplx RngStream::cgaussian(double var) {
    if (var < 0) throw std::invalid_argument("cgaussian: negative variance");
    if (var == 0) return {};
    // Rayleigh amplitude, uniform phase: exact CSCG with E|z|^2 = var.
    const double u1 = uniform();
    const double u2 = uniform();
    const double amp = std::sqrt(-var * std::log1p(-u1));
    return std::polar(amp, kTwoPi * u2);
}

}  // namespace ucaris
