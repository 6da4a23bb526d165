#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

// Deterministic randomness helpers. Every stochastic stage of the toolkit
// derives an independent mt19937_64 stream from (seed, salt, salt2) via
// splitmix64, and maps raw draws to values with the fixed rules below.
// std::uniform_*_distribution is never used: its output is not pinned by
// the standard, and reproducibility across runs is part of the contract.

namespace retro::rng {

inline constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

/// FNV-1a over the raw bytes of `s`: h = offset; h = (h ^ byte) * prime.
std::uint64_t fnv1a64(std::string_view s);

/// splitmix64 finalizer (Vigna). Used to decorrelate seed/salt combinations.
std::uint64_t splitmix64(std::uint64_t x);

/// Stream seeded with splitmix64(splitmix64(splitmix64(seed) ^ salt) ^ salt2).
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t salt = 0,
                            std::uint64_t salt2 = 0);

/// Uniform double in [0, 1): (g() >> 11) * 2^-53.
double u01(std::mt19937_64& g);

/// Uniform index in [0, n): floor(u01 * n), clamped to n-1. Requires n >= 1.
std::size_t uniform_index(std::mt19937_64& g, std::size_t n);

/// Fisher-Yates shuffle driven by uniform_index.
template <class T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& g) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = uniform_index(g, i);
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace retro::rng
