#include "retro/rng.hpp"

namespace retro::rng {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = kFnvOffset;
    for (unsigned char c : s) {
        h ^= static_cast<std::uint64_t>(c);
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t salt,
                            std::uint64_t salt2) {
    std::uint64_t s = splitmix64(splitmix64(splitmix64(seed) ^ salt) ^ salt2);
    return std::mt19937_64(s);
}

double u01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& g, std::size_t n) {
    auto i = static_cast<std::size_t>(u01(g) * static_cast<double>(n));
    return i >= n ? n - 1 : i;
}

}  // namespace retro::rng
