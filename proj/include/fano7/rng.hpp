#pragma once

#include <cstdint>
#include <random>

#include "fano7/hypermatrix.hpp"

namespace fano7 {

// splitmix64 step; used to decorrelate derived seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent stream for sample `index` of a master seed; results do not
// depend on evaluation order across samples.
inline std::mt19937_64 rng_for(std::uint64_t master_seed, std::uint64_t index) {
    return std::mt19937_64(mix_seed(master_seed ^ mix_seed(index + 1)));
}

// Uniform double in [-spread, spread), built from raw bits so output is
// identical across standard library implementations.
inline double uniform_pm(std::mt19937_64& rng, double spread) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0,1)
    return spread * (2.0 * u - 1.0);
}

inline Complex random_complex(std::mt19937_64& rng, double spread) {
    const double re = uniform_pm(rng, spread);
    const double im = uniform_pm(rng, spread);
    return {re, im};
}

inline Hypermatrix random_hypermatrix(std::mt19937_64& rng, double spread = 1.0) {
    Hypermatrix h;
    for (auto& c : h.a) c = random_complex(rng, spread);
    return h;
}

}  // namespace fano7
