#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace hyplam {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Seed for sweeps: HYPLAM_SEED (decimal or 0x-prefixed hex) when set and
/// parseable, otherwise kDefaultSeed.
inline std::uint64_t sweep_seed() {
    if (const char* env = std::getenv("HYPLAM_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 0);
        if (end != env && *end == '\0') return v;
    }
    return kDefaultSeed;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Additive-recurrence (Kronecker) low-discrepancy sequence in [0,1)^Dim
/// using the generalised golden ratio; the seed only shifts the start.
template <int Dim>
class LowDiscrepancy {
public:
    explicit LowDiscrepancy(std::uint64_t seed) {
        double g = 2.0;
        for (int i = 0; i < 64; ++i) g = std::pow(1.0 + g, 1.0 / (Dim + 1));
        double a = 1.0;
        std::uint64_t s = seed;
        for (int d = 0; d < Dim; ++d) {
            a /= g;
            alpha_[d] = a;
            s = splitmix64(s);
            shift_[d] = static_cast<double>(s >> 11) * 0x1.0p-53;
        }
    }

    /// n-th point, coordinate d.
    double at(std::uint64_t n, int d) const {
        const double v = shift_[d] + alpha_[d] * static_cast<double>(n + 1);
        return v - std::floor(v);
    }

private:
    double alpha_[Dim];
    double shift_[Dim];
};

}  // namespace hyplam
