// Deterministic RNG with named-stream splitting: every randomized component
// derives its own stream from the master seed and a stream id, so components
// reproduce independently of each other. Samplers are hand-rolled (splitmix64
// core, Box-Muller gaussians) to keep byte-level reproducibility independent
// of the standard library's distribution implementations.
#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace seqgreedy {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Child seed for (master, stream name, index).
inline std::uint64_t derive_stream(std::uint64_t master, std::string_view name,
                                   std::uint64_t index = 0) {
    std::uint64_t s = master ^ fnv1a64(name) ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    splitmix64(s);
    return splitmix64(s);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // burn-in decorrelates small seeds
        splitmix64(state_);
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform in (0, 1]
    double next_unit() {
        return (double(next_u64() >> 11) + 1.0) * (1.0 / 9007199254740992.0);
    }

    // uniform in [lo, hi)
    double next_range(double lo, double hi) { return lo + (hi - lo) * (1.0 - next_unit()); }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // Box-Muller on (0,1] uniforms.
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace seqgreedy
