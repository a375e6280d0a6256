#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace stfr {

/// Portable seeded random number generation.
///
/// Generator: xoshiro256++ with state expanded from the seed by splitmix64.
/// Both algorithms are fully specified by integer arithmetic, so the raw
/// streams are identical across platforms and compilers. Uniform doubles take
/// the top 53 bits of an output word; normals use Box-Muller.
///
/// Stream splitting: `substream(master, tag...)` hashes the master seed with
/// the tag words through splitmix64 to derive an independent seed. The
/// simulation generators use tags ("xi" -> covariate coefficients,
/// "eps" -> response noise); cross-validation derives per-purpose streams the
/// same way.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t substream(std::uint64_t master, std::uint64_t tag) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64_next(s);
    s ^= tag * 0x9e3779b97f4a7c15ULL;
    h ^= splitmix64_next(s);
    return h;
}

inline std::uint64_t substream(std::uint64_t master, std::uint64_t tag_a, std::uint64_t tag_b) {
    return substream(substream(master, tag_a), tag_b);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; draws are consumed in pairs.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    /// Fisher-Yates shuffle, deterministic given the stream state.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_u64() % i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

namespace stream_tag {
// Fixed tag words for named substreams.
inline constexpr std::uint64_t sim_xi = 0x78695F73696D0001ULL;
inline constexpr std::uint64_t sim_eps = 0x6570735F73696D02ULL;
inline constexpr std::uint64_t cv_folds = 0x63765F666F6C6473ULL;
inline constexpr std::uint64_t init_functional = 0x696E69745F66756EULL;
inline constexpr std::uint64_t init_numeric = 0x696E69745F6E756DULL;
inline constexpr std::uint64_t init_extra = 0x696E69745F657874ULL;
} // namespace stream_tag

} // namespace stfr
