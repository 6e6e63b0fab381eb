#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace prochouse {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t hash_mix(uint64_t v) {
    uint64_t s = v;
    return splitmix64(s);
}

// xoshiro256** with hand-rolled distributions. Every draw is a pure function of
// the generator state, so identical seeds replay identical houses on any
// platform regardless of the standard library in use.
class Rng {
public:
    Rng() : Rng(0) {}
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    // Independent stream derivation: same seed + different stream ids give
    // decorrelated generators (per-house and per-stage streams).
    static Rng stream(uint64_t seed, uint64_t stream_id) {
        return Rng(hash_mix(seed ^ hash_mix(stream_id + 0x632be59bd9b4e019ULL)));
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi], inclusive. Unbiased via rejection.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<int64_t>(next_u64());  // full 64-bit range
        uint64_t x = next_u64();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * span;
        uint64_t l = static_cast<uint64_t>(m);
        if (l < span) {
            const uint64_t t = (0 - span) % span;
            while (l < t) {
                x = next_u64();
                m = static_cast<unsigned __int128>(x) * span;
                l = static_cast<uint64_t>(m);
            }
        }
        return lo + static_cast<int64_t>(m >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Standard normal via Box-Muller (one value per call).
    double normal();

    // Gamma(shape, 1) via Marsaglia-Tsang, with the boosting trick for shape < 1.
    double gamma(double shape);

    double beta(double a, double b) {
        const double x = gamma(a);
        const double y = gamma(b);
        return x / (x + y);
    }

    // Trials to first success, support {1, 2, ...}. p <= 0 yields a huge count
    // (the caller caps it), p >= 1 yields 1.
    int64_t geometric(double p) {
        if (p >= 1.0) return 1;
        if (p <= 0.0) return std::numeric_limits<int64_t>::max() / 2;
        const double u = uniform();
        const double k = std::floor(std::log1p(-u) / std::log1p(-p));
        return static_cast<int64_t>(k) + 1;
    }

    // Index in [0, weights.size()) with probability proportional to weight.
    size_t pick_weighted(const std::vector<double>& weights);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(uniform_int(0, static_cast<int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<size_t>(uniform_int(0, static_cast<int64_t>(v.size()) - 1))];
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t state_[4];
};

}  // namespace prochouse
