#ifndef MTFR_RNG_HPP
#define MTFR_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace mtfr {

/// Deterministic random source: std::mt19937_64 (the standard fixes its
/// output sequence bit-for-bit) with rejection-sampled bounded draws, so
/// results do not depend on the standard library's distribution code.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, n), unbiased. n must be > 0.
    size_t index(size_t n) {
        const uint64_t bound = n;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return static_cast<size_t>(x % bound);
    }

    /// k distinct values from [0, n), in draw order (partial Fisher-Yates).
    std::vector<size_t> sample(size_t k, size_t n) {
        std::vector<size_t> pool(n);
        for (size_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<size_t> out;
        out.reserve(k);
        for (size_t i = 0; i < k; ++i) {
            size_t j = i + index(n - i);
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

    bool chance(uint32_t num, uint32_t den) { return index(den) < num; }

private:
    std::mt19937_64 eng_;
};

/// SplitMix64 finalizer; used to decouple per-trial seeds from a base seed.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t base, uint64_t n, uint64_t trial) {
    uint64_t s = mix64(base);
    s = mix64(s ^ n);
    return mix64(s ^ trial);
}

} // namespace mtfr

#endif
