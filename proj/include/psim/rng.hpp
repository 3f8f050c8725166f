#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace psim {

// splitmix64 finalizer. All derived stream seeds go through this so that
// nearby master seeds do not produce correlated streams.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// PCG32 (XSH-RR 64/32, O'Neill). The algorithm is pinned: logs must replay
// bit-identically across platforms and compiler versions.
class Pcg32 {
public:
    Pcg32() : Pcg32(0x853c49e6748fea9bull, 0xda3e39cb94b95bdbull) {}

    Pcg32(uint64_t initstate, uint64_t initseq) {
        state_ = 0u;
        inc_ = (initseq << 1u) | 1u;
        next_u32();
        state_ += initstate;
        next_u32();
    }

    uint32_t next_u32() {
        uint64_t old = state_;
        state_ = old * 6364136223846793005ull + inc_;
        uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
        uint32_t rot = static_cast<uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    // Uniform in [0,1), 32 bits of resolution: next_u32() / 2^32.
    double next_unit() { return next_u32() * 0x1p-32; }

    // Unbiased uniform in [0, bound) by rejection. bound must be > 0.
    uint32_t next_below(uint32_t bound) {
        uint32_t threshold = (0u - bound) % bound;
        for (;;) {
            uint32_t r = next_u32();
            if (r >= threshold)
                return r % bound;
        }
    }

private:
    uint64_t state_;
    uint64_t inc_;
};

// Stream seed for one phase of one run. Phase 0 is world setup, phase t+1 is
// tick t. run_index is reserved for batch schemes that reuse a master seed;
// every run the engine currently performs uses run_index 0.
inline uint64_t derive_stream_seed(uint64_t master_seed, uint64_t run_index, uint64_t phase) {
    return splitmix64(splitmix64(splitmix64(master_seed) ^ run_index) ^ phase);
}

inline Pcg32 make_stream(uint64_t master_seed, uint64_t run_index, uint64_t phase) {
    uint64_t s = derive_stream_seed(master_seed, run_index, phase);
    return Pcg32(s, splitmix64(s));
}

// Fisher-Yates, high index first, one bounded draw per swap.
template <typename T>
void shuffle(std::vector<T>& values, Pcg32& rng) {
    for (size_t i = values.size(); i > 1; --i) {
        size_t j = rng.next_below(static_cast<uint32_t>(i));
        std::swap(values[i - 1], values[j]);
    }
}

} // namespace psim
