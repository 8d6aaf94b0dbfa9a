#pragma once

#include <cstdint>

namespace rinv {

// Small deterministic generator (splitmix64 core).  Used instead of the
// <random> engines so that seeded sequences are identical across platforms
// and standard library versions.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0.  Rejection-free modulo is fine here: the
    // ranges involved are tiny compared to 2^64, so the bias is far below
    // anything observable, and determinism is what actually matters.
    uint64_t below(uint64_t n) { return next() % n; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

private:
    uint64_t state_;
};

}  // namespace rinv
