#pragma once

#include <cstdint>

namespace unorm {

// SplitMix64 generator. Chosen because the whole sequence is pinned down by
// the 64-bit state and the algorithm fits in a dozen lines, so campaigns
// reproduce bit-for-bit across platforms. split() derives an independent
// stream from (state, salt); suites use it to fan out per-case generators.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Rejection-free multiply-shift; the bias for the
    // tiny bounds used here (< 2^32) is far below anything observable.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<__uint128_t>(next()) * n) >> 64);
    }

    bool coin() { return (next() & 1u) != 0; }

    Rng split(std::uint64_t salt) const {
        Rng probe(state_ ^ (salt * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
        return Rng(probe.next());
    }

private:
    std::uint64_t state_;
};

} // namespace unorm
