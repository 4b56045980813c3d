#pragma once

// Seeded randomness for the simulation harness.  Contract: the stream for
// trial i is SplitMix64 seeded with mix64(seed ^ ((i + 1) * 0x9E3779B97F4A7C15)),
// so trials are reproducible independently of scheduling and thread count.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "field.hpp"

namespace grasscode {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) by rejection
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }

  private:
    std::uint64_t state_;
};

inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(mix64(seed ^ ((trial + 1) * 0x9E3779B97F4A7C15ull)));
}

inline std::vector<Fe> random_message(const Field& F, SplitMix64& rng, std::size_t k) {
    std::vector<Fe> msg(k);
    for (auto& e : msg) e = F.digit_element(static_cast<std::uint32_t>(rng.below(F.q())));
    return msg;
}

// w distinct positions in [0, n), by partial Fisher-Yates; sorted ascending.
inline std::vector<std::size_t> random_support(SplitMix64& rng, std::size_t n, std::size_t w) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < w; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(w);
    std::sort(idx.begin(), idx.end());
    return idx;
}

// Adds a weight-w error with uniform nonzero values on a random support.
inline std::vector<std::size_t> apply_random_error(const Field& F, SplitMix64& rng, std::span<Fe> word,
                                                   std::size_t w) {
    auto support = random_support(rng, word.size(), w);
    for (auto pos : support) {
        Fe delta = F.digit_element(1 + static_cast<std::uint32_t>(rng.below(F.q() - 1)));
        word[pos] = F.add(word[pos], delta);
    }
    return support;
}

}  // namespace grasscode
