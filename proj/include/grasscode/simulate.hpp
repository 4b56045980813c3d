#pragma once

// Seeded Monte-Carlo harness over the full decoder.  Trials draw independent
// RNG streams from (seed, trial index), so a worker pool changes wall time but
// never results.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <thread>
#include <vector>

#include "decoder.hpp"
#include "field.hpp"
#include "linear_code.hpp"
#include "rng.hpp"

namespace grasscode {

struct TrialOutcome {
    std::uint64_t trial = 0;
    std::size_t weight = 0;
    bool success = false;        // decoded codeword equals the transmitted one
    bool reported_failure = false;
    std::size_t winner_orbit = 0;
    std::uint32_t winner_b = 0;
    std::size_t total_candidates = 0;
    double wall_ms = 0.0;
};

inline TrialOutcome run_trial(const Field& F, const DecoderContext& ctx, std::uint64_t seed,
                              std::uint64_t trial, std::size_t weight, bool fast) {
    SplitMix64 rng = trial_stream(seed, trial);
    auto msg = random_message(F, rng, ctx.code.k);
    auto sent = encode(F, ctx.code, msg);
    auto received = sent;
    apply_random_error(F, rng, received, weight);

    auto start = std::chrono::steady_clock::now();
    auto res = decode(F, ctx, received, fast);
    auto stop = std::chrono::steady_clock::now();

    TrialOutcome out;
    out.trial = trial;
    out.weight = weight;
    out.success = res.success && res.codeword == sent;
    out.reported_failure = !res.success;
    out.winner_orbit = res.winner_orbit;
    out.winner_b = res.winner_b;
    out.total_candidates = res.total_candidates;
    out.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return out;
}

inline std::vector<TrialOutcome> simulate(const Field& F, const DecoderContext& ctx, std::uint64_t seed,
                                          std::uint64_t trials, std::size_t weight, bool fast = false,
                                          unsigned threads = 1) {
    std::vector<TrialOutcome> out(trials);
    if (threads <= 1) {
        for (std::uint64_t t = 0; t < trials; ++t) out[t] = run_trial(F, ctx, seed, t, weight, fast);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> next{0};
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::uint64_t t; (t = next.fetch_add(1)) < trials;)
                out[t] = run_trial(F, ctx, seed, t, weight, fast);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace grasscode
