#include <catch2/catch_amalgamated.hpp>

#include "grasscode/decoder.hpp"
#include "grasscode/rng.hpp"
#include "oracles.hpp"

using namespace grasscode;

namespace {

DecoderContext make_ctx(const Field& F) {
    auto orbits = orbit_decompose(F);
    auto code = build_code(F, orbits);
    return build_decoder(F, std::move(code), std::move(orbits));
}

}  // namespace

TEST_CASE("plan arithmetic for supported parameter sets") {
    {
        Field F(2, 4);
        auto ctx = make_ctx(F);
        REQUIRE(ctx.plan.radius == 7);
        REQUIRE(ctx.plan.per_orbit_t == 3);
        REQUIRE(ctx.plan.decodable_orbits == 2);
        REQUIRE_FALSE(ctx.plan.orbits[2].decodable);  // the deficient orbit
    }
    {
        Field F(2, 5);
        auto ctx = make_ctx(F);
        REQUIRE(ctx.plan.radius == 31);
        REQUIRE(ctx.plan.per_orbit_t == 6);
        REQUIRE(ctx.plan.decodable_orbits == 5);
    }
}

TEST_CASE("construction refuses when the error budget does not close") {
    // Three decodable orbits cannot cover floor(40/7) = 5 saturated orbits.
    Field F34(3, 4);
    auto orbits34 = orbit_decompose(F34);
    auto code34 = build_code(F34, orbits34);
    auto plan34 = plan_decoder(F34, code34, orbits34);
    REQUIRE(plan34.decodable_orbits == 3);
    REQUIRE_FALSE(plan34.closure_holds);
    REQUIRE_THROWS_AS(build_decoder(F34, std::move(code34), std::move(orbits34)), UnsupportedError);

    // Nine decodable orbits, but floor(127/13) = 9 can each be saturated.
    Field F26(2, 6);
    auto orbits26 = orbit_decompose(F26);
    auto code26 = build_code(F26, orbits26);
    auto plan26 = plan_decoder(F26, code26, orbits26);
    REQUIRE(plan26.decodable_orbits == 9);
    REQUIRE_FALSE(plan26.closure_holds);

    // A single-plane Grassmannian has nothing to decode with.
    Field F22(2, 2);
    auto orbits22 = orbit_decompose(F22);
    auto code22 = build_code(F22, orbits22);
    REQUIRE_THROWS_AS(build_decoder(F22, std::move(code22), std::move(orbits22)), UnsupportedError);
}

TEST_CASE("exact codewords decode to themselves, exhaustively") {
    Field F(2, 4);
    auto ctx = make_ctx(F);
    std::vector<std::uint32_t> digits(ctx.code.k, 0);
    std::vector<Fe> msg(ctx.code.k, Fe{0});
    while (true) {
        auto cw = encode(F, ctx.code, msg);
        auto res = decode(F, ctx, cw);
        REQUIRE(res.success);
        REQUIRE(res.distance == 0);
        REQUIRE(res.codeword == cw);
        std::size_t pos = 0;
        while (pos < ctx.code.k && ++digits[pos] == F.q()) digits[pos++] = 0;
        if (pos == ctx.code.k) break;
        for (std::size_t i = 0; i <= pos; ++i) msg[i] = F.digit_element(digits[i]);
    }
}

TEST_CASE("radius-weight errors are always corrected, against exhaustive search") {
    Field F(2, 4);
    auto ctx = make_ctx(F);
    auto book = oracle::all_codewords(F, ctx.code);
    REQUIRE(book.size() == 64);
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        SplitMix64 rng = trial_stream(9001, trial);
        auto msg = random_message(F, rng, ctx.code.k);
        auto sent = encode(F, ctx.code, msg);
        auto rcv = sent;
        apply_random_error(F, rng, rcv, ctx.plan.radius);
        auto res = decode(F, ctx, rcv);
        REQUIRE(res.success);
        REQUIRE(res.codeword == sent);
        REQUIRE(res.distance == ctx.plan.radius);
        auto nearest = book[oracle::nearest_codeword(book, rcv)];
        REQUIRE(nearest == sent);
    }
}

TEST_CASE("longer code corrects thirty-one errors") {
    Field F(2, 5);
    auto ctx = make_ctx(F);
    auto book = oracle::all_codewords(F, ctx.code);
    REQUIRE(book.size() == 1024);
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        SplitMix64 rng = trial_stream(31337, trial);
        auto msg = random_message(F, rng, ctx.code.k);
        auto sent = encode(F, ctx.code, msg);
        auto rcv = sent;
        apply_random_error(F, rng, rcv, 31);
        auto res = decode(F, ctx, rcv);
        REQUIRE(res.success);
        REQUIRE(res.codeword == sent);
        REQUIRE(book[oracle::nearest_codeword(book, rcv)] == sent);
    }
}

TEST_CASE("past the radius the decoder fails loudly or stays close") {
    Field F(2, 4);
    auto ctx = make_ctx(F);
    std::size_t failures = 0;
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        SplitMix64 rng = trial_stream(4242, trial);
        auto msg = random_message(F, rng, ctx.code.k);
        auto sent = encode(F, ctx.code, msg);
        auto rcv = sent;
        apply_random_error(F, rng, rcv, ctx.plan.radius + 1);  // d/2 errors
        auto res = decode(F, ctx, rcv);
        if (!res.success) {
            ++failures;
            continue;
        }
        // a reported success must be a codeword strictly inside the radius,
        // never a silent far-off answer
        REQUIRE(res.distance <= ctx.plan.radius);
        REQUIRE(hamming_distance(res.codeword, rcv) == res.distance);
    }
    REQUIRE(failures > 0);
}

TEST_CASE("fast mode returns the same codeword inside the radius") {
    Field F(2, 4);
    auto ctx = make_ctx(F);
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        SplitMix64 rng = trial_stream(515, trial);
        auto msg = random_message(F, rng, ctx.code.k);
        auto sent = encode(F, ctx.code, msg);
        auto rcv = sent;
        apply_random_error(F, rng, rcv, 1 + rng.below(ctx.plan.radius));
        auto full = decode(F, ctx, rcv, false);
        auto fast = decode(F, ctx, rcv, true);
        REQUIRE(full.success);
        REQUIRE(fast.success);
        REQUIRE(full.codeword == fast.codeword);
    }
}

TEST_CASE("per-orbit error profiles") {
    Field F(2, 5);
    auto ctx = make_ctx(F);
    {
        std::vector<std::size_t> empty;
        auto prof = error_orbit_profile(ctx, empty);
        for (auto c : prof.counts) REQUIRE(c == 0);
        REQUIRE(prof.witness == 0);
    }
    {
        // all 31 errors inside one orbit leave four clean witnesses
        std::vector<std::size_t> support;
        for (std::size_t i = ctx.code.orbit_offset[0]; i < ctx.code.orbit_offset[1]; ++i)
            support.push_back(i);
        REQUIRE(support.size() == 31);
        auto prof = error_orbit_profile(ctx, support);
        REQUIRE(prof.counts[0] == 31);
        REQUIRE(prof.witness == 1);
    }
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        SplitMix64 rng = trial_stream(606, trial);
        auto support = random_support(rng, ctx.code.n, ctx.plan.radius);
        auto prof = error_orbit_profile(ctx, support);
        REQUIRE(prof.witness.has_value());
        REQUIRE(prof.counts[*prof.witness] <= ctx.plan.per_orbit_t);
    }
    std::vector<std::size_t> too_big(ctx.plan.radius + 1, 0);
    REQUIRE_THROWS_AS(error_orbit_profile(ctx, too_big), std::invalid_argument);
}

TEST_CASE("diagnostics identify the winning orbit") {
    Field F(2, 4);
    auto ctx = make_ctx(F);
    SplitMix64 rng = trial_stream(707, 0);
    auto msg = random_message(F, rng, ctx.code.k);
    auto sent = encode(F, ctx.code, msg);
    auto rcv = sent;
    apply_random_error(F, rng, rcv, 7);
    auto res = decode(F, ctx, rcv);
    REQUIRE(res.success);
    REQUIRE(res.per_orbit.size() == 2);
    std::size_t residual_total = 0;
    for (const auto& d : res.per_orbit) residual_total += d.residual_errors;
    REQUIRE(residual_total <= 7);  // errors on the deficient orbit are not reported here
    REQUIRE(ctx.plan.orbits[res.winner_orbit].decodable);
}
