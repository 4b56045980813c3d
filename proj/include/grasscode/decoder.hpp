#pragma once

// Whole-code decoder: list-decode the received word on every full orbit that
// carries an information set, re-encode each candidate through that orbit's
// information set, and return the re-encoded codeword closest to the received
// word.  Correctness within floor((d-1)/2) errors rests on a counting
// argument, so construction recomputes that arithmetic for the actual orbit
// tables and refuses parameter sets where it does not close.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"
#include "linear_code.hpp"
#include "orbit_code.hpp"
#include "orbit_list_decoder.hpp"
#include "orbits.hpp"

namespace grasscode {

struct OrbitPlan {
    OrbitCode oc;
    std::optional<std::vector<std::size_t>> info_set;  // global positions
    bool decodable = false;  // full size and info set present
};

struct DecoderPlan {
    std::size_t radius = 0;       // floor((d-1)/2)
    std::size_t per_orbit_t = 0;  // list-decoder radius on full orbits
    std::size_t full_orbit_size = 0;
    std::size_t decodable_orbits = 0;
    bool closure_holds = false;   // decodable_orbits > floor(radius / (t+1))
    std::vector<OrbitPlan> orbits;
};

inline DecoderPlan plan_decoder(const Field& F, const LinearCode& code, const std::vector<Orbit>& orbits) {
    DecoderPlan plan;
    plan.radius = static_cast<std::size_t>((code.d - 1) / 2);
    plan.full_orbit_size = static_cast<std::size_t>(F.order() / (F.q() - 1));
    plan.per_orbit_t = F.m() >= 3 ? orbit_decoder_radius(F, plan.full_orbit_size) : 0;
    for (std::size_t idx = 0; idx < orbits.size(); ++idx) {
        OrbitPlan op;
        op.oc = build_orbit_code(F, code, orbits, idx);
        std::vector<std::size_t> positions(op.oc.N);
        for (std::size_t i = 0; i < op.oc.N; ++i) positions[i] = op.oc.offset + i;
        op.info_set = find_information_set(F, code, positions);
        op.decodable = op.info_set.has_value() && op.oc.N == plan.full_orbit_size && F.m() >= 3;
        if (op.decodable) ++plan.decodable_orbits;
        plan.orbits.push_back(std::move(op));
    }
    plan.closure_holds = plan.decodable_orbits > plan.radius / (plan.per_orbit_t + 1);
    return plan;
}

struct DecoderContext {
    LinearCode code;
    std::vector<Orbit> orbits;
    DecoderPlan plan;
    std::vector<Mat> info_inverse;  // per orbit, k x k (empty when not decodable)
};

// Throws UnsupportedError when the error-budget argument does not close for
// this parameter set; the guarantee would be void, not merely heuristic.
inline DecoderContext build_decoder(const Field& F, LinearCode code, std::vector<Orbit> orbits) {
    DecoderContext ctx;
    ctx.plan = plan_decoder(F, code, orbits);
    if (!ctx.plan.closure_holds) {
        std::ostringstream msg;
        msg << "decoder: guarantee does not close for q=" << F.q() << " m=" << F.m() << ": "
            << ctx.plan.decodable_orbits << " decodable orbit(s) but floor(" << ctx.plan.radius << "/"
            << (ctx.plan.per_orbit_t + 1) << ") = " << ctx.plan.radius / (ctx.plan.per_orbit_t + 1)
            << " orbits can each be saturated with more than t=" << ctx.plan.per_orbit_t << " errors";
        throw UnsupportedError(msg.str());
    }
    ctx.code = std::move(code);
    ctx.orbits = std::move(orbits);
    ctx.info_inverse.resize(ctx.plan.orbits.size());
    for (std::size_t idx = 0; idx < ctx.plan.orbits.size(); ++idx) {
        const auto& op = ctx.plan.orbits[idx];
        if (!op.decodable) continue;
        Mat sub(ctx.code.k, ctx.code.k);
        for (std::size_t c = 0; c < ctx.code.k; ++c)
            for (std::size_t r = 0; r < ctx.code.k; ++r) sub.at(r, c) = ctx.code.G.at(r, (*op.info_set)[c]);
        auto inv = invert(F, sub);
        if (!inv) throw std::logic_error("decoder: information set columns are singular");
        ctx.info_inverse[idx] = std::move(*inv);
    }
    return ctx;
}

struct OrbitDiagnostics {
    std::size_t orbit_index = 0;
    std::size_t list_size = 0;
    std::size_t rs_successes = 0;
    std::size_t residual_errors = 0;  // disagreement with the winner on this orbit
};

struct DecodeResult {
    bool success = false;
    std::vector<Fe> codeword;   // winner (also populated on failure when any candidate exists)
    std::size_t distance = 0;   // Hamming distance from the received word
    std::size_t winner_orbit = 0;
    std::uint32_t winner_b = 0;
    std::size_t total_candidates = 0;
    std::vector<OrbitDiagnostics> per_orbit;
    std::vector<std::vector<Fe>> all_candidates;  // re-encoded, deduplicated
};

// Bounded-distance decoding: if some codeword lies within radius of r it is
// returned (and is unique); otherwise success=false with the candidate list.
// fast=true stops at the first candidate inside the radius.
inline DecodeResult decode(const Field& F, const DecoderContext& ctx, std::span<const Fe> r, bool fast = false) {
    if (r.size() != ctx.code.n) throw std::invalid_argument("decode: received word length mismatch");
    DecodeResult out;
    std::size_t best = ctx.code.n + 1;
    std::map<std::vector<Fe>, bool> seen;

    for (std::size_t idx = 0; idx < ctx.plan.orbits.size(); ++idx) {
        const auto& op = ctx.plan.orbits[idx];
        if (!op.decodable) continue;
        std::vector<Fe> proj(r.begin() + static_cast<std::ptrdiff_t>(op.oc.offset),
                             r.begin() + static_cast<std::ptrdiff_t>(op.oc.offset + op.oc.N));
        auto res = orbit_list_decode(F, op.oc, proj);
        OrbitDiagnostics diag;
        diag.orbit_index = idx;
        diag.list_size = res.candidates.size();
        diag.rs_successes = res.rs_successes;
        out.per_orbit.push_back(diag);

        for (const auto& cand : res.candidates) {
            std::vector<Fe> values(ctx.code.k);
            for (std::size_t c = 0; c < ctx.code.k; ++c)
                values[c] = cand.word[(*op.info_set)[c] - op.oc.offset];
            std::vector<Fe> msg = vec_mat(F, values, ctx.info_inverse[idx]);  // msg restricted to I is `values`
            std::vector<Fe> cw = encode(F, ctx.code, msg);
            std::size_t dist = hamming_distance(cw, r);
            ++out.total_candidates;
            if (!seen.contains(cw)) {
                seen[cw] = true;
                out.all_candidates.push_back(cw);
            }
            if (dist < best) {
                best = dist;
                out.codeword = std::move(cw);
                out.distance = dist;
                out.winner_orbit = idx;
                out.winner_b = cand.b;
            }
            if (fast && best <= ctx.plan.radius) break;
        }
        if (fast && best <= ctx.plan.radius) break;
    }

    out.success = best <= ctx.plan.radius;
    if (!out.codeword.empty()) {
        for (auto& diag : out.per_orbit) {
            const auto& op = ctx.plan.orbits[diag.orbit_index];
            std::size_t errs = 0;
            for (std::size_t i = 0; i < op.oc.N; ++i)
                errs += out.codeword[op.oc.offset + i] != r[op.oc.offset + i];
            diag.residual_errors = errs;
        }
    }
    return out;
}

struct ErrorOrbitProfile {
    std::vector<std::size_t> counts;        // per orbit
    std::optional<std::size_t> witness;     // decodable orbit with <= t errors
};

inline ErrorOrbitProfile error_orbit_profile(const DecoderContext& ctx,
                                             std::span<const std::size_t> error_support) {
    if (error_support.size() > ctx.plan.radius)
        throw std::invalid_argument("error_orbit_profile: support exceeds the decoding radius");
    ErrorOrbitProfile prof;
    prof.counts.assign(ctx.plan.orbits.size(), 0);
    for (auto pos : error_support) {
        if (pos >= ctx.code.n) throw std::out_of_range("error_orbit_profile: position out of range");
        std::size_t idx = 0;
        while (ctx.code.orbit_offset[idx + 1] <= pos) ++idx;
        ++prof.counts[idx];
    }
    for (std::size_t idx = 0; idx < ctx.plan.orbits.size(); ++idx) {
        if (ctx.plan.orbits[idx].decodable && prof.counts[idx] <= ctx.plan.per_orbit_t) {
            prof.witness = idx;
            break;
        }
    }
    if (!prof.witness) throw std::logic_error("error_orbit_profile: counting argument violated");
    return prof;
}

}  // namespace grasscode
