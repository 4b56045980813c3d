#pragma once

// List decoder for one full orbit projection: divide out T^{q+1}, guess the
// top coefficient b over the whole field, decode the residual in a shorter
// Reed-Solomon code, then keep exactly the reconstructions that are legal
// orbit codewords.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "field.hpp"
#include "orbit_code.hpp"
#include "rs_decoder.hpp"
#include "sparse_poly.hpp"

namespace grasscode {

enum class TwistDir { Forward, Back };

// Forward divides entry i by gamma^{(q+1) i}; Back multiplies it back.
// Entrywise scaling by nonzero constants, so Hamming weight is preserved.
inline std::vector<Fe> twist(const Field& F, std::span<const Fe> r, TwistDir dir) {
    std::vector<Fe> out(r.size());
    const std::int64_t step = static_cast<std::int64_t>(F.q()) + 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t e = step * static_cast<std::int64_t>(i);
        out[i] = F.mul(r[i], F.exp(dir == TwistDir::Forward ? -e : e));
    }
    return out;
}

struct OrbitCandidate {
    std::vector<Fe> word;  // orbit codeword over F_q, length N
    SparsePoly poly;       // its sparse evaluation polynomial
    std::uint32_t b = 0;   // repr of the leading-coefficient guess that found it
};

struct OrbitDecodeResult {
    std::vector<OrbitCandidate> candidates;  // unique words, ascending b
    std::vector<std::uint32_t> b_hits;       // every b whose reconstruction survived the filters
    std::size_t rs_successes = 0;
    std::size_t dropped_support = 0;
    std::size_t dropped_fq = 0;
    std::size_t dropped_parity = 0;
    std::size_t per_orbit_t = 0;
};

inline std::size_t orbit_rs_dimension(const Field& F) {
    // residual degree bound: second-highest legal exponent, shifted down by q+1
    return static_cast<std::size_t>(q_power(F, F.m() - 1) + q_power(F, F.m() - 3) - F.q());
}

inline std::size_t orbit_decoder_radius(const Field& F, std::size_t N) {
    return (N - orbit_rs_dimension(F)) / 2;
}

// Requires a full orbit of size (q^m - 1) / (q - 1); the deficient orbit of
// even m is refused.  Guarantee: any projected codeword within per_orbit_t of
// r appears in the candidate list.
inline OrbitDecodeResult orbit_list_decode(const Field& F, const OrbitCode& oc, std::span<const Fe> r) {
    if (F.m() < 3) throw UnsupportedError("orbit_list_decode: m >= 3 required");
    const std::size_t N_full = static_cast<std::size_t>(F.order() / (F.q() - 1));
    if (oc.N != N_full)
        throw UnsupportedError("orbit_list_decode: orbit has deficient size, no decoding guarantee");
    if (r.size() != oc.N) throw std::invalid_argument("orbit_list_decode: word length mismatch");

    const std::uint64_t e_top_full = q_power(F, F.m() - 1) + q_power(F, F.m() - 2);
    const std::uint64_t shift = F.q() + 1;
    const std::uint64_t e_top = e_top_full - shift;
    const std::size_t k_rs = orbit_rs_dimension(F);
    const std::size_t t = orbit_decoder_radius(F, oc.N);

    std::vector<Fe> points(oc.N);
    std::vector<Fe> top_powers(oc.N);
    for (std::size_t i = 0; i < oc.N; ++i) {
        points[i] = F.exp(static_cast<std::int64_t>(i));
        top_powers[i] = F.exp(static_cast<std::int64_t>(i * e_top % F.order()));
    }
    RsInstance inst(points, k_rs, t);

    // move into the evaluation domain (per-point basis-change determinants),
    // then divide out T^{q+1}
    std::vector<Fe> y_eval(oc.N);
    for (std::size_t i = 0; i < oc.N; ++i) y_eval[i] = F.mul(oc.point_scale[i], r[i]);
    std::vector<Fe> y_hat = twist(F, y_eval, TwistDir::Forward);

    OrbitDecodeResult res;
    res.per_orbit_t = t;
    std::map<std::vector<Fe>, bool> seen;
    std::vector<Fe> z(oc.N);
    for (std::uint64_t bv = 0; bv < F.size(); ++bv) {
        Fe b{static_cast<std::uint32_t>(bv)};
        for (std::size_t i = 0; i < oc.N; ++i) z[i] = F.sub(y_hat[i], F.mul(b, top_powers[i]));
        auto g = rs_decode(F, inst, z);
        if (!g) continue;
        ++res.rs_successes;

        SparsePoly f;  // residual degree < k_rs keeps these exponents below e_top_full
        for (std::size_t e = 0; e < g->size(); ++e) f.set(e + shift, (*g)[e]);
        f.set(e_top_full, b);

        bool ok = true;
        for (const auto& [e, c] : f.terms) {
            if (!std::binary_search(oc.allowed_exponents.begin(), oc.allowed_exponents.end(), e)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            ++res.dropped_support;
            continue;
        }

        std::vector<Fe> word(oc.N);
        for (std::size_t i = 0; i < oc.N; ++i) {
            Fe v = eval_sparse(F, f, points[i]);
            if (!F.in_base(v)) {
                ok = false;
                break;
            }
            word[i] = F.div(v, oc.point_scale[i]);  // back to projected-code scaling
        }
        if (!ok) {
            ++res.dropped_fq;
            continue;
        }
        if (!passes_parity(F, oc, word)) {
            ++res.dropped_parity;
            continue;
        }

        res.b_hits.push_back(b.v);
        if (!seen.contains(word)) {
            seen[word] = true;
            res.candidates.push_back(OrbitCandidate{std::move(word), std::move(f), b.v});
        }
    }
    return res;
}

}  // namespace grasscode
