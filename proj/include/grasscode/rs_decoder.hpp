#pragma once

// Bounded-distance decoder for evaluation codes at arbitrary distinct points,
// via the error-locator linear system
//     W(x_i) y_i = Q(x_i),  deg W <= t,  deg Q <= k_rs - 1 + t,
// solved with one Gaussian elimination (cubic in the length).  Accepts only
// when W divides Q exactly and the quotient lands within distance t.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"

namespace grasscode {

// Dense polynomial helpers; coefficients ascending, no trailing zeros.
namespace polyops {

inline void trim(std::vector<Fe>& p) {
    while (!p.empty() && p.back() == Fe{0}) p.pop_back();
}

inline Fe eval(const Field& F, std::span<const Fe> p, Fe x) {
    Fe acc{0};
    for (std::size_t i = p.size(); i-- > 0;) acc = F.add(F.mul(acc, x), p[i]);
    return acc;
}

// Quotient of a / b, or nullopt when the remainder is nonzero.
inline std::optional<std::vector<Fe>> exact_divide(const Field& F, std::vector<Fe> a, std::span<const Fe> b) {
    trim(a);
    std::vector<Fe> bb(b.begin(), b.end());
    trim(bb);
    if (bb.empty()) throw std::domain_error("polyops: division by the zero polynomial");
    if (a.empty()) return std::vector<Fe>{};
    if (a.size() < bb.size()) return std::nullopt;
    std::vector<Fe> qout(a.size() - bb.size() + 1, Fe{0});
    Fe lead_inv = F.inv(bb.back());
    for (std::size_t i = qout.size(); i-- > 0;) {
        Fe c = F.mul(a[i + bb.size() - 1], lead_inv);
        qout[i] = c;
        if (c == Fe{0}) continue;
        for (std::size_t j = 0; j < bb.size(); ++j)
            a[i + j] = F.sub(a[i + j], F.mul(c, bb[j]));
    }
    for (auto& c : a)
        if (c != Fe{0}) return std::nullopt;
    return qout;
}

}  // namespace polyops

struct RsInstance {
    std::vector<Fe> points;  // pairwise distinct
    std::size_t k_rs = 0;    // message polynomials have degree < k_rs
    std::size_t t = 0;       // decoding radius, 2t <= N - k_rs

    RsInstance(std::vector<Fe> pts, std::size_t k, std::size_t radius)
        : points(std::move(pts)), k_rs(k), t(radius) {
        std::unordered_set<std::uint32_t> seen;
        for (auto p : points)
            if (!seen.insert(p.v).second) throw std::invalid_argument("rs: evaluation points must be distinct");
        if (k_rs == 0 || k_rs > points.size()) throw std::invalid_argument("rs: need 0 < k_rs <= N");
        if (2 * t > points.size() - k_rs) throw std::invalid_argument("rs: radius exceeds unique decoding bound");
    }
};

inline std::vector<Fe> poly_eval_batch(const Field& F, std::span<const Fe> poly, std::span<const Fe> points) {
    std::vector<Fe> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = polyops::eval(F, poly, points[i]);
    return out;
}

// Returns the unique polynomial of degree < k_rs within distance t of y, or
// nullopt.  The kernel vector is chosen deterministically (first free column).
inline std::optional<std::vector<Fe>> rs_decode(const Field& F, const RsInstance& inst, std::span<const Fe> y) {
    const std::size_t N = inst.points.size();
    if (y.size() != N) throw std::invalid_argument("rs_decode: received word length mismatch");
    const std::size_t nq = inst.k_rs + inst.t;  // number of Q coefficients
    const std::size_t nw = inst.t + 1;          // number of W coefficients

    Mat A(N, nq + nw);
    for (std::size_t i = 0; i < N; ++i) {
        Fe x = inst.points[i];
        Fe pw{1};
        for (std::size_t j = 0; j < nq; ++j) {
            A.at(i, j) = pw;
            pw = F.mul(pw, x);
        }
        pw = Fe{1};
        for (std::size_t j = 0; j < nw; ++j) {
            A.at(i, nq + j) = F.neg(F.mul(y[i], pw));
            pw = F.mul(pw, x);
        }
    }
    auto kernel = kernel_basis(F, std::move(A));
    if (kernel.empty()) return std::nullopt;
    const auto& sol = kernel.front();

    std::vector<Fe> Q(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(nq));
    std::vector<Fe> W(sol.begin() + static_cast<std::ptrdiff_t>(nq), sol.end());
    polyops::trim(W);
    if (W.empty()) return std::nullopt;  // cannot happen: deg Q < N forces W != 0

    auto f = polyops::exact_divide(F, std::move(Q), W);
    if (!f) return std::nullopt;
    if (f->size() > inst.k_rs) return std::nullopt;
    auto vals = poly_eval_batch(F, *f, inst.points);
    if (hamming_distance(vals, y) > inst.t) return std::nullopt;
    return f;
}

}  // namespace grasscode
