#pragma once

// Orbit decomposition of the plane Grassmannian under multiplication by the
// field generator.  Orbits are listed by ascending representative log and the
// points inside an orbit are successive generator multiples of <1, delta>,
// which is exactly the coordinate order the projected codes evaluate on.

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "field.hpp"
#include "plane.hpp"

namespace grasscode {

struct Orbit {
    Fe delta{0};                 // representative <1, delta>, minimal log in the orbit
    std::int64_t delta_log = 0;
    std::uint32_t d = 0;         // subfield degree of delta (orbit invariant)
    std::vector<Plane> points;   // points[i] = gamma^i . <1, delta>

    std::size_t size() const { return points.size(); }
};

// Number of planes in G(2, m) over F_q.
inline std::uint64_t grassmannian_size(std::uint64_t q, std::uint32_t m) {
    if (m < 2) return 0;
    std::uint64_t qm = 1, qm1 = 1;
    for (std::uint32_t i = 0; i < m; ++i) qm *= q;
    for (std::uint32_t i = 0; i + 1 < m; ++i) qm1 *= q;
    // numerator stays below 2^48 at desk scale, and the quotient is exact
    return (qm - 1) * (qm1 - 1) / ((q * q - 1) * (q - 1));
}

// All planes, enumerated directly as reduced row echelon 2 x m matrices.
inline std::vector<Plane> enumerate_grassmannian(const Field& F) {
    const std::size_t m = F.m();
    std::vector<Plane> out;
    if (m < 2) return out;
    out.reserve(grassmannian_size(F.q(), F.m()));
    std::vector<Fe> r0(m), r1(m);
    for (std::size_t c0 = 0; c0 + 1 < m; ++c0) {
        for (std::size_t c1 = c0 + 1; c1 < m; ++c1) {
            std::vector<std::size_t> free0, free1;
            for (std::size_t c = c0 + 1; c < m; ++c)
                if (c != c1) free0.push_back(c);
            for (std::size_t c = c1 + 1; c < m; ++c) free1.push_back(c);
            std::vector<std::uint32_t> digits(free0.size() + free1.size(), 0);
            while (true) {
                std::fill(r0.begin(), r0.end(), Fe{0});
                std::fill(r1.begin(), r1.end(), Fe{0});
                r0[c0] = Fe{1};
                r1[c1] = Fe{1};
                for (std::size_t i = 0; i < free0.size(); ++i) r0[free0[i]] = F.digit_element(digits[i]);
                for (std::size_t i = 0; i < free1.size(); ++i)
                    r1[free1[i]] = F.digit_element(digits[free0.size() + i]);
                Plane P;
                P.alpha = F.from_coordinates(r0);
                P.beta = F.from_coordinates(r1);
                P.key0 = detail::pack_row(F, r0);
                P.key1 = detail::pack_row(F, r1);
                out.push_back(P);
                // odometer over the free entries
                std::size_t pos = 0;
                while (pos < digits.size() && ++digits[pos] == F.q()) digits[pos++] = 0;
                if (pos == digits.size()) break;
            }
        }
    }
    return out;
}

// Size of { g != 0 : g . P = P }.
inline std::uint64_t stabilizer_size(const Field& F, const Plane& P) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < F.order(); ++i) {
        if (act(F, F.exp(static_cast<std::int64_t>(i)), P) == P) ++count;
    }
    return count;
}

inline std::vector<Orbit> orbit_decompose(const Field& F) {
    const std::uint32_t m = F.m();
    std::vector<Orbit> orbits;
    if (m < 2) return orbits;
    std::unordered_set<std::uint64_t> visited;
    const Fe g = F.gamma();
    for (std::uint64_t l = 0; l < F.order(); ++l) {
        Fe delta = F.exp(static_cast<std::int64_t>(l));
        if (F.in_base(delta)) continue;
        Plane rep = canonical_plane(F, F.one(), delta);
        if (visited.contains(rep.key())) continue;
        Orbit o;
        o.delta = delta;
        o.delta_log = static_cast<std::int64_t>(l);
        o.d = F.subfield_degree(delta);
        Plane cur = rep;
        do {
            visited.insert(cur.key());
            o.points.push_back(cur);
            cur = act(F, g, cur);
        } while (!(cur == rep));
        orbits.push_back(std::move(o));
    }
    std::uint64_t total = 0;
    for (const auto& o : orbits) total += o.size();
    if (total != grassmannian_size(F.q(), m))
        throw std::logic_error("orbit_decompose: orbits do not partition the Grassmannian");
    return orbits;
}

// Exact number of field elements lying in no proper subfield containing F_q.
inline std::uint64_t count_nonsubfield_elements(const Field& F) {
    if (F.m() < 3) throw std::invalid_argument("count_nonsubfield_elements: m >= 3 required");
    std::uint64_t count = 0;
    for (std::uint64_t v = 1; v < F.size(); ++v) {
        if (F.subfield_degree(F.element(v)) == F.m()) ++count;
    }
    return count;
}

}  // namespace grasscode
