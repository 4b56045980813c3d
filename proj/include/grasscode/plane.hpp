#pragma once

// Points of the Grassmannian of planes: 2-dimensional F_q-subspaces of
// F_{q^m}, held in a canonical form so equality and hashing are
// basis-independent.  The canonical basis is the reduced row echelon form of
// the 2 x m coordinate matrix over F_q.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace grasscode {

struct Plane {
    Fe alpha{0}, beta{0};           // canonical ordered basis
    std::uint64_t key0 = 0, key1 = 0;  // RREF rows packed base q

    std::uint64_t key() const { return key0 << 24 | key1; }  // reprs stay below 2^24

    friend bool operator==(const Plane& a, const Plane& b) {
        return a.key0 == b.key0 && a.key1 == b.key1;
    }
    friend bool operator<(const Plane& a, const Plane& b) {
        return a.key0 != b.key0 ? a.key0 < b.key0 : a.key1 < b.key1;
    }
};

namespace detail {

inline std::uint64_t pack_row(const Field& F, const std::vector<Fe>& row) {
    std::uint64_t key = 0, mult = 1;
    for (auto e : row) {
        key += F.digit_of(e) * mult;
        mult *= F.q();
    }
    return key;
}

}  // namespace detail

// Canonical plane spanned by (a, b); throws when a, b are F_q-dependent.
inline Plane canonical_plane(const Field& F, Fe a, Fe b) {
    std::vector<Fe> r0 = F.fq_coordinates(a);
    std::vector<Fe> r1 = F.fq_coordinates(b);
    const std::size_t m = F.m();

    std::size_t c0 = 0;
    while (c0 < m && r0[c0] == Fe{0} && r1[c0] == Fe{0}) ++c0;
    if (c0 == m) throw std::invalid_argument("plane: zero span");
    if (r0[c0] == Fe{0}) std::swap(r0, r1);
    Fe pinv = F.inv(r0[c0]);
    for (std::size_t c = c0; c < m; ++c) r0[c] = F.mul(r0[c], pinv);
    if (r1[c0] != Fe{0}) {
        Fe f = r1[c0];
        for (std::size_t c = c0; c < m; ++c) r1[c] = F.sub(r1[c], F.mul(f, r0[c]));
    }

    std::size_t c1 = c0 + 1;
    while (c1 < m && r1[c1] == Fe{0}) ++c1;
    if (c1 == m) throw std::invalid_argument("plane: spanning elements are F_q-dependent");
    pinv = F.inv(r1[c1]);
    for (std::size_t c = c1; c < m; ++c) r1[c] = F.mul(r1[c], pinv);
    if (r0[c1] != Fe{0}) {
        Fe f = r0[c1];
        for (std::size_t c = c1; c < m; ++c) r0[c] = F.sub(r0[c], F.mul(f, r1[c]));
    }

    Plane P;
    P.alpha = F.from_coordinates(r0);
    P.beta = F.from_coordinates(r1);
    P.key0 = detail::pack_row(F, r0);
    P.key1 = detail::pack_row(F, r1);
    return P;
}

// Multiplicative action g . <a,b> = <ga, gb>.
inline Plane act(const Field& F, Fe g, const Plane& P) {
    if (g == Fe{0}) throw std::domain_error("act: group element must be nonzero");
    return canonical_plane(F, F.mul(g, P.alpha), F.mul(g, P.beta));
}

// Plucker coordinates of the canonical basis: minors (i, j) in lexicographic
// order over 0 <= i < j < m.  No projective rescaling is applied.
inline std::vector<Fe> plucker_coordinates(const Field& F, const Plane& P) {
    std::vector<Fe> r0 = F.fq_coordinates(P.alpha);
    std::vector<Fe> r1 = F.fq_coordinates(P.beta);
    const std::size_t m = F.m();
    std::vector<Fe> out;
    out.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            out.push_back(F.sub(F.mul(r0[i], r1[j]), F.mul(r0[j], r1[i])));
    return out;
}

}  // namespace grasscode
