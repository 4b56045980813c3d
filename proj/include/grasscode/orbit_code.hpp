#pragma once

// Projection of the plane code onto the columns of a single orbit, together
// with the data the per-orbit decoder needs: allowed exponent set, projected
// parity checks, and the dimension both measured (rank) and predicted by the
// subfield-degree formula.

#include <cstdint>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"
#include "linear_code.hpp"
#include "orbits.hpp"
#include "sparse_poly.hpp"

namespace grasscode {

struct OrbitCode {
    std::size_t orbit_index = 0;
    std::size_t offset = 0;  // first global coordinate of the orbit
    std::size_t N = 0;       // orbit size
    Fe delta{0};
    std::uint32_t d = 0;
    std::vector<std::uint64_t> allowed_exponents;
    Mat Gproj;        // k x N
    std::size_t dim = 0;
    Mat parity_proj;  // (N - dim) x N

    // point_scale[i] is the determinant of the basis change from the canonical
    // basis of point i to the pair (gamma^i, gamma^i delta): the evaluation of
    // any codeword polynomial at gamma^i equals point_scale[i] times the
    // projected codeword entry.  Identically 1 when q = 2.
    std::vector<Fe> point_scale;
};

// dim C^delta = C(m,2) - C(m/d,2) * d.
inline std::size_t orbit_dimension_formula(std::uint32_t m, std::uint32_t d) {
    std::uint64_t md = m / d;
    return static_cast<std::size_t>(m) * (m - 1) / 2 - md * (md - 1) / 2 * d;
}

inline OrbitCode build_orbit_code(const Field& F, const LinearCode& parent, const std::vector<Orbit>& orbits,
                                  std::size_t orbit_index) {
    const Orbit& o = orbits.at(orbit_index);
    OrbitCode oc;
    oc.orbit_index = orbit_index;
    oc.offset = parent.orbit_offset.at(orbit_index);
    oc.N = o.size();
    oc.delta = o.delta;
    oc.d = o.d;
    oc.allowed_exponents = allowed_exponent_set(F, o.delta);

    oc.Gproj = Mat(parent.k, oc.N);
    for (std::size_t r = 0; r < parent.k; ++r)
        for (std::size_t c = 0; c < oc.N; ++c) oc.Gproj.at(r, c) = parent.G.at(r, oc.offset + c);

    oc.dim = rank(F, oc.Gproj);
    auto null_rows = kernel_basis(F, oc.Gproj);
    oc.parity_proj = Mat(null_rows.size(), oc.N);
    for (std::size_t r = 0; r < null_rows.size(); ++r)
        for (std::size_t c = 0; c < oc.N; ++c) oc.parity_proj.at(r, c) = null_rows[r][c];

    oc.point_scale.resize(oc.N);
    for (std::size_t i = 0; i < oc.N; ++i) {
        const Plane& P = o.points[i];
        auto ac = F.fq_coordinates(P.alpha);
        auto bc = F.fq_coordinates(P.beta);
        std::size_t c0 = 0, c1 = 0;
        while (ac[c0] == Fe{0}) ++c0;
        while (bc[c1] == Fe{0}) ++c1;
        Fe u = F.exp(static_cast<std::int64_t>(i));
        Fe v = F.mul(u, o.delta);
        auto uc = F.fq_coordinates(u);
        auto vc = F.fq_coordinates(v);
        // (u, v) = M (alpha, beta); RREF pivots read the mixing matrix off directly
        oc.point_scale[i] = F.sub(F.mul(uc[c0], vc[c1]), F.mul(uc[c1], vc[c0]));
        if (oc.point_scale[i] == Fe{0} || !F.in_base(oc.point_scale[i]))
            throw std::logic_error("build_orbit_code: point scale must be a nonzero F_q element");
    }
    return oc;
}

inline bool passes_parity(const Field& F, const OrbitCode& oc, std::span<const Fe> word) {
    if (word.size() != oc.N) throw std::invalid_argument("passes_parity: word length mismatch");
    for (std::size_t r = 0; r < oc.parity_proj.rows; ++r) {
        Fe acc{0};
        for (std::size_t c = 0; c < oc.N; ++c) acc = F.add(acc, F.mul(oc.parity_proj.at(r, c), word[c]));
        if (acc != Fe{0}) return false;
    }
    return true;
}

}  // namespace grasscode
