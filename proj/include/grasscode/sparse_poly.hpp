#pragma once

// Univariate polynomials supported on exponents q^i + q^j (i < j), the shape
// every alternating trace form takes when restricted to a single orbit.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "orbits.hpp"

namespace grasscode {

struct SparsePoly {
    std::map<std::uint64_t, Fe> terms;  // exponent -> nonzero coefficient

    bool zero() const { return terms.empty(); }
    std::uint64_t degree() const { return terms.empty() ? 0 : terms.rbegin()->first; }

    void set(std::uint64_t e, Fe c) {
        if (c == Fe{0})
            terms.erase(e);
        else
            terms[e] = c;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms == b.terms; }
};

inline std::uint64_t q_power(const Field& F, std::uint32_t i) {
    std::uint64_t r = 1;
    while (i--) r *= F.q();
    return r;
}

// Exponents q^i + q^j with 0 <= i < j < m and j - i not a multiple of the
// subfield degree of delta; sorted ascending.
inline std::vector<std::uint64_t> allowed_exponent_set(const Field& F, Fe delta) {
    if (delta == Fe{0} || F.in_base(delta))
        throw std::invalid_argument("allowed_exponent_set: delta must lie outside F_q");
    std::uint32_t d = F.subfield_degree(delta);
    std::vector<std::uint64_t> out;
    for (std::uint32_t i = 0; i + 1 < F.m(); ++i)
        for (std::uint32_t j = i + 1; j < F.m(); ++j)
            if ((j - i) % d != 0) out.push_back(q_power(F, i) + q_power(F, j));
    std::sort(out.begin(), out.end());
    return out;
}

// The alternating trace form on the orbit of <1, delta>, expanded as a sparse
// polynomial: sum over i < j of
//   (alpha^{q^i} beta^{q^j} - beta^{q^i} alpha^{q^j}) (delta^{q^j} - delta^{q^i}) T^{q^i + q^j}.
inline SparsePoly expand_f(const Field& F, Fe alpha, Fe beta, Fe delta) {
    SparsePoly out;
    const std::uint32_t m = F.m();
    for (std::uint32_t i = 0; i + 1 < m; ++i) {
        for (std::uint32_t j = i + 1; j < m; ++j) {
            Fe cross = F.sub(F.mul(F.frobenius(alpha, i), F.frobenius(beta, j)),
                             F.mul(F.frobenius(beta, i), F.frobenius(alpha, j)));
            Fe dd = F.sub(F.frobenius(delta, j), F.frobenius(delta, i));
            Fe coeff = F.mul(cross, dd);
            if (coeff != Fe{0}) out.set(q_power(F, i) + q_power(F, j), coeff);
        }
    }
    return out;
}

inline Fe eval_sparse(const Field& F, const SparsePoly& p, Fe x) {
    Fe acc{0};
    for (const auto& [e, c] : p.terms) acc = F.add(acc, F.mul(c, F.pow(x, static_cast<std::int64_t>(e))));
    return acc;
}

// Values of p at gamma^0 .. gamma^{N-1}, the fixed point order of the orbit.
// The support must be legal for the orbit's delta.
inline std::vector<Fe> eval_on_orbit(const Field& F, const SparsePoly& p, const Orbit& orbit) {
    auto allowed = allowed_exponent_set(F, orbit.delta);
    for (const auto& [e, c] : p.terms) {
        if (!std::binary_search(allowed.begin(), allowed.end(), e))
            throw std::invalid_argument("eval_on_orbit: polynomial support not allowed on this orbit");
    }
    std::vector<Fe> out(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) out[i] = eval_sparse(F, p, F.exp(static_cast<std::int64_t>(i)));
    return out;
}

}  // namespace grasscode
