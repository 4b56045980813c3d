#pragma once

// The plane-evaluation code: rows are the 2x2 minors in lexicographic order,
// columns are the planes of the Grassmannian in orbit-major order, entries the
// Plucker coordinates of each plane's canonical basis.

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"
#include "orbits.hpp"
#include "plane.hpp"

namespace grasscode {

struct LinearCode {
    std::uint32_t q = 0, m = 0;
    std::size_t n = 0, k = 0;
    std::uint64_t d = 0;  // q^{2(m-2)}
    Mat G;                // k x n
    Mat parity;           // (n-k) x n
    std::vector<Plane> coordinate_index;   // concatenation of orbit points
    std::vector<std::size_t> orbit_offset; // per orbit, plus total as sentinel
};

inline std::uint64_t min_distance_formula(std::uint64_t q, std::uint32_t m) {
    std::uint64_t d = 1;
    for (std::uint32_t i = 0; i < 2 * (m - 2); ++i) d *= q;
    return d;
}

inline LinearCode build_code(const Field& F, const std::vector<Orbit>& orbits) {
    if (F.m() < 2) throw UnsupportedError("build_code: m >= 2 required, the Grassmannian is empty");
    LinearCode code;
    code.q = F.q();
    code.m = F.m();
    code.k = static_cast<std::size_t>(F.m()) * (F.m() - 1) / 2;
    code.d = min_distance_formula(F.q(), F.m());
    code.orbit_offset.reserve(orbits.size() + 1);
    for (const auto& o : orbits) {
        code.orbit_offset.push_back(code.coordinate_index.size());
        code.coordinate_index.insert(code.coordinate_index.end(), o.points.begin(), o.points.end());
    }
    code.orbit_offset.push_back(code.coordinate_index.size());
    code.n = code.coordinate_index.size();

    code.G = Mat(code.k, code.n);
    for (std::size_t col = 0; col < code.n; ++col) {
        auto pl = plucker_coordinates(F, code.coordinate_index[col]);
        for (std::size_t row = 0; row < code.k; ++row) code.G.at(row, col) = pl[row];
    }
    if (rank(F, code.G) != code.k) throw std::logic_error("build_code: generator matrix is rank deficient");

    auto null_rows = kernel_basis(F, code.G);
    code.parity = Mat(null_rows.size(), code.n);
    for (std::size_t r = 0; r < null_rows.size(); ++r)
        for (std::size_t c = 0; c < code.n; ++c) code.parity.at(r, c) = null_rows[r][c];
    return code;
}

inline std::vector<Fe> encode(const Field& F, const LinearCode& code, std::span<const Fe> msg) {
    if (msg.size() != code.k) throw std::invalid_argument("encode: message length must be k");
    return vec_mat(F, msg, code.G);
}

// First k positions from `positions` (scanned in the given order) whose
// generator columns are independent; nullopt if they span less than k.
inline std::optional<std::vector<std::size_t>> find_information_set(const Field& F, const LinearCode& code,
                                                                    std::span<const std::size_t> positions) {
    std::vector<std::vector<Fe>> reduced;  // pivot rows of the accepted columns
    std::vector<std::size_t> pivot_row;
    std::vector<std::size_t> info;
    for (std::size_t pos : positions) {
        if (pos >= code.n) throw std::out_of_range("find_information_set: position out of range");
        std::vector<Fe> v(code.k);
        for (std::size_t r = 0; r < code.k; ++r) v[r] = code.G.at(r, pos);
        for (std::size_t s = 0; s < reduced.size(); ++s) {
            Fe f = v[pivot_row[s]];
            if (f == Fe{0}) continue;
            for (std::size_t r = 0; r < code.k; ++r) v[r] = F.sub(v[r], F.mul(f, reduced[s][r]));
        }
        std::size_t piv = code.k;
        for (std::size_t r = 0; r < code.k; ++r)
            if (v[r] != Fe{0}) {
                piv = r;
                break;
            }
        if (piv == code.k) continue;
        Fe pinv = F.inv(v[piv]);
        for (std::size_t r = 0; r < code.k; ++r) v[r] = F.mul(v[r], pinv);
        reduced.push_back(std::move(v));
        pivot_row.push_back(piv);
        info.push_back(pos);
        if (info.size() == code.k) return info;
    }
    return std::nullopt;
}

// The unique codeword agreeing with `values` on the information set.
inline std::vector<Fe> reencode_from_info_set(const Field& F, const LinearCode& code,
                                              std::span<const std::size_t> info_set,
                                              std::span<const Fe> values) {
    if (info_set.size() != code.k || values.size() != code.k)
        throw std::invalid_argument("reencode: need exactly k positions and values");
    Mat sub(code.k, code.k);
    for (std::size_t c = 0; c < code.k; ++c)
        for (std::size_t r = 0; r < code.k; ++r) sub.at(r, c) = code.G.at(r, info_set[c]);
    auto inv = invert(F, sub);
    if (!inv) throw std::invalid_argument("reencode: positions are not an information set");
    std::vector<Fe> msg = vec_mat(F, values, *inv);  // msg . sub = values
    return encode(F, code, msg);
}

// Exact minimum nonzero weight by exhausting all messages; q^k <= 2^20.
inline std::uint64_t brute_force_min_distance(const Field& F, const LinearCode& code) {
    double logsize = static_cast<double>(code.k) * std::log2(static_cast<double>(code.q));
    if (logsize > 20.0) throw std::invalid_argument("brute_force_min_distance: q^k exceeds 2^20");
    std::vector<Fe> msg(code.k, Fe{0});
    std::vector<std::uint32_t> digits(code.k, 0);
    std::uint64_t best = code.n + 1;
    while (true) {
        std::size_t pos = 0;
        while (pos < code.k && ++digits[pos] == code.q) digits[pos++] = 0;
        if (pos == code.k) break;
        for (std::size_t i = 0; i <= pos; ++i) msg[i] = F.digit_element(digits[i]);
        auto cw = encode(F, code, msg);
        std::uint64_t w = hamming_weight(cw);
        if (w < best) best = w;
    }
    return best;
}

}  // namespace grasscode
