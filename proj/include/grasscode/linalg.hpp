#pragma once

// Dense matrices with entries in a Field (used both for the F_q generator
// matrices and for the F_{q^m} decoding systems).  Row-major storage.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace grasscode {

struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Fe> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Fe{0}) {}

    Fe& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    Fe at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    std::span<Fe> row(std::size_t r) { return {a.data() + r * cols, cols}; }
    std::span<const Fe> row(std::size_t r) const { return {a.data() + r * cols, cols}; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

// In-place reduced row echelon form; returns the pivot columns in order.
inline std::vector<std::size_t> rref(const Field& F, Mat& M) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < M.cols && row < M.rows; ++col) {
        std::size_t sel = row;
        while (sel < M.rows && M.at(sel, col) == Fe{0}) ++sel;
        if (sel == M.rows) continue;
        if (sel != row) {
            for (std::size_t c = 0; c < M.cols; ++c) std::swap(M.at(sel, c), M.at(row, c));
        }
        Fe pinv = F.inv(M.at(row, col));
        for (std::size_t c = col; c < M.cols; ++c) M.at(row, c) = F.mul(M.at(row, c), pinv);
        for (std::size_t r = 0; r < M.rows; ++r) {
            if (r == row) continue;
            Fe f = M.at(r, col);
            if (f == Fe{0}) continue;
            for (std::size_t c = col; c < M.cols; ++c)
                M.at(r, c) = F.sub(M.at(r, c), F.mul(f, M.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(const Field& F, Mat M) { return rref(F, M).size(); }

// Basis of { x : M x = 0 }, one vector per free column, in ascending free
// column order.  The fixed ordering keeps downstream consumers deterministic.
inline std::vector<std::vector<Fe>> kernel_basis(const Field& F, Mat M) {
    auto pivots = rref(F, M);
    std::vector<bool> is_pivot(M.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Fe>> basis;
    for (std::size_t fc = 0; fc < M.cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Fe> v(M.cols, Fe{0});
        v[fc] = Fe{1};
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(M.at(r, fc));
        basis.push_back(std::move(v));
    }
    return basis;
}

// Inverse of a square matrix; nullopt when singular.
inline std::optional<Mat> invert(const Field& F, const Mat& M) {
    if (M.rows != M.cols) throw std::invalid_argument("invert: matrix must be square");
    std::size_t n = M.rows;
    Mat aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = M.at(r, c);
        aug.at(r, n + r) = Fe{1};
    }
    auto pivots = rref(F, aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

// Row vector times matrix: (1 x rows) * (rows x cols).
inline std::vector<Fe> vec_mat(const Field& F, std::span<const Fe> v, const Mat& M) {
    if (v.size() != M.rows) throw std::invalid_argument("vec_mat: dimension mismatch");
    std::vector<Fe> out(M.cols, Fe{0});
    for (std::size_t r = 0; r < M.rows; ++r) {
        if (v[r] == Fe{0}) continue;
        for (std::size_t c = 0; c < M.cols; ++c) out[c] = F.add(out[c], F.mul(v[r], M.at(r, c)));
    }
    return out;
}

inline std::vector<Fe> mat_vec(const Field& F, const Mat& M, std::span<const Fe> v) {
    if (v.size() != M.cols) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Fe> out(M.rows, Fe{0});
    for (std::size_t r = 0; r < M.rows; ++r) {
        Fe acc{0};
        for (std::size_t c = 0; c < M.cols; ++c) acc = F.add(acc, F.mul(M.at(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

inline std::size_t hamming_distance(std::span<const Fe> x, std::span<const Fe> y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

inline std::size_t hamming_weight(std::span<const Fe> x) {
    std::size_t w = 0;
    for (auto e : x) w += e != Fe{0};
    return w;
}

}  // namespace grasscode
