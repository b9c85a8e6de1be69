/**
 * @file gflinalg.hpp
 * @brief Exact dense linear algebra over finite fields (Eigen storage).
 */
#pragma once

#include <optional>
#include <vector>

#include "qhall/gf.hpp"

namespace qhall {

inline GFMat gf_zeros(Eigen::Index r, Eigen::Index c, const GFTable* F) {
    GFMat m(r, c);
    m.setConstant(GFEl{0, F});
    return m;
}

inline GFMat gf_identity(Eigen::Index n, const GFTable* F) {
    GFMat m = gf_zeros(n, n, F);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = GFEl{1, F};
    return m;
}

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<Eigen::Index> rref_in_place(GFMat& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pr = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r)
            if (!m(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != row) m.row(pr).swap(m.row(row));
        GFEl piv = m(row, col).inv();
        for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * piv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            GFEl factor = m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c)
                m(r, c) = m(r, c) - factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline Eigen::Index gf_rank(GFMat m) { return static_cast<Eigen::Index>(rref_in_place(m).size()); }

/// Basis of the right kernel, as columns.
inline GFMat gf_kernel(GFMat m, const GFTable* F) {
    const Eigen::Index n = m.cols();
    auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    GFMat K = gf_zeros(n, n - static_cast<Eigen::Index>(pivots.size()), F);
    Eigen::Index k = 0;
    for (Eigen::Index free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        K(free_col, k) = GFEl{1, F};
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            K(pivots[pi], k) = -m(static_cast<Eigen::Index>(pi), free_col);
        ++k;
    }
    return K;
}

/// Solve A X = B exactly; std::nullopt when inconsistent.
inline std::optional<GFMat> gf_solve(const GFMat& a, const GFMat& b, const GFTable* F) {
    const Eigen::Index n = a.cols();
    GFMat aug = gf_zeros(a.rows(), n + b.cols(), F);
    if (n > 0) aug.block(0, 0, a.rows(), n) = a;
    if (b.cols() > 0) aug.block(0, n, b.rows(), b.cols()) = b;
    auto pivots = rref_in_place(aug);
    for (auto c : pivots)
        if (c >= n) return std::nullopt;
    GFMat x = gf_zeros(n, b.cols(), F);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            x(pivots[pi], j) = aug(static_cast<Eigen::Index>(pi), n + j);
    return x;
}

inline bool gf_invertible(const GFMat& m) {
    return m.rows() == m.cols() && gf_rank(m) == m.rows();
}

/// Column span test: does span(cols of big) contain v?
inline bool gf_in_span(const GFMat& big, const GFVec& v, const GFTable* F) {
    return gf_solve(big, v, F).has_value();
}

} // namespace qhall
