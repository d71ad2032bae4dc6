#pragma once

#include <optional>

#include <Eigen/QR>

#include "l1path/problem.hpp"

namespace l1path {

/// Columns of K listed in `cols`, in that order.
template <class T>
Matrix<T> select_columns(const Matrix<T>& K, const IndexSet& cols) {
    Matrix<T> out(K.rows(), static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = K.col(cols[j]);
    return out;
}

/// Exact Gaussian elimination; nothing when A is singular.
template <class T>
std::optional<Vector<T>> solve_exact(Matrix<T> A, Vector<T> b) {
    const Index n = A.rows();
    for (Index col = 0; col < n; ++col) {
        Index pivot = col;
        while (pivot < n && A(pivot, col) == T(0)) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            A.row(pivot).swap(A.row(col));
            std::swap(b(pivot), b(col));
        }
        for (Index r = col + 1; r < n; ++r) {
            if (A(r, col) == T(0)) continue;
            const T f = A(r, col) / A(col, col);
            for (Index c = col; c < n; ++c) A(r, c) -= f * A(col, c);
            b(r) -= f * b(col);
        }
    }
    Vector<T> x(n);
    for (Index r = n - 1; r >= 0; --r) {
        T acc = b(r);
        for (Index c = r + 1; c < n; ++c) acc -= A(r, c) * x(c);
        x(r) = acc / A(r, r);
    }
    return x;
}

/// Solves (K_A^T K_A) u = rhs for the columns A of K. Nothing when K_A does
/// not have full column rank.
template <class T>
std::optional<Vector<T>> solve_restricted_normal(const Matrix<T>& K, const IndexSet& active, const Vector<T>& rhs) {
    const Index k = static_cast<Index>(active.size());
    if (k == 0) return Vector<T>(0);
    const Matrix<T> KA = select_columns(K, active);
    if constexpr (is_exact_v<T>) {
        return solve_exact<T>(KA.transpose() * KA, rhs);
    } else {
        if (k > KA.rows()) return std::nullopt;
        Eigen::ColPivHouseholderQR<Matrix<T>> qr(KA);
        qr.setThreshold(1e-10);
        qr.compute(KA);
        if (qr.rank() < k) return std::nullopt;
        // K_A P = QR, so K_A^T K_A = P R^T R P^T.
        const auto R = qr.matrixR().topLeftCorner(k, k).template triangularView<Eigen::Upper>();
        Vector<T> z = qr.colsPermutation().transpose() * rhs;
        R.transpose().solveInPlace(z);
        R.solveInPlace(z);
        return Vector<T>(qr.colsPermutation() * z);
    }
}

} // namespace l1path
