#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "l1path/problem.hpp"

namespace l1path {

/// Soft thresholding S_lambda(x): x - lambda above lambda, x + lambda below
/// -lambda, zero in between.
template <class T>
T soft_threshold(const T& x, const T& lambda) {
    if (lambda < T(0)) throw DomainError("soft threshold must be nonnegative");
    if (x > lambda) return x - lambda;
    if (x < -lambda) return x + lambda;
    return T(0);
}

template <class T>
Vector<T> soft_threshold(const Vector<T>& x, const T& lambda) {
    if (lambda < T(0)) throw DomainError("soft threshold must be nonnegative");
    return x.unaryExpr([&](const T& v) { return soft_threshold(v, lambda); });
}

/// Componentwise thresholds.
template <class T>
Vector<T> soft_threshold(const Vector<T>& x, const Vector<T>& lambda) {
    if (x.size() != lambda.size()) throw DimensionError("soft threshold: length mismatch");
    Vector<T> out(x.size());
    for (Index i = 0; i < x.size(); ++i) out(i) = soft_threshold(x(i), lambda(i));
    return out;
}

template <class T>
T l1_norm(const Vector<T>& x) {
    T s(0);
    for (Index i = 0; i < x.size(); ++i) s += abs(x(i));
    return s;
}

template <class T>
T weighted_l1_norm(const Vector<T>& x, const Vector<T>& w) {
    if (x.size() != w.size()) throw DimensionError("weighted norm: length mismatch");
    T s(0);
    for (Index i = 0; i < x.size(); ++i) {
        if (w(i) < T(0)) throw DomainError("weighted norm: negative weight");
        s += w(i) * abs(x(i));
    }
    return s;
}

/// The threshold tau >= 0 for which ||S_tau(x)||_1 = R, or 0 when x already
/// lies in the ball. Scans the breakpoints |x_i| in decreasing order; each
/// segment of tau -> ||S_tau(x)||_1 is linear and solved exactly.
template <class T>
T l1_ball_threshold(const Vector<T>& x, const T& R) {
    if (R < T(0)) throw DomainError("l1 ball radius must be nonnegative");
    std::vector<T> mags(static_cast<std::size_t>(x.size()));
    for (Index i = 0; i < x.size(); ++i) mags[static_cast<std::size_t>(i)] = abs(x(i));
    T total(0);
    for (const auto& m : mags) total += m;
    if (total <= R) return T(0);

    std::sort(mags.begin(), mags.end(), std::greater<>());
    // With the k largest magnitudes above tau: sum_{j<k}(mag_j - tau) = R.
    T partial(0);
    T tau(0);
    for (std::size_t k = 0; k < mags.size(); ++k) {
        partial += mags[k];
        const T candidate = (partial - R) / T(static_cast<long>(k + 1));
        const bool next_below = k + 1 == mags.size() || mags[k + 1] <= candidate;
        if (candidate <= mags[k] && next_below) {
            tau = candidate;
            break;
        }
    }
    return tau < T(0) ? T(0) : tau;
}

/// Euclidean projection onto the ball {u : ||u||_1 <= R}.
template <class T>
Vector<T> project_l1_ball(const Vector<T>& x, const T& R) {
    const T tau = l1_ball_threshold(x, R);
    if (tau == T(0)) return x;
    return soft_threshold(x, tau);
}

/// y - Kx
template <class T>
Vector<T> misfit(const Problem<T>& problem, const Vector<T>& x) {
    if (x.size() != problem.cols())
        throw DimensionError("iterate length " + std::to_string(x.size()) + " does not match " +
                             std::to_string(problem.cols()) + " matrix columns");
    return problem.y - problem.K * x;
}

/// K^T (y - Kx)
template <class T>
Vector<T> remainder(const Problem<T>& problem, const Vector<T>& x) {
    return problem.K.transpose() * misfit(problem, x);
}

/// ||Kx - y||^2 from a precomputed misfit.
template <class T>
T discrepancy(const Vector<T>& misfit) {
    return misfit.squaredNorm();
}

/// max over penalized i of |r_i / w_i|; zero when nothing is penalized.
template <class T>
T penalty_from_remainder(const Vector<T>& r, const Vector<T>& w) {
    T best(0);
    for (Index i = 0; i < r.size(); ++i) {
        if (w(i) == T(0)) continue;
        const T ratio = abs(r(i)) / w(i);
        if (ratio > best) best = ratio;
    }
    return best;
}

/// ||x - S_{w lambda}(x + r)|| / ||x||, or the absolute value when x = 0.
template <class T>
double fixed_point_residual(const Vector<T>& x, const Vector<T>& r, const Vector<T>& w, const T& lambda) {
    const Vector<T> shifted = x + r;
    const Vector<T> thresholds = w * lambda;
    const Vector<double> diff = to_double_matrix(Vector<T>(x - soft_threshold(shifted, thresholds)));
    const double xn = to_double_matrix(x).norm();
    return xn > 0 ? diff.norm() / xn : diff.norm();
}

} // namespace l1path
