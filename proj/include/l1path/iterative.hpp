#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <type_traits>

#include "l1path/homotopy.hpp"

namespace l1path {

template <class T>
struct IterationState {
    std::size_t counter = 0;
    Vector<T> x;
    /// K^T (y - Kx)
    Vector<T> remainder;
    /// y - Kx
    Vector<T> misfit;
    /// step size used to reach x (1 for the fixed-step schemes)
    T beta = T(1);
    /// lambda for thresholded Landweber; max_i |r_i / w_i| for the projection schemes
    T penalty = T(0);
    double elapsed = 0.0;
};

template <class T>
struct IterOptions {
    /// zeroth iterate; ignored by the adaptive schemes, which always start at 0
    std::optional<Vector<T>> start;
    /// overrides the problem's weights when set
    std::optional<Vector<T>> weights;
    /// empty: one iteration for the fixed schemes, numsteps for the adaptive ones
    std::function<bool(const IterationState<T>&)> stop;
};

/// Tag for "no collection function".
struct NoCollect {};

namespace detail {

template <class T>
struct StepResult {
    Vector<T> x;
    T beta;
};

template <class T, class Step, class Collect>
auto run_iterations(const Problem<T>& base, const IterOptions<T>& opts, Vector<T> start,
                    std::optional<std::size_t> limit, Step&& step, Collect&& collect) {
    constexpr bool collecting = !std::is_same_v<std::decay_t<Collect>, NoCollect>;
    const auto t0 = std::chrono::steady_clock::now();
    const auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };

    Problem<T> problem = base;
    if (opts.weights) problem = Problem<T>(base.K, base.y, *opts.weights);
    if (start.size() != problem.cols()) throw DimensionError("starting point length mismatch");

    const auto done = [&](const IterationState<T>& s) {
        if (limit) return s.counter >= *limit || (opts.stop && opts.stop(s));
        return opts.stop ? opts.stop(s) : s.counter >= 1;
    };

    IterationState<T> state;
    state.x = std::move(start);
    state.misfit = misfit(problem, state.x);
    state.remainder = problem.K.transpose() * state.misfit;

    auto make_record = [&](const IterationState<T>& s) {
        if constexpr (collecting) return collect(s);
        else return 0;
    };
    using Record = std::decay_t<decltype(make_record(state))>;
    std::vector<Record> records;

    const auto check_finite = [&](const IterationState<T>& s) {
        if constexpr (!is_exact_v<T>) {
            if (!s.x.allFinite() || !s.remainder.allFinite())
                throw DivergenceError("iterate " + std::to_string(s.counter) + " is not finite");
        }
    };

    step.prime(problem, state);
    state.elapsed = elapsed();
    if constexpr (collecting) records.push_back(make_record(state));
    while (!done(state)) {
        std::optional<StepResult<T>> next = step(problem, state);
        if (!next) break;
        state.x = std::move(next->x);
        state.beta = std::move(next->beta);
        state.misfit = misfit(problem, state.x);
        state.remainder = problem.K.transpose() * state.misfit;
        ++state.counter;
        step.prime(problem, state);
        state.elapsed = elapsed();
        check_finite(state);
        if constexpr (collecting) records.push_back(make_record(state));
    }

    if constexpr (collecting) {
        SolveResult<IterationState<T>, Record> out;
        out.final = std::move(state);
        out.collected = std::move(records);
        return out;
    } else {
        SolveResult<IterationState<T>> out;
        out.final = std::move(state);
        return out;
    }
}

template <class T>
T require_steepest_step(const Problem<T>& problem, const Vector<T>& r) {
    const Vector<T> Kr = problem.K * r;
    const T den = Kr.squaredNorm();
    if (den == T(0)) throw DomainError("steepest descent step undefined: K r = 0 with r != 0");
    return r.squaredNorm() / den;
}

template <class T>
bool converged(const Vector<T>& r) {
    return r.squaredNorm() == T(0);
}

template <class T>
struct ThresholdStep {
    T lambda;
    void prime(const Problem<T>&, IterationState<T>& s) const { s.penalty = lambda; }
    std::optional<StepResult<T>> operator()(const Problem<T>& p, const IterationState<T>& s) const {
        return StepResult<T>{soft_threshold(Vector<T>(s.x + s.remainder), Vector<T>(p.w * lambda)), T(1)};
    }
};

template <class T>
struct ProjectionStep {
    T radius;
    bool steepest;
    /// adaptive radius (n+1) R / numsteps when nonzero
    std::size_t numsteps = 0;

    void prime(const Problem<T>& p, IterationState<T>& s) const { s.penalty = penalty_from_remainder(s.remainder, p.w); }

    std::optional<StepResult<T>> operator()(const Problem<T>& p, const IterationState<T>& s) const {
        T beta(1);
        if (steepest) {
            if (converged(s.remainder)) return std::nullopt;
            beta = require_steepest_step(p, s.remainder);
        }
        const T R = numsteps == 0 ? radius
                                  : radius * T(static_cast<long>(s.counter + 1)) / T(static_cast<long>(numsteps));
        return StepResult<T>{project_l1_ball(Vector<T>(s.x + s.remainder * beta), R), beta};
    }
};

template <class T>
Vector<T> start_or_zero(const Problem<T>& p, const IterOptions<T>& opts) {
    return opts.start ? *opts.start : Vector<T>::Zero(p.cols());
}

} // namespace detail

/// x <- S_{w lambda}(x + K^T (y - Kx))
template <class T, class Collect = NoCollect>
auto thresholded_landweber(const Problem<T>& problem, const T& lambda, const IterOptions<T>& opts = {},
                           Collect&& collect = {}) {
    if (lambda < T(0)) throw DomainError("penalty must be nonnegative");
    return detail::run_iterations(problem, opts, detail::start_or_zero(problem, opts), std::nullopt,
                                  detail::ThresholdStep<T>{lambda}, std::forward<Collect>(collect));
}

/// x <- P_R(x + K^T (y - Kx))
template <class T, class Collect = NoCollect>
auto projected_landweber(const Problem<T>& problem, const T& radius, const IterOptions<T>& opts = {},
                         Collect&& collect = {}) {
    if (radius < T(0)) throw DomainError("radius must be nonnegative");
    return detail::run_iterations(problem, opts, detail::start_or_zero(problem, opts), std::nullopt,
                                  detail::ProjectionStep<T>{radius, false}, std::forward<Collect>(collect));
}

/// x <- P_R(x + beta r), beta = ||r||^2 / ||K r||^2
template <class T, class Collect = NoCollect>
auto projected_steepest_descent(const Problem<T>& problem, const T& radius, const IterOptions<T>& opts = {},
                                Collect&& collect = {}) {
    if (radius < T(0)) throw DomainError("radius must be nonnegative");
    return detail::run_iterations(problem, opts, detail::start_or_zero(problem, opts), std::nullopt,
                                  detail::ProjectionStep<T>{radius, true}, std::forward<Collect>(collect));
}

/// Projected Landweber from 0 with radius (n+1) R / numsteps at step n.
template <class T, class Collect = NoCollect>
auto adaptive_landweber(const Problem<T>& problem, const T& radius, std::size_t numsteps,
                        const IterOptions<T>& opts = {}, Collect&& collect = {}) {
    if (radius < T(0)) throw DomainError("radius must be nonnegative");
    if (numsteps == 0) throw DomainError("numsteps must be at least 1");
    return detail::run_iterations(problem, opts, Vector<T>(Vector<T>::Zero(problem.cols())), numsteps,
                                  detail::ProjectionStep<T>{radius, false, numsteps}, std::forward<Collect>(collect));
}

/// Projected steepest descent from 0 with radius (n+1) R / numsteps at step n.
template <class T, class Collect = NoCollect>
auto adaptive_steepest_descent(const Problem<T>& problem, const T& radius, std::size_t numsteps,
                               const IterOptions<T>& opts = {}, Collect&& collect = {}) {
    if (radius < T(0)) throw DomainError("radius must be nonnegative");
    if (numsteps == 0) throw DomainError("numsteps must be at least 1");
    return detail::run_iterations(problem, opts, Vector<T>(Vector<T>::Zero(problem.cols())), numsteps,
                                  detail::ProjectionStep<T>{radius, true, numsteps}, std::forward<Collect>(collect));
}

} // namespace l1path
