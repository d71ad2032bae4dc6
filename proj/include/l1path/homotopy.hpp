#pragma once

#include <chrono>
#include <concepts>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "l1path/l1_ops.hpp"
#include "l1path/linsolve.hpp"

namespace l1path {

/// One breakpoint of the piecewise-linear path lambda -> x(lambda).
template <class T>
struct PathNode {
    std::size_t counter = 0;
    Vector<T> x;
    T lambda;
    /// K^T (y - Kx)
    Vector<T> remainder;
    /// y - Kx
    Vector<T> misfit;
    IndexSet support;
    /// seconds since the solve started
    double elapsed = 0.0;
};

/// Builds a node from x and lambda, computing remainder, misfit and support.
template <class T>
PathNode<T> make_node(const Problem<T>& problem, Vector<T> x, T lambda, std::size_t counter = 0) {
    PathNode<T> node;
    node.counter = counter;
    node.misfit = misfit(problem, x);
    node.remainder = problem.K.transpose() * node.misfit;
    node.support = support_of(x);
    node.x = std::move(x);
    node.lambda = std::move(lambda);
    return node;
}

/// Support size where unpenalized components always count.
template <class T>
std::size_t support_size_with_unpenalized(const Problem<T>& problem, const PathNode<T>& node) {
    std::size_t count = 0;
    for (Index i = 0; i < node.x.size(); ++i)
        if (node.x(i) != T(0) || !problem.penalized(i)) ++count;
    return count;
}

/// Terminates the path walk. The penalty, l1-norm and discrepancy rules
/// interpolate between the overshooting node and its predecessor so that the
/// returned point meets the target exactly.
template <class T>
class StoppingRule {
public:
    struct None {};
    struct Penalty { T value; };
    struct MaxL1Norm { T value; };
    struct MinDiscrepancy { T value; };
    struct MaxNonZero { std::size_t count; };
    struct Predicate { std::function<bool(const PathNode<T>&)> fn; };
    using Variant = std::variant<None, Penalty, MaxL1Norm, MinDiscrepancy, MaxNonZero, Predicate>;

    static StoppingRule none() { return StoppingRule(None{}); }
    static StoppingRule penalty(T lambda) {
        if (lambda < T(0)) throw DomainError("stopping penalty must be nonnegative");
        return StoppingRule(Penalty{std::move(lambda)});
    }
    static StoppingRule max_l1_norm(T radius) {
        if (radius < T(0)) throw DomainError("maximum l1 norm must be nonnegative");
        return StoppingRule(MaxL1Norm{std::move(radius)});
    }
    static StoppingRule min_discrepancy(T d) {
        if (d < T(0)) throw DomainError("minimum discrepancy must be nonnegative");
        return StoppingRule(MinDiscrepancy{std::move(d)});
    }
    static StoppingRule max_nonzero(std::size_t n) {
        if (n < 1) throw DomainError("maximum nonzero count must be at least 1");
        return StoppingRule(MaxNonZero{n});
    }
    static StoppingRule predicate(std::function<bool(const PathNode<T>&)> fn) {
        return StoppingRule(Predicate{std::move(fn)});
    }

    const Variant& rule() const { return rule_; }

    bool is_penalty_zero() const {
        const auto* p = std::get_if<Penalty>(&rule_);
        return p != nullptr && p->value == T(0);
    }

private:
    explicit StoppingRule(Variant v) : rule_(std::move(v)) {}
    Variant rule_;
};

enum class StepEvent { Entry, Removal, EntryAndRemoval, Terminal };

template <class T>
struct HomotopyStep {
    Vector<T> direction;
    /// decrease of lambda along the step
    T step;
    StepEvent event = StepEvent::Terminal;
    IndexSet entering;
    IndexSet leaving;
};

/// Active set chosen at a node, with the signs prescribed for penalized
/// members (0 for unpenalized ones) and the resulting direction.
template <class T>
struct ActiveSet {
    IndexSet indices;
    std::vector<int> signs;
    IndexSet entering;
    Vector<T> direction;
    /// K^T K direction
    Vector<T> gram_direction;
};

template <class State, class Record = std::monostate>
struct SolveResult {
    State final;
    /// present iff a collection function was supplied
    std::optional<std::vector<Record>> collected;
    std::vector<std::string> warnings;
};

struct HomotopyOptions {
    /// empty: backend default
    std::optional<ToleranceSpec> tolerance;
    /// 0 silent, 1 event lines, 2 full node dumps
    int verbose = 0;
    std::ostream* log = nullptr;
    std::size_t max_nodes = 1000000;
    /// stop (without interpolation) once this node counter is reached
    std::optional<std::size_t> node_limit;
    /// stop (without interpolation) once this many seconds have elapsed
    std::optional<double> time_limit;
};

namespace detail {

template <class T>
ToleranceSpec tolerance_for(const HomotopyOptions& opts) {
    if constexpr (is_exact_v<T>) return ToleranceSpec::exact();
    return opts.tolerance.value_or(default_tolerance<T>());
}

inline std::string format_indices(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    return out + "}";
}

template <class T>
std::string format_vector(const Vector<T>& v) {
    std::string out = "(";
    for (Index i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += format_scalar(v(i));
    }
    return out + ")";
}

template <class T>
bool on_boundary(const Problem<T>& problem, const PathNode<T>& node, Index j, const ToleranceSpec& tol) {
    return approx_equal(T(abs(node.remainder(j)) / problem.w(j)), node.lambda, tol);
}

} // namespace detail

/// Starting node. Without unpenalized components this is x = 0 at
/// lambda_max = max_i |(K^T y)_i / w_i|. Otherwise the unpenalized components
/// hold the least-squares fit restricted to them, so their remainder vanishes.
template <class T>
PathNode<T> initial_node(const Problem<T>& problem) {
    Vector<T> x = Vector<T>::Zero(problem.cols());
    const IndexSet free = problem.zero_weight_indices();
    if (!free.empty()) {
        const Matrix<T> KZ = select_columns(problem.K, free);
        const Vector<T> rhs = KZ.transpose() * problem.y;
        const auto xz = solve_restricted_normal(problem.K, free, rhs);
        if (!xz)
            throw NonUniquePath("unpenalized columns " + detail::format_indices(free) +
                                    " are linearly dependent; the starting point is not unique",
                                free);
        for (std::size_t k = 0; k < free.size(); ++k) x(free[k]) = (*xz)(static_cast<Index>(k));
    }
    PathNode<T> node = make_node(problem, std::move(x), T(0));
    node.lambda = penalty_from_remainder(node.remainder, problem.w);
    return node;
}

/// Direction v supported on `active` with (K^T K v)_i = w_i s_i on penalized
/// active indices and (K^T K v)_i = 0 on unpenalized ones. Moving x + mu v
/// lowers every active ratio |r_i / w_i| at unit rate.
template <class T>
Vector<T> compute_direction(const Problem<T>& problem, const IndexSet& active, const std::vector<int>& signs) {
    if (signs.size() != active.size()) throw DimensionError("compute_direction: one sign per active index");
    Vector<T> rhs(static_cast<Index>(active.size()));
    for (std::size_t k = 0; k < active.size(); ++k)
        rhs(static_cast<Index>(k)) = problem.penalized(active[k]) ? T(signs[k]) * problem.w(active[k]) : T(0);
    const auto sol = solve_restricted_normal(problem.K, active, rhs);
    if (!sol)
        throw NonUniquePath("columns " + detail::format_indices(active) +
                                " are linearly dependent; the minimizer is not unique",
                            active);
    Vector<T> v = Vector<T>::Zero(problem.cols());
    for (std::size_t k = 0; k < active.size(); ++k) v(active[k]) = (*sol)(static_cast<Index>(k));
    return v;
}

/// Penalized indices with x_i = 0 whose ratio |r_i / w_i| equals lambda.
template <class T>
IndexSet boundary_candidates(const Problem<T>& problem, const PathNode<T>& node, const ToleranceSpec& tol) {
    IndexSet out;
    if (node.lambda == T(0)) return out;
    for (Index j = 0; j < problem.cols(); ++j)
        if (problem.penalized(j) && node.x(j) == T(0) && detail::on_boundary(problem, node, j, tol)) out.push_back(j);
    return out;
}

/// Chooses which boundary candidates join the active set. Subsets are tried
/// by decreasing size, then lexicographically; the first one passes when
/// every entering index moves with the sign of its remainder and no excluded
/// candidate's ratio overtakes lambda.
template <class T>
ActiveSet<T> resolve_tie_entry(const Problem<T>& problem, const PathNode<T>& node, const IndexSet& candidates,
                               const ToleranceSpec& tol) {
    IndexSet fixed;
    for (Index i = 0; i < problem.cols(); ++i)
        if (!problem.penalized(i) || node.x(i) != T(0)) fixed.push_back(i);

    const std::size_t nc = candidates.size();
    if (nc >= 63) throw DomainError("too many tied candidates for subset search");
    bool saw_singular = false;

    for (std::size_t size = nc + 1; size-- > 0;) {
        // Lexicographic enumeration of size-element subsets of candidate positions.
        std::vector<std::size_t> pick(size);
        for (std::size_t k = 0; k < size; ++k) pick[k] = k;
        while (true) {
            ActiveSet<T> trial;
            std::vector<bool> chosen(nc, false);
            for (auto p : pick) chosen[p] = true;
            trial.indices = fixed;
            for (auto p : pick) {
                trial.indices.push_back(candidates[p]);
                trial.entering.push_back(candidates[p]);
            }
            std::sort(trial.indices.begin(), trial.indices.end());
            for (Index i : trial.indices) {
                if (!problem.penalized(i)) trial.signs.push_back(0);
                else if (node.x(i) != T(0)) trial.signs.push_back(sign(node.x(i)));
                else trial.signs.push_back(sign(node.remainder(i)));
            }

            bool ok = true;
            try {
                trial.direction = compute_direction(problem, trial.indices, trial.signs);
            } catch (const NonUniquePath&) {
                saw_singular = true;
                ok = false;
            }
            if (ok) {
                trial.gram_direction = problem.K.transpose() * (problem.K * trial.direction);
                for (Index j : trial.entering) {
                    if (sign(trial.direction(j)) != sign(node.remainder(j))) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                for (std::size_t c = 0; c < nc && ok; ++c) {
                    if (chosen[c]) continue;
                    const Index j = candidates[c];
                    const T rate = T(sign(node.remainder(j))) * trial.gram_direction(j);
                    if (!approx_less_equal(problem.w(j), rate, tol)) ok = false;
                }
            }
            if (ok) return trial;

            // next combination
            std::size_t k = size;
            while (k > 0 && pick[k - 1] == nc - size + k - 1) --k;
            if (k == 0) break;
            ++pick[k - 1];
            for (std::size_t q = k; q < size; ++q) pick[q] = pick[q - 1] + 1;
        }
    }
    if (saw_singular)
        throw NonUniquePath("no admissible active set with independent columns at lambda = " +
                                format_scalar(node.lambda) + "; the minimizer is not unique",
                            candidates);
    throw ConsistencyError("no admissible active set among candidates " + detail::format_indices(candidates) +
                           " at lambda = " + format_scalar(node.lambda));
}

/// Longest step along `active.direction` before a new ratio reaches lambda,
/// an active coefficient reaches zero, or lambda reaches zero.
template <class T>
HomotopyStep<T> compute_step(const Problem<T>& problem, const PathNode<T>& node, const ActiveSet<T>& active,
                             const ToleranceSpec& tol) {
    const Vector<T>& v = active.direction;
    const Vector<T>& a = active.gram_direction;
    std::vector<bool> in_active(static_cast<std::size_t>(problem.cols()), false);
    for (Index i : active.indices) in_active[static_cast<std::size_t>(i)] = true;

    const auto positive = [&](const T& t) {
        if constexpr (is_exact_v<T>) return t > T(0);
        else return t > tol.zero_abs;
    };

    struct Event { T t; Index index; bool entry; };
    std::vector<Event> events;
    for (Index j = 0; j < problem.cols(); ++j) {
        if (!problem.penalized(j) || in_active[static_cast<std::size_t>(j)]) continue;
        const bool boundary = detail::on_boundary(problem, node, j, tol);
        for (int s : {1, -1}) {
            if (boundary && s == sign(node.remainder(j))) continue;
            const T den = a(j) - T(s) * problem.w(j);
            if (den == T(0)) continue;
            const T t = (node.remainder(j) - T(s) * problem.w(j) * node.lambda) / den;
            if (positive(t) && t < node.lambda) events.push_back({t, j, true});
        }
    }
    for (Index i : active.indices) {
        if (!problem.penalized(i) || node.x(i) == T(0) || v(i) == T(0)) continue;
        const T t = -node.x(i) / v(i);
        if (positive(t) && t < node.lambda) events.push_back({t, i, false});
    }

    HomotopyStep<T> step;
    step.direction = v;
    step.step = node.lambda;
    for (const auto& e : events)
        if (e.t < step.step) step.step = e.t;
    for (const auto& e : events) {
        if (!approx_equal(e.t, step.step, tol)) continue;
        (e.entry ? step.entering : step.leaving).push_back(e.index);
    }
    std::sort(step.entering.begin(), step.entering.end());
    step.entering.erase(std::unique(step.entering.begin(), step.entering.end()), step.entering.end());
    std::sort(step.leaving.begin(), step.leaving.end());

    if (step.entering.empty() && step.leaving.empty()) step.event = StepEvent::Terminal;
    else if (step.leaving.empty()) step.event = StepEvent::Entry;
    else if (step.entering.empty()) step.event = StepEvent::Removal;
    else step.event = StepEvent::EntryAndRemoval;
    return step;
}

/// Weighted KKT conditions at (x, lambda).
template <class T>
bool verify_kkt(const Problem<T>& problem, const Vector<T>& x, const T& lambda, const ToleranceSpec& tol) {
    if (x.size() != problem.cols()) throw DimensionError("verify_kkt: iterate length mismatch");
    if (lambda < T(0)) return false;
    const Vector<T> r = remainder(problem, x);
    for (Index i = 0; i < x.size(); ++i) {
        const T bound = problem.w(i) * lambda;
        if (!problem.penalized(i)) {
            if (!approx_equal(r(i), T(0), tol)) return false;
        } else if (x(i) != T(0)) {
            if (!approx_equal(r(i), T(sign(x(i))) * bound, tol)) return false;
        } else if (!approx_less_equal(T(abs(r(i))), bound, tol)) {
            return false;
        }
    }
    return true;
}

template <class T>
bool verify_kkt(const Problem<T>& problem, const Vector<T>& x, const T& lambda) {
    return verify_kkt(problem, x, lambda, default_tolerance<T>());
}

namespace detail {

template <class T>
PathNode<T> blend(const PathNode<T>& prev, const PathNode<T>& next, const T& theta) {
    PathNode<T> out;
    out.counter = next.counter;
    out.x = prev.x + (next.x - prev.x) * theta;
    out.lambda = prev.lambda + (next.lambda - prev.lambda) * theta;
    out.remainder = prev.remainder + (next.remainder - prev.remainder) * theta;
    out.misfit = prev.misfit + (next.misfit - prev.misfit) * theta;
    out.support = support_of(out.x);
    out.elapsed = next.elapsed;
    return out;
}

template <class T>
T clamp_unit(T theta) {
    if (theta < T(0)) return T(0);
    if (theta > T(1)) return T(1);
    return theta;
}

/// Parameter in [0,1] where ||misfit||^2 crosses d along prev -> next.
template <class T>
T discrepancy_crossing(const PathNode<T>& prev, const PathNode<T>& next, const T& d,
                       std::vector<std::string>& warnings) {
    const Vector<T> delta = next.misfit - prev.misfit;
    const T qa = delta.squaredNorm();
    if (qa == T(0)) return T(1);
    const T qb = T(2) * prev.misfit.dot(delta);
    const T qc = prev.misfit.squaredNorm() - d;
    T disc = qb * qb - T(4) * qa * qc;
    if (disc < T(0)) disc = T(0);
    T root;
    if constexpr (is_exact_v<T>) {
        if (auto r = exact_sqrt(disc)) {
            root = *r;
        } else {
            root = approximate_sqrt(disc);
            warnings.push_back("discrepancy target is not reachable with a rational point on this segment; "
                               "result is a 200-bit rational approximation");
        }
    } else {
        root = std::sqrt(disc);
    }
    const T lo = (-qb - root) / (T(2) * qa);
    const T hi = (-qb + root) / (T(2) * qa);
    // root nearest the newer node
    if (hi >= T(0) && hi <= T(1)) return hi;
    return clamp_unit(lo);
}

template <class T>
class Walker {
public:
    Walker(const Problem<T>& problem, const StoppingRule<T>& stop, const HomotopyOptions& opts)
        : problem_(problem), stop_(stop), opts_(opts), tol_(tolerance_for<T>(opts)),
          start_(std::chrono::steady_clock::now()) {}

    template <class Visit>
    SolveResult<PathNode<T>> run(Visit&& visit) {
        SolveResult<PathNode<T>> result;
        if (!is_exact_v<T> && stop_.is_penalty_zero())
            result.warnings.push_back("stopping at penalty 0 with floating-point data is unlikely to terminate "
                                      "cleanly; specify a positive stopping penalty");

        PathNode<T> node = initial_node(problem_);
        node.elapsed = elapsed();
        log_node(node, nullptr);
        if (triggered(node)) {
            visit(node);
            result.final = std::move(node);
            return finish(std::move(result));
        }
        visit(node);

        while (node.lambda > T(0)) {
            if (limit_reached(node)) {
                result.warnings.push_back("stopped by node or time limit at lambda = " + format_scalar(node.lambda));
                result.final = std::move(node);
                return finish(std::move(result));
            }
            if (node.counter + 1 >= opts_.max_nodes) throw Error("maximum node count reached");
            const IndexSet candidates = boundary_candidates(problem_, node, tol_);
            const ActiveSet<T> active = resolve_tie_entry(problem_, node, candidates, tol_);
            const HomotopyStep<T> step = compute_step(problem_, node, active, tol_);

            PathNode<T> next = advance(node, step);
            log_node(next, &step);

            if (triggered(next)) {
                PathNode<T> stopped = interpolate_stop(node, next, result.warnings);
                visit(stopped);
                result.final = std::move(stopped);
                return finish(std::move(result));
            }
            visit(next);
            node = std::move(next);
            if (step.event == StepEvent::Terminal) break;
        }
        if (!std::holds_alternative<typename StoppingRule<T>::None>(stop_.rule()) &&
            !std::holds_alternative<typename StoppingRule<T>::Predicate>(stop_.rule()) && !stop_.is_penalty_zero())
            result.warnings.push_back("path ended at lambda = " + format_scalar(node.lambda) +
                                      " before the stopping target was reached");
        result.final = std::move(node);
        return finish(std::move(result));
    }

private:
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    bool limit_reached(const PathNode<T>& node) const {
        return (opts_.node_limit && node.counter >= *opts_.node_limit) ||
               (opts_.time_limit && node.elapsed >= *opts_.time_limit);
    }

    SolveResult<PathNode<T>> finish(SolveResult<PathNode<T>> result) const {
        if (opts_.verbose > 0)
            for (const auto& w : result.warnings) log() << "warning: " << w << '\n';
        return result;
    }

    std::ostream& log() const { return opts_.log ? *opts_.log : std::cerr; }

    PathNode<T> advance(const PathNode<T>& node, const HomotopyStep<T>& step) const {
        Vector<T> x = node.x + step.direction * step.step;
        for (Index i : step.leaving) x(i) = T(0);
        PathNode<T> next = make_node(problem_, std::move(x), T(0), node.counter + 1);
        next.lambda = penalty_from_remainder(next.remainder, problem_.w);
        if constexpr (is_exact_v<T>) {
            if (next.lambda != node.lambda - step.step)
                throw ConsistencyError("penalty after step " + format_scalar(next.lambda) +
                                       " differs from the walked value " + format_scalar(node.lambda - step.step));
        }
        if (step.event == StepEvent::Terminal) {
            if constexpr (!is_exact_v<T>) next.lambda = T(0);
        }
        next.elapsed = elapsed();
        return next;
    }

    bool triggered(const PathNode<T>& node) const {
        using Rule = StoppingRule<T>;
        return std::visit(
            [&](const auto& r) -> bool {
                using R = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<R, typename Rule::None>) return false;
                else if constexpr (std::is_same_v<R, typename Rule::Penalty>) return node.lambda <= r.value;
                else if constexpr (std::is_same_v<R, typename Rule::MaxL1Norm>) return l1_norm(node.x) >= r.value;
                else if constexpr (std::is_same_v<R, typename Rule::MinDiscrepancy>)
                    return discrepancy(node.misfit) <= r.value;
                else if constexpr (std::is_same_v<R, typename Rule::MaxNonZero>)
                    return support_size_with_unpenalized(problem_, node) >= r.count;
                else return r.fn(node);
            },
            stop_.rule());
    }

    PathNode<T> interpolate_stop(const PathNode<T>& prev, const PathNode<T>& next,
                                 std::vector<std::string>& warnings) const {
        using Rule = StoppingRule<T>;
        const std::optional<T> theta = std::visit(
            [&](const auto& r) -> std::optional<T> {
                using R = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<R, typename Rule::Penalty>) {
                    return clamp_unit(T((prev.lambda - r.value) / (prev.lambda - next.lambda)));
                } else if constexpr (std::is_same_v<R, typename Rule::MaxL1Norm>) {
                    const T lo = l1_norm(prev.x);
                    const T hi = l1_norm(next.x);
                    if (hi == lo) return T(1);
                    return clamp_unit(T((r.value - lo) / (hi - lo)));
                } else if constexpr (std::is_same_v<R, typename Rule::MinDiscrepancy>) {
                    return discrepancy_crossing(prev, next, r.value, warnings);
                } else {
                    return std::nullopt;
                }
            },
            stop_.rule());
        if (!theta || *theta == T(1)) return next;
        PathNode<T> out = blend(prev, next, *theta);
        out.elapsed = elapsed();
        return out;
    }

    void log_node(const PathNode<T>& node, const HomotopyStep<T>* step) const {
        if (opts_.verbose <= 0) return;
        std::ostringstream line;
        line << "node " << node.counter << ": lambda = " << format_scalar(node.lambda)
             << ", support size " << node.support.size();
        if (step) {
            switch (step->event) {
            case StepEvent::Entry: line << ", entry " << format_indices(step->entering); break;
            case StepEvent::Removal: line << ", removal " << format_indices(step->leaving); break;
            case StepEvent::EntryAndRemoval:
                line << ", entry " << format_indices(step->entering) << " removal " << format_indices(step->leaving);
                break;
            case StepEvent::Terminal: line << ", terminal"; break;
            }
        }
        log() << line.str() << '\n';
        if (opts_.verbose >= 2) {
            log() << "  x = " << format_vector(node.x) << '\n'
                  << "  remainder = " << format_vector(node.remainder) << '\n'
                  << "  support = " << format_indices(node.support) << '\n';
        }
    }

    const Problem<T>& problem_;
    const StoppingRule<T>& stop_;
    const HomotopyOptions& opts_;
    ToleranceSpec tol_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

/// Walks the regularization path from the starting node down in lambda until
/// `stop` fires. The default rule runs to lambda = 0.
template <class T>
SolveResult<PathNode<T>> find_minimizer(const Problem<T>& problem,
                                        const StoppingRule<T>& stop = StoppingRule<T>::penalty(T(0)),
                                        const HomotopyOptions& opts = {}) {
    return detail::Walker<T>(problem, stop, opts).run([](const PathNode<T>&) {});
}

/// As above, collecting `collect(node)` at every emitted node.
template <class T, class Collect>
    requires std::invocable<Collect&, const PathNode<T>&>
auto find_minimizer(const Problem<T>& problem, const StoppingRule<T>& stop, Collect&& collect,
                    const HomotopyOptions& opts = {}) {
    using Record = std::decay_t<std::invoke_result_t<Collect&, const PathNode<T>&>>;
    std::vector<Record> records;
    auto base = detail::Walker<T>(problem, stop, opts).run([&](const PathNode<T>& n) { records.push_back(collect(n)); });
    SolveResult<PathNode<T>, Record> out;
    out.final = std::move(base.final);
    out.warnings = std::move(base.warnings);
    out.collected = std::move(records);
    return out;
}

/// Every emitted node, in order.
template <class T>
std::vector<PathNode<T>> solution_path(const Problem<T>& problem,
                                       const StoppingRule<T>& stop = StoppingRule<T>::penalty(T(0)),
                                       const HomotopyOptions& opts = {}) {
    return *find_minimizer(problem, stop, [](const PathNode<T>& n) { return n; }, opts).collected;
}

} // namespace l1path
