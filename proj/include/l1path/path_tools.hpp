#pragma once

#include <string>
#include <utility>
#include <vector>

#include "l1path/homotopy.hpp"

namespace l1path {

/// Nodes of a regularization path, ordered by strictly decreasing lambda.
template <class T>
struct Path {
    std::vector<PathNode<T>> nodes;

    /// Builds a path from bare (lambda, x) pairs, recomputing the derived fields.
    static Path from_points(const Problem<T>& problem, const std::vector<T>& lambdas, const std::vector<Vector<T>>& xs) {
        if (lambdas.size() != xs.size()) throw DimensionError("path: one lambda per node");
        Path out;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if (xs[k].size() != problem.cols())
                throw DimensionError("path node " + std::to_string(k) + " has length " + std::to_string(xs[k].size()) +
                                     ", expected " + std::to_string(problem.cols()));
            out.nodes.push_back(make_node(problem, xs[k], lambdas[k], k));
        }
        return out;
    }

    bool strictly_decreasing() const {
        for (std::size_t k = 1; k < nodes.size(); ++k)
            if (!(nodes[k].lambda < nodes[k - 1].lambda)) return false;
        return true;
    }
};

/// x(lambda) by linear interpolation between the bracketing nodes.
template <class T>
Vector<T> interpolate(const Path<T>& path, const T& lambda) {
    if (path.nodes.empty()) throw RangeError("interpolate: empty path");
    if (!path.strictly_decreasing()) throw DomainError("interpolate: lambda must be strictly decreasing along the path");
    const T& top = path.nodes.front().lambda;
    const T& bottom = path.nodes.back().lambda;
    if (lambda > top || lambda < bottom)
        throw RangeError("lambda " + format_scalar(lambda) + " outside path range [" + format_scalar(bottom) + ", " +
                         format_scalar(top) + "]");
    for (std::size_t k = 0; k < path.nodes.size(); ++k) {
        const auto& node = path.nodes[k];
        if (node.lambda == lambda) return node.x;
        if (node.lambda < lambda) {
            const auto& prev = path.nodes[k - 1];
            const T theta = (prev.lambda - lambda) / (prev.lambda - node.lambda);
            return prev.x + (node.x - prev.x) * theta;
        }
    }
    return path.nodes.back().x;
}

enum class Certificate { True, False, Indeterminate };

inline const char* to_string(Certificate c) {
    switch (c) {
    case Certificate::True: return "True";
    case Certificate::False: return "False";
    case Certificate::Indeterminate: return "Indeterminate";
    }
    return "?";
}

struct CertificateReport {
    Certificate result = Certificate::Indeterminate;
    /// index of the later node of the first failing segment (or the failing node)
    std::optional<std::size_t> failing_node;
    std::string reason;
};

namespace detail {

/// Weighted KKT residual check at a single (x, r, lambda), exact arithmetic.
/// `signs` pins the sign each component must carry where it is nonzero.
template <class T>
bool kkt_with_signs(const Problem<T>& problem, const Vector<T>& r, const T& lambda, const std::vector<int>& signs) {
    if (lambda < T(0)) return false;
    for (Index i = 0; i < r.size(); ++i) {
        const T bound = problem.w(i) * lambda;
        if (!problem.penalized(i)) {
            if (r(i) != T(0)) return false;
        } else if (signs[static_cast<std::size_t>(i)] != 0) {
            if (r(i) != T(signs[static_cast<std::size_t>(i)]) * bound) return false;
        } else if (abs(r(i)) > bound) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Certifies that the nodes are consecutive breakpoints of the minimizer
/// path: on every segment each penalized component keeps one sign and the
/// weighted KKT relations hold for every interior parameter. All certified
/// quantities are affine along a segment, so both endpoints plus one interior
/// point decide the question exactly. Inexact input is Indeterminate.
template <class T>
CertificateReport check_minimizer_list_report(const Problem<T>& problem, const Path<T>& path) {
    CertificateReport report;
    if constexpr (!is_exact_v<T>) {
        report.reason = "inexact input";
        return report;
    } else {
        for (const auto& node : path.nodes) {
            if (node.x.size() != path.nodes.front().x.size()) {
                report.reason = "nodes not of equal length";
                return report;
            }
        }
        for (const auto& node : path.nodes) {
            if (node.x.size() != problem.cols())
                throw DimensionError("path node length " + std::to_string(node.x.size()) + " does not match " +
                                     std::to_string(problem.cols()) + " matrix columns");
        }
        if (path.nodes.empty()) {
            report.reason = "empty path";
            return report;
        }
        if (!path.strictly_decreasing()) {
            report.reason = "lambda not strictly descending";
            return report;
        }
        if (path.nodes.back().lambda < T(0)) {
            report.reason = "negative lambda";
            return report;
        }

        const auto fail = [&](std::size_t node, std::string why) {
            report.result = Certificate::False;
            report.failing_node = node;
            report.reason = std::move(why);
            return report;
        };

        if (path.nodes.size() == 1) {
            const auto& n = path.nodes.front();
            if (!verify_kkt(problem, n.x, n.lambda, ToleranceSpec::exact()))
                return fail(0, "node 0 violates the KKT conditions");
            report.result = Certificate::True;
            return report;
        }

        for (std::size_t k = 1; k < path.nodes.size(); ++k) {
            const auto& a = path.nodes[k - 1];
            const auto& b = path.nodes[k];
            const Vector<T> ra = remainder(problem, a.x);
            const Vector<T> rb = remainder(problem, b.x);

            std::vector<int> signs(static_cast<std::size_t>(problem.cols()), 0);
            for (Index i = 0; i < problem.cols(); ++i) {
                if (!problem.penalized(i)) continue;
                const int sa = sign(a.x(i));
                const int sb = sign(b.x(i));
                if (sa != 0 && sb != 0 && sa != sb)
                    return fail(k, "component " + std::to_string(i + 1) + " changes sign between nodes " +
                                       std::to_string(k - 1) + " and " + std::to_string(k));
                signs[static_cast<std::size_t>(i)] = sa != 0 ? sa : sb;
            }
            const T half = T(1) / T(2);
            const Vector<T> rm = (ra + rb) * half;
            const T lm = (a.lambda + b.lambda) * half;
            // The sign pattern of the open segment also binds the endpoints by continuity.
            if (!detail::kkt_with_signs(problem, ra, a.lambda, signs))
                return fail(k - 1, "node " + std::to_string(k - 1) + " violates the KKT conditions of segment " +
                                       std::to_string(k - 1) + "-" + std::to_string(k));
            if (!detail::kkt_with_signs(problem, rb, b.lambda, signs))
                return fail(k, "node " + std::to_string(k) + " violates the KKT conditions of segment " +
                                   std::to_string(k - 1) + "-" + std::to_string(k));
            if (!detail::kkt_with_signs(problem, rm, lm, signs))
                return fail(k, "midpoint of segment " + std::to_string(k - 1) + "-" + std::to_string(k) +
                                   " violates the KKT conditions");
        }
        report.result = Certificate::True;
        return report;
    }
}

template <class T>
Certificate check_minimizer_list(const Problem<T>& problem, const Path<T>& path) {
    return check_minimizer_list_report(problem, path).result;
}

/// (||x||_1, ||Kx - y||^2) per node.
template <class T>
std::vector<std::pair<T, T>> trade_off_curve(const Path<T>& path) {
    std::vector<std::pair<T, T>> out;
    out.reserve(path.nodes.size());
    for (const auto& node : path.nodes) out.emplace_back(l1_norm(node.x), discrepancy(node.misfit));
    return out;
}

} // namespace l1path
