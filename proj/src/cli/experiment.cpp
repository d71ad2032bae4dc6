#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <sstream>

#include <Eigen/SVD>
#include <json.hpp>

#include "cli/commands.hpp"
#include "cli/experiment.hpp"
#include "cli/io.hpp"
#include "l1path/random.hpp"

namespace l1path::cli {

namespace {

double relative_error(const Vector<double>& x, const Vector<double>& ref) {
    const double scale = ref.norm();
    const double diff = (x - ref).norm();
    return scale > 0.0 ? diff / scale : diff;
}

std::string fmt(double v) { return format_scalar(v); }

void write_outputs(const std::string& dir, const std::vector<std::pair<std::string, std::string>>& files) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    for (const auto& [name, content] : files) write_file((std::filesystem::path(dir) / name).string(), content);
}

} // namespace

TikhonovSolution tikhonov_matching(const Matrix<double>& K, const Vector<double>& y, double target) {
    if (target < 0.0) throw DomainError("discrepancy target must be nonnegative");
    Eigen::BDCSVD<Matrix<double>> svd(K, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector<double>& s = svd.singularValues();
    const Vector<double> coef = svd.matrixU().transpose() * y;
    const double floor = std::max(0.0, y.squaredNorm() - coef.squaredNorm());
    const double smax = s.size() ? s(0) : 0.0;
    const double cutoff = smax * 1e-12 * static_cast<double>(std::max(K.rows(), K.cols()));

    const auto residual = [&](double alpha) {
        double sum = floor;
        for (Index i = 0; i < s.size(); ++i) {
            const double f = s(i) > cutoff ? alpha / (s(i) * s(i) + alpha) : 1.0;
            sum += f * f * coef(i) * coef(i);
        }
        return sum;
    };
    const auto solution = [&](double alpha) {
        Vector<double> g = Vector<double>::Zero(s.size());
        for (Index i = 0; i < s.size(); ++i)
            if (s(i) > cutoff) g(i) = s(i) * coef(i) / (s(i) * s(i) + alpha);
        return Vector<double>(svd.matrixV() * g);
    };

    const double minimal = residual(0.0);
    const double tol = 1e-10 * std::max(target, 1e-300);
    if (target < minimal - tol)
        throw DomainError("infeasible discrepancy target " + fmt(target) + ": smallest achievable is " + fmt(minimal));
    if (target >= y.squaredNorm()) return {Vector<double>::Zero(K.cols()), std::numeric_limits<double>::infinity(), y.squaredNorm()};
    if (target <= minimal + tol) return {solution(0.0), 0.0, minimal};

    // residual(alpha) increases monotonically; bisect on log(alpha)
    double lo = std::log(std::max(smax * smax, 1e-300) * 1e-20);
    double hi = std::log(std::max(smax * smax, 1e-300) * 1e20);
    double alpha = std::exp(0.5 * (lo + hi));
    for (int it = 0; it < 400; ++it) {
        alpha = std::exp(0.5 * (lo + hi));
        const double r = residual(alpha);
        if (std::abs(r - target) <= tol) break;
        (r < target ? lo : hi) = std::log(alpha);
    }
    return {solution(alpha), alpha, residual(alpha)};
}

RegressionOutcome run_regression(const ExperimentArgs& args, std::ostream* log) {
    if (args.m < 1 || args.n < 1 || args.sparsity < 1) throw DomainError("m, n and sparsity must be at least 1");
    if (args.sparsity > args.n) throw DomainError("sparsity exceeds n");
    if (args.noise < 0.0) throw DomainError("noise fraction must be nonnegative");
    if (args.identity && args.m != args.n) throw DomainError("--identity requires m = n");

    Rng rng(args.seed);
    RegressionOutcome o;
    o.K = args.identity ? Matrix<double>(Matrix<double>::Identity(args.m, args.n)) : rng.normal_matrix(args.m, args.n);

    std::vector<Index> order(static_cast<std::size_t>(args.n));
    std::iota(order.begin(), order.end(), Index{0});
    for (long k = 0; k < args.sparsity; ++k) {
        const auto j = rng.integer(k, args.n - 1);
        std::swap(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(j)]);
    }
    o.x_in = Vector<double>::Zero(args.n);
    for (long k = 0; k < args.sparsity; ++k) o.x_in(order[static_cast<std::size_t>(k)]) = rng.normal();

    const Vector<double> clean = o.K * o.x_in;
    Vector<double> e(args.m);
    for (Index i = 0; i < args.m; ++i) e(i) = rng.normal();
    const double enorm = e.norm();
    e = enorm > 0.0 ? Vector<double>(e * (args.noise * clean.norm() / enorm)) : Vector<double>(Vector<double>::Zero(args.m));
    o.y = clean + e;
    o.target = e.squaredNorm();

    const Problem<double> problem(o.K, o.y);
    HomotopyOptions hopts;
    hopts.verbose = args.verbose;
    hopts.log = log;
    auto result = find_minimizer(problem, StoppingRule<double>::min_discrepancy(o.target),
                                 [](const PathNode<double>& n) { return n; }, hopts);
    o.path = std::move(*result.collected);
    o.warnings = std::move(result.warnings);
    o.x_l1 = result.final.x;
    o.lambda = result.final.lambda;
    const double reached = discrepancy(result.final.misfit);
    if (reached > o.target + 1e-9 * std::max(o.target, o.y.squaredNorm() * 1e-6))
        throw DomainError("infeasible discrepancy target " + fmt(o.target) + ": path ends at discrepancy " +
                          fmt(reached));

    o.l2 = tikhonov_matching(o.K, o.y, o.target);
    o.l1_error = relative_error(o.x_l1, o.x_in);
    o.l2_error = relative_error(o.l2.x, o.x_in);

    // iterates on the rescaled problem cK, cy, which has the same minimizer at penalty c^2 lambda
    Eigen::BDCSVD<Matrix<double>> svd(o.K);
    const double knorm = svd.singularValues()(0);
    o.scale = knorm > 0.0 ? 0.99 / knorm : 1.0;
    const Problem<double> scaled(o.K * o.scale, o.y * o.scale);
    const double c2 = o.scale * o.scale;
    const double radius = l1_norm(o.x_l1);

    IterOptions<double> fixed;
    fixed.stop = [&](const IterationState<double>& s) { return s.counter >= args.iterations; };
    auto tlw = thresholded_landweber(scaled, o.lambda * c2, fixed,
                                     [&](const IterationState<double>& s) { return relative_error(s.x, o.x_l1); });
    o.tlw_errors = std::move(*tlw.collected);
    auto alw = adaptive_landweber(scaled, radius, args.iterations, {},
                                  [&](const IterationState<double>& s) { return relative_error(s.x, o.x_l1); });
    o.alw_errors = std::move(*alw.collected);
    auto curve = adaptive_landweber(scaled, radius, args.numsteps, {}, [&](const IterationState<double>& s) {
        return std::pair<double, double>(l1_norm(s.x), discrepancy(s.misfit) / c2);
    });
    o.alw_curve = std::move(*curve.collected);
    return o;
}

ScalingOutcome run_scaling(const ExperimentArgs& args, std::ostream* log) {
    if (args.m < 1 || args.n < 1) throw DomainError("m and n must be at least 1");
    if (args.range <= 0.0) throw DomainError("range must be positive");
    Rng rng(args.seed);
    const Problem<double> problem(rng.uniform_matrix(args.m, args.n, -args.range, args.range),
                                  rng.uniform_matrix(args.m, 1, -args.range, args.range).col(0));
    HomotopyOptions hopts;
    hopts.verbose = args.verbose;
    hopts.log = log;
    ScalingOutcome o;
    auto result = find_minimizer(
        problem, StoppingRule<double>::max_nonzero(args.stop_nonzeros),
        [&](const PathNode<double>& n) {
            return ScalingRecord{n.counter, n.elapsed, n.support.size(),
                                 fixed_point_residual(n.x, n.remainder, problem.w, n.lambda)};
        },
        hopts);
    o.records = std::move(*result.collected);
    o.warnings = std::move(result.warnings);
    return o;
}

int cmd_experiment(const ExperimentArgs& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.kind == "regression") {
            const RegressionOutcome o = run_regression(args, &err);
            for (const auto& w : o.warnings) err << "warning: " << w << '\n';

            const auto l1_support = support_of(o.x_l1);
            std::size_t tp = 0;
            for (Index i : l1_support)
                if (o.x_in(i) != 0.0) ++tp;
            const auto true_count = support_of(o.x_in).size();

            nlohmann::ordered_json metrics;
            metrics["seed"] = args.seed;
            metrics["m"] = args.m;
            metrics["n"] = args.n;
            metrics["sparsity"] = args.sparsity;
            metrics["noise"] = args.noise;
            metrics["target_discrepancy"] = o.target;
            metrics["lambda"] = o.lambda;
            metrics["nodes"] = o.path.size();
            metrics["l1_error"] = o.l1_error;
            metrics["l2_error"] = o.l2_error;
            metrics["l2_alpha"] = o.l2.alpha;
            metrics["l2_discrepancy"] = o.l2.discrepancy;
            metrics["support_size"] = l1_support.size();
            metrics["true_positives"] = tp;
            metrics["false_positives"] = l1_support.size() - tp;
            metrics["false_negatives"] = true_count - tp;
            metrics["l1_better"] = o.l1_error < o.l2_error;

            std::ostringstream recon, trade, conv;
            recon << "index,x_in,x_l1,x_l2\n";
            for (Index i = 0; i < o.x_in.size(); ++i)
                recon << i + 1 << ',' << fmt(o.x_in(i)) << ',' << fmt(o.x_l1(i)) << ',' << fmt(o.l2.x(i)) << '\n';
            trade << "method,step,l1norm,discrepancy\n";
            for (const auto& n : o.path)
                trade << "homotopy," << n.counter << ',' << fmt(l1_norm(n.x)) << ',' << fmt(discrepancy(n.misfit))
                      << '\n';
            for (std::size_t k = 0; k < o.alw_curve.size(); ++k)
                trade << "alw," << k << ',' << fmt(o.alw_curve[k].first) << ',' << fmt(o.alw_curve[k].second) << '\n';
            conv << "method,step,error\n";
            for (const auto& n : o.path) conv << "homotopy," << n.counter << ',' << fmt(relative_error(n.x, o.x_l1)) << '\n';
            for (std::size_t k = 0; k < o.tlw_errors.size(); ++k) conv << "tlw," << k << ',' << fmt(o.tlw_errors[k]) << '\n';
            for (std::size_t k = 0; k < o.alw_errors.size(); ++k) conv << "alw," << k << ',' << fmt(o.alw_errors[k]) << '\n';

            write_outputs(args.out, {{"metrics.json", metrics.dump(2) + "\n"},
                                     {"reconstruction.csv", recon.str()},
                                     {"tradeoff.csv", trade.str()},
                                     {"convergence.csv", conv.str()}});
            out << metrics.dump(2) << '\n';
            return kSuccess;
        }
        if (args.kind == "scaling") {
            const ScalingOutcome o = run_scaling(args, &err);
            for (const auto& w : o.warnings) err << "warning: " << w << '\n';
            std::ostringstream csv;
            csv << "counter,time,support_size,fixed_point_residual\n";
            double worst = 0.0;
            bool ahead = true;
            for (const auto& r : o.records) {
                csv << r.counter << ',' << fmt(r.time) << ',' << r.support_size << ',' << fmt(r.fixed_point_residual)
                    << '\n';
                worst = std::max(worst, r.fixed_point_residual);
                ahead = ahead && r.counter >= r.support_size;
            }
            nlohmann::ordered_json summary;
            summary["seed"] = args.seed;
            summary["m"] = args.m;
            summary["n"] = args.n;
            summary["nodes"] = o.records.empty() ? 0 : o.records.back().counter;
            summary["support_size"] = o.records.empty() ? 0 : o.records.back().support_size;
            summary["seconds"] = o.records.empty() ? 0.0 : o.records.back().time;
            summary["max_fixed_point_residual"] = worst;
            summary["counter_at_least_support"] = ahead;
            write_outputs(args.out, {{"numeric.csv", csv.str()}, {"summary.json", summary.dump(2) + "\n"}});
            out << summary.dump(2) << '\n';
            return kSuccess;
        }
        err << "usage error: unknown experiment '" << args.kind << "' (expected regression or scaling)\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace l1path::cli
