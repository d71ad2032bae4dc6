#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cli/commands.hpp"
#include "l1path/homotopy.hpp"
#include "l1path/iterative.hpp"

namespace l1path::cli {

struct TikhonovSolution {
    Vector<double> x;
    /// the l2 penalty; infinity when x = 0 already meets the target
    double alpha;
    double discrepancy;
};

/// Solves (K^T K + alpha I) x = K^T y with alpha bisected until
/// ||Kx - y||^2 matches `target` to relative 1e-10.
TikhonovSolution tikhonov_matching(const Matrix<double>& K, const Vector<double>& y, double target);

struct RegressionOutcome {
    Matrix<double> K;
    Vector<double> x_in;
    Vector<double> y;
    /// ||e||^2
    double target = 0.0;
    std::vector<PathNode<double>> path;
    Vector<double> x_l1;
    double lambda = 0.0;
    TikhonovSolution l2;
    double l1_error = 0.0;
    double l2_error = 0.0;
    /// 0.99 / ||K||, applied before the iterative runs
    double scale = 1.0;
    std::vector<double> tlw_errors;
    std::vector<double> alw_errors;
    /// (||x||_1, ||Kx - y||^2) of the short adaptive Landweber run
    std::vector<std::pair<double, double>> alw_curve;
    std::vector<std::string> warnings;
};

RegressionOutcome run_regression(const ExperimentArgs& args, std::ostream* log = nullptr);

struct ScalingRecord {
    std::size_t counter;
    double time;
    std::size_t support_size;
    double fixed_point_residual;
};

struct ScalingOutcome {
    std::vector<ScalingRecord> records;
    std::vector<std::string> warnings;
};

/// Uniform random problem, homotopy until the support reaches args.stop_nonzeros.
ScalingOutcome run_scaling(const ExperimentArgs& args, std::ostream* log = nullptr);

} // namespace l1path::cli
