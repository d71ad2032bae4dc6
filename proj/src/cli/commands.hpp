#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "l1path/errors.hpp"

namespace l1path::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Bad flag combination; maps to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

struct ProblemArgs {
    std::string matrix;
    std::string data;
    std::string weights;
    std::string backend = "rational";
};

struct SolveArgs {
    ProblemArgs problem;
    std::string algorithm = "homotopy";
    std::optional<std::string> stop_penalty;
    std::optional<std::string> stop_l1norm;
    std::optional<std::string> stop_discrepancy;
    std::optional<std::size_t> stop_nonzeros;
    std::optional<std::size_t> max_iters;
    std::optional<double> max_seconds;
    /// penalty for tlw
    std::optional<std::string> lambda;
    /// radius for plw, psd, alw, asd
    std::optional<std::string> radius;
    std::size_t numsteps = 10;
    /// multiplies K and y before solving
    std::optional<std::string> scale;
    std::optional<std::string> record;
    std::string format = "csv";
    int verbose = 0;
};

struct CheckArgs {
    ProblemArgs problem;
    std::string path;
};

struct ExperimentArgs {
    std::string kind = "regression";
    std::uint64_t seed = 1;
    long m = 30;
    long n = 100;
    long sparsity = 10;
    double noise = 0.03;
    bool identity = false;
    std::size_t iterations = 100;
    std::size_t numsteps = 10;
    std::size_t stop_nonzeros = 60;
    double range = 3.0;
    /// output directory; nothing is written when empty
    std::string out;
    int verbose = 0;
};

/// Each command writes its report to `out`, diagnostics to `err`, and
/// returns the process exit code. Library errors are reported and mapped to 1.
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_experiment(const ExperimentArgs& args, std::ostream& out, std::ostream& err);

} // namespace l1path::cli
