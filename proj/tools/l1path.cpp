#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

void add_problem_flags(CLI::App* app, l1path::cli::ProblemArgs& p) {
    app->add_option("--matrix", p.matrix, "matrix file (CSV or JSON)")->required();
    app->add_option("--data", p.data, "data vector file")->required();
    app->add_option("--weights", p.weights, "weight vector file (default all ones)");
    app->add_option("--backend", p.backend, "arithmetic")->check(CLI::IsMember({"rational", "float"}));
}

} // namespace

int main(int argc, char** argv) {
    using namespace l1path::cli;
    CLI::App app{"Weighted l1-penalized least squares: exact homotopy path and iterative solvers"};
    app.require_subcommand(1);

    SolveArgs solve;
    std::string solve_out;
    auto* s = app.add_subcommand("solve", "compute a minimizer and emit per-node records");
    add_problem_flags(s, solve.problem);
    s->add_option("--algorithm", solve.algorithm)->check(CLI::IsMember({"homotopy", "tlw", "plw", "psd", "alw", "asd"}));
    s->add_option("--stop-penalty", solve.stop_penalty, "homotopy: stop at this penalty");
    s->add_option("--stop-l1norm", solve.stop_l1norm, "homotopy: stop at this l1 norm");
    s->add_option("--stop-discrepancy", solve.stop_discrepancy, "homotopy: stop at this ||Kx-y||^2");
    s->add_option("--stop-nonzeros", solve.stop_nonzeros, "homotopy: stop at this many nonzeros");
    s->add_option("--max-iters", solve.max_iters, "node or iteration limit");
    s->add_option("--max-seconds", solve.max_seconds, "wall-clock limit");
    s->add_option("--lambda", solve.lambda, "tlw: penalty");
    s->add_option("--radius", solve.radius, "plw, psd, alw, asd: l1 ball radius");
    s->add_option("--numsteps", solve.numsteps, "alw, asd: number of steps")->check(CLI::PositiveNumber);
    s->add_option("--scale", solve.scale, "multiply K and y by this factor first");
    s->add_option("--record", solve.record, "comma-separated fields, one record per node or iterate");
    s->add_option("--format", solve.format)->check(CLI::IsMember({"csv", "jsonl"}));
    s->add_option("--verbose", solve.verbose)->check(CLI::Range(0, 2));
    s->add_option("--out", solve_out, "output file (default stdout)");

    CheckArgs check;
    auto* c = app.add_subcommand("check", "certify a list of path nodes (lambda, x per row)");
    add_problem_flags(c, check.problem);
    c->add_option("--path", check.path, "node file")->required();

    ExperimentArgs exp;
    auto* e = app.add_subcommand("experiment", "toy regression or scaling experiment");
    e->add_option("kind", exp.kind, "regression or scaling")->check(CLI::IsMember({"regression", "scaling"}));
    e->add_option("--seed", exp.seed);
    e->add_option("--m", exp.m);
    e->add_option("--n", exp.n);
    e->add_option("--sparsity", exp.sparsity);
    e->add_option("--noise", exp.noise, "||e|| / ||K x_in||");
    e->add_flag("--identity", exp.identity, "use K = I (requires m = n)");
    e->add_option("--iterations", exp.iterations, "iterations for the convergence curves");
    e->add_option("--numsteps", exp.numsteps, "adaptive Landweber steps for the trade-off curve");
    e->add_option("--stop-nonzeros", exp.stop_nonzeros, "scaling: support size to stop at");
    e->add_option("--range", exp.range, "scaling: entries uniform on [-range, range]");
    e->add_option("--verbose", exp.verbose)->check(CLI::Range(0, 2));
    e->add_option("--out", exp.out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int rc = app.exit(err);
        return rc == 0 ? 0 : kUsage;
    }

    if (*s) {
        if (solve_out.empty()) return cmd_solve(solve, std::cout, std::cerr);
        std::ofstream file(solve_out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write '" << solve_out << "'\n";
            return kFailure;
        }
        return cmd_solve(solve, file, std::cerr);
    }
    if (*c) return cmd_check(check, std::cout, std::cerr);
    return cmd_experiment(exp, std::cout, std::cerr);
}
