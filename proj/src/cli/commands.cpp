#include "cli/commands.hpp"

#include "cli/io.hpp"
#include "cli/records.hpp"
#include "l1path/path_tools.hpp"

namespace l1path::cli {

namespace {

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::Csv;
    if (name == "jsonl") return Format::Jsonl;
    throw UsageError("unknown format '" + name + "' (expected csv or jsonl)");
}

template <class T>
T parse_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_scalar<T>(text);
    } catch (const ParseError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

void report_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
    for (const auto& w : warnings) err << "warning: " << w << '\n';
}

class Emitter {
public:
    Emitter(std::vector<Field> fields, Format format, bool all, std::ostream& out)
        : fields_(std::move(fields)), format_(format), all_(all), out_(out) {}

    template <class T>
    nlohmann::ordered_json make(const Snapshot<T>& s, const Vector<T>& w) const {
        return record_json(fields_, s, w);
    }

    void emit(const std::vector<nlohmann::ordered_json>& records) const {
        out_ << header_line(fields_, format_);
        if (records.empty()) return;
        if (all_) {
            for (const auto& r : records) out_ << format_record(fields_, r, format_);
        } else {
            out_ << format_record(fields_, records.back(), format_);
        }
    }

private:
    std::vector<Field> fields_;
    Format format_;
    bool all_;
    std::ostream& out_;
};

template <class T>
int run_homotopy(const SolveArgs& args, const Problem<T>& problem, const Emitter& emitter, std::ostream& err) {
    int specific = 0;
    std::optional<StoppingRule<T>> rule;
    if (args.stop_penalty) {
        ++specific;
        rule = StoppingRule<T>::penalty(parse_flag<T>("--stop-penalty", *args.stop_penalty));
    }
    if (args.stop_l1norm) {
        ++specific;
        rule = StoppingRule<T>::max_l1_norm(parse_flag<T>("--stop-l1norm", *args.stop_l1norm));
    }
    if (args.stop_discrepancy) {
        ++specific;
        rule = StoppingRule<T>::min_discrepancy(parse_flag<T>("--stop-discrepancy", *args.stop_discrepancy));
    }
    if (args.stop_nonzeros) {
        ++specific;
        rule = StoppingRule<T>::max_nonzero(*args.stop_nonzeros);
    }
    if (specific > 1) throw UsageError("at most one of --stop-penalty, --stop-l1norm, --stop-discrepancy, --stop-nonzeros");
    if (args.lambda || args.radius) throw UsageError("--lambda and --radius apply to the iterative algorithms only");
    if (!rule) rule = StoppingRule<T>::penalty(T(0));

    HomotopyOptions opts;
    opts.verbose = args.verbose;
    opts.log = &err;
    opts.node_limit = args.max_iters;
    opts.time_limit = args.max_seconds;

    auto result = find_minimizer(
        problem, *rule, [&](const PathNode<T>& n) { return emitter.make(snapshot(n), problem.w); }, opts);
    if (args.verbose == 0) report_warnings(result.warnings, err);
    emitter.emit(*result.collected);
    return kSuccess;
}

template <class T>
int run_iterative(const SolveArgs& args, const Problem<T>& problem, const Emitter& emitter, std::ostream& err) {
    if (args.stop_penalty || args.stop_l1norm || args.stop_discrepancy || args.stop_nonzeros)
        throw UsageError("the --stop-* flags apply to the homotopy algorithm only; use --max-iters or --max-seconds");

    IterOptions<T> opts;
    if (args.max_iters || args.max_seconds) {
        opts.stop = [&](const IterationState<T>& s) {
            return (args.max_iters && s.counter >= *args.max_iters) ||
                   (args.max_seconds && s.elapsed >= *args.max_seconds);
        };
    }
    auto collect = [&](const IterationState<T>& s) {
        if (args.verbose > 0) {
            err << "iterate " << s.counter << ": penalty = " << format_scalar(s.penalty)
                << ", l1 norm = " << format_scalar(l1_norm(s.x)) << '\n';
            if (args.verbose >= 2) err << "  x = " << detail::format_vector(s.x) << '\n';
        }
        return emitter.make(snapshot(s), problem.w);
    };

    const std::string& alg = args.algorithm;
    if (alg == "tlw") {
        if (!args.lambda) throw UsageError("tlw requires --lambda");
        if (args.radius) throw UsageError("tlw takes --lambda, not --radius");
        const T lambda = parse_flag<T>("--lambda", *args.lambda);
        emitter.emit(*thresholded_landweber(problem, lambda, opts, collect).collected);
        return kSuccess;
    }
    if (!args.radius) throw UsageError(alg + " requires --radius");
    if (args.lambda) throw UsageError(alg + " takes --radius, not --lambda");
    const T radius = parse_flag<T>("--radius", *args.radius);
    if (alg == "plw") emitter.emit(*projected_landweber(problem, radius, opts, collect).collected);
    else if (alg == "psd") emitter.emit(*projected_steepest_descent(problem, radius, opts, collect).collected);
    else if (alg == "alw") emitter.emit(*adaptive_landweber(problem, radius, args.numsteps, opts, collect).collected);
    else emitter.emit(*adaptive_steepest_descent(problem, radius, args.numsteps, opts, collect).collected);
    return kSuccess;
}

template <class T>
int solve_with(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    Problem<T> problem = load_problem<T>(args.problem.matrix, args.problem.data, args.problem.weights);
    if (args.scale) {
        const T c = parse_flag<T>("--scale", *args.scale);
        problem.K *= c;
        problem.y *= c;
    }
    const bool all = args.record.has_value();
    std::vector<Field> fields;
    if (all) {
        try {
            fields = parse_fields(*args.record);
        } catch (const ParseError& e) {
            throw UsageError(std::string("--record: ") + e.what());
        }
    } else {
        fields = {Field::Counter, Field::Penalty, Field::X};
    }
    const Emitter emitter(std::move(fields), parse_format(args.format), all, out);
    if (args.algorithm == "homotopy") return run_homotopy(args, problem, emitter, err);
    return run_iterative(args, problem, emitter, err);
}

bool is_known_algorithm(const std::string& a) {
    return a == "homotopy" || a == "tlw" || a == "plw" || a == "psd" || a == "alw" || a == "asd";
}

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const NonUniquePath& e) {
        err << "error: " << e.what();
        if (!e.indices().empty()) {
            err << " (indices";
            for (auto i : e.indices()) err << ' ' << i + 1;
            err << ')';
        }
        err << '\n';
        return kFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!is_known_algorithm(args.algorithm)) throw UsageError("unknown algorithm '" + args.algorithm + "'");
        if (args.verbose < 0 || args.verbose > 2) throw UsageError("--verbose must be 0, 1 or 2");
        if (args.problem.backend == "rational") return solve_with<Rational>(args, out, err);
        if (args.problem.backend == "float") return solve_with<double>(args, out, err);
        throw UsageError("unknown backend '" + args.problem.backend + "'");
    });
}

namespace {

bool parses_as_float(const std::vector<std::vector<std::string>>& rows) {
    try {
        for (const auto& row : rows)
            for (const auto& c : row) parse_scalar<double>(c);
        return true;
    } catch (const ParseError&) {
        return false;
    }
}

int report_indeterminate(std::ostream& out, const std::string& reason) {
    out << "Indeterminate: " << reason << '\n';
    return kUsage;
}

} // namespace

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const auto& pa = args.problem;
        if (pa.backend != "rational" && pa.backend != "float") throw UsageError("unknown backend '" + pa.backend + "'");
        if (pa.backend == "float") return report_indeterminate(out, "inexact input");

        const auto path_rows = read_table(args.path);
        std::optional<Problem<Rational>> problem;
        try {
            problem = load_problem<Rational>(pa.matrix, pa.data, pa.weights);
        } catch (const ParseError&) {
            // float-typed problem files are well formed but cannot be certified
            load_problem<double>(pa.matrix, pa.data, pa.weights);
            return report_indeterminate(out, "inexact input");
        }

        Path<Rational> path;
        try {
            std::vector<Rational> lambdas;
            std::vector<Vector<Rational>> xs;
            for (std::size_t k = 0; k < path_rows.size(); ++k) {
                const auto& row = path_rows[k];
                if (row.size() < 2) throw ParseError(args.path + ": row " + std::to_string(k + 1) + " needs lambda and x");
                lambdas.push_back(parse_scalar<Rational>(row.front()));
                xs.push_back(to_vector<Rational>({row.begin() + 1, row.end()}, args.path));
            }
            path = Path<Rational>::from_points(*problem, lambdas, xs);
        } catch (const ParseError&) {
            if (!parses_as_float(path_rows)) throw;
            return report_indeterminate(out, "inexact input");
        }

        const CertificateReport report = check_minimizer_list_report(*problem, path);
        switch (report.result) {
        case Certificate::True: out << "True\n"; return kSuccess;
        case Certificate::False: out << "False: " << report.reason << '\n'; return kFailure;
        case Certificate::Indeterminate: return report_indeterminate(out, report.reason);
        }
        return kFailure;
    });
}

} // namespace l1path::cli
