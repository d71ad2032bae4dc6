#include <doctest.h>

#include "cli/io.hpp"
#include "helpers.hpp"
#include "l1path/path_tools.hpp"

using namespace testing;
using l1path::Certificate;
using l1path::Path;

namespace {

Path<Rational> exact_path(const Problem<Rational>& p) { return Path<Rational>{l1path::solution_path(p)}; }

Path<Rational> load_path(const Problem<Rational>& p, const std::string& file) {
    const auto rows = l1path::cli::read_table(std::string(L1PATH_TEST_DATA) + "/" + file);
    std::vector<Rational> lambdas;
    std::vector<Vector<Rational>> xs;
    for (const auto& row : rows) {
        lambdas.push_back(Rational::parse(row.front()));
        xs.push_back(l1path::cli::to_vector<Rational>({row.begin() + 1, row.end()}, file));
    }
    return Path<Rational>::from_points(p, lambdas, xs);
}

} // namespace

TEST_CASE("interpolation") {
    const auto path = exact_path(identity_example());
    CHECK(l1path::interpolate(path, Rational(5)) == vec({7, -3, 0, 0, 0}));
    CHECK(l1path::interpolate(path, q("13/2")) == qvec({"11/2", "-3/2", "0", "0", "0"}));
    CHECK(l1path::verify_kkt(identity_example(), l1path::interpolate(path, q("13/2")), q("13/2")));
    CHECK(l1path::interpolate(path, Rational(12)) == vec({0, 0, 0, 0, 0}));
    CHECK(l1path::interpolate(path, Rational(0)) == vec({12, -8, 5, 1, 2}));
    for (const auto& node : path.nodes) CHECK(l1path::interpolate(path, node.lambda) == node.x);
    CHECK_THROWS_AS(l1path::interpolate(path, Rational(13)), l1path::RangeError);
    CHECK_THROWS_AS(l1path::interpolate(path, Rational(-1)), l1path::RangeError);
    CHECK_THROWS_AS(l1path::interpolate(Path<Rational>{}, Rational(0)), l1path::RangeError);

    const auto tie = exact_path(tie_example());
    CHECK(l1path::interpolate(tie, Rational(100)) == qvec({"0", "0", "23/12"}));
}

TEST_CASE("certification of the tie example") {
    const auto p = tie_example();
    CHECK(l1path::check_minimizer_list(p, exact_path(p)) == Certificate::True);
    CHECK(l1path::check_minimizer_list(p, load_path(p, "tie_path.csv")) == Certificate::True);

    const auto matlab = l1path::check_minimizer_list_report(p, load_path(p, "tie_matlab_path.csv"));
    CHECK(matlab.result == Certificate::False);
    CHECK(matlab.failing_node == 1);

    // the SparseLab breakpoint alone, at the penalty read off its remainder
    const Vector<Rational> sl = qvec({"43/8", "0", "47031/5000"});
    const Vector<Rational> r = l1path::remainder(p, sl);
    const Rational lam = l1path::penalty_from_remainder(r, p.w);
    CHECK_FALSE(l1path::verify_kkt(p, sl, lam));
    CHECK(r(0).sign() != sl(0).sign());
    CHECK(l1path::check_minimizer_list(p, Path<Rational>::from_points(p, {lam}, {sl})) == Certificate::False);
}

TEST_CASE("certification of emitted paths") {
    for (const auto& p : {identity_example(), tie_example(), removal_example(), weighted_example(),
                          weighted_table_data()})
        CHECK(l1path::check_minimizer_list(p, exact_path(p)) == Certificate::True);
}

TEST_CASE("certification rejects broken paths") {
    const auto p = identity_example();
    auto path = exact_path(p);

    // skipping a breakpoint bends the segment away from the true path
    Path<Rational> skipped = path;
    skipped.nodes.erase(skipped.nodes.begin() + 2);
    const auto rep = l1path::check_minimizer_list_report(p, skipped);
    CHECK(rep.result == Certificate::False);
    CHECK(rep.failing_node == 1);

    Path<Rational> moved = path;
    moved.nodes[3] = l1path::make_node(p, vec({10, -6, 3, 0, 1}), Rational(2), 3);
    CHECK(l1path::check_minimizer_list(p, moved) == Certificate::False);

    // a component that flips sign inside a segment
    const Problem<Rational> one(mat({{1}}), vec({1}));
    const auto flip = Path<Rational>::from_points(one, {Rational(2), Rational(0)}, {vec({-1}), vec({1})});
    const auto frep = l1path::check_minimizer_list_report(one, flip);
    CHECK(frep.result == Certificate::False);
    CHECK(frep.reason.find("changes sign") != std::string::npos);
}

TEST_CASE("certification is indeterminate on malformed or inexact input") {
    const auto p = identity_example();
    auto path = exact_path(p);

    Path<Rational> dup = path;
    dup.nodes.insert(dup.nodes.begin() + 1, dup.nodes[1]);
    CHECK(l1path::check_minimizer_list(p, dup) == Certificate::Indeterminate);

    Path<Rational> reversed = path;
    std::reverse(reversed.nodes.begin(), reversed.nodes.end());
    CHECK(l1path::check_minimizer_list(p, reversed) == Certificate::Indeterminate);

    CHECK(l1path::check_minimizer_list(p, Path<Rational>{}) == Certificate::Indeterminate);

    Path<Rational> ragged = path;
    ragged.nodes[1].x = vec({4, 0, 0});
    CHECK(l1path::check_minimizer_list(p, ragged) == Certificate::Indeterminate);

    Path<Rational> wrong;
    wrong.nodes.push_back(l1path::make_node(tie_example(), vec({0, 0, 0}), Rational(192)));
    CHECK_THROWS_AS(l1path::check_minimizer_list(p, wrong), l1path::DimensionError);

    const Problem<double> f(Matrix<double>::Identity(2, 2), vec<double>({1, 2}));
    const Path<double> fpath{l1path::solution_path(f, l1path::StoppingRule<double>::penalty(0.5))};
    const auto frep = l1path::check_minimizer_list_report(f, fpath);
    CHECK(frep.result == Certificate::Indeterminate);
    CHECK(frep.reason == "inexact input");
}

TEST_CASE("trade-off curve") {
    const auto curve = l1path::trade_off_curve(exact_path(identity_example()));
    std::vector<Rational> norms, disc;
    for (const auto& [n, d] : curve) {
        norms.push_back(n);
        disc.push_back(d);
    }
    CHECK(norms == std::vector<Rational>{Rational(0), Rational(4), Rational(10), Rational(19), Rational(23),
                                         Rational(28)});
    CHECK(disc == std::vector<Rational>{Rational(238), Rational(158), Rational(80), Rational(17), Rational(5),
                                        Rational(0)});

    const auto p = identity_example();
    const auto single = Path<Rational>::from_points(p, {Rational(12)}, {vec({0, 0, 0, 0, 0})});
    const auto c1 = l1path::trade_off_curve(single);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].first == Rational(0));
    CHECK(c1[0].second == p.y.squaredNorm());

    const auto rc = l1path::trade_off_curve(exact_path(removal_example()));
    REQUIRE(rc.size() == 6);
    for (std::size_t k = 1; k < rc.size(); ++k) CHECK(rc[k].second < rc[k - 1].second);
}
