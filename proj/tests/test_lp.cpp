#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainmod/flatnorm.hpp"
#include "chainmod/gen.hpp"
#include "chainmod/lp.hpp"
#include "chainmod/rng.hpp"

using namespace chainmod;

TEST_CASE("solve_lp: tiny known optimum") {
    // min x + 2y s.t. x + y = 3, 0 ≤ x ≤ 2, 0 ≤ y ≤ 2 → x = 2, y = 1.
    LinearProgram lp;
    lp.a = {{1, 1}};
    lp.b = {3};
    lp.c = {1, 2};
    lp.upper = {2, 2};
    auto sol = solve_lp(lp);
    CHECK(sol.value == 4);
    CHECK(sol.x[0] == 2);
    CHECK(sol.x[1] == 1);
}

TEST_CASE("solve_lp: rational data stays exact") {
    // min (1/3)x + (1/7)y s.t. x + y = 1 → all weight on y.
    LinearProgram lp;
    lp.a = {{1, 1}};
    lp.b = {1};
    lp.c = {Rational(1, 3), Rational(1, 7)};
    lp.upper = {5, 5};
    auto sol = solve_lp(lp);
    CHECK(sol.value == Rational(1, 7));
    CHECK(sol.x[1] == 1);
}

TEST_CASE("solve_lp: negative rhs rows are handled") {
    // min x + y s.t. x − y = −2, bounds 0..5 → x = 0, y = 2.
    LinearProgram lp;
    lp.a = {{1, -1}};
    lp.b = {-2};
    lp.c = {1, 1};
    lp.upper = {5, 5};
    auto sol = solve_lp(lp);
    CHECK(sol.value == 2);
    CHECK(sol.x[0] == 0);
    CHECK(sol.x[1] == 2);
}

TEST_CASE("solve_lp: infeasible input throws") {
    LinearProgram lp;
    lp.a = {{1, 0}};
    lp.b = {10};
    lp.c = {1, 1};
    lp.upper = {2, 2};
    CHECK_THROWS_AS(solve_lp(lp), Error);
}

TEST_CASE("solve_lp: degenerate ties terminate (Bland)") {
    LinearProgram lp;
    lp.a = {{1, 1, 0}, {1, 0, 1}};
    lp.b = {1, 1};
    lp.c = {-1, 0, 0};
    lp.upper = {1, 1, 1};
    auto sol = solve_lp(lp);
    CHECK(sol.value == -1);
    CHECK(sol.x[0] == 1);
}

TEST_CASE("flat_norm_relaxation: single edge instances") {
    std::vector<Point> points = {{Rational(0)}, {Rational(3)}};
    auto complex = build_complex(points, {{0, 1}});
    IntegerChain t(complex, 0);
    t.set(0, -1);
    t.set(1, 1);
    CHECK(flat_norm_relaxation(t, 3).value == 2);

    std::vector<Point> short_points = {{Rational(0)}, {Rational(1, 2)}};
    auto short_complex = build_complex(short_points, {{0, 1}});
    IntegerChain u(short_complex, 0);
    u.set(0, -1);
    u.set(1, 1);
    CHECK(flat_norm_relaxation(u, 3).value == Rational(1, 2));
}

TEST_CASE("flat_norm_relaxation requires rational lengths") {
    auto complex =
        build_complex({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}},
                      {{0, 1}});
    IntegerChain t(complex, 0);
    t.set(0, 1);
    CHECK_THROWS_AS(flat_norm_relaxation(t, 2), ParamOutOfRange);
}

TEST_CASE("property: relaxation matches the integer oracle exactly") {
    // Incidence matrices of directed graphs are totally unimodular, and the
    // box rows keep them so: the LP optimum must equal the integer optimum.
    SplitMix64 rng(77);
    for (int round = 0; round < 40; ++round) {
        RandomChainParams params;
        params.vertices = 2 + static_cast<int>(rng.below(5));
        params.edges = 1 + static_cast<int>(rng.below(7));
        params.rational_lengths = true;
        auto fixture = gen_random_1chain(params, rng.next());
        IntegerChain t(fixture.complex, 0);
        for (std::size_t v = 0; v < fixture.complex->vertex_count(); ++v)
            t.set(static_cast<int>(v), rng.range(-2, 2));
        Coeff bound = default_bound(t, 0);
        Rational lp_value = flat_norm_relaxation(t, bound).value;
        Rational ip_value = *flat_norm(t, bound).exact_value;
        CHECK(lp_value == ip_value);
    }
}
