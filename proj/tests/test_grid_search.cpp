#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "tropic/grid_search.hpp"

using namespace tropic;
using testing_support::O;
using mat = matrix<max_plus>;

TEST_CASE("grid minimum span of the worked instance") {
    const auto g = grid_min_span(testing_support::sample_c(),
                                 testing_support::sample_d(), grid_spec{-8, 0, 1});
    REQUIRE(g.feasible);
    CHECK(g.best == 2);
    // the argmin is feasible and attains the minimum
    const mat x = mat::column({static_cast<double>(g.argmin[0]),
                               static_cast<double>(g.argmin[1]),
                               static_cast<double>(g.argmin[2])});
    CHECK(leq_entrywise(testing_support::sample_d() * x, x));
    CHECK(span(testing_support::sample_c() * x) == value<max_plus>(2));

    const auto unc = grid_min_span(testing_support::sample_c(), std::nullopt,
                                   grid_spec{-8, 0, 1});
    REQUIRE(unc.feasible);
    CHECK(unc.best == 0);
}

TEST_CASE("identity lags give zero span at constant vectors") {
    const auto g = grid_min_span(mat::identity(3), std::nullopt, grid_spec{-3, 3, 1});
    REQUIRE(g.feasible);
    CHECK(g.best == 0);
    CHECK(g.argmin == std::vector<long long>{-3, -3, -3});  // lexicographic tie-break
}

TEST_CASE("results are deterministic") {
    const auto a = grid_min_span(testing_support::sample_c(),
                                 testing_support::sample_d(), grid_spec{-8, 0, 1});
    const auto b = grid_min_span(testing_support::sample_c(),
                                 testing_support::sample_d(), grid_spec{-8, 0, 1});
    CHECK(a.argmin == b.argmin);
    CHECK(a.best == b.best);
}

TEST_CASE("grid cap and integrality are enforced") {
    CHECK_THROWS_AS(grid_min_span(mat::identity(4), std::nullopt,
                                  grid_spec{-100, 100, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(grid_min_span(mat::from_rows({{0.5}}), std::nullopt,
                                  grid_spec{-3, 3, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(grid_min_span(mat::identity(2), std::nullopt,
                                  grid_spec{3, -3, 1}),
                    std::invalid_argument);
}

TEST_CASE("a start-start gap wider than the box is infeasible on the grid") {
    mat d(2, 2);
    d.set(0, 1, 40);  // second start must precede the first by 40
    const auto g = grid_min_span(mat::identity(2), d, grid_spec{-15, 15, 1});
    CHECK_FALSE(g.feasible);
    CHECK(cycle_trace(d) == value<max_plus>::zero());  // analytically feasible
}

TEST_CASE("grid objective on the trivial problems") {
    auto sym = [](const mat& a) {
        return span_problem<max_plus>{a, a, mat::ones(a.rows(), 1),
                                      mat::ones(a.rows(), 1)};
    };
    const auto id = grid_min_objective(sym(mat::identity(2)), grid_spec{-3, 3, 1});
    REQUIRE(id.feasible);
    CHECK(id.best == 0);

    const auto flip = grid_min_objective(sym(mat::from_rows({{0, 2}, {2, 0}})),
                                         grid_spec{-5, 5, 1});
    REQUIRE(flip.feasible);
    CHECK(flip.best == 0);

    // a box that misses every optimizer still respects the lower bound
    const span_problem<max_plus> skew{mat::identity(2), mat::identity(2),
                                      mat::column({0, 10}), mat::column({0, 10})};
    const auto sol = solve(skew);
    CHECK(sol.direction == mat::column({0, 10}));
    const auto off = grid_min_objective(skew, grid_spec{0, 3, 1});
    REQUIRE(off.feasible);
    CHECK(off.best > sol.delta.raw());

    const auto on = grid_min_objective(skew, grid_spec{-2, 12, 1});
    REQUIRE(on.feasible);
    CHECK(static_cast<double>(on.best) == sol.delta.raw());
}

TEST_CASE("step sizes pick a sparser lattice") {
    const auto g = grid_min_span(testing_support::sample_c(),
                                 testing_support::sample_d(), grid_spec{-8, 0, 2});
    REQUIRE(g.feasible);
    for (const long long v : g.argmin) CHECK((v + 8) % 2 == 0);
}
