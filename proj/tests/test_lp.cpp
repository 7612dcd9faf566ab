#include <doctest.h>

#include <algorithm>

#include "chelly/errors.hpp"
#include "chelly/lp.hpp"
#include "chelly/polyhedra.hpp"
#include "test_util.hpp"

using namespace chelly;
using chelly::testing::q;
using chelly::testing::vec;

TEST_CASE("maximize x subject to x <= 3")
{
    LpProblem lp;
    lp.num_vars = 1;
    lp.objective = vec({1});
    lp.constraints = {{vec({1}), Relation::LessEqual, q(3)}};
    auto out = lp_solve(lp);
    REQUIRE(std::holds_alternative<LpOptimal>(out));
    const auto& opt = std::get<LpOptimal>(out);
    CHECK(opt.point == vec({3}));
    CHECK(opt.value == 3);
    CHECK(opt.duals == vec({1}));
}

TEST_CASE("contradictory pair yields the (1,1) Farkas vector")
{
    LpProblem lp;
    lp.num_vars = 1;
    lp.constraints = {{vec({1}), Relation::LessEqual, q(0)},
                      {vec({-1}), Relation::LessEqual, q(-1)}};
    auto out = lp_solve(lp);
    REQUIRE(is_infeasible(out));
    const auto& y = std::get<LpInfeasible>(out).farkas;
    CHECK(y == vec({1, 1}));
    CHECK(farkas_certifies(lp.constraints, y));
}

TEST_CASE("the facets of a 3-simplex have no common point")
{
    const std::vector<Vector> v{vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})};
    std::vector<Polyhedron> facets;
    for (std::size_t skip = 0; skip < 4; ++skip) {
        std::vector<Vector> pts;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip)
                pts.push_back(v[i]);
        facets.push_back(Polyhedron::from_vertices(pts));
    }
    std::vector<const Polyhedron*> refs;
    for (const auto& f : facets)
        refs.push_back(&f);
    LpProblem lp = intersection_problem(refs);
    auto out = lp_solve(lp);
    REQUIRE(is_infeasible(out));
    // Aggregate explicitly: 0 . x <= c with c < 0.
    const auto& y = std::get<LpInfeasible>(out).farkas;
    Vector aggregate = zero_vector(3);
    Rational constant(0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        axpy(aggregate, y[i], lp.constraints[i].coeffs);
        constant += y[i] * lp.constraints[i].rhs;
        if (lp.constraints[i].relation == Relation::LessEqual)
            CHECK(y[i] >= 0);
    }
    CHECK(is_zero(aggregate));
    CHECK(constant < 0);
}

TEST_CASE("unbounded objective returns a certified ray")
{
    LpProblem lp;
    lp.num_vars = 2;
    lp.objective = vec({1, 1});
    lp.constraints = {{vec({-1, 0}), Relation::LessEqual, q(0)},
                      {vec({1, -1}), Relation::Equal, q(2)}};
    auto out = lp_solve(lp);
    REQUIRE(std::holds_alternative<LpUnbounded>(out));
    CHECK(certifies(lp, out));
    CHECK(dot(lp.objective, std::get<LpUnbounded>(out).ray) > 0);
}

TEST_CASE("no constraints and no objective is feasible")
{
    LpProblem lp;
    lp.num_vars = 3;
    auto out = lp_solve(lp);
    REQUIRE(std::holds_alternative<LpFeasible>(out));
    CHECK(std::get<LpFeasible>(out).point == zero_vector(3));
}

TEST_CASE("variable bounds participate in certificates")
{
    LpProblem lp;
    lp.num_vars = 2;
    lp.objective = vec({1, 2});
    lp.bounds = {{q(0), q(5)}, {q(-1), q(1, 2)}};
    lp.constraints = {{vec({1, 1}), Relation::LessEqual, q(4)}};
    auto out = lp_solve(lp);
    REQUIRE(std::holds_alternative<LpOptimal>(out));
    CHECK(std::get<LpOptimal>(out).value == q(9, 2));
    CHECK(std::get<LpOptimal>(out).duals.size() == expanded_rows(lp).size());

    lp.bounds[0].lower = q(6);
    auto bad = lp_solve(lp);
    REQUIRE(is_infeasible(bad));
    CHECK(std::get<LpInfeasible>(bad).farkas.size() == expanded_rows(lp).size());
}

TEST_CASE("dimension mismatches are structured errors")
{
    LpProblem lp;
    lp.num_vars = 2;
    lp.constraints = {{vec({1}), Relation::LessEqual, q(1)}};
    CHECK_THROWS_AS(lp_solve(lp), DimensionError);
    lp.constraints = {};
    lp.objective = vec({1, 2, 3});
    CHECK_THROWS_AS(lp_solve(lp), DimensionError);
}

TEST_CASE("degenerate equalities and redundant rows")
{
    LpProblem lp;
    lp.num_vars = 2;
    lp.objective = vec({1, 0});
    lp.constraints = {{vec({1, 1}), Relation::Equal, q(1)},
                      {vec({2, 2}), Relation::Equal, q(2)},
                      {vec({1, 0}), Relation::LessEqual, q(1)},
                      {vec({-1, 0}), Relation::LessEqual, q(0)},
                      {vec({0, -1}), Relation::LessEqual, q(0)}};
    auto out = lp_solve(lp);
    REQUIRE(std::holds_alternative<LpOptimal>(out));
    CHECK(std::get<LpOptimal>(out).value == 1);
    lp.constraints[1].rhs = 3;
    CHECK(is_infeasible(lp_solve(lp)));
}

// Oracle: brute-force vertex enumeration of a bounded polytope. The LP optimum
// of a bounded feasible LP is attained at a vertex; an empty vertex list means
// the (boxed) system is infeasible.
TEST_CASE("random bounded LPs agree with vertex enumeration")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + trial % 3;
        std::vector<Halfspace> rows;
        for (std::size_t i = 0; i < n; ++i) {
            rows.emplace_back(unit_vector(n, i), q(chelly::testing::draw(rng, 1, 6)));
            rows.emplace_back(negate(unit_vector(n, i)), q(chelly::testing::draw(rng, 0, 6)));
        }
        const int extra = static_cast<int>(chelly::testing::draw(rng, 0, 4));
        for (int e = 0; e < extra; ++e) {
            Vector a = chelly::testing::random_vector(rng, n, -3, 3);
            if (is_zero(a))
                continue;
            rows.emplace_back(a, q(chelly::testing::draw(rng, -4, 6)));
        }
        Polyhedron p(n, rows);
        Vector c = chelly::testing::random_vector(rng, n, -4, 4);

        LpProblem lp;
        lp.num_vars = n;
        lp.objective = c;
        lp.constraints = constraint_rows(p);
        auto out = lp_solve(lp);
        CHECK(certifies(lp, out));

        auto verts = enumerate_vertices(p);
        if (verts.empty()) {
            CHECK(is_infeasible(out));
            continue;
        }
        REQUIRE(std::holds_alternative<LpOptimal>(out));
        Rational best = dot(c, verts.front());
        for (const auto& v : verts)
            best = std::max(best, Rational(dot(c, v)));
        CHECK(std::get<LpOptimal>(out).value == best);
        CHECK(p.contains(std::get<LpOptimal>(out).point));
    }
}

TEST_CASE("lp_solve is deterministic")
{
    LpProblem lp;
    lp.num_vars = 3;
    lp.objective = vec({1, 1, 1});
    lp.constraints = {{vec({1, 2, 0}), Relation::LessEqual, q(4)},
                      {vec({0, 1, 3}), Relation::LessEqual, q(5)},
                      {vec({1, 0, 1}), Relation::LessEqual, q(3)},
                      {vec({-1, 0, 0}), Relation::LessEqual, q(0)},
                      {vec({0, -1, 0}), Relation::LessEqual, q(0)},
                      {vec({0, 0, -1}), Relation::LessEqual, q(0)}};
    auto a = lp_solve(lp);
    auto b = lp_solve(lp);
    REQUIRE(std::holds_alternative<LpOptimal>(a));
    CHECK(std::get<LpOptimal>(a).point == std::get<LpOptimal>(b).point);
    CHECK(std::get<LpOptimal>(a).duals == std::get<LpOptimal>(b).duals);
}
