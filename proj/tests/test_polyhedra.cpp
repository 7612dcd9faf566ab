#include <doctest.h>

#include <algorithm>

#include "chelly/errors.hpp"
#include "chelly/polyhedra.hpp"
#include "test_util.hpp"

using namespace chelly;
using chelly::testing::q;
using chelly::testing::vec;

namespace {

Polyhedron halfspace_set(Vector normal, Rational offset)
{
    const std::size_t d = normal.size();
    return Polyhedron(d, {Halfspace(std::move(normal), std::move(offset))});
}

Polyhedron plane_orthogonal_to(std::size_t axis, long level, std::size_t d)
{
    return Polyhedron(d, {}, {Hyperplane(unit_vector(d, axis), q(level))});
}

} // namespace

TEST_CASE("polyhedra_intersect examples")
{
    SUBCASE("two closed halfplanes meeting on a line")
    {
        std::vector<Polyhedron> sets{halfspace_set(vec({-1, 0}), q(0)), halfspace_set(vec({1, 0}), q(0))};
        auto cert = polyhedra_intersect(sets);
        REQUIRE(std::holds_alternative<PointCertificate>(cert));
        CHECK(std::get<PointCertificate>(cert).point.coords[0] == 0);
    }
    SUBCASE("disjoint intervals")
    {
        std::vector<Polyhedron> sets{Polyhedron::box(vec({0}), vec({1})), Polyhedron::box(vec({2}), vec({3}))};
        auto cert = polyhedra_intersect(sets);
        REQUIRE(std::holds_alternative<FarkasCertificate>(cert));
        std::vector<const Polyhedron*> refs{&sets[0], &sets[1]};
        CHECK(verify_intersection_certificate(refs, cert));
    }
    SUBCASE("rainbow triple of axis-orthogonal planes in R^3")
    {
        std::vector<Polyhedron> sets{plane_orthogonal_to(0, 2, 3), plane_orthogonal_to(1, -1, 3),
                                     plane_orthogonal_to(2, 7, 3)};
        auto cert = polyhedra_intersect(sets);
        REQUIRE(std::holds_alternative<PointCertificate>(cert));
        CHECK(std::get<PointCertificate>(cert).point.coords == vec({2, -1, 7}));
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(polyhedra_intersect(std::vector<Polyhedron>{}), InputError);
        std::vector<Polyhedron> mixed{Polyhedron::whole_space(2), Polyhedron::whole_space(3)};
        CHECK_THROWS_AS(polyhedra_intersect(mixed), DimensionError);
    }
}

// Oracle: fold the family pairwise (intersect, then test emptiness) after a
// random permutation; the tag must match the direct concatenated test.
TEST_CASE("intersection agrees with repeated pairwise folding")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t count = 1 + trial % 5;
        std::vector<Polyhedron> fam;
        for (std::size_t i = 0; i < count; ++i)
            fam.push_back(chelly::testing::random_polygon(rng, 0, 6, 3));
        auto cert = polyhedra_intersect(fam);
        std::vector<const Polyhedron*> refs;
        for (const auto& p : fam)
            refs.push_back(&p);
        CHECK(verify_intersection_certificate(refs, cert));

        std::vector<Polyhedron> shuffled = fam;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        Polyhedron folded = shuffled.front();
        for (std::size_t i = 1; i < shuffled.size(); ++i)
            folded = folded.intersect(shuffled[i]);
        CHECK(std::holds_alternative<PointCertificate>(cert) == !is_empty(folded));
    }
}

TEST_CASE("flat_crosses examples")
{
    auto diagonal = AffineFlat::line(vec({0, 0, 0}), vec({1, 1, 1}));
    CHECK(flat_crosses(diagonal, plane_orthogonal_to(0, 5, 3)));

    auto x_axis = AffineFlat::line(vec({0, 0}), vec({1, 0}));
    CHECK(!flat_crosses(x_axis, Polyhedron::box(vec({2, 2}), vec({3, 3}))));
    CHECK(flat_crosses(x_axis, Polyhedron::box(vec({2, 0}), vec({3, 3}))));

    auto plane = AffineFlat(Point{vec({0, 0, 0})}, {vec({1, 0, 0}), vec({0, 1, 0})});
    CHECK(flat_crosses(plane, Polyhedron::box(vec({5, 5, -1}), vec({6, 6, 1}))));
    CHECK(!flat_crosses(plane, Polyhedron::box(vec({5, 5, 1}), vec({6, 6, 2}))));

    CHECK_THROWS_AS(flat_crosses(x_axis, Polyhedron::whole_space(3)), DimensionError);
}

TEST_CASE("flat_crosses on points is exact membership")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        auto poly = chelly::testing::random_polygon(rng, 0, 5, 4);
        Vector p = chelly::testing::random_vector(rng, 2, -1, 6);
        CHECK(flat_crosses(AffineFlat::point(p), poly) == poly.contains(p));
    }
}

TEST_CASE("the interval fast path for lines matches the general LP")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        auto poly = chelly::testing::random_polygon(rng, 0, 6, 3);
        Vector base = chelly::testing::random_vector(rng, 2, -2, 8);
        Vector dir = chelly::testing::random_vector(rng, 2, -3, 3);
        if (is_zero(dir))
            continue;
        auto line = AffineFlat::line(base, dir);
        LpProblem lp;
        lp.num_vars = 1;
        for (const auto& row : constraint_rows(poly)) {
            Vector c{dot(row.coeffs, dir)};
            lp.constraints.push_back({c, row.relation, row.rhs - dot(row.coeffs, base)});
        }
        CHECK(flat_crosses(line, poly) == !is_infeasible(lp_solve(lp)));
    }
}

TEST_CASE("affine_project examples")
{
    SUBCASE("unit cube along the third axis")
    {
        auto cube = Polyhedron::box(vec({0, 0, 0}), vec({1, 1, 1}));
        auto shadow = affine_project({cube}, vec({0, 0, 1})).front();
        CHECK(shadow.dim() == 2);
        auto square = Polyhedron::box(vec({0, 0}), vec({1, 1}));
        CHECK(enumerate_vertices(shadow) == enumerate_vertices(square));
        CHECK(shadow.inequalities().size() == 4);
    }
    SUBCASE("segment along its own direction is a point")
    {
        auto seg = Polyhedron::from_vertices({vec({1, 1}), vec({3, 2})});
        auto shadow = project_along(seg, vec({2, 1}));
        CHECK(shadow.dim() == 1);
        auto verts = enumerate_vertices(shadow);
        REQUIRE(verts.size() == 1);
        // Projection onto x_0 = 0 along (2,1): (1,1) - 1/2 (2,1) = (0, 1/2).
        CHECK(verts.front() == Vector{q(1, 2)});
    }
    SUBCASE("zero direction")
    {
        CHECK_THROWS_AS(affine_project({Polyhedron::whole_space(2)}, vec({0, 0})), InputError);
    }
    SUBCASE("projected points lift to lines through the preimage")
    {
        auto tri = Polyhedron::from_vertices({vec({0, 0, 0}), vec({2, 0, 1}), vec({0, 3, 2})});
        Vector dir = vec({1, -1, 2});
        auto shadow = project_along(tri, dir);
        for (const auto& v : enumerate_vertices(shadow))
            CHECK(flat_crosses(lift_projected_point(v, dir), tri));
    }
}

TEST_CASE("successive projections commute with direct elimination on boxes")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Vector lo = chelly::testing::random_vector(rng, 3, -3, 0);
        Vector hi = chelly::testing::random_vector(rng, 3, 1, 4);
        auto box = Polyhedron::box(lo, hi);
        auto twice = project_along(project_along(box, vec({0, 0, 1})), vec({0, 1}));
        auto direct = eliminate_coordinate(eliminate_coordinate(box, 1), 1);
        CHECK(enumerate_vertices(twice) == enumerate_vertices(direct));
        CHECK(enumerate_vertices(twice) == std::vector<Vector>{{lo[0]}, {hi[0]}});
    }
}

TEST_CASE("redundancy removal keeps the set")
{
    Polyhedron p(2, {Halfspace(vec({1, 0}), q(1)), Halfspace(vec({2, 0}), q(2)), Halfspace(vec({1, 0}), q(5)),
                     Halfspace(vec({-1, 0}), q(0)), Halfspace(vec({0, 1}), q(1)), Halfspace(vec({0, -1}), q(0)),
                     Halfspace(vec({1, 1}), q(3))});
    auto r = remove_redundant(p);
    CHECK(r.inequalities().size() == 4);
    CHECK(enumerate_vertices(r) == enumerate_vertices(p));
    CHECK(is_bounded(r));
    CHECK(!is_bounded(Polyhedron(2, {Halfspace(vec({1, 0}), q(1))})));
}
