#include <doctest.h>

#include <algorithm>

#include "chelly/colorful.hpp"
#include "chelly/constructions.hpp"
#include "chelly/errors.hpp"
#include "chelly/polyhedra.hpp"
#include "chelly/transversals.hpp"
#include "test_util.hpp"

using namespace chelly;
using namespace chelly::testing;

namespace {

using Polygon = std::vector<Vector>;

Rational cross(const Vector& o, const Vector& a, const Vector& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// keeps the part of poly on the left of (or on) the directed line a -> b
Polygon clip(const Polygon& poly, const Vector& a, const Vector& b)
{
    Polygon out;
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vector& p = poly[i];
        const Vector& r = poly[(i + 1) % n];
        Rational sp = cross(a, b, p);
        Rational sr = cross(a, b, r);
        if (sp >= 0)
            out.push_back(p);
        if ((sp > 0 && sr < 0) || (sp < 0 && sr > 0)) {
            Rational t = sp / (sp - sr);
            out.push_back({p[0] + t * (r[0] - p[0]), p[1] + t * (r[1] - p[1])});
        }
    }
    return out;
}

Polygon ccw_triangle(const std::array<Vector, 3>& t)
{
    Polygon p(t.begin(), t.end());
    if (cross(p[0], p[1], p[2]) < 0)
        std::swap(p[1], p[2]);
    return p;
}

// intersection of a polygon (or segment) with a list of ccw triangles, by clipping
bool clip_meets(Polygon poly, const std::vector<Polygon>& triangles)
{
    for (const auto& t : triangles)
        for (std::size_t i = 0; i < 3 && !poly.empty(); ++i)
            poly = clip(poly, t[i], t[(i + 1) % 3]);
    return !poly.empty();
}

bool segments_meet(const Vector& a, const Vector& b, const Vector& c, const Vector& d)
{
    Rational d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    auto on = [](const Vector& p, const Vector& q, const Vector& r) {
        return cross(p, q, r) == 0 && std::min(p[0], q[0]) <= r[0] && r[0] <= std::max(p[0], q[0]) &&
               std::min(p[1], q[1]) <= r[1] && r[1] <= std::max(p[1], q[1]);
    };
    return on(c, d, a) || on(c, d, b) || on(a, b, c) || on(a, b, d);
}

bool in_open_segment(const Vector& p, const Vector& a, const Vector& b)
{
    return cross(a, b, p) == 0 && p != a && p != b && std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

void check_planar_invariants(const PlanarConstruction& c)
{
    REQUIRE(c.f1.size() == c.m);
    REQUIRE(c.segments.size() == 3 * c.m);
    std::vector<Polygon> tris;
    for (const auto& t : c.triangles) {
        tris.push_back(ccw_triangle(t.vertices));
        CHECK(t.vertices[0][1] == t.vertices[1][1]);
        CHECK(in_open_segment(t.vertices[0], c.t0[0], c.t0[2]));
        CHECK(in_open_segment(t.vertices[1], c.t0[1], c.t0[2]));
        CHECK(in_open_segment(t.vertices[2], c.t0[0], c.t0[1]));
    }
    for (std::size_t i = 0; i < c.m; ++i)
        for (std::size_t j = i + 1; j < c.m; ++j) {
            CHECK(clip_meets(tris[i], {tris[j]}));
            for (std::size_t k = j + 1; k < c.m; ++k)
                CHECK_FALSE(clip_meets(tris[i], {tris[j], tris[k]}));
        }
    for (const auto& s : c.segments)
        for (const auto& t : tris)
            CHECK(clip_meets({s[0], s[1]}, {t}));
    for (std::size_t i = 0; i < c.segments.size(); ++i)
        for (std::size_t j = i + 1; j < c.segments.size(); ++j)
            CHECK_FALSE(segments_meet(c.segments[i][0], c.segments[i][1], c.segments[j][0], c.segments[j][1]));
}

std::vector<Polyhedron> flatten(const std::vector<std::vector<Polyhedron>>& classes)
{
    std::vector<Polyhedron> out;
    for (const auto& c : classes)
        out.insert(out.end(), c.begin(), c.end());
    return out;
}

bool no_three_meet(const std::vector<Polyhedron>& sets)
{
    bool ok = true;
    for_each_subset(sets.size(), 3, [&](const std::vector<std::size_t>& idx) {
        if (common_point({&sets[idx[0]], &sets[idx[1]], &sets[idx[2]]}))
            ok = false;
    });
    return ok;
}

} // namespace

TEST_CASE("figure 1 families")
{
    auto two = generate_figure1(2, 1);
    CHECK(two.classes.size() == 3);
    CHECK(check_ch(two).holds);

    auto fig = generate_figure1(3, 2);
    CHECK(check_ch(fig).holds);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(piercing_number(fig.classes[i]).search.tau == 2);

    auto big = generate_figure1(3, 3);
    CHECK(check_ch(big).holds);
    auto diag = AffineFlat::line(zero_vector(3), vec({1, 1, 1}));
    for (const auto& s : big.all_sets())
        CHECK(flat_crosses(diag, s));

    auto slabs = generate_figure1_slabs(2, 3);
    CHECK(check_ch(slabs).holds);
    CHECK(piercing_number(slabs.classes[0]).search.tau == 3);
    CHECK(line_cover_number(slabs.all_sets()).search.tau == 1);

    CHECK_THROWS_AS(generate_figure1(0, 1), InputError);
}

TEST_CASE("barycentric coordinates")
{
    std::vector<Vector> verts{vec({0, 0}), vec({12, 0}), vec({6, 12})};
    auto l = barycentric_coordinates(verts);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(l[j](verts[k]) == (j == k ? 1 : 0));
    Vector p = vec({5, 3});
    CHECK(l[0](p) + l[1](p) + l[2](p) == 1);
    CHECK_THROWS_AS(barycentric_coordinates({vec({0, 0}), vec({1, 1}), vec({2, 2})}), InputError);
}

TEST_CASE("planar construction invariants")
{
    for (std::size_t f = 1; f <= 4; ++f) {
        CAPTURE(f);
        auto c = generate_planar(f, 7 + f);
        CHECK(c.m == 2 * f);
        CHECK(c.pair_floor.size() == (c.m > 2 ? c.m - 2 : 0));
        for (std::size_t i = 2; i < c.m; ++i)
            CHECK(c.triangles[i].height < c.pair_floor[i - 2]);
        check_planar_invariants(c);
        CHECK(c.lines_certificate.valid);
        CHECK(c.lines_certificate.lower_bound == 2);
        CHECK(check_ch(c.family()).holds);
    }
}

TEST_CASE("planar lower bounds")
{
    for (std::size_t f = 1; f <= 2; ++f) {
        CAPTURE(f);
        auto c = generate_planar(f, 7);
        CHECK(piercing_number(c.f1).search.tau == f);
        CHECK(piercing_number(c.f2).search.tau == 3 * c.m);
        auto lines = line_cover_number(c.family().all_sets());
        CHECK_FALSE(lines.search.upper_bound_only);
        CHECK(lines.search.tau >= 2);
    }
}

TEST_CASE("planar determinism")
{
    auto a = generate_planar(2, 11);
    auto b = generate_planar(2, 11);
    CHECK(a.family() == b.family());
    CHECK(a.shrink == b.shrink);
    CHECK(a.shift == b.shift);
    auto c = generate_planar(2, 12);
    CHECK_FALSE(a.family() == c.family());
}

TEST_CASE("region separation certificate")
{
    auto frame = barycentric_coordinates({vec({0, 0}), vec({12, 0}), vec({6, 12})});
    std::vector<std::vector<Polyhedron>> groups{{Polyhedron::from_vertices({vec({11, 1}), vec({7, 9})})},
                                                {Polyhedron::from_vertices({vec({5, 9}), vec({1, 1})})},
                                                {Polyhedron::from_vertices({vec({1, 0}), vec({11, 0})})}};
    auto ok = region_separation(groups, frame);
    CHECK(ok.valid);
    CHECK(ok.lower_bound == 2);
    groups[2] = {Polyhedron::from_vertices({vec({0, 0}), vec({12, 0})})};
    auto bad = region_separation(groups, frame);
    CHECK_FALSE(bad.valid);
    CHECK(bad.lower_bound == 0);
}

TEST_CASE("simplex family d = 2 matches the planar structure")
{
    auto c = generate_simplex_family(2, 1, 3);
    REQUIRE(c.classes.size() == 2);
    CHECK(c.classes[0].size() == 2);
    CHECK(c.classes[1].size() == 6);
    CHECK(check_ch(c.family()).holds);
    CHECK(c.lines_certificate.lower_bound == 2);
    auto lines = line_cover_number(flatten(c.classes));
    CHECK(lines.search.tau >= 2);
    auto relint = verify_relint_property(c);
    CHECK(relint.holds());
    CHECK(relint.selections == 2 * 3);
    CHECK(relint.min_margin > 0);
}

TEST_CASE("simplex family d = 3")
{
    for (std::size_t f = 1; f <= 2; ++f) {
        CAPTURE(f);
        auto c = generate_simplex_family(3, f, 5);
        REQUIRE(c.classes.size() == 3);
        CHECK(c.classes[2].size() == 4 * c.m);
        CHECK(check_ch(c.family()).holds);
        ColoredFamily hat{3, c.hat_classes, {}};
        CHECK(check_ch(hat).holds);
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(no_three_meet(c.classes[i]));
            CHECK(piercing_number(c.classes[i]).search.tau == f);
        }
        for (std::size_t j = 0; j < 4; ++j) {
            std::vector<Polyhedron> group(c.classes[2].begin() + j * c.m, c.classes[2].begin() + (j + 1) * c.m);
            for (std::size_t a = 0; a < group.size(); ++a)
                for (std::size_t b = a + 1; b < group.size(); ++b)
                    CHECK_FALSE(intersects(group[a], group[b]));
        }
        CHECK(c.lines_certificate.valid);
        CHECK(c.lines_certificate.lower_bound == 2);
        for (const auto& tri : c.face_triangles[0])
            for (const auto& v : tri)
                CHECK(v[2] == 0);
    }
    auto again = generate_simplex_family(3, 1, 5);
    CHECK(again.family() == generate_simplex_family(3, 1, 5).family());
    CHECK_THROWS_AS(generate_simplex_family(5, 1, 0), InputError);
    CHECK_THROWS_AS(generate_simplex_family(3, 0, 0), InputError);
}

TEST_CASE("relint sweep and negative control")
{
    auto c = generate_simplex_family(3, 1, 9);
    auto report = verify_relint_property(c);
    CHECK(report.selections == 2 * 2 * 4);
    CHECK(report.holds());

    std::vector<std::vector<Polyhedron>> cones(c.hat_classes.begin(), c.hat_classes.end() - 1);
    cones[0][0] = Polyhedron::from_vertices({vec({0, 0, 1}), {q(3, 10), q(3, 10), q(0)}, {q(7, 20), q(3, 10), q(0)},
                                             {q(3, 10), q(7, 20), q(0)}});
    auto broken = verify_relint_property(cones, c.lambdas);
    CHECK_FALSE(broken.holds());
    REQUIRE_FALSE(broken.failures.empty());
    CHECK(broken.failures.front().selection[0] == 0);

    auto plane = generate_simplex_family(2, 1, 9);
    std::vector<std::vector<Polyhedron>> tiny{{Polyhedron::from_vertices(
        {{q(1, 4), q(1, 4)}, {q(1, 3), q(1, 4)}, {q(1, 4), q(1, 3)}})}};
    auto tiny_report = verify_relint_property(tiny, plane.lambdas);
    CHECK(tiny_report.failures.size() == 3);
}

TEST_CASE("facet interiors crossed by one line")
{
    for (std::size_t d = 2; d <= 4; ++d) {
        CAPTURE(d);
        auto r = max_simplex_facets_crossed(d);
        CHECK(r.max_crossed == 2);
        CHECK(r.lines_checked > 0);
        CHECK_FALSE(r.argument.empty());
    }
    auto lambdas = barycentric_coordinates({vec({0, 0}), vec({1, 0}), vec({0, 1})});
    auto through_vertex = AffineFlat::line_through(vec({0, 0}), vec({1, 1}));
    CHECK_FALSE(line_crosses_facet_interior(through_vertex, lambdas, 1));
    CHECK(line_crosses_facet_interior(through_vertex, lambdas, 0));
    auto along_side = AffineFlat::line_through(vec({0, 0}), vec({1, 0}));
    CHECK(line_crosses_facet_interior(along_side, lambdas, 2));
    CHECK_FALSE(line_crosses_facet_interior(along_side, lambdas, 0));
}
