#include <doctest.h>

#include <algorithm>
#include <random>

#include "chelly/colorful.hpp"
#include "chelly/errors.hpp"
#include "chelly/polyhedra.hpp"
#include "chelly/transversals.hpp"
#include "test_util.hpp"

using namespace chelly;
using namespace chelly::testing;

namespace {

ColoredFamily axis_planes(std::size_t d, long n)
{
    ColoredFamily fam{d, {}, {}};
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Polyhedron> cls;
        for (long j = 0; j < n; ++j)
            cls.push_back(Polyhedron(d, {}, {Hyperplane(unit_vector(d, i), q(j))}));
        fam.classes.push_back(cls);
    }
    fam.classes.push_back({Polyhedron::whole_space(d)});
    return fam;
}

std::vector<Polyhedron> triangle_sides()
{
    return {Polyhedron::from_vertices({vec({0, 0}), vec({4, 0})}), Polyhedron::from_vertices({vec({4, 0}), vec({2, 4})}),
            Polyhedron::from_vertices({vec({2, 4}), vec({0, 0})})};
}

Polyhedron half(Vector normal, Rational offset)
{
    const std::size_t d = normal.size();
    return Polyhedron(d, {Halfspace(std::move(normal), std::move(offset))});
}

bool crosses_some(const Polyhedron& s, const std::vector<Hyperplane>& hs)
{
    return std::any_of(hs.begin(), hs.end(),
                       [&](const Hyperplane& h) { return intersects(s, Polyhedron(s.dim(), {}, {h})); });
}

} // namespace

TEST_CASE("check_ch examples")
{
    auto fig = axis_planes(3, 3);
    auto r = check_ch(fig);
    CHECK(r.holds);
    CHECK(r.tuples_checked == 27);

    ColoredFamily split{2, {{half(vec({1, 0}), q(0))}, {half(vec({-1, 0}), q(-1))}}, {}};
    auto bad = check_ch(split);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.violating_rainbow);
    CHECK(*bad.violating_rainbow == std::vector<SetRef>{{0, 0}, {1, 0}});
    REQUIRE(bad.certificate);
    std::vector<const Polyhedron*> refs{&split.classes[0][0], &split.classes[1][0]};
    CHECK(verify_intersection_certificate(refs, *bad.certificate));

    SearchBudget tiny;
    tiny.max_rainbow_tuples = 10;
    CHECK_THROWS_AS(check_ch(fig, tiny), ScaleError);
    CHECK_THROWS_AS(check_ch(ColoredFamily{2, {{}}, {}}), InputError);
}

TEST_CASE("intersecting_class examples")
{
    auto fig = axis_planes(3, 2);
    auto r = intersecting_class(fig);
    CHECK(r.cls == 3);

    auto box = Polyhedron::box(vec({0, 0}), vec({1, 1}));
    ColoredFamily same{2, {{box}, {box}, {box}}, {}};
    CHECK(intersecting_class(same).cls == 0);

    ColoredFamily broken{1, {{Polyhedron::box(vec({0}), vec({1})), Polyhedron::box(vec({2}), vec({3}))},
                             {Polyhedron::box(vec({5}), vec({6})), Polyhedron::box(vec({8}), vec({9}))}},
                         {}};
    CHECK_THROWS_AS(intersecting_class(broken), PreconditionError);
}

TEST_CASE("separating_halfspaces examples")
{
    SUBCASE("two rays on a line")
    {
        std::vector<Polyhedron> sets{half(vec({1}), q(0)), half(vec({-1}), q(-1))};
        auto s = separating_halfspaces(sets);
        CHECK(s.halfspaces[0] == Halfspace(vec({1}), q(0)));
        CHECK(s.halfspaces[1] == Halfspace(vec({-1}), q(-1)));
        CHECK(verify_separating_halfspaces(sets, s));
    }
    SUBCASE("sides of a triangle")
    {
        auto sides = triangle_sides();
        auto s = separating_halfspaces(sides);
        CHECK(s.halfspaces.size() == 3);
        CHECK(verify_separating_halfspaces(sides, s));
    }
    SUBCASE("facets of a tetrahedron")
    {
        std::vector<Vector> v{vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})};
        std::vector<Polyhedron> facets;
        for (std::size_t skip = 0; skip < 4; ++skip) {
            std::vector<Vector> pts;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != skip)
                    pts.push_back(v[i]);
            facets.push_back(Polyhedron::from_vertices(pts));
        }
        auto s = separating_halfspaces(facets);
        CHECK(verify_separating_halfspaces(facets, s));
        CHECK(helly_witness(facets) == std::vector<std::size_t>{0, 1, 2, 3});
    }
    SUBCASE("an uninvolved set is repaired")
    {
        std::vector<Polyhedron> sets{half(vec({1}), q(0)), Polyhedron::box(vec({-5}), vec({5})),
                                     half(vec({-1}), q(-1))};
        auto s = separating_halfspaces(sets);
        CHECK(verify_separating_halfspaces(sets, s));
    }
    SUBCASE("precondition")
    {
        std::vector<Polyhedron> sets{Polyhedron::box(vec({0}), vec({2})), Polyhedron::box(vec({1}), vec({3}))};
        try {
            separating_halfspaces(sets);
            FAIL("expected a precondition error");
        } catch (const PreconditionError& e) {
            REQUIRE(e.witness());
            CHECK(sets[0].contains(*e.witness()));
            CHECK(sets[1].contains(*e.witness()));
        }
    }
}

TEST_CASE("separating halfspaces on random empty families")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = trial % 2 == 0 ? 2 : 3;
        auto inst = random_two_colored(rng, d, true);
        auto s = separating_halfspaces(inst.a);
        CHECK(verify_separating_halfspaces(inst.a, s));
        auto w = helly_witness(inst.a);
        CHECK(w.size() <= d + 1);
        std::vector<const Polyhedron*> refs;
        for (auto i : w)
            refs.push_back(&inst.a[i]);
        CHECK_FALSE(common_point(refs).has_value());
        for (auto drop : w) {
            std::vector<const Polyhedron*> fewer;
            for (auto i : w)
                if (i != drop)
                    fewer.push_back(&inst.a[i]);
            if (!fewer.empty())
                CHECK(common_point(fewer).has_value());
        }
    }
}

TEST_CASE("helly_witness examples")
{
    std::vector<Polyhedron> rays{half(vec({1}), q(0)), half(vec({-1}), q(-1)), half(vec({-1}), q(-5))};
    CHECK(helly_witness(rays) == std::vector<std::size_t>{0, 1});

    std::vector<Polyhedron> planes{half(vec({0, -1}), q(0)), half(vec({-1, 1}), q(-1)), half(vec({1, 1}), q(-1)),
                                   half(vec({0, -1}), q(5))};
    auto w = helly_witness(planes);
    CHECK(w == std::vector<std::size_t>{0, 1, 2});

    std::vector<Polyhedron> meet{Polyhedron::box(vec({0}), vec({2}))};
    CHECK_THROWS_AS(helly_witness(meet), PreconditionError);
}

TEST_CASE("two_color_lemma examples")
{
    SUBCASE("nested boxes")
    {
        std::vector<Polyhedron> a{Polyhedron::box(vec({0, 0}), vec({4, 4})), Polyhedron::box(vec({1, 1}), vec({3, 3}))};
        std::vector<Polyhedron> b{Polyhedron::box(vec({2, 2}), vec({9, 9}))};
        auto r = two_color_lemma(a, b);
        REQUIRE(std::holds_alternative<PiercedClass>(r));
        const auto& p = std::get<PiercedClass>(r).points.front();
        CHECK(a[0].contains(p));
        CHECK(a[1].contains(p));
    }
    SUBCASE("triangle sides and sets meeting all of them")
    {
        auto a = triangle_sides();
        std::vector<Polyhedron> b{Polyhedron::from_vertices({vec({0, 0}), vec({4, 0}), vec({2, 4})}),
                                  Polyhedron::from_vertices({vec({1, 0}), vec({3, 2}), vec({1, 2})}),
                                  Polyhedron::from_vertices({vec({2, 0}), vec({2, 4})}),
                                  Polyhedron::from_vertices({vec({0, 0}), vec({3, 2})})};
        auto r = two_color_lemma(a, b);
        REQUIRE(std::holds_alternative<HyperplaneCover>(r));
        const auto& hs = std::get<HyperplaneCover>(r).hyperplanes;
        CHECK(hs.size() <= 2);
        for (const auto& s : b)
            CHECK(crosses_some(s, hs));
    }
    SUBCASE("precondition names the pair")
    {
        std::vector<Polyhedron> a{Polyhedron::box(vec({0, 0}), vec({1, 1}))};
        std::vector<Polyhedron> b{Polyhedron::box(vec({5, 5}), vec({6, 6}))};
        CHECK_THROWS_WITH_AS(two_color_lemma(a, b), "A[0] and B[0] do not meet", PreconditionError);
    }
}

TEST_CASE("two_color_lemma on random instances in the plane and in space")
{
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = trial < 30 ? 2 : 3;
        auto inst = random_two_colored(rng, d, true);
        auto r = two_color_lemma(inst.a, inst.b);
        REQUIRE(std::holds_alternative<HyperplaneCover>(r));
        const auto& hs = std::get<HyperplaneCover>(r).hyperplanes;
        CHECK(hs.size() <= d);
        for (const auto& s : inst.b)
            CHECK(crosses_some(s, hs));
    }
}

TEST_CASE("theorem_main_d2")
{
    auto box = Polyhedron::box(vec({0, 0}), vec({1, 1}));
    ColoredFamily easy{2, {{box, box}, {Polyhedron::from_vertices({vec({1, 1}), vec({5, 3})})}}, {}};
    auto r = theorem_main_d2(easy);
    REQUIRE(std::holds_alternative<PiercedClass>(r));
    CHECK(std::get<PiercedClass>(r).cls == 0);
    CHECK(verify_outcome(easy, r));

    std::mt19937_64 rng(5);
    int covers = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto inst = random_two_colored(rng, 2, trial % 2 == 0);
        ColoredFamily fam{2, {inst.a, inst.b}, {}};
        auto out = theorem_main_d2(fam);
        CHECK(verify_outcome(fam, out));
        if (const auto* lc = std::get_if<LineCover>(&out)) {
            CHECK(lc->lines.size() <= 4);
            ++covers;
        }
    }
    CHECK(covers > 0);
    CHECK_THROWS_AS(theorem_main_d2(axis_planes(3, 1)), InputError);
}

TEST_CASE("generic_line_class")
{
    auto fig = axis_planes(3, 3);
    fig.classes.pop_back();
    auto g = generic_line_class(fig, 17);
    CHECK(g.cls < 3);
    for (const auto& s : fig.classes[g.cls])
        CHECK(flat_crosses(g.line, s));
    auto again = generic_line_class(fig, 17);
    CHECK(again.direction == g.direction);
    CHECK(again.cls == g.cls);

    ColoredFamily slabs{2,
                        {{Polyhedron::box(vec({0, -100}), vec({1, 100})), Polyhedron::box(vec({3, -100}), vec({4, 100}))},
                         {Polyhedron::whole_space(2)}},
                        {}};
    auto s = generic_line_class(slabs, 3);
    for (const auto& set : slabs.classes[s.cls])
        CHECK(flat_crosses(s.line, set));
}

TEST_CASE("bound formulas")
{
    CHECK(lambda_bound(q(1), 2) == q(1, 216));
    auto beta = default_beta();
    CHECK(beta.lower_bound(q(1), 3) == 1);
    for (std::size_t d = 1; d <= 3; ++d) {
        Rational prev_l = 0, prev_g = 0;
        for (long k = 1; k <= 10; ++k) {
            Rational alpha = q(k, 10);
            Rational b = beta.lower_bound(alpha, d);
            CHECK(sgn(b) > 0);
            Rational y = 1 - b;
            Rational pw = 1;
            for (std::size_t i = 0; i <= d; ++i)
                pw *= y;
            CHECK(pw >= 1 - alpha);
            Rational l = lambda_bound(alpha, d), g = gamma_bound(alpha, d);
            CHECK(sgn(l) > 0);
            CHECK(sgn(g) > 0);
            CHECK(l >= prev_l);
            CHECK(g >= prev_g);
            prev_l = l;
            prev_g = g;
        }
    }
    Rational g12 = gamma_bound(q(1), 2);
    CHECK(g12 == std::min(beta.lower_bound(q(2, 216), 2), q(1, 12)));
    CHECK(g12 < q(1, 12));
    CHECK(m_bound(1, 4).value == Rational(1));
    CHECK(m_bound(2, 4).value == Rational(4));
    CHECK_FALSE(m_bound(3, 4).value.has_value());
    CHECK(m_bound(3, 4).expression == "G(M(2,4), 3, 4)");
    CHECK_THROWS_AS(lambda_bound(q(0), 2), InputError);
    CHECK_THROWS_AS(lambda_bound(q(3, 2), 2), InputError);
}

TEST_CASE("fractional_two_color_search")
{
    auto box = Polyhedron::box(vec({0, 0}), vec({1, 1}));
    std::vector<Polyhedron> same(4, box);
    auto r = fractional_two_color_search(same, same, q(1));
    CHECK(r.point_coverage == 4);
    CHECK(r.point_branch);
    CHECK(r.lambda == q(1, 216));

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        auto inst = random_two_colored(rng, 2, true);
        auto out = fractional_two_color_search(inst.a, inst.b, q(1, 2));
        CHECK((out.point_branch || out.hyperplane_branch));
    }
    std::vector<Polyhedron> far{Polyhedron::box(vec({5, 5}), vec({6, 6}))};
    CHECK_THROWS_AS(fractional_two_color_search(same, far, q(1, 2)), PreconditionError);
}

TEST_CASE("dichotomy_report")
{
    auto fig = axis_planes(3, 2);
    auto r = dichotomy_report(fig, 1, 1);
    auto it = std::find_if(r.splits.begin(), r.splits.end(),
                           [](const SplitResult& s) { return s.k == 1 && s.prefix == std::vector<std::size_t>{3}; });
    REQUIRE(it != r.splits.end());
    CHECK(it->piercing == 1u);
    CHECK(it->cover == 1u);
    CHECK(it->within_budgets);
    CHECK(r.min_class_piercing == 1);

    auto box = Polyhedron::box(vec({0, 0}), vec({1, 1}));
    ColoredFamily same{2, {{box}, {box}, {box}}, {}};
    auto s = dichotomy_report(same, 1, 1);
    bool full = std::any_of(s.splits.begin(), s.splits.end(),
                            [](const SplitResult& x) { return x.k == 2 && x.piercing == 1u && x.within_budgets; });
    CHECK(full);
}
