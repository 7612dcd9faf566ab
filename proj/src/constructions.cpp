#include "chelly/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "chelly/errors.hpp"
#include "chelly/linalg.hpp"
#include "chelly/polyhedra.hpp"

namespace chelly {

namespace {

constexpr int max_halvings = 48;

Rational dyadic(int exponent)
{
    Rational r(1);
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return r;
}

std::string str(const Rational& r) { return format_rational(r); }

std::string describe_tuple(const std::vector<SetRef>& refs, const std::vector<std::string>& labels)
{
    std::string s = "(";
    for (std::size_t i = 0; i < refs.size(); ++i) {
        if (i)
            s += ", ";
        s += (refs[i].cls < labels.size() ? labels[refs[i].cls] : "class " + std::to_string(refs[i].cls)) + "[" +
             std::to_string(refs[i].index) + "]";
    }
    return s + ")";
}

Vector barycentric_combination(const std::vector<AffineFunction>& frame_lambdas, const Vector& p,
                               const std::vector<Vector>& targets)
{
    Vector out = zero_vector(targets.front().size());
    for (std::size_t j = 0; j < targets.size(); ++j)
        axpy(out, frame_lambdas[j](p), targets[j]);
    return out;
}

const std::vector<Vector>& planar_t0()
{
    static const std::vector<Vector> t0{{Rational(0), Rational(0)}, {Rational(12), Rational(0)}, {Rational(6), Rational(12)}};
    return t0;
}

Rational lowest_ordinate(const Polyhedron& a, const Polyhedron& b)
{
    auto outcome = maximize_over(a.intersect(b), Vector{Rational(0), Rational(-1)});
    const auto* opt = std::get_if<LpOptimal>(&outcome);
    if (!opt)
        throw GenerationError("two planar triangles fail to meet");
    return -opt->value;
}

bool any_three_meet(const std::vector<Polyhedron>& sets, std::vector<std::size_t>& triple)
{
    bool found = false;
    for_each_subset(sets.size(), 3, [&](const std::vector<std::size_t>& idx) {
        if (found)
            return;
        if (common_point({&sets[idx[0]], &sets[idx[1]], &sets[idx[2]]})) {
            found = true;
            triple = idx;
        }
    });
    return found;
}

bool pairwise_disjoint(const std::vector<Polyhedron>& sets)
{
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (intersects(sets[i], sets[j]))
                return false;
    return true;
}

bool pairwise_intersecting(const std::vector<Polyhedron>& sets)
{
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (!intersects(sets[i], sets[j]))
                return false;
    return true;
}

Rational optimum(const Polyhedron& p, const Vector& objective)
{
    auto outcome = maximize_over(p, objective);
    const auto* opt = std::get_if<LpOptimal>(&outcome);
    if (!opt)
        throw InputError("region separation needs non-empty bounded sets");
    return opt->value;
}

} // namespace

std::vector<AffineFunction> barycentric_coordinates(const std::vector<Vector>& vertices)
{
    if (vertices.empty())
        throw InputError("barycentric coordinates of an empty vertex list");
    std::size_t d = vertices.front().size();
    if (vertices.size() != d + 1)
        throw DimensionError("barycentric coordinates need dim + 1 vertices");
    Matrix m;
    for (const auto& v : vertices) {
        if (v.size() != d)
            throw DimensionError("ragged vertex list");
        Vector row = v;
        row.emplace_back(1);
        m.push_back(row);
    }
    std::vector<AffineFunction> out;
    for (std::size_t j = 0; j <= d; ++j) {
        Vector rhs = zero_vector(d + 1);
        rhs[j] = 1;
        auto sol = solve_unique(m, rhs, d + 1);
        if (!sol)
            throw InputError("vertices are affinely dependent");
        Rational c = sol->back();
        sol->pop_back();
        out.push_back({*sol, c});
    }
    return out;
}

ColoredFamily generate_figure1(std::size_t d, std::size_t n)
{
    if (d < 1 || n < 1)
        throw InputError("figure 1 family needs d >= 1 and n >= 1");
    ColoredFamily fam{d, {}, {}};
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Polyhedron> cls;
        for (std::size_t j = 0; j < n; ++j)
            cls.emplace_back(d, std::vector<Halfspace>{},
                             std::vector<Hyperplane>{Hyperplane(unit_vector(d, i), Rational(static_cast<long>(j)))});
        fam.classes.push_back(std::move(cls));
        fam.labels.push_back("x" + std::to_string(i + 1));
    }
    fam.classes.push_back({Polyhedron::whole_space(d)});
    fam.labels.push_back("space");
    return fam;
}

ColoredFamily generate_figure1_slabs(std::size_t d, std::size_t n)
{
    if (d < 1 || n < 1)
        throw InputError("figure 1 family needs d >= 1 and n >= 1");
    Vector lo(d, Rational(-1));
    Vector hi(d, Rational(static_cast<long>(3 * n + 1)));
    ColoredFamily fam{d, {}, {}};
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Polyhedron> cls;
        for (std::size_t j = 0; j < n; ++j) {
            Vector a = lo, b = hi;
            a[i] = static_cast<long>(3 * j);
            b[i] = static_cast<long>(3 * j + 1);
            cls.push_back(Polyhedron::box(a, b));
        }
        fam.classes.push_back(std::move(cls));
        fam.labels.push_back("slab" + std::to_string(i + 1));
    }
    fam.classes.push_back({Polyhedron::box(lo, hi)});
    fam.labels.push_back("box");
    return fam;
}

RegionSeparation region_separation(const std::vector<std::vector<Polyhedron>>& groups,
                                   const std::vector<AffineFunction>& lambdas)
{
    if (groups.empty() || groups.size() > lambdas.size())
        throw InputError("region separation needs one affine function per group");
    RegionSeparation out;
    bool first = true;
    for (std::size_t j = 0; j < groups.size(); ++j) {
        if (groups[j].empty())
            throw InputError("region separation: empty group");
        for (const auto& s : groups[j]) {
            Rational top = optimum(s, lambdas[j].coeffs) + lambdas[j].constant;
            if (first || top > out.delta)
                out.delta = top;
            for (std::size_t b = 0; b < lambdas.size(); ++b) {
                if (b == j)
                    continue;
                Rational low = lambdas[b].constant - optimum(s, negate(lambdas[b].coeffs));
                if (first || low < out.eta)
                    out.eta = low;
                first = false;
            }
        }
    }
    out.valid = out.delta < out.eta;
    out.lower_bound = out.valid ? (groups.size() + 1) / 2 : 0;
    return out;
}

std::vector<PlanarTriangle> place_planar_triangles(std::size_t m, std::uint64_t seed, std::vector<Rational>* floors)
{
    std::mt19937_64 rng(seed);
    const auto& t0 = planar_t0();
    std::vector<PlanarTriangle> out;
    std::vector<Polyhedron> sets;
    std::set<Rational> bottoms;
    auto make = [&](const Rational& h, const Rational& b) {
        PlanarTriangle t{h, b, {Vector{h / 2, h}, Vector{Rational(t0[1][0]) - h / 2, h}, Vector{b, Rational(0)}}};
        sets.push_back(Polyhedron::from_vertices({t.vertices.begin(), t.vertices.end()}));
        out.push_back(std::move(t));
    };
    for (std::size_t i = 0; i < m; ++i) {
        Rational b;
        do {
            b = make_rational(static_cast<long>(rng() % 41) + 4, 4);
        } while (bottoms.count(b));
        bottoms.insert(b);
        if (i < 2) {
            make(make_rational(static_cast<long>(rng() % 33) + 3, 4), b);
            continue;
        }
        Rational floor;
        bool first = true;
        for (std::size_t j = 0; j < i; ++j)
            for (std::size_t k = j + 1; k < i; ++k) {
                Rational y = lowest_ordinate(sets[j], sets[k]);
                if (first || y < floor)
                    floor = y;
                first = false;
            }
        if (floors)
            floors->push_back(floor);
        make(floor / 2, b);
    }
    return out;
}

ColoredFamily PlanarConstruction::family() const
{
    return ColoredFamily{2, {f1, f2}, {"F1", "F2"}};
}

PlanarConstruction generate_planar(std::size_t f, std::uint64_t seed)
{
    if (f < 1)
        throw InputError("planar construction needs f >= 1");
    PlanarConstruction c;
    c.f = f;
    c.m = 2 * f;
    c.seed = seed;
    const auto& t0 = planar_t0();
    std::copy(t0.begin(), t0.end(), c.t0.begin());
    c.triangles = place_planar_triangles(c.m, seed, &c.pair_floor);
    for (const auto& t : c.triangles)
        c.f1.push_back(Polyhedron::from_vertices({t.vertices.begin(), t.vertices.end()}));
    c.log.push_back("placed " + std::to_string(c.m) + " triangles in T0");

    std::vector<std::size_t> triple;
    if (any_three_meet(c.f1, triple))
        throw GenerationError("triangles " + std::to_string(triple[0]) + ", " + std::to_string(triple[1]) + ", " +
                              std::to_string(triple[2]) + " share a point");
    if (!pairwise_intersecting(c.f1))
        throw GenerationError("two triangles of F1 are disjoint");
    c.log.push_back("F1 pairwise intersecting, no three share a point");

    auto lambdas = barycentric_coordinates(t0);
    std::vector<std::array<Vector, 2>> sides;
    for (std::size_t j = 0; j < 3; ++j)
        sides.push_back({t0[(j + 1) % 3], t0[(j + 2) % 3]});

    auto all_meet = [&](const std::vector<Polyhedron>& segs) {
        for (const auto& t : c.f1)
            for (const auto& s : segs)
                if (!intersects(t, s))
                    return false;
        return true;
    };

    std::vector<std::array<Vector, 2>> shrunk;
    bool found = false;
    for (int t = 1; t <= max_halvings && !found; ++t) {
        Rational s = dyadic(t);
        shrunk.clear();
        std::vector<Polyhedron> segs;
        for (const auto& [p, q] : sides) {
            Vector dir = subtract(q, p);
            shrunk.push_back({add(p, scale(dir, s)), subtract(q, scale(dir, s))});
            segs.push_back(Polyhedron::from_vertices({shrunk.back()[0], shrunk.back()[1]}));
        }
        if (all_meet(segs)) {
            c.shrink = s;
            found = true;
        }
    }
    if (!found)
        throw GenerationError("no dyadic shrink keeps every triangle on every side");
    c.log.push_back("sides shrunk by " + str(c.shrink) + " at each end");

    found = false;
    for (int u = 1; u <= max_halvings && !found; ++u) {
        Rational delta = dyadic(u);
        std::vector<std::array<Vector, 2>> segments;
        std::vector<Polyhedron> f2;
        std::vector<std::vector<Polyhedron>> groups(3);
        for (std::size_t j = 0; j < 3; ++j) {
            Vector normal = primitive_integer_direction(lambdas[j].coeffs);
            for (std::size_t k = 0; k < c.m; ++k) {
                Vector shift = scale(normal, delta * static_cast<long>(k));
                segments.push_back({add(shrunk[j][0], shift), add(shrunk[j][1], shift)});
                f2.push_back(Polyhedron::from_vertices({segments.back()[0], segments.back()[1]}));
                groups[j].push_back(f2.back());
            }
        }
        if (!all_meet(f2) || !pairwise_disjoint(f2))
            continue;
        auto cert = region_separation(groups, lambdas);
        if (!cert.valid)
            continue;
        c.shift = delta;
        c.segments = std::move(segments);
        c.f2 = std::move(f2);
        c.lines_certificate = cert;
        found = true;
    }
    if (!found)
        throw GenerationError("no dyadic shift gives disjoint segments meeting every triangle");
    c.log.push_back("F2: " + std::to_string(c.m) + " copies per side, shift " + str(c.shift));
    c.log.push_back("F2 pairwise disjoint, every triangle meets every segment");
    c.log.push_back("line regions separated: delta " + str(c.lines_certificate.delta) + " < eta " +
                    str(c.lines_certificate.eta));
    return c;
}

ColoredFamily SimplexConstruction::family() const
{
    ColoredFamily fam{d, classes, {}};
    for (std::size_t i = 0; i < classes.size(); ++i)
        fam.labels.push_back("F" + std::to_string(i + 1));
    return fam;
}

SimplexConstruction generate_simplex_family(std::size_t d, std::size_t f, std::uint64_t seed)
{
    if (d < 2 || d > 4)
        throw InputError("simplex construction supports 2 <= d <= 4");
    if (f < 1)
        throw InputError("simplex construction needs f >= 1");
    SimplexConstruction c;
    c.d = d;
    c.f = f;
    c.m = 2 * f;
    c.seed = seed;
    c.vertices.push_back(zero_vector(d));
    for (std::size_t i = 0; i < d; ++i)
        c.vertices.push_back(unit_vector(d, i));
    c.lambdas = barycentric_coordinates(c.vertices);
    auto frame = barycentric_coordinates(planar_t0());

    for (std::size_t i = 0; i + 1 < d; ++i) {
        std::vector<Vector> face{c.vertices[i], c.vertices[i + 1], c.vertices[i + 2]};
        std::vector<Vector> apexes;
        for (std::size_t v = 0; v <= d; ++v)
            if (v < i || v > i + 2)
                apexes.push_back(c.vertices[v]);
        auto triangles = place_planar_triangles(c.m, seed + 1000003ULL * i, nullptr);
        std::vector<std::array<Vector, 3>> mapped;
        std::vector<Polyhedron> cones;
        for (const auto& t : triangles) {
            std::array<Vector, 3> tri;
            for (std::size_t k = 0; k < 3; ++k)
                tri[k] = barycentric_combination(frame, t.vertices[k], face);
            std::vector<Vector> pts = apexes;
            pts.insert(pts.end(), tri.begin(), tri.end());
            cones.push_back(Polyhedron::from_vertices(pts));
            mapped.push_back(tri);
        }
        c.face_triangles.push_back(std::move(mapped));
        c.hat_classes.push_back(std::move(cones));
    }
    std::vector<Polyhedron> facets;
    for (std::size_t j = 0; j <= d; ++j) {
        std::vector<Vector> pts;
        for (std::size_t v = 0; v <= d; ++v)
            if (v != j)
                pts.push_back(c.vertices[v]);
        facets.push_back(Polyhedron::from_vertices(pts));
    }
    c.hat_classes.push_back(facets);
    c.log.push_back("cones over " + std::to_string(d - 1) + " face families of " + std::to_string(c.m) + " triangles");

    auto shrink = [&](const Polyhedron& p, const Rational& eps) {
        Polyhedron out = p;
        for (std::size_t a = 0; a <= d; ++a)
            for (std::size_t b = a + 1; b <= d; ++b)
                out = out.with(Halfspace(negate(add(c.lambdas[a].coeffs, c.lambdas[b].coeffs)),
                                         c.lambdas[a].constant + c.lambdas[b].constant - eps));
        return out;
    };

    std::vector<std::vector<Polyhedron>> shrunk;
    ChReport last;
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= d; ++i)
        labels.push_back("F" + std::to_string(i));
    bool found = false;
    for (int t = 1; t <= max_halvings && !found; ++t) {
        Rational eps = dyadic(t);
        shrunk.clear();
        for (const auto& cls : c.hat_classes) {
            shrunk.emplace_back();
            for (const auto& s : cls)
                shrunk.back().push_back(shrink(s, eps));
        }
        ColoredFamily fam{d, shrunk, labels};
        last = check_ch(fam);
        if (last.holds) {
            c.epsilon = eps;
            found = true;
        }
    }
    if (!found)
        throw GenerationError("no dyadic epsilon keeps the colorful hypothesis; rainbow " +
                              describe_tuple(*last.violating_rainbow, labels) + " became empty");
    c.log.push_back("sets cut by lambda_a + lambda_b >= " + str(c.epsilon));

    for (std::size_t i = 0; i + 1 < d; ++i) {
        std::vector<std::size_t> triple;
        if (any_three_meet(shrunk[i], triple))
            throw GenerationError("three sets of F" + std::to_string(i + 1) + " share a point");
        if (!pairwise_intersecting(shrunk[i]))
            throw GenerationError("two sets of F" + std::to_string(i + 1) + " are disjoint");
    }
    c.log.push_back("each F_i (i < d) pairwise intersecting, no three share a point");

    found = false;
    for (int u = 1; u <= max_halvings && !found; ++u) {
        Rational delta = dyadic(u);
        std::vector<std::vector<Polyhedron>> groups(d + 1);
        std::vector<Polyhedron> last_class;
        for (std::size_t j = 0; j <= d; ++j) {
            Vector normal = primitive_integer_direction(c.lambdas[j].coeffs);
            for (std::size_t k = 0; k < c.m; ++k) {
                groups[j].push_back(shrunk[d - 1][j].translated(scale(normal, delta * static_cast<long>(k))));
                last_class.push_back(groups[j].back());
            }
        }
        if (!std::all_of(groups.begin(), groups.end(), pairwise_disjoint))
            continue;
        auto cert = region_separation(groups, c.lambdas);
        if (!cert.valid)
            continue;
        std::vector<std::vector<Polyhedron>> classes(shrunk.begin(), shrunk.end() - 1);
        classes.push_back(last_class);
        ColoredFamily fam{d, classes, labels};
        last = check_ch(fam);
        if (!last.holds)
            continue;
        c.shift = delta;
        c.classes = std::move(classes);
        c.lines_certificate = cert;
        found = true;
    }
    if (!found) {
        std::string why = last.violating_rainbow ? "; rainbow " + describe_tuple(*last.violating_rainbow, labels) +
                                                       " became empty"
                                                 : "";
        throw GenerationError("no dyadic facet shift certifies the construction" + why);
    }
    c.log.push_back("F" + std::to_string(d) + ": " + std::to_string(c.m) + " copies per facet, shift " + str(c.shift));
    c.log.push_back("colorful hypothesis verified on " + std::to_string(last.tuples_checked) + " rainbow tuples");
    c.log.push_back("line regions separated: delta " + str(c.lines_certificate.delta) + " < eta " +
                    str(c.lines_certificate.eta));
    return c;
}

RelintReport verify_relint_property(const std::vector<std::vector<Polyhedron>>& cones,
                                    const std::vector<AffineFunction>& lambdas)
{
    if (lambdas.empty())
        throw InputError("relint check needs the simplex coordinates");
    std::size_t d = lambdas.front().coeffs.size();
    if (cones.size() + 1 != d)
        throw DimensionError("relint check needs d - 1 cone classes");
    RelintReport report;
    bool first = true;
    std::vector<std::size_t> sel(cones.size() + 1, 0);
    auto visit = [&]() {
        LpProblem lp;
        lp.num_vars = d + 1;
        lp.objective = unit_vector(d + 1, d);
        for (std::size_t i = 0; i < cones.size(); ++i)
            for (auto row : constraint_rows(cones[i][sel[i]])) {
                row.coeffs.emplace_back(0);
                lp.constraints.push_back(std::move(row));
            }
        std::size_t j = sel.back();
        Vector eq = lambdas[j].coeffs;
        eq.emplace_back(0);
        lp.constraints.push_back({eq, Relation::Equal, -lambdas[j].constant});
        for (std::size_t b = 0; b < lambdas.size(); ++b) {
            if (b == j)
                continue;
            Vector row = negate(lambdas[b].coeffs);
            row.emplace_back(1);
            lp.constraints.push_back({row, Relation::LessEqual, lambdas[b].constant});
        }
        lp.bounds.assign(d + 1, VariableBound{});
        lp.bounds[d].upper = Rational(1);
        ++report.selections;
        auto outcome = lp_solve(lp);
        if (const auto* opt = std::get_if<LpOptimal>(&outcome)) {
            if (first || opt->value < report.min_margin)
                report.min_margin = opt->value;
            first = false;
            if (opt->value <= 0)
                report.failures.push_back({sel, opt->value});
        } else {
            report.failures.push_back({sel, std::nullopt});
        }
    };
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
        std::size_t n = level < cones.size() ? cones[level].size() : lambdas.size();
        for (std::size_t s = 0; s < n; ++s) {
            sel[level] = s;
            if (level + 1 == sel.size())
                visit();
            else
                rec(level + 1);
        }
    };
    rec(0);
    return report;
}

RelintReport verify_relint_property(const SimplexConstruction& c)
{
    return verify_relint_property({c.hat_classes.begin(), c.hat_classes.end() - 1}, c.lambdas);
}

bool line_crosses_facet_interior(const AffineFlat& line, const std::vector<AffineFunction>& lambdas, std::size_t j)
{
    std::size_t k = line.k();
    const Vector& base = line.base().coords;
    auto row_of = [&](const AffineFunction& l) {
        Vector row;
        for (const auto& dir : line.directions())
            row.push_back(dot(l.coeffs, dir));
        return row;
    };
    LpProblem lp;
    lp.num_vars = k + 1;
    lp.objective = unit_vector(k + 1, k);
    Vector eq = row_of(lambdas[j]);
    eq.emplace_back(0);
    lp.constraints.push_back({eq, Relation::Equal, -lambdas[j](base)});
    for (std::size_t b = 0; b < lambdas.size(); ++b) {
        if (b == j)
            continue;
        Vector row = negate(row_of(lambdas[b]));
        row.emplace_back(1);
        lp.constraints.push_back({row, Relation::LessEqual, lambdas[b](base)});
    }
    lp.bounds.assign(k + 1, VariableBound{});
    lp.bounds[k].upper = Rational(1);
    auto outcome = lp_solve(lp);
    const auto* opt = std::get_if<LpOptimal>(&outcome);
    return opt && opt->value > 0;
}

FacetCrossingReport max_simplex_facets_crossed(std::size_t d)
{
    if (d < 2 || d > 4)
        throw InputError("facet crossing count supports 2 <= d <= 4");
    std::vector<Vector> verts{zero_vector(d)};
    for (std::size_t i = 0; i < d; ++i)
        verts.push_back(unit_vector(d, i));
    auto lambdas = barycentric_coordinates(verts);

    std::vector<Vector> probes = verts;
    for (std::size_t a = 0; a <= d; ++a)
        for (std::size_t b = a + 1; b <= d; ++b)
            probes.push_back(scale(add(verts[a], verts[b]), make_rational(1, 2)));
    for (std::size_t j = 0; j <= d; ++j) {
        Vector centroid = zero_vector(d);
        for (std::size_t v = 0; v <= d; ++v)
            if (v != j)
                axpy(centroid, make_rational(1, static_cast<long>(d)), verts[v]);
        probes.push_back(centroid);
        for (std::size_t v = 0; v <= d; ++v)
            if (v != j)
                probes.push_back(add(centroid, scale(subtract(verts[v], centroid), make_rational(1, 7))));
    }

    FacetCrossingReport report;
    report.d = d;
    std::set<std::vector<Rational>> seen;
    for (std::size_t a = 0; a < probes.size(); ++a)
        for (std::size_t b = a + 1; b < probes.size(); ++b) {
            if (probes[a] == probes[b])
                continue;
            AffineFlat line = AffineFlat::line_through(probes[a], probes[b]);
            ++report.lines_checked;
            std::size_t count = 0;
            for (std::size_t j = 0; j <= d; ++j)
                if (line_crosses_facet_interior(line, lambdas, j))
                    ++count;
            if (count > report.max_crossed || !report.best_line) {
                report.max_crossed = std::max(report.max_crossed, count);
                if (count == report.max_crossed)
                    report.best_line = line;
            }
        }
    report.argument =
        "A line meets the relative interior of facet j only where lambda_j = 0 and every other lambda_b > 0. "
        "If it met three facet interiors at parameters t1 < t2 < t3, the affine function lambda_{j2} would be "
        "positive at t1 and t3 and zero at t2, which is impossible. So no line meets more than two.";
    return report;
}

} // namespace chelly
