#include "chelly/polyhedra.hpp"

#include <algorithm>
#include <string>

#include "chelly/errors.hpp"

namespace chelly {

std::vector<LinearConstraint> constraint_rows(const Polyhedron& p)
{
    std::vector<LinearConstraint> rows;
    rows.reserve(p.row_count());
    for (const auto& h : p.inequalities())
        rows.push_back({h.normal(), Relation::LessEqual, h.offset()});
    for (const auto& h : p.equalities())
        rows.push_back({h.normal(), Relation::Equal, h.offset()});
    return rows;
}

LpProblem intersection_problem(const std::vector<const Polyhedron*>& sets)
{
    if (sets.empty())
        throw InputError("intersection of an empty list of sets is ambiguous");
    LpProblem lp;
    lp.num_vars = sets.front()->dim();
    for (const auto* s : sets) {
        if (s->dim() != lp.num_vars)
            throw DimensionError("intersecting sets of different ambient dimension");
        auto rows = constraint_rows(*s);
        lp.constraints.insert(lp.constraints.end(), rows.begin(), rows.end());
    }
    return lp;
}

Certificate polyhedra_intersect(const std::vector<const Polyhedron*>& sets)
{
    LpProblem lp = intersection_problem(sets);
    LpOutcome out = lp_solve(lp);
    if (auto* inf = std::get_if<LpInfeasible>(&out)) {
        FarkasCertificate cert;
        cert.multipliers = std::move(inf->farkas);
        for (const auto* s : sets)
            cert.row_counts.push_back(s->row_count());
        return cert;
    }
    return PointCertificate{Point{outcome_point(out)}};
}

Certificate polyhedra_intersect(const std::vector<Polyhedron>& sets)
{
    std::vector<const Polyhedron*> refs;
    refs.reserve(sets.size());
    for (const auto& s : sets)
        refs.push_back(&s);
    return polyhedra_intersect(refs);
}

std::optional<Vector> common_point(const std::vector<const Polyhedron*>& sets)
{
    Certificate c = polyhedra_intersect(sets);
    if (auto* p = std::get_if<PointCertificate>(&c))
        return p->point.coords;
    return std::nullopt;
}

bool intersects(const Polyhedron& a, const Polyhedron& b)
{
    return common_point({&a, &b}).has_value();
}

bool is_empty(const Polyhedron& p)
{
    return !common_point({&p}).has_value();
}

bool verify_intersection_certificate(const std::vector<const Polyhedron*>& sets,
                                     const Certificate& cert)
{
    if (sets.empty())
        return false;
    if (const auto* p = std::get_if<PointCertificate>(&cert)) {
        for (const auto* s : sets)
            if (p->point.dim() != s->dim() || !s->contains(p->point))
                return false;
        return true;
    }
    if (const auto* f = std::get_if<FarkasCertificate>(&cert)) {
        if (f->row_counts.size() != sets.size())
            return false;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (f->row_counts[i] != sets[i]->row_count())
                return false;
        return farkas_certifies(intersection_problem(sets).constraints, f->multipliers);
    }
    return false;
}

LpOutcome maximize_over(const Polyhedron& p, const Vector& objective)
{
    if (objective.size() != p.dim())
        throw DimensionError("objective of the wrong dimension");
    LpProblem lp;
    lp.num_vars = p.dim();
    lp.objective = objective;
    lp.constraints = constraint_rows(p);
    return lp_solve(lp);
}

bool is_bounded(const Polyhedron& p)
{
    if (is_empty(p))
        return true;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        for (int s : {1, -1}) {
            Vector obj = zero_vector(p.dim());
            obj[i] = s;
            if (std::holds_alternative<LpUnbounded>(maximize_over(p, obj)))
                return false;
        }
    }
    return true;
}

Polyhedron restrict_to_flat(const Polyhedron& s, const AffineFlat& f)
{
    if (f.dim() != s.dim())
        throw DimensionError("flat and set in different ambient dimensions");
    const std::size_t k = f.k();
    if (k == 0)
        throw InputError("restricting to a 0-flat has no parameter space");
    auto row_on_flat = [&](const Vector& normal, const Rational& offset) {
        Vector coeffs(k);
        for (std::size_t j = 0; j < k; ++j)
            coeffs[j] = dot(normal, f.directions()[j]);
        Rational rhs = offset - dot(normal, f.base().coords);
        return std::make_pair(std::move(coeffs), std::move(rhs));
    };
    std::vector<Halfspace> ineqs;
    std::vector<Hyperplane> eqs;
    bool contradiction = false;
    for (const auto& h : s.inequalities()) {
        auto [c, r] = row_on_flat(h.normal(), h.offset());
        if (is_zero(c))
            contradiction = contradiction || sgn(r) < 0;
        else
            ineqs.emplace_back(std::move(c), std::move(r));
    }
    for (const auto& h : s.equalities()) {
        auto [c, r] = row_on_flat(h.normal(), h.offset());
        if (is_zero(c))
            contradiction = contradiction || sgn(r) != 0;
        else
            eqs.emplace_back(std::move(c), std::move(r));
    }
    if (contradiction) {
        ineqs = {Halfspace(unit_vector(k, 0), Rational(-1)),
                 Halfspace(negate(unit_vector(k, 0)), Rational(0))};
        eqs.clear();
    }
    return Polyhedron(k, std::move(ineqs), std::move(eqs));
}

namespace {

/// Exact solution of a one-variable feasibility system c_i t (<=|=) r_i.
bool univariate_feasible(const std::vector<LinearConstraint>& rows)
{
    std::optional<Rational> lo, hi;
    for (const auto& row : rows) {
        const Rational& c = row.coeffs[0];
        if (sgn(c) == 0) {
            if (row.relation == Relation::LessEqual ? sgn(row.rhs) < 0 : sgn(row.rhs) != 0)
                return false;
            continue;
        }
        const Rational bound = row.rhs / c;
        const bool upper = row.relation == Relation::Equal || sgn(c) > 0;
        const bool lower = row.relation == Relation::Equal || sgn(c) < 0;
        if (upper && (!hi || bound < *hi))
            hi = bound;
        if (lower && (!lo || bound > *lo))
            lo = bound;
    }
    return !lo || !hi || *lo <= *hi;
}

} // namespace

bool flat_crosses(const AffineFlat& f, const Polyhedron& s)
{
    if (f.dim() != s.dim())
        throw DimensionError("flat in R^" + std::to_string(f.dim()) + " tested against a set in R^" +
                             std::to_string(s.dim()));
    if (f.k() == 0)
        return s.contains(f.base());
    std::vector<LinearConstraint> rows;
    rows.reserve(s.row_count());
    auto push = [&](const Vector& normal, const Rational& offset, Relation rel) {
        Vector coeffs(f.k());
        for (std::size_t j = 0; j < f.k(); ++j)
            coeffs[j] = dot(normal, f.directions()[j]);
        rows.push_back({std::move(coeffs), rel, offset - dot(normal, f.base().coords)});
    };
    for (const auto& h : s.inequalities())
        push(h.normal(), h.offset(), Relation::LessEqual);
    for (const auto& h : s.equalities())
        push(h.normal(), h.offset(), Relation::Equal);
    if (f.k() == 1)
        return univariate_feasible(rows);
    LpProblem lp;
    lp.num_vars = f.k();
    lp.constraints = std::move(rows);
    return !is_infeasible(lp_solve(lp));
}

namespace {

Polyhedron canonical_empty(std::size_t dim)
{
    if (dim == 0)
        throw DimensionError("cannot represent the empty set in R^0");
    return Polyhedron(dim, {Halfspace(unit_vector(dim, 0), Rational(-1)),
                            Halfspace(negate(unit_vector(dim, 0)), Rational(0))});
}

/// Scales a row so its normal is a primitive integer vector (positive factor).
std::pair<Vector, Rational> normalized_row(const Vector& normal, const Rational& offset)
{
    Vector prim = primitive_integer_direction(normal);
    std::size_t i = 0;
    while (sgn(normal[i]) == 0)
        ++i;
    const Rational factor = prim[i] / normal[i];
    return {std::move(prim), offset * factor};
}

Vector drop_coordinate(const Vector& v, std::size_t coordinate)
{
    Vector r;
    r.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != coordinate)
            r.push_back(v[i]);
    return r;
}

} // namespace

Polyhedron remove_redundant(const Polyhedron& p)
{
    if (is_empty(p))
        return canonical_empty(p.dim());
    std::vector<std::pair<Vector, Rational>> rows;
    for (const auto& h : p.inequalities()) {
        auto row = normalized_row(h.normal(), h.offset());
        auto same = std::find_if(rows.begin(), rows.end(),
                                 [&](const auto& r) { return r.first == row.first; });
        if (same == rows.end())
            rows.push_back(std::move(row));
        else if (row.second < same->second)
            same->second = row.second;
    }
    std::vector<Hyperplane> eqs;
    for (const auto& h : p.equalities()) {
        auto [n, o] = normalized_row(h.normal(), h.offset());
        Hyperplane e(n, o);
        Hyperplane flipped(negate(n), -o);
        if (std::find(eqs.begin(), eqs.end(), e) == eqs.end() &&
            std::find(eqs.begin(), eqs.end(), flipped) == eqs.end())
            eqs.push_back(std::move(e));
    }

    std::vector<bool> kept(rows.size(), true);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Halfspace> others;
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != i && kept[j])
                others.emplace_back(rows[j].first, rows[j].second);
        Polyhedron relaxed(p.dim(), std::move(others), eqs);
        LpOutcome out = maximize_over(relaxed, rows[i].first);
        if (const auto* opt = std::get_if<LpOptimal>(&out); opt && opt->value <= rows[i].second)
            kept[i] = false;
    }
    std::vector<Halfspace> ineqs;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (kept[i])
            ineqs.emplace_back(rows[i].first, rows[i].second);
    return Polyhedron(p.dim(), std::move(ineqs), std::move(eqs));
}

Polyhedron eliminate_coordinate(const Polyhedron& p, std::size_t coordinate)
{
    const std::size_t d = p.dim();
    if (coordinate >= d)
        throw DimensionError("eliminating a coordinate outside the ambient dimension");
    if (d == 1)
        throw DimensionError("cannot eliminate the only coordinate");
    if (is_empty(p))
        return canonical_empty(d - 1);

    struct Row
    {
        Vector normal;
        Rational offset;
    };
    std::vector<Row> ineqs, eqs;
    for (const auto& h : p.inequalities())
        ineqs.push_back({h.normal(), h.offset()});
    for (const auto& h : p.equalities())
        eqs.push_back({h.normal(), h.offset()});

    // Substitute through an equality that involves the coordinate, if any.
    auto pivot_eq = std::find_if(eqs.begin(), eqs.end(),
                                 [&](const Row& r) { return sgn(r.normal[coordinate]) != 0; });
    std::vector<Row> out_ineqs, out_eqs;
    if (pivot_eq != eqs.end()) {
        const Row pivot = *pivot_eq;
        eqs.erase(pivot_eq);
        auto substitute = [&](const Row& r) {
            const Rational f = r.normal[coordinate] / pivot.normal[coordinate];
            Row s = r;
            axpy(s.normal, -f, pivot.normal);
            s.offset -= f * pivot.offset;
            return s;
        };
        for (const auto& r : ineqs)
            out_ineqs.push_back(substitute(r));
        for (const auto& r : eqs)
            out_eqs.push_back(substitute(r));
    } else {
        std::vector<Row> pos, neg;
        for (auto& r : ineqs) {
            const int s = sgn(r.normal[coordinate]);
            if (s > 0)
                pos.push_back(r);
            else if (s < 0)
                neg.push_back(r);
            else
                out_ineqs.push_back(r);
        }
        for (const auto& a : pos) {
            for (const auto& b : neg) {
                const Rational wa = -b.normal[coordinate];
                const Rational wb = a.normal[coordinate];
                Row c{scale(a.normal, wa), a.offset * wa};
                axpy(c.normal, wb, b.normal);
                c.offset += wb * b.offset;
                out_ineqs.push_back(std::move(c));
            }
        }
        out_eqs = eqs;
    }

    std::vector<Halfspace> hs;
    std::vector<Hyperplane> hp;
    for (const auto& r : out_ineqs) {
        Vector n = drop_coordinate(r.normal, coordinate);
        if (is_zero(n)) {
            if (sgn(r.offset) < 0)
                return canonical_empty(d - 1);
            continue;
        }
        hs.emplace_back(std::move(n), r.offset);
    }
    for (const auto& r : out_eqs) {
        Vector n = drop_coordinate(r.normal, coordinate);
        if (is_zero(n)) {
            if (sgn(r.offset) != 0)
                return canonical_empty(d - 1);
            continue;
        }
        hp.emplace_back(std::move(n), r.offset);
    }
    return remove_redundant(Polyhedron(d - 1, std::move(hs), std::move(hp)));
}

std::size_t projection_axis(const Vector& direction)
{
    for (std::size_t i = 0; i < direction.size(); ++i)
        if (sgn(direction[i]) != 0)
            return i;
    throw InputError("projection direction is the zero vector");
}

Polyhedron project_along(const Polyhedron& p, const Vector& direction)
{
    if (direction.size() != p.dim())
        throw DimensionError("projection direction of the wrong dimension");
    const std::size_t axis = projection_axis(direction);
    // x = z + t * direction with z_axis = 0; the axis slot now carries t.
    auto lift = [&](const Vector& normal) {
        Vector n = normal;
        n[axis] = dot(normal, direction);
        return n;
    };
    std::vector<Halfspace> ineqs;
    std::vector<Hyperplane> eqs;
    bool contradiction = false;
    for (const auto& h : p.inequalities()) {
        Vector n = lift(h.normal());
        if (is_zero(n))
            contradiction = contradiction || sgn(h.offset()) < 0;
        else
            ineqs.emplace_back(std::move(n), h.offset());
    }
    for (const auto& h : p.equalities()) {
        Vector n = lift(h.normal());
        if (is_zero(n))
            contradiction = contradiction || sgn(h.offset()) != 0;
        else
            eqs.emplace_back(std::move(n), h.offset());
    }
    if (contradiction)
        return canonical_empty(p.dim() - 1);
    return eliminate_coordinate(Polyhedron(p.dim(), std::move(ineqs), std::move(eqs)), axis);
}

std::vector<Polyhedron> affine_project(const std::vector<Polyhedron>& family, const Vector& direction)
{
    if (is_zero(direction))
        throw InputError("projection direction is the zero vector");
    std::vector<Polyhedron> out;
    out.reserve(family.size());
    for (const auto& p : family)
        out.push_back(project_along(p, direction));
    return out;
}

AffineFlat lift_projected_point(const Vector& projected, const Vector& direction)
{
    if (projected.size() + 1 != direction.size())
        throw DimensionError("projected point must have one coordinate fewer than the direction");
    const std::size_t axis = projection_axis(direction);
    Vector base;
    base.reserve(direction.size());
    for (std::size_t i = 0, j = 0; i < direction.size(); ++i)
        base.push_back(i == axis ? Rational(0) : projected[j++]);
    return AffineFlat::line(std::move(base), primitive_integer_direction(direction));
}

} // namespace chelly
