#include "chelly/geometry.hpp"

#include <algorithm>
#include <functional>

#include "chelly/errors.hpp"
#include "chelly/linalg.hpp"

namespace chelly {

namespace {

void require_nonzero(const Vector& normal, const char* what)
{
    if (normal.empty())
        throw InputError(std::string(what) + " in dimension 0");
    if (is_zero(normal))
        throw InputError(std::string(what) + " with zero normal");
}

} // namespace

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        visit(idx);
        if (k == 0)
            return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

Halfspace::Halfspace(Vector normal, Rational offset)
    : normal_(std::move(normal)), offset_(std::move(offset))
{
    require_nonzero(normal_, "halfspace");
}

bool Halfspace::contains(const Vector& x) const
{
    return dot(normal_, x) <= offset_;
}

Halfspace Halfspace::translated(const Vector& shift) const
{
    return Halfspace(normal_, offset_ + dot(normal_, shift));
}

Hyperplane::Hyperplane(Vector normal, Rational offset)
    : normal_(std::move(normal)), offset_(std::move(offset))
{
    require_nonzero(normal_, "hyperplane");
}

bool Hyperplane::contains(const Vector& x) const
{
    return dot(normal_, x) == offset_;
}

Hyperplane Hyperplane::translated(const Vector& shift) const
{
    return Hyperplane(normal_, offset_ + dot(normal_, shift));
}

Polyhedron::Polyhedron(std::size_t dim, std::vector<Halfspace> inequalities,
                       std::vector<Hyperplane> equalities)
    : dim_(dim), inequalities_(std::move(inequalities)), equalities_(std::move(equalities))
{
    for (const auto& h : inequalities_)
        if (h.dim() != dim_)
            throw DimensionError("polyhedron in R^" + std::to_string(dim_) +
                                 " given a halfspace in R^" + std::to_string(h.dim()));
    for (const auto& h : equalities_)
        if (h.dim() != dim_)
            throw DimensionError("polyhedron in R^" + std::to_string(dim_) +
                                 " given a hyperplane in R^" + std::to_string(h.dim()));
}

Polyhedron Polyhedron::whole_space(std::size_t dim)
{
    return Polyhedron(dim);
}

Polyhedron Polyhedron::box(const Vector& lower, const Vector& upper)
{
    if (lower.size() != upper.size())
        throw DimensionError("box corners of different dimension");
    std::vector<Halfspace> rows;
    std::vector<Hyperplane> eqs;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (lower[i] > upper[i])
            throw InputError("box with lower > upper in coordinate " + std::to_string(i));
        if (lower[i] == upper[i]) {
            eqs.emplace_back(unit_vector(lower.size(), i), lower[i]);
            continue;
        }
        rows.emplace_back(unit_vector(lower.size(), i), upper[i]);
        rows.emplace_back(negate(unit_vector(lower.size(), i)), -lower[i]);
    }
    return Polyhedron(lower.size(), std::move(rows), std::move(eqs));
}

Polyhedron Polyhedron::from_vertices(const std::vector<Vector>& input)
{
    if (input.empty())
        throw InputError("vertex list is empty");
    const std::size_t d = input.front().size();
    for (const auto& v : input)
        if (v.size() != d)
            throw DimensionError("vertices of different dimension");

    std::vector<Vector> verts = input;
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    const Vector& v0 = verts.front();
    Matrix diffs;
    for (std::size_t i = 1; i < verts.size(); ++i)
        diffs.push_back(subtract(verts[i], v0));
    const std::size_t r = diffs.empty() ? 0 : rank(diffs);

    std::vector<Hyperplane> eqs;
    std::vector<Vector> eq_normals = nullspace(diffs, d);
    for (auto& n : eq_normals) {
        n = primitive_integer_direction(n);
        eqs.emplace_back(n, dot(n, v0));
    }
    if (r == 0)
        return Polyhedron(d, {}, std::move(eqs));
    if (r > 3 && verts.size() > r + 1 && verts.size() != 2 * r)
        throw InputError("vertex-list conversion in dimension " + std::to_string(r) +
                         " supports simplices and prisms only");

    std::vector<Halfspace> facets;
    for_each_subset(verts.size(), r, [&](const std::vector<std::size_t>& subset) {
        const Vector& s0 = verts[subset[0]];
        Matrix constraints;
        for (std::size_t k = 1; k < subset.size(); ++k)
            constraints.push_back(subtract(verts[subset[k]], s0));
        if (!constraints.empty() && rank(constraints) != constraints.size())
            return;
        for (const auto& n : eq_normals)
            constraints.push_back(n);
        auto normals = nullspace(constraints, d);
        if (normals.size() != 1)
            return;
        Vector n = primitive_integer_direction(normals.front());
        const Rational level = dot(n, s0);
        bool below = true, above = true;
        for (const auto& v : verts) {
            const int c = cmp(dot(n, v), level);
            below = below && c <= 0;
            above = above && c >= 0;
        }
        if (!below && !above)
            return;
        if (!below)
            n = negate(n);
        Halfspace h(n, dot(n, s0));
        if (std::find(facets.begin(), facets.end(), h) == facets.end())
            facets.push_back(std::move(h));
    });
    return Polyhedron(d, std::move(facets), std::move(eqs));
}

bool Polyhedron::contains(const Vector& x) const
{
    if (x.size() != dim_)
        throw DimensionError("membership test with a point of the wrong dimension");
    for (const auto& h : inequalities_)
        if (!h.contains(x))
            return false;
    for (const auto& h : equalities_)
        if (!h.contains(x))
            return false;
    return true;
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const
{
    if (other.dim_ != dim_)
        throw DimensionError("intersecting polyhedra of different dimension");
    auto ineqs = inequalities_;
    ineqs.insert(ineqs.end(), other.inequalities_.begin(), other.inequalities_.end());
    auto eqs = equalities_;
    eqs.insert(eqs.end(), other.equalities_.begin(), other.equalities_.end());
    return Polyhedron(dim_, std::move(ineqs), std::move(eqs));
}

Polyhedron Polyhedron::with(const Halfspace& h) const
{
    auto ineqs = inequalities_;
    ineqs.push_back(h);
    return Polyhedron(dim_, std::move(ineqs), equalities_);
}

Polyhedron Polyhedron::with(const Hyperplane& h) const
{
    auto eqs = equalities_;
    eqs.push_back(h);
    return Polyhedron(dim_, inequalities_, std::move(eqs));
}

Polyhedron Polyhedron::translated(const Vector& shift) const
{
    std::vector<Halfspace> ineqs;
    for (const auto& h : inequalities_)
        ineqs.push_back(h.translated(shift));
    std::vector<Hyperplane> eqs;
    for (const auto& h : equalities_)
        eqs.push_back(h.translated(shift));
    return Polyhedron(dim_, std::move(ineqs), std::move(eqs));
}

AffineFlat::AffineFlat(Point base, std::vector<Vector> directions)
    : base_(std::move(base)), directions_(std::move(directions))
{
    for (const auto& v : directions_)
        if (v.size() != base_.dim())
            throw DimensionError("flat direction of the wrong dimension");
    if (directions_.size() >= base_.dim() && base_.dim() > 0)
        throw InputError("a k-flat needs k < ambient dimension");
    if (!linearly_independent(directions_))
        throw InputError("flat directions are linearly dependent");
}

AffineFlat AffineFlat::point(Vector p)
{
    return AffineFlat(Point{std::move(p)}, {});
}

AffineFlat AffineFlat::line(Vector base, Vector direction)
{
    return AffineFlat(Point{std::move(base)}, {std::move(direction)});
}

AffineFlat AffineFlat::line_through(const Vector& a, const Vector& b)
{
    Vector dir = subtract(b, a);
    if (is_zero(dir))
        throw InputError("line through two equal points");
    return line(a, primitive_integer_direction(dir));
}

AffineFlat AffineFlat::from_hyperplane(const Hyperplane& h)
{
    const std::size_t d = h.dim();
    Matrix m{h.normal()};
    auto dirs = nullspace(m, d);
    auto base = solve_any(m, Vector{h.offset()}, d);
    for (auto& v : dirs)
        v = primitive_integer_direction(v);
    return AffineFlat(Point{*base}, std::move(dirs));
}

Vector AffineFlat::at(const Vector& params) const
{
    if (params.size() != directions_.size())
        throw DimensionError("flat parameter vector of the wrong length");
    Vector x = base_.coords;
    for (std::size_t i = 0; i < params.size(); ++i)
        axpy(x, params[i], directions_[i]);
    return x;
}

bool AffineFlat::contains(const Vector& x) const
{
    if (x.size() != dim())
        throw DimensionError("flat membership with a point of the wrong dimension");
    Matrix cols(dim(), Vector(directions_.size()));
    for (std::size_t j = 0; j < directions_.size(); ++j)
        for (std::size_t i = 0; i < dim(); ++i)
            cols[i][j] = directions_[j][i];
    return solve_any(cols, subtract(x, base_.coords), directions_.size()).has_value();
}

std::vector<Vector> enumerate_vertices(const Polyhedron& p)
{
    const std::size_t d = p.dim();
    Matrix rows;
    Vector rhs;
    for (const auto& h : p.equalities()) {
        rows.push_back(h.normal());
        rhs.push_back(h.offset());
    }
    for (const auto& h : p.inequalities()) {
        rows.push_back(h.normal());
        rhs.push_back(h.offset());
    }
    std::vector<Vector> out;
    if (d == 0)
        return out;
    for_each_subset(rows.size(), d, [&](const std::vector<std::size_t>& subset) {
        Matrix m;
        Vector b;
        for (auto i : subset) {
            m.push_back(rows[i]);
            b.push_back(rhs[i]);
        }
        auto x = solve_unique(m, b, d);
        if (x && p.contains(*x))
            out.push_back(std::move(*x));
    });
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool lex_less(const Vector& a, const Vector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& x, const Rational& y) { return x < y; });
}

int affine_dimension(const std::vector<Vector>& points)
{
    if (points.empty())
        return -1;
    Matrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(subtract(points[i], points[0]));
    return diffs.empty() ? 0 : static_cast<int>(rank(diffs));
}

} // namespace chelly
