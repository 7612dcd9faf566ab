#include "chelly/transversals.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "chelly/errors.hpp"
#include "chelly/polyhedra.hpp"

namespace chelly {

namespace {

Vector flat_key(const AffineFlat& f)
{
    Vector key = f.base().coords;
    for (const auto& d : f.directions())
        key.insert(key.end(), d.begin(), d.end());
    return key;
}

class FlatSet
{
public:
    void add(AffineFlat f)
    {
        if (f.k() == 1)
            f = canonical_line(f);
        if (index_.emplace(flat_key(f), flats_.size()).second)
            flats_.push_back(std::move(f));
    }
    std::vector<AffineFlat> take() { return std::move(flats_); }
    std::size_t size() const { return flats_.size(); }

private:
    std::map<Vector, std::size_t> index_;
    std::vector<AffineFlat> flats_;
};

std::size_t connected_components(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& label)
{
    const std::size_t n = adj.size();
    label.assign(n, SIZE_MAX);
    std::size_t count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (label[s] != SIZE_MAX)
            continue;
        std::vector<std::size_t> stack{s};
        label[s] = count;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (std::size_t u = 0; u < n; ++u)
                if (adj[v][u] && label[u] == SIZE_MAX) {
                    label[u] = count;
                    stack.push_back(u);
                }
        }
        ++count;
    }
    return count;
}

class MaximalCliques
{
public:
    MaximalCliques(const std::vector<Polyhedron>& fam, const std::vector<std::vector<bool>>& adj)
        : fam_(fam), adj_(adj)
    {
    }

    void run(const std::vector<std::size_t>& component)
    {
        std::vector<std::size_t> r;
        expand(r, component, {});
    }

    std::vector<IntersectingSubfamily> found;

private:
    bool meets(const std::vector<std::size_t>& r, std::size_t u) const
    {
        for (auto v : r)
            if (!adj_[v][u])
                return false;
        if (r.size() < 2)
            return true;
        std::vector<const Polyhedron*> sets;
        for (auto v : r)
            sets.push_back(&fam_[v]);
        sets.push_back(&fam_[u]);
        return common_point(sets).has_value();
    }

    void expand(std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x)
    {
        if (p.empty() && x.empty()) {
            std::vector<const Polyhedron*> sets;
            for (auto v : r)
                sets.push_back(&fam_[v]);
            auto point = common_point(sets);
            if (!point)
                throw TheoremViolation("clique of intersecting sets lost its common point");
            auto members = r;
            std::sort(members.begin(), members.end());
            found.push_back({std::move(members), Point{*point}});
            return;
        }
        while (!p.empty()) {
            auto v = p.front();
            p.erase(p.begin());
            r.push_back(v);
            std::vector<std::size_t> p2, x2;
            for (auto u : p)
                if (meets(r, u))
                    p2.push_back(u);
            for (auto u : x)
                if (meets(r, u))
                    x2.push_back(u);
            expand(r, std::move(p2), std::move(x2));
            r.pop_back();
            x.push_back(v);
        }
    }

    const std::vector<Polyhedron>& fam_;
    const std::vector<std::vector<bool>>& adj_;
};

AffineFlat plane_line(const AffineFlat& carrier, const Vector& at, const Vector& direction)
{
    Vector dir = zero_vector(carrier.dim());
    for (std::size_t i = 0; i < 2; ++i)
        axpy(dir, direction[i], carrier.directions()[i]);
    return AffineFlat::line(carrier.at(at), primitive_integer_direction(dir));
}

void check_family(const std::vector<Polyhedron>& fam)
{
    for (std::size_t i = 1; i < fam.size(); ++i)
        if (fam[i].dim() != fam.front().dim())
            throw DimensionError("family mixes ambient dimensions");
}

} // namespace

AffineFlat canonical_line(const AffineFlat& line)
{
    if (line.k() != 1)
        throw InputError("canonical_line expects a 1-flat");
    Vector dir = primitive_integer_direction(line.directions().front());
    const std::size_t a = projection_axis(dir);
    if (sgn(dir[a]) < 0)
        dir = negate(dir);
    Vector base = line.base().coords;
    Rational t = base[a] / dir[a];
    axpy(base, -t, dir);
    return AffineFlat::line(std::move(base), std::move(dir));
}

std::vector<IntersectingSubfamily> maximal_intersecting_subfamilies(const std::vector<Polyhedron>& fam,
                                                                    const SearchBudget& budget)
{
    check_family(fam);
    const std::size_t n = fam.size();
    for (std::size_t i = 0; i < n; ++i)
        if (is_empty(fam[i]))
            throw PreconditionError("set " + std::to_string(i) + " is empty and cannot be pierced");
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            adj[i][j] = adj[j][i] = intersects(fam[i], fam[j]);

    std::vector<std::size_t> label;
    const std::size_t count = connected_components(adj, label);
    MaximalCliques cliques(fam, adj);
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (label[i] == c)
                members.push_back(i);
        if (members.size() > budget.max_family_size)
            throw ScaleError("subfamily enumeration needs a component of " + std::to_string(members.size()) +
                             " sets (budget " + std::to_string(budget.max_family_size) + ")");
        cliques.run(members);
    }
    return std::move(cliques.found);
}

Hypergraph build_point_hypergraph(const std::vector<Polyhedron>& fam, const SearchBudget& budget)
{
    auto subfamilies = maximal_intersecting_subfamilies(fam, budget);
    Hypergraph h;
    h.vertex_count = subfamilies.size();
    h.edges.assign(fam.size(), {});
    for (std::size_t v = 0; v < subfamilies.size(); ++v) {
        for (auto i : subfamilies[v].members)
            h.edges[i].push_back(v);
        h.payload.emplace_back(subfamilies[v].point);
    }
    return h;
}

Hypergraph candidate_hypergraph(const std::vector<Polyhedron>& fam, const std::vector<AffineFlat>& candidates)
{
    Hypergraph h;
    h.vertex_count = candidates.size();
    for (std::size_t i = 0; i < fam.size(); ++i) {
        std::vector<std::size_t> edge;
        for (std::size_t c = 0; c < candidates.size(); ++c)
            if (flat_crosses(candidates[c], fam[i]))
                edge.push_back(c);
        if (edge.empty())
            throw PreconditionError("set " + std::to_string(i) + " meets no candidate flat");
        h.edges.push_back(std::move(edge));
    }
    for (const auto& c : candidates)
        h.payload.emplace_back(c);
    return h;
}

Hypergraph build_flat_hypergraph(const std::vector<Polyhedron>& fam, const std::vector<AffineFlat>& carriers,
                                 std::size_t k, const SearchBudget& budget)
{
    check_family(fam);
    if (k != 1 && k != 2)
        throw InputError("candidate flats are generated only for k = 1 (points on lines) and k = 2 "
                         "(lines in planes), got k = " + std::to_string(k));
    for (const auto& c : carriers) {
        if (c.k() != k)
            throw InputError("carrier of dimension " + std::to_string(c.k()) + " where k = " +
                             std::to_string(k) + " was requested");
        if (!fam.empty() && c.dim() != fam.front().dim())
            throw DimensionError("carrier and family live in different spaces");
    }

    FlatSet candidates;
    for (const auto& carrier : carriers) {
        if (k == 1) {
            for (const auto& s : fam) {
                Polyhedron section = restrict_to_flat(s, carrier);
                if (is_empty(section))
                    continue;
                bool finite = false;
                for (int sign : {1, -1}) {
                    auto out = maximize_over(section, Vector{Rational(sign)});
                    if (const auto* opt = std::get_if<LpOptimal>(&out)) {
                        candidates.add(AffineFlat::point(carrier.at(opt->point)));
                        finite = true;
                    }
                }
                if (!finite)
                    candidates.add(AffineFlat::point(carrier.at(Vector{Rational(0)})));
            }
            continue;
        }
        std::vector<Vector> vertices;
        for (const auto& s : fam) {
            Polyhedron section = restrict_to_flat(s, carrier);
            auto point = common_point({&section});
            if (!point)
                continue;
            auto vs = enumerate_vertices(section);
            Vector anchor = vs.empty() ? *point : vs.front();
            candidates.add(plane_line(carrier, anchor, Vector{Rational(1), Rational(0)}));
            vertices.insert(vertices.end(), vs.begin(), vs.end());
        }
        std::sort(vertices.begin(), vertices.end(), lex_less);
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        for (std::size_t a = 0; a < vertices.size(); ++a)
            for (std::size_t b = a + 1; b < vertices.size(); ++b) {
                candidates.add(plane_line(carrier, vertices[a], subtract(vertices[b], vertices[a])));
                if (candidates.size() > budget.max_line_candidates)
                    throw ScaleError("more than " + std::to_string(budget.max_line_candidates) +
                                     " candidate lines");
            }
    }
    return candidate_hypergraph(fam, candidates.take());
}

std::vector<AffineFlat> vertex_pair_lines(const std::vector<Polyhedron>& fam, const SearchBudget& budget)
{
    check_family(fam);
    std::vector<Vector> vertices;
    FlatSet candidates;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        if (is_empty(fam[i]))
            throw PreconditionError("set " + std::to_string(i) + " is empty and cannot be crossed");
        if (!is_bounded(fam[i]))
            throw InputError("set " + std::to_string(i) + " is unbounded; line candidates need polytopes");
        auto vs = enumerate_vertices(fam[i]);
        candidates.add(AffineFlat::line(vs.front(), unit_vector(fam[i].dim(), 0)));
        vertices.insert(vertices.end(), vs.begin(), vs.end());
    }
    std::sort(vertices.begin(), vertices.end(), lex_less);
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    const std::size_t pairs = vertices.size() * (vertices.size() - (vertices.empty() ? 0 : 1)) / 2;
    if (pairs > budget.max_line_candidates)
        throw ScaleError(std::to_string(pairs) + " vertex pairs exceed the candidate line budget of " +
                         std::to_string(budget.max_line_candidates));
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            candidates.add(AffineFlat::line_through(vertices[a], vertices[b]));
    return candidates.take();
}

PointTransversal piercing_number(const std::vector<Polyhedron>& fam, const SearchBudget& budget)
{
    Hypergraph h = build_point_hypergraph(fam, budget);
    PointTransversal out;
    out.search = tau(h, budget);
    for (auto v : out.search.witness)
        out.points.push_back(std::get<Point>(h.payload[v]));
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (std::none_of(out.points.begin(), out.points.end(), [&](const Point& p) { return fam[i].contains(p); }))
            throw TheoremViolation("piercing points miss set " + std::to_string(i));
    return out;
}

LineTransversal line_cover_upper_bound(const std::vector<Polyhedron>& fam, const SearchBudget& budget)
{
    LineTransversal out;
    if (fam.empty())
        return out;
    auto candidates = vertex_pair_lines(fam, budget);
    out.candidate_count = candidates.size();
    Hypergraph h = candidate_hypergraph(fam, candidates);
    out.search = tau(h, budget);
    for (auto v : out.search.witness)
        out.lines.push_back(candidates[v]);
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (std::none_of(out.lines.begin(), out.lines.end(),
                         [&](const AffineFlat& l) { return flat_crosses(l, fam[i]); }))
            throw TheoremViolation("cover lines miss set " + std::to_string(i));
    if (fam.front().dim() != 2) {
        out.search.upper_bound_only = true;
        out.search.lower_bound = 1;
    }
    return out;
}

LineTransversal line_cover_number(const std::vector<Polyhedron>& fam, const SearchBudget& budget)
{
    if (!fam.empty() && fam.front().dim() != 2)
        throw DimensionError("exact line covers are computed in the plane only");
    return line_cover_upper_bound(fam, budget);
}

} // namespace chelly
