#include "chelly/colorful.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "chelly/errors.hpp"
#include "chelly/linalg.hpp"
#include "chelly/polyhedra.hpp"
#include "chelly/transversals.hpp"

namespace chelly {

namespace {

std::string describe(const std::vector<SetRef>& refs)
{
    std::string s;
    for (const auto& r : refs)
        s += (s.empty() ? "" : ", ") + std::string("class ") + std::to_string(r.cls) + " set " +
             std::to_string(r.index);
    return s;
}

class RainbowSearch
{
public:
    RainbowSearch(const ColoredFamily& fam, ChReport& report) : fam_(fam), report_(report) {}

    void run()
    {
        std::vector<const Polyhedron*> chosen;
        std::vector<SetRef> refs;
        descend(0, chosen, refs, std::nullopt);
    }

private:
    bool descend(std::size_t level, std::vector<const Polyhedron*>& chosen, std::vector<SetRef>& refs,
                 const std::optional<Vector>& point)
    {
        if (level == fam_.classes.size()) {
            ++report_.tuples_checked;
            return true;
        }
        const auto& cls = fam_.classes[level];
        for (std::size_t s = 0; s < cls.size(); ++s) {
            chosen.push_back(&cls[s]);
            refs.push_back({level, s});
            std::optional<Vector> next;
            if (point && cls[s].contains(*point))
                next = point;
            else
                next = common_point(chosen);
            bool ok = next ? descend(level + 1, chosen, refs, next) : fail(level, chosen, refs);
            chosen.pop_back();
            refs.pop_back();
            if (!ok)
                return false;
        }
        return true;
    }

    bool fail(std::size_t level, std::vector<const Polyhedron*> chosen, std::vector<SetRef> refs)
    {
        for (std::size_t c = level + 1; c < fam_.classes.size(); ++c) {
            chosen.push_back(&fam_.classes[c].front());
            refs.push_back({c, 0});
        }
        auto cert = polyhedra_intersect(chosen);
        report_.holds = false;
        report_.violating_rainbow = refs;
        report_.certificate = std::get<FarkasCertificate>(cert);
        return false;
    }

    const ColoredFamily& fam_;
    ChReport& report_;
};

std::vector<const Polyhedron*> refs_of(const std::vector<Polyhedron>& sets)
{
    std::vector<const Polyhedron*> out;
    for (const auto& s : sets)
        out.push_back(&s);
    return out;
}

bool meets_hyperplane(const Polyhedron& s, const Hyperplane& h)
{
    return intersects(s, Polyhedron(s.dim(), {}, {h}));
}

/// Any halfspace containing s, taken from one of its rows.
std::optional<Halfspace> row_halfspace(const Polyhedron& s)
{
    if (!s.inequalities().empty())
        return s.inequalities().front();
    if (!s.equalities().empty())
        return Halfspace(s.equalities().front().normal(), s.equalities().front().offset());
    return std::nullopt;
}

/// Halfspace disjoint from the non-empty intersection of `others`, or nullopt.
std::optional<Halfspace> separate_from(const std::vector<Halfspace>& others, std::size_t d)
{
    Polyhedron k(d, others);
    for (const auto& h : others) {
        auto out = maximize_over(k, negate(h.normal()));
        if (const auto* opt = std::get_if<LpOptimal>(&out))
            return Halfspace(h.normal(), -opt->value - 1);
    }
    return std::nullopt;
}

std::vector<Polyhedron> select(const std::vector<Polyhedron>& sets, const std::vector<std::size_t>& idx)
{
    std::vector<Polyhedron> out;
    for (auto i : idx)
        out.push_back(sets[i]);
    return out;
}

void check_same_dim(const std::vector<Polyhedron>& sets, std::size_t d)
{
    for (const auto& s : sets)
        if (s.dim() != d)
            throw DimensionError("sets of different ambient dimension");
}

Hyperplane canonical_hyperplane(const Vector& normal, const Vector& through)
{
    Vector n = primitive_integer_direction(normal);
    if (sgn(n[projection_axis(n)]) < 0)
        n = negate(n);
    Rational offset = dot(n, through);
    return Hyperplane(std::move(n), std::move(offset));
}

/// Hyperplanes through d affinely independent vertices of the bounded sets.
std::vector<Hyperplane> vertex_hyperplanes(const std::vector<Polyhedron>& sets, std::size_t d, std::size_t cap,
                                           bool& truncated)
{
    std::vector<Vector> vertices;
    for (const auto& s : sets)
        if (is_bounded(s) && !is_empty(s)) {
            auto vs = enumerate_vertices(s);
            vertices.insert(vertices.end(), vs.begin(), vs.end());
        }
    std::sort(vertices.begin(), vertices.end(), lex_less);
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    Rational combos = 1;
    for (std::size_t i = 0; i < d; ++i)
        combos = combos * Rational(static_cast<unsigned long>(vertices.size() - std::min(i, vertices.size()))) /
                 Rational(static_cast<unsigned long>(i + 1));
    truncated = combos > Rational(static_cast<unsigned long>(cap));
    std::vector<Hyperplane> out;
    if (truncated)
        return out;
    std::map<Vector, bool> seen;
    for_each_subset(vertices.size(), d, [&](const std::vector<std::size_t>& subset) {
        Matrix m;
        for (std::size_t i = 1; i < subset.size(); ++i)
            m.push_back(subtract(vertices[subset[i]], vertices[subset[0]]));
        auto ns = nullspace(m, d);
        if (ns.size() != 1)
            return;
        Hyperplane h = canonical_hyperplane(ns.front(), vertices[subset[0]]);
        Vector key = h.normal();
        key.push_back(h.offset());
        if (seen.emplace(key, true).second)
            out.push_back(h);
    });
    return out;
}

std::vector<Vector> probe_directions(std::size_t d)
{
    std::vector<Vector> dirs;
    for (std::size_t i = 0; i < d; ++i)
        dirs.push_back(unit_vector(d, i));
    Vector ones(d, Rational(1)), ramp;
    for (std::size_t i = 0; i < d; ++i)
        ramp.emplace_back(static_cast<unsigned long>(i + 1));
    dirs.push_back(ones);
    dirs.push_back(ramp);
    return dirs;
}

struct CoverAttempt
{
    std::optional<std::size_t> value;
    bool upper_bound_only = false;
    std::string note;
};

CoverAttempt flat_cover(const std::vector<Polyhedron>& sets, std::size_t k, std::size_t d,
                        const SearchBudget& budget)
{
    CoverAttempt out;
    if (sets.empty()) {
        out.value = 0;
        return out;
    }
    if (k >= d) {
        out.value = 1;
        return out;
    }
    const bool all_bounded = std::all_of(sets.begin(), sets.end(), [](const auto& s) { return is_bounded(s); });
    try {
        if (k == 1 && d == 2 && all_bounded) {
            out.value = line_cover_number(sets, budget).search.tau;
            return out;
        }
        std::vector<AffineFlat> candidates;
        std::vector<Polyhedron> bounded;
        for (const auto& s : sets)
            if (is_bounded(s))
                bounded.push_back(s);
        if (k == 1) {
            if (!bounded.empty())
                candidates = vertex_pair_lines(bounded, budget);
            for (const auto& s : sets) {
                auto p = common_point({&s});
                for (const auto& dir : probe_directions(d))
                    candidates.push_back(AffineFlat::line(*p, dir));
            }
        } else {
            bool truncated = false;
            for (const auto& h : vertex_hyperplanes(bounded, d, budget.max_line_candidates, truncated))
                candidates.push_back(AffineFlat::from_hyperplane(h));
            if (truncated)
                out.note = "vertex-spanned hyperplane candidates skipped (budget); ";
            for (const auto& s : sets) {
                auto p = common_point({&s});
                for (const auto& n : probe_directions(d))
                    candidates.push_back(AffineFlat::from_hyperplane(canonical_hyperplane(n, *p)));
            }
        }
        Hypergraph h = candidate_hypergraph(sets, candidates);
        out.value = tau(h, budget).tau;
        out.upper_bound_only = true;
        out.note += "minimum over " + std::to_string(candidates.size()) + " candidate flats";
    } catch (const ScaleError& e) {
        out.note = e.what();
    }
    return out;
}

} // namespace

void ColoredFamily::validate() const
{
    if (!labels.empty() && labels.size() != classes.size())
        throw InputError("label count does not match class count");
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].empty())
            throw InputError("class " + std::to_string(c) + " is empty");
        for (const auto& s : classes[c])
            if (s.dim() != dim)
                throw DimensionError("class " + std::to_string(c) + " holds a set of dimension " +
                                     std::to_string(s.dim()) + " in a family of dimension " + std::to_string(dim));
    }
}

std::vector<Polyhedron> ColoredFamily::all_sets() const
{
    std::vector<Polyhedron> out;
    for (const auto& c : classes)
        out.insert(out.end(), c.begin(), c.end());
    return out;
}

ChReport check_ch(const ColoredFamily& fam, const SearchBudget& budget)
{
    fam.validate();
    std::size_t product = 1;
    for (const auto& c : fam.classes) {
        if (product > budget.max_rainbow_tuples / c.size() + 1)
            throw ScaleError("rainbow enumeration exceeds " + std::to_string(budget.max_rainbow_tuples) + " tuples");
        product *= c.size();
    }
    if (product > budget.max_rainbow_tuples)
        throw ScaleError(std::to_string(product) + " rainbow tuples exceed the budget of " +
                         std::to_string(budget.max_rainbow_tuples));
    ChReport report;
    RainbowSearch(fam, report).run();
    return report;
}

ClassPoint intersecting_class(const ColoredFamily& fam, const SearchBudget& budget)
{
    fam.validate();
    if (fam.classes.size() < fam.dim + 1)
        throw InputError("intersecting_class needs at least dim + 1 classes");
    for (std::size_t c = 0; c < fam.classes.size(); ++c)
        if (auto p = common_point(refs_of(fam.classes[c])))
            return {c, Point{*p}};
    auto report = check_ch(fam, budget);
    if (!report.holds)
        throw PreconditionError("colorful Helly hypothesis fails on rainbow (" + describe(*report.violating_rainbow) +
                                ")");
    throw TheoremViolation("no class of a colorful Helly family has a common point");
}

SeparatingHalfspaces separating_halfspaces(const std::vector<Polyhedron>& sets)
{
    auto cert = polyhedra_intersect(sets);
    if (const auto* p = std::get_if<PointCertificate>(&cert))
        throw PreconditionError("the sets share a point", p->point.coords);
    const auto& farkas = std::get<FarkasCertificate>(cert);
    const std::size_t d = sets.front().dim();

    std::vector<Vector> normals;
    std::vector<Rational> offsets;
    std::size_t row = 0;
    for (const auto& s : sets) {
        Vector a = zero_vector(d);
        Rational c = 0;
        for (const auto& r : constraint_rows(s)) {
            axpy(a, farkas.multipliers[row], r.coeffs);
            c += farkas.multipliers[row] * r.rhs;
            ++row;
        }
        normals.push_back(std::move(a));
        offsets.push_back(std::move(c));
    }

    const std::size_t n = sets.size();
    std::vector<std::optional<Halfspace>> hs(n);
    SeparatingHalfspaces out;
    out.provenance = farkas;
    out.repaired.assign(n, false);
    for (std::size_t i = 0; i < n; ++i)
        if (!is_zero(normals[i]))
            hs[i] = Halfspace(normals[i], offsets[i]);
    for (std::size_t i = 0; i < n; ++i)
        if (!hs[i] && sgn(offsets[i]) >= 0) {
            hs[i] = row_halfspace(sets[i]);
            if (!hs[i])
                throw InputError("set " + std::to_string(i) + " is the whole space; no halfspace contains it");
            out.repaired[i] = true;
        }
    for (std::size_t i = 0; i < n; ++i) {
        if (hs[i])
            continue;
        std::vector<Halfspace> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && hs[j])
                others.push_back(*hs[j]);
        if (others.empty() || is_empty(Polyhedron(d, others)))
            hs[i] = row_halfspace(sets[i]);
        else
            hs[i] = separate_from(others, d);
        if (!hs[i])
            throw PreconditionError("empty set " + std::to_string(i) +
                                    " admits no halfspace separating it from the others' halfspaces");
        out.repaired[i] = true;
    }
    for (auto& h : hs)
        out.halfspaces.push_back(*h);
    if (!verify_separating_halfspaces(sets, out))
        throw TheoremViolation("aggregated halfspaces failed verification");
    return out;
}

bool verify_separating_halfspaces(const std::vector<Polyhedron>& sets, const SeparatingHalfspaces& cert)
{
    if (sets.empty() || cert.halfspaces.size() != sets.size())
        return false;
    const std::size_t d = sets.front().dim();
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& h = cert.halfspaces[i];
        if (h.dim() != d)
            return false;
        if (is_empty(sets[i]))
            continue;
        auto out = maximize_over(sets[i], h.normal());
        const auto* opt = std::get_if<LpOptimal>(&out);
        if (!opt || opt->value > h.offset())
            return false;
    }
    return is_empty(Polyhedron(d, cert.halfspaces));
}

std::vector<std::size_t> helly_witness(const std::vector<Polyhedron>& sets)
{
    auto cert = polyhedra_intersect(sets);
    if (const auto* p = std::get_if<PointCertificate>(&cert))
        throw PreconditionError("the sets share a point", p->point.coords);
    std::vector<std::size_t> keep(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
        keep[i] = i;
    for (std::size_t i = sets.size(); i-- > 0;) {
        std::vector<std::size_t> trial;
        for (auto j : keep)
            if (j != i)
                trial.push_back(j);
        if (trial.empty())
            continue;
        std::vector<const Polyhedron*> refs;
        for (auto j : trial)
            refs.push_back(&sets[j]);
        if (!common_point(refs))
            keep = std::move(trial);
    }
    if (keep.size() > sets.front().dim() + 1)
        throw TheoremViolation("minimal non-intersecting subfamily larger than dim + 1");
    return keep;
}

DichotomyOutcome two_color_lemma(const std::vector<Polyhedron>& a, const std::vector<Polyhedron>& b)
{
    if (a.empty() || b.empty())
        throw InputError("two_color_lemma needs two non-empty families");
    const std::size_t d = a.front().dim();
    check_same_dim(a, d);
    check_same_dim(b, d);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!intersects(a[i], b[j]))
                throw PreconditionError("A[" + std::to_string(i) + "] and B[" + std::to_string(j) + "] do not meet");

    if (auto p = common_point(refs_of(a)))
        return PiercedClass{0, {Point{*p}}};

    auto witness = helly_witness(a);
    auto sep = separating_halfspaces(select(a, witness));
    HyperplaneCover cover{1, {}};
    for (std::size_t i = 0; i + 1 < sep.halfspaces.size(); ++i)
        cover.hyperplanes.emplace_back(sep.halfspaces[i].normal(), sep.halfspaces[i].offset());
    if (cover.hyperplanes.size() > d)
        throw TheoremViolation("more than d hyperplanes from a Helly witness");
    for (std::size_t j = 0; j < b.size(); ++j)
        if (std::none_of(cover.hyperplanes.begin(), cover.hyperplanes.end(),
                         [&](const Hyperplane& h) { return meets_hyperplane(b[j], h); }))
            throw TheoremViolation("B[" + std::to_string(j) + "] misses every bounding hyperplane");
    return cover;
}

DichotomyOutcome theorem_main_d2(const ColoredFamily& fam)
{
    fam.validate();
    if (fam.dim != 2 || fam.classes.size() != 2)
        throw InputError("theorem_main_d2 takes two classes in the plane");
    std::vector<AffineFlat> lines;
    for (std::size_t first : {0, 1}) {
        auto r = two_color_lemma(fam.classes[first], fam.classes[1 - first]);
        if (auto* p = std::get_if<PiercedClass>(&r)) {
            p->cls = first;
            return *p;
        }
        for (const auto& h : std::get<HyperplaneCover>(r).hyperplanes) {
            auto line = canonical_line(AffineFlat::from_hyperplane(h));
            if (std::find(lines.begin(), lines.end(), line) == lines.end())
                lines.push_back(line);
        }
    }
    DichotomyOutcome out = LineCover{lines};
    if (lines.size() > 4 || !verify_outcome(fam, out))
        throw TheoremViolation("line cover from two applications of the two-colored lemma failed");
    return out;
}

bool verify_outcome(const ColoredFamily& fam, const DichotomyOutcome& outcome)
{
    if (const auto* p = std::get_if<PiercedClass>(&outcome)) {
        if (p->cls >= fam.classes.size())
            return false;
        for (const auto& s : fam.classes[p->cls])
            if (std::none_of(p->points.begin(), p->points.end(), [&](const Point& x) { return s.contains(x); }))
                return false;
        return true;
    }
    if (const auto* l = std::get_if<LineCover>(&outcome)) {
        for (const auto& s : fam.all_sets())
            if (std::none_of(l->lines.begin(), l->lines.end(),
                             [&](const AffineFlat& f) { return f.dim() == s.dim() && flat_crosses(f, s); }))
                return false;
        return true;
    }
    if (const auto* h = std::get_if<HyperplaneCover>(&outcome)) {
        if (h->cls >= fam.classes.size())
            return false;
        for (const auto& s : fam.classes[h->cls])
            if (std::none_of(h->hyperplanes.begin(), h->hyperplanes.end(),
                             [&](const Hyperplane& x) { return x.dim() == s.dim() && meets_hyperplane(s, x); }))
                return false;
        return true;
    }
    return false;
}

GenericLine generic_line_class(const ColoredFamily& fam, std::uint64_t seed, const SearchBudget& budget)
{
    fam.validate();
    if (fam.dim < 2 || fam.classes.size() < fam.dim)
        throw InputError("generic_line_class needs dim >= 2 and at least dim classes");
    std::mt19937_64 rng(seed);
    GenericLine out{0, AffineFlat::line(zero_vector(fam.dim), unit_vector(fam.dim, 0)), {}, {}};
    for (int attempt = 0; attempt < 32; ++attempt) {
        Vector dir;
        do {
            dir.clear();
            for (std::size_t i = 0; i < fam.dim; ++i)
                dir.emplace_back(static_cast<long>(rng() % 2001) - 1000);
        } while (is_zero(dir));
        dir = primitive_integer_direction(dir);
        try {
            ColoredFamily projected{fam.dim - 1, {}, {}};
            for (const auto& c : fam.classes)
                projected.classes.push_back(affine_project(c, dir));
            auto found = intersecting_class(projected, budget);
            AffineFlat line = lift_projected_point(found.point.coords, dir);
            const auto& sets = fam.classes[found.cls];
            if (std::all_of(sets.begin(), sets.end(), [&](const Polyhedron& s) { return flat_crosses(line, s); })) {
                out.cls = found.cls;
                out.line = line;
                out.direction = dir;
                return out;
            }
        } catch (const PreconditionError&) {
        } catch (const TheoremViolation&) {
        }
        out.rejected_directions.push_back(dir);
    }
    std::string dirs;
    for (const auto& v : out.rejected_directions) {
        dirs += dirs.empty() ? "(" : "; (";
        for (std::size_t i = 0; i < v.size(); ++i)
            dirs += (i ? "," : "") + format_rational(v[i]);
        dirs += ")";
    }
    throw GenerationError("no generic direction found among " + dirs);
}

FractionalTwoColorReport fractional_two_color_search(const std::vector<Polyhedron>& a,
                                                     const std::vector<Polyhedron>& b, const Rational& alpha,
                                                     const SearchBudget& budget, const BetaFormula& beta)
{
    if (a.empty() || b.empty())
        throw InputError("fractional_two_color_search needs two non-empty families");
    const std::size_t d = a.front().dim();
    check_same_dim(a, d);
    check_same_dim(b, d);

    FractionalTwoColorReport r;
    r.alpha = alpha;
    r.dim = d;
    r.lambda = lambda_bound(alpha, d);
    r.gamma = gamma_bound(alpha, d, beta);
    r.beta_formula = beta.name;

    std::vector<std::vector<bool>> meets(a.size(), std::vector<bool>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if ((meets[i][j] = intersects(a[i], b[j])))
                ++r.intersecting_pairs;
    const Rational sizes = Rational(static_cast<unsigned long>(a.size() * b.size()));
    if (Rational(static_cast<unsigned long>(r.intersecting_pairs)) < alpha * sizes)
        throw PreconditionError("only " + std::to_string(r.intersecting_pairs) + " of " +
                                std::to_string(a.size() * b.size()) + " pairs intersect");

    for (const auto& sub : maximal_intersecting_subfamilies(a, budget))
        if (sub.members.size() > r.point_coverage) {
            r.point_coverage = sub.members.size();
            r.best_point = sub.point;
        }

    std::vector<Hyperplane> candidates;
    Rational subsets = 1;
    for (std::size_t i = 0; i <= d; ++i)
        subsets = subsets * Rational(static_cast<unsigned long>(a.size() - std::min(i, a.size()))) /
                  Rational(static_cast<unsigned long>(i + 1));
    if (subsets <= Rational(static_cast<unsigned long>(budget.max_rainbow_tuples)))
        for_each_subset(a.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
            auto sub = select(a, idx);
            if (common_point(refs_of(sub)))
                return;
            std::vector<Polyhedron> b0;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (std::all_of(idx.begin(), idx.end(), [&](auto i) { return meets[i][j]; }))
                    b0.push_back(b[j]);
            if (b0.empty())
                return;
            auto out = two_color_lemma(sub, b0);
            for (const auto& h : std::get<HyperplaneCover>(out).hyperplanes)
                candidates.push_back(h);
        });
    if (d <= 3) {
        bool truncated = false;
        auto extra = vertex_hyperplanes(b, d, budget.max_line_candidates, truncated);
        candidates.insert(candidates.end(), extra.begin(), extra.end());
    }
    r.hyperplane_candidates = candidates.size();
    for (const auto& h : candidates) {
        std::size_t c = 0;
        for (const auto& s : b)
            c += meets_hyperplane(s, h) ? 1 : 0;
        if (c > r.hyperplane_coverage) {
            r.hyperplane_coverage = c;
            r.best_hyperplane = h;
        }
    }
    r.point_branch = Rational(static_cast<unsigned long>(r.point_coverage)) >=
                     r.gamma * Rational(static_cast<unsigned long>(a.size()));
    r.hyperplane_branch = Rational(static_cast<unsigned long>(r.hyperplane_coverage)) >=
                          r.lambda * Rational(static_cast<unsigned long>(b.size()));
    if (!r.point_branch && !r.hyperplane_branch)
        throw TheoremViolation("neither the point nor the hyperplane threshold of the fractional lemma is met");
    return r;
}

DichotomyReport dichotomy_report(const ColoredFamily& fam, std::size_t f_budget, std::size_t g_budget,
                                 const SearchBudget& budget)
{
    fam.validate();
    const std::size_t d = fam.dim;
    if (d < 1 || d > 3)
        throw InputError("dichotomy_report supports dimensions 1 to 3");
    const std::size_t n = fam.classes.size();
    DichotomyReport report;
    std::optional<std::size_t> min_single;
    for (std::size_t k = 1; k <= std::min(d, n); ++k)
        for_each_subset(n, k, [&](const std::vector<std::size_t>& prefix) {
            SplitResult split;
            split.k = k;
            split.prefix = prefix;
            std::vector<Polyhedron> head, tail;
            for (std::size_t c = 0; c < n; ++c) {
                auto& target = std::find(prefix.begin(), prefix.end(), c) != prefix.end() ? head : tail;
                target.insert(target.end(), fam.classes[c].begin(), fam.classes[c].end());
            }
            try {
                split.piercing = piercing_number(head, budget).search.tau;
            } catch (const ScaleError& e) {
                split.note = std::string("piercing: ") + e.what() + "; ";
            }
            auto cover = flat_cover(tail, k, d, budget);
            split.cover = cover.value;
            split.cover_upper_bound_only = cover.upper_bound_only;
            split.note += cover.note;
            split.within_budgets = split.piercing && split.cover && *split.piercing <= f_budget &&
                                   *split.cover <= g_budget;
            if (k == 1 && split.piercing)
                min_single = std::min(min_single.value_or(*split.piercing), *split.piercing);
            report.splits.push_back(std::move(split));
        });
    report.min_class_piercing = min_single.value_or(0);
    return report;
}

} // namespace chelly
