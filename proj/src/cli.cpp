#include "chelly/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "chelly/bounds.hpp"
#include "chelly/colorful.hpp"
#include "chelly/constructions.hpp"
#include "chelly/errors.hpp"
#include "chelly/io.hpp"
#include "chelly/polyhedra.hpp"
#include "chelly/transversals.hpp"

namespace chelly {

namespace {

struct Invocation
{
    std::string command;
    json input;
    json options = json::object();
    std::uint64_t seed = 0;
};

struct Outcome
{
    int code = exit_ok;
    json results = json::object();
    json certificates = json::object();
    std::vector<std::string> log;
};

const char* status_name(int code)
{
    switch (code) {
    case exit_ok:
        return "verified";
    case exit_refuted:
        return "refuted";
    case exit_scale:
        return "scale";
    case exit_input:
        return "input";
    default:
        return "violation";
    }
}

json points_json(const std::vector<Point>& points)
{
    json out = json::array();
    for (const auto& p : points)
        out.push_back(to_json(p.coords));
    return out;
}

json flats_json(const std::vector<AffineFlat>& flats)
{
    json out = json::array();
    for (const auto& f : flats)
        out.push_back(to_json(f));
    return out;
}

json refs_json(const std::vector<SetRef>& refs)
{
    json out = json::array();
    for (const auto& r : refs)
        out.push_back({{"class", r.cls}, {"index", r.index}});
    return out;
}

std::vector<SetRef> refs_from_json(const json& j)
{
    std::vector<SetRef> out;
    for (const auto& r : j)
        out.push_back({r.at("class").get<std::size_t>(), r.at("index").get<std::size_t>()});
    return out;
}

std::vector<const Polyhedron*> resolve(const ColoredFamily& fam, const std::vector<SetRef>& refs)
{
    std::vector<const Polyhedron*> out;
    for (const auto& r : refs) {
        if (r.cls >= fam.classes.size() || r.index >= fam.classes[r.cls].size())
            throw InputError("set reference out of range");
        out.push_back(&fam.classes[r.cls][r.index]);
    }
    return out;
}

std::vector<Polyhedron> selected_sets(const ColoredFamily& fam, const json& options)
{
    long cls = options.value("class", -1L);
    if (cls < 0)
        return fam.all_sets();
    if (static_cast<std::size_t>(cls) >= fam.classes.size())
        throw InputError("class " + std::to_string(cls) + " out of range");
    return fam.classes[static_cast<std::size_t>(cls)];
}

json transversal_json(const TransversalResult& t)
{
    return {{"tau", t.tau},
            {"lower_bound", t.lower_bound},
            {"upper_bound_only", t.upper_bound_only},
            {"nodes_explored", t.nodes_explored}};
}

json outcome_json(const DichotomyOutcome& o)
{
    if (const auto* p = std::get_if<PiercedClass>(&o))
        return {{"kind", "pierced_class"}, {"class", p->cls}, {"points", points_json(p->points)}};
    if (const auto* l = std::get_if<LineCover>(&o))
        return {{"kind", "line_cover"}, {"lines", flats_json(l->lines)}};
    if (const auto* h = std::get_if<HyperplaneCover>(&o)) {
        json hs = json::array();
        for (const auto& x : h->hyperplanes)
            hs.push_back(to_json(x));
        return {{"kind", "hyperplane_cover"}, {"class", h->cls}, {"hyperplanes", hs}};
    }
    return {{"kind", "unresolved"}, {"report", std::get<Unresolved>(o).report}};
}

DichotomyOutcome outcome_from_json(const json& j)
{
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "pierced_class") {
        PiercedClass p{j.at("class").get<std::size_t>(), {}};
        for (const auto& v : j.at("points"))
            p.points.push_back(Point{vector_from_json(v)});
        return p;
    }
    if (kind == "line_cover") {
        LineCover l;
        for (const auto& f : j.at("lines"))
            l.lines.push_back(flat_from_json(f));
        return l;
    }
    if (kind == "hyperplane_cover") {
        HyperplaneCover h{j.at("class").get<std::size_t>(), {}};
        for (const auto& x : j.at("hyperplanes"))
            h.hyperplanes.push_back(hyperplane_from_json(x));
        return h;
    }
    return Unresolved{j.value("report", "")};
}

void attach_ch_failure(const ColoredFamily& fam, const ChReport& r, Outcome& out)
{
    out.certificates["violating_rainbow"] = refs_json(*r.violating_rainbow);
    out.certificates["farkas"] = to_json(*r.certificate);
    bool ok = verify_intersection_certificate(resolve(fam, *r.violating_rainbow), *r.certificate);
    out.log.push_back(std::string("Farkas certificate for the violating rainbow ") + (ok ? "verified" : "FAILED"));
    if (!ok)
        out.code = exit_violation;
}

Outcome cmd_check_ch(const Invocation& inv, const SearchBudget& budget)
{
    Outcome out;
    auto fam = family_from_json(inv.input);
    auto r = check_ch(fam, budget);
    out.results = {{"holds", r.holds}, {"tuples_checked", r.tuples_checked}};
    if (r.holds) {
        out.log.push_back("all " + std::to_string(r.tuples_checked) + " rainbow selections intersect");
        return out;
    }
    out.code = exit_refuted;
    attach_ch_failure(fam, r, out);
    return out;
}

Outcome cmd_intersecting_class(const Invocation& inv, const SearchBudget& budget)
{
    Outcome out;
    auto fam = family_from_json(inv.input);
    try {
        auto found = intersecting_class(fam, budget);
        out.results = {{"class", found.cls}};
        out.certificates["point"] = to_json(found.point.coords);
        const auto& sets = fam.classes[found.cls];
        bool ok = std::all_of(sets.begin(), sets.end(), [&](const Polyhedron& s) { return s.contains(found.point); });
        out.log.push_back(std::string("point lies in every set of class ") + std::to_string(found.cls) +
                          (ok ? "" : ": FAILED"));
        if (!ok)
            out.code = exit_violation;
    } catch (const PreconditionError& e) {
        out.code = exit_refuted;
        out.results = {{"hypothesis", "colorful Helly fails"}};
        out.log.push_back(e.what());
        auto r = check_ch(fam, budget);
        if (!r.holds)
            attach_ch_failure(fam, r, out);
    }
    return out;
}

Outcome cmd_pierce(const Invocation& inv, const SearchBudget& budget)
{
    Outcome out;
    auto sets = selected_sets(family_from_json(inv.input), inv.options);
    auto r = piercing_number(sets, budget);
    out.results = transversal_json(r.search);
    out.certificates["points"] = points_json(r.points);
    bool ok = std::all_of(sets.begin(), sets.end(), [&](const Polyhedron& s) {
        return std::any_of(r.points.begin(), r.points.end(), [&](const Point& p) { return s.contains(p); });
    });
    out.log.push_back(std::to_string(r.points.size()) + " points pierce all " + std::to_string(sets.size()) +
                      " sets" + (ok ? "" : ": FAILED"));
    if (!ok)
        out.code = exit_violation;
    return out;
}

Outcome cmd_line_cover(const Invocation& inv, const SearchBudget& budget)
{
    Outcome out;
    auto fam = family_from_json(inv.input);
    auto sets = selected_sets(fam, inv.options);
    auto r = fam.dim == 2 ? line_cover_number(sets, budget) : line_cover_upper_bound(sets, budget);
    out.results = transversal_json(r.search);
    out.results["candidates"] = r.candidate_count;
    out.certificates["lines"] = flats_json(r.lines);
    bool ok = std::all_of(sets.begin(), sets.end(), [&](const Polyhedron& s) {
        return std::any_of(r.lines.begin(), r.lines.end(), [&](const AffineFlat& l) { return flat_crosses(l, s); });
    });
    out.log.push_back(std::to_string(r.lines.size()) + " lines cross all " + std::to_string(sets.size()) + " sets" +
                      (ok ? "" : ": FAILED"));
    if (r.search.upper_bound_only)
        out.log.push_back("candidate scheme incomplete outside the plane: upper bound only");
    if (!ok)
        out.code = exit_violation;
    return out;
}

Outcome dichotomy_outcome(const ColoredFamily& fam, const DichotomyOutcome& o)
{
    Outcome out;
    out.results = {{"kind", outcome_json(o).at("kind")}};
    out.certificates["outcome"] = outcome_json(o);
    bool ok = verify_outcome(fam, o);
    out.log.push_back(std::string("outcome re-verified by exact membership and crossing tests: ") +
                      (ok ? "ok" : "FAILED"));
    if (!ok)
        out.code = exit_violation;
    return out;
}

Outcome cmd_two_color(const Invocation& inv, const SearchBudget&)
{
    auto fam = family_from_json(inv.input);
    if (fam.classes.size() != 2)
        throw InputError("two-color expects exactly two classes");
    try {
        return dichotomy_outcome(fam, two_color_lemma(fam.classes[0], fam.classes[1]));
    } catch (const PreconditionError& e) {
        Outcome out;
        out.code = exit_refuted;
        out.results = {{"hypothesis", "some pair A[i], B[j] is disjoint"}};
        out.log.push_back(e.what());
        return out;
    }
}

Outcome cmd_d2_dichotomy(const Invocation& inv, const SearchBudget& budget)
{
    auto fam = family_from_json(inv.input);
    try {
        return dichotomy_outcome(fam, theorem_main_d2(fam));
    } catch (const PreconditionError& e) {
        Outcome out;
        out.code = exit_refuted;
        out.results = {{"hypothesis", "colorful Helly fails"}};
        out.log.push_back(e.what());
        auto r = check_ch(fam, budget);
        if (!r.holds)
            attach_ch_failure(fam, r, out);
        return out;
    }
}

Outcome cmd_fractional(const Invocation& inv, const SearchBudget& budget)
{
    Outcome out;
    auto fam = family_from_json(inv.input);
    if (fam.classes.size() != 2)
        throw InputError("fractional-two-color expects exactly two classes");
    Rational alpha = rational_from_json(inv.options.at("alpha"));
    try {
        auto r = fractional_two_color_search(fam.classes[0], fam.classes[1], alpha, budget);
        out.results = {{"alpha", to_json(r.alpha)},
                       {"intersecting_pairs", r.intersecting_pairs},
                       {"lambda", to_json(r.lambda)},
                       {"gamma", to_json(r.gamma)},
                       {"beta", r.beta_formula},
                       {"beta_is_configuration", true},
                       {"point_coverage", r.point_coverage},
                       {"hyperplane_coverage", r.hyperplane_coverage},
                       {"hyperplane_candidates", r.hyperplane_candidates},
                       {"point_branch", r.point_branch},
                       {"hyperplane_branch", r.hyperplane_branch}};
        out.certificates["point"] = to_json(r.best_point.coords);
        if (r.best_hyperplane)
            out.certificates["hyperplane"] = to_json(*r.best_hyperplane);
        out.log.push_back("beta lower bound from configuration: " + r.beta_formula);
    } catch (const PreconditionError& e) {
        out.code = exit_refuted;
        out.results = {{"hypothesis", "fewer than alpha |A| |B| intersecting pairs"}};
        out.log.push_back(e.what());
    }
    return out;
}

Outcome cmd_duality(const Invocation& inv, const SearchBudget& budget)
{
    Outcome out;
    auto h = hypergraph_from_json(inv.input);
    std::size_t b = inv.options.value("b", std::size_t{1});
    auto r = duality_report(h, b, budget);
    out.results = {{"b", b},
                   {"nu_star", to_json(r.nu_star.value)},
                   {"tau_star", to_json(r.tau_star.value)},
                   {"sandwich_holds", r.sandwich_holds}};
    out.certificates["nu_star_weights"] = to_json(r.nu_star.weights);
    out.certificates["tau_star_weights"] = to_json(r.tau_star.weights);
    if (r.nu_b) {
        out.results["nu_b"] = r.nu_b->size;
        out.results["nu_b_over_b"] = to_json(Rational(static_cast<long>(r.nu_b->size)) / static_cast<long>(b));
        out.certificates["b_matching"] = r.nu_b->edges;
    }
    if (r.tau) {
        out.results["tau"] = transversal_json(*r.tau);
        out.certificates["transversal"] = r.tau->witness;
    }
    bool ok = is_fractional_matching(h, r.nu_star.weights) && is_fractional_transversal(h, r.tau_star.weights) &&
              r.nu_star.value == r.tau_star.value;
    out.log.push_back(std::string("fractional matching and transversal weights verified, nu* = tau*: ") +
                      (ok ? "ok" : "FAILED"));
    if (!ok)
        out.code = exit_violation;
    if (r.scale_error) {
        out.results["scale_error"] = *r.scale_error;
        out.log.push_back("exact search exceeded its budget: " + *r.scale_error);
        out.code = exit_scale;
    }
    return out;
}

struct Claim
{
    std::string name;
    json value;
    bool holds;
};

json claims_json(const std::vector<Claim>& claims, bool& all)
{
    json out = json::array();
    all = true;
    for (const auto& c : claims) {
        out.push_back({{"claim", c.name}, {"value", c.value}, {"holds", c.holds}});
        all = all && c.holds;
    }
    return out;
}

bool no_three_meet(const std::vector<Polyhedron>& sets)
{
    bool ok = true;
    for_each_subset(sets.size(), 3, [&](const std::vector<std::size_t>& idx) {
        if (ok && common_point({&sets[idx[0]], &sets[idx[1]], &sets[idx[2]]}))
            ok = false;
    });
    return ok;
}

json separation_json(const RegionSeparation& r)
{
    return {{"delta", to_json(r.delta)}, {"eta", to_json(r.eta)}, {"valid", r.valid}, {"lower_bound", r.lower_bound}};
}

Outcome cmd_verify_lower_bound(const Invocation& inv, const SearchBudget& budget)
{
    Outcome out;
    auto fam = family_from_json(inv.input);
    if (!inv.input.contains("construction"))
        throw InputError("verify-lower-bound needs a document produced by generate");
    const auto& con = inv.input.at("construction");
    std::string kind = con.at("kind").get<std::string>();
    std::vector<Claim> claims;
    if (kind == "figure1") {
        std::size_t n = con.at("n").get<std::size_t>();
        auto ch = check_ch(fam, budget);
        claims.push_back({"colorful Helly holds", ch.tuples_checked, ch.holds});
        for (std::size_t i = 0; i + 1 < fam.classes.size(); ++i) {
            auto p = piercing_number(fam.classes[i], budget);
            claims.push_back({"piercing number of class " + std::to_string(i + 1) + " = " + std::to_string(n),
                              p.search.tau, p.search.tau == n});
        }
    } else if (kind == "planar") {
        if (fam.classes.size() != 2)
            throw InputError("planar construction needs classes F1 and F2");
        std::size_t f = con.at("f").get<std::size_t>();
        std::size_t m = 2 * f;
        const auto& f1 = fam.classes[0];
        const auto& f2 = fam.classes[1];
        claims.push_back({"no three triangles of F1 share a point", f1.size(), no_three_meet(f1)});
        bool meet = true;
        for (const auto& t : f1)
            for (const auto& s : f2)
                meet = meet && intersects(t, s);
        claims.push_back({"every segment meets every triangle", f1.size() * f2.size(), meet});
        auto p1 = piercing_number(f1, budget);
        claims.push_back({"piercing number of F1 >= f", p1.search.tau, p1.search.tau >= f});
        auto p2 = piercing_number(f2, budget);
        claims.push_back({"piercing number of F2 = 3m", p2.search.tau, p2.search.tau == 3 * m});
        auto lines = line_cover_number(fam.all_sets(), budget);
        claims.push_back({"line cover of F1 and F2 >= 2", lines.search.tau, lines.search.tau >= 2});
        out.certificates["F1_points"] = points_json(p1.points);
        out.certificates["line_cover"] = flats_json(lines.lines);
        std::vector<Vector> t0;
        for (const auto& v : con.at("t0"))
            t0.push_back(vector_from_json(v));
        std::vector<std::vector<Polyhedron>> groups;
        for (std::size_t j = 0; j < 3; ++j)
            groups.emplace_back(f2.begin() + static_cast<long>(j * m), f2.begin() + static_cast<long>((j + 1) * m));
        auto sep = region_separation(groups, barycentric_coordinates(t0));
        out.certificates["line_regions"] = separation_json(sep);
        claims.push_back({"region separation certifies >= 2 lines", sep.lower_bound, sep.lower_bound >= 2});
    } else if (kind == "simplex") {
        std::size_t d = con.at("d").get<std::size_t>();
        std::size_t f = con.at("f").get<std::size_t>();
        std::size_t m = 2 * f;
        if (fam.classes.size() != d || fam.dim != d)
            throw InputError("simplex construction needs d classes in R^d");
        auto ch = check_ch(fam, budget);
        claims.push_back({"colorful Helly holds", ch.tuples_checked, ch.holds});
        for (std::size_t i = 0; i + 1 < d; ++i) {
            claims.push_back({"no three sets of F" + std::to_string(i + 1) + " share a point", fam.classes[i].size(),
                              no_three_meet(fam.classes[i])});
            auto p = piercing_number(fam.classes[i], budget);
            claims.push_back({"piercing number of F" + std::to_string(i + 1) + " >= f", p.search.tau, p.search.tau >= f});
        }
        std::vector<Vector> verts;
        for (const auto& v : con.at("vertices"))
            verts.push_back(vector_from_json(v));
        const auto& last = fam.classes[d - 1];
        if (last.size() != (d + 1) * m)
            throw InputError("F_d must hold m copies of each facet");
        std::vector<std::vector<Polyhedron>> groups;
        for (std::size_t j = 0; j <= d; ++j)
            groups.emplace_back(last.begin() + static_cast<long>(j * m), last.begin() + static_cast<long>((j + 1) * m));
        auto sep = region_separation(groups, barycentric_coordinates(verts));
        out.certificates["line_regions"] = separation_json(sep);
        std::size_t need = (d + 2) / 2;
        claims.push_back({"line cover >= ceil((d+1)/2) by region separation", sep.lower_bound, sep.lower_bound >= need});
        auto facets = max_simplex_facets_crossed(d);
        claims.push_back({"no candidate line crosses more than two facet interiors", facets.max_crossed,
                          facets.max_crossed == 2});
        out.log.push_back(facets.argument);
        if (d == 2) {
            auto lines = line_cover_number(fam.all_sets(), budget);
            claims.push_back({"exact line cover >= 2", lines.search.tau, lines.search.tau >= 2});
        }
    } else {
        throw InputError("unknown construction kind " + kind);
    }
    bool all = true;
    out.results["claims"] = claims_json(claims, all);
    for (const auto& c : claims)
        if (!c.holds)
            out.log.push_back("claim fails: " + c.name);
    if (!all)
        out.code = exit_refuted;
    return out;
}

Outcome cmd_relint(const Invocation& inv, const SearchBudget&)
{
    Outcome out;
    std::size_t d = inv.options.at("d").get<std::size_t>();
    std::size_t f = inv.options.at("f").get<std::size_t>();
    auto c = generate_simplex_family(d, f, inv.seed);
    if (!inv.input.is_null() && !(family_from_json(inv.input) == c.family()))
        throw InputError("document does not match its construction parameters");
    auto r = verify_relint_property(c);
    out.results = {{"d", d}, {"f", f}, {"selections", r.selections}, {"failures", r.failures.size()},
                   {"min_margin", to_json(r.min_margin)}};
    json failures = json::array();
    for (const auto& fl : r.failures)
        failures.push_back({{"selection", fl.selection}, {"margin", fl.margin ? to_json(*fl.margin) : json(nullptr)}});
    out.certificates["failures"] = failures;
    out.log.push_back(std::to_string(r.selections) + " colorful selections checked by the margin LP");
    if (!r.holds())
        out.code = exit_refuted;
    return out;
}

Outcome cmd_generic_line(const Invocation& inv, const SearchBudget& budget)
{
    Outcome out;
    auto fam = family_from_json(inv.input);
    auto g = generic_line_class(fam, inv.seed, budget);
    out.results = {{"class", g.cls}, {"rejected_directions", g.rejected_directions.size()}};
    out.certificates["line"] = to_json(g.line);
    out.certificates["direction"] = to_json(g.direction);
    const auto& sets = fam.classes[g.cls];
    bool ok = std::all_of(sets.begin(), sets.end(), [&](const Polyhedron& s) { return flat_crosses(g.line, s); });
    out.log.push_back(std::string("line crosses every set of class ") + std::to_string(g.cls) + (ok ? "" : ": FAILED"));
    if (!ok)
        out.code = exit_violation;
    return out;
}

using Handler = std::function<Outcome(const Invocation&, const SearchBudget&)>;

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> table{
        {"check-ch", cmd_check_ch},
        {"intersecting-class", cmd_intersecting_class},
        {"pierce", cmd_pierce},
        {"line-cover", cmd_line_cover},
        {"two-color", cmd_two_color},
        {"d2-dichotomy", cmd_d2_dichotomy},
        {"fractional-two-color", cmd_fractional},
        {"duality", cmd_duality},
        {"verify-lower-bound", cmd_verify_lower_bound},
        {"relint-check", cmd_relint},
        {"generic-line", cmd_generic_line},
    };
    return table;
}

int code_of(const std::exception_ptr& e, std::string& message, std::string& status)
{
    try {
        std::rethrow_exception(e);
    } catch (const ScaleError& x) {
        message = x.what();
        status = "scale";
        return exit_scale;
    } catch (const InputError& x) {
        message = x.what();
        status = "input";
        return exit_input;
    } catch (const DimensionError& x) {
        message = x.what();
        status = "input";
        return exit_input;
    } catch (const json::exception& x) {
        message = x.what();
        status = "input";
        return exit_input;
    } catch (const PreconditionError& x) {
        message = x.what();
        status = "refuted";
        return exit_refuted;
    } catch (const GenerationError& x) {
        message = x.what();
        status = "generation-failed";
        return exit_violation;
    } catch (const std::exception& x) {
        message = x.what();
        status = "violation";
        return exit_violation;
    }
}

/// Certificate checks that read only the report: no recomputation.
bool check_certificates(const Invocation& inv, const json& results, const json& certs, std::vector<std::string>& log)
{
    const std::string& c = inv.command;
    auto note = [&](const std::string& what, bool ok) {
        log.push_back(what + (ok ? ": ok" : ": FAILED"));
        return ok;
    };
    if (c == "duality") {
        auto h = hypergraph_from_json(inv.input);
        bool ok = note("fractional matching", is_fractional_matching(h, vector_from_json(certs.at("nu_star_weights"))));
        ok &= note("fractional transversal",
                   is_fractional_transversal(h, vector_from_json(certs.at("tau_star_weights"))));
        if (certs.contains("b_matching"))
            ok &= note("b-matching", is_b_matching(h, certs.at("b_matching").get<std::vector<std::size_t>>(),
                                                   results.at("b").get<std::size_t>()));
        if (certs.contains("transversal"))
            ok &= note("transversal", is_transversal(h, certs.at("transversal").get<std::vector<std::size_t>>()));
        return ok;
    }
    if (c == "relint-check" || c == "verify-lower-bound")
        return true;
    auto fam = family_from_json(inv.input);
    bool ok = true;
    if (certs.contains("farkas")) {
        auto refs = refs_from_json(certs.at("violating_rainbow"));
        ok &= note("Farkas certificate",
                   verify_intersection_certificate(resolve(fam, refs), farkas_from_json(certs.at("farkas"))));
    }
    if (c == "intersecting-class" && certs.contains("point")) {
        Vector p = vector_from_json(certs.at("point"));
        const auto& sets = fam.classes.at(results.at("class").get<std::size_t>());
        ok &= note("common point", std::all_of(sets.begin(), sets.end(), [&](const Polyhedron& s) { return s.contains(p); }));
    }
    if (c == "pierce") {
        auto sets = selected_sets(fam, inv.options);
        std::vector<Vector> pts;
        for (const auto& v : certs.at("points"))
            pts.push_back(vector_from_json(v));
        ok &= note("piercing points", pts.size() == results.at("tau").get<std::size_t>() &&
                                          std::all_of(sets.begin(), sets.end(), [&](const Polyhedron& s) {
                                              return std::any_of(pts.begin(), pts.end(),
                                                                 [&](const Vector& p) { return s.contains(p); });
                                          }));
    }
    if (c == "line-cover") {
        auto sets = selected_sets(fam, inv.options);
        std::vector<AffineFlat> lines;
        for (const auto& l : certs.at("lines"))
            lines.push_back(flat_from_json(l));
        ok &= note("covering lines", lines.size() == results.at("tau").get<std::size_t>() &&
                                         std::all_of(sets.begin(), sets.end(), [&](const Polyhedron& s) {
                                             return std::any_of(lines.begin(), lines.end(),
                                                                [&](const AffineFlat& l) { return flat_crosses(l, s); });
                                         }));
    }
    if ((c == "two-color" || c == "d2-dichotomy") && certs.contains("outcome"))
        ok &= note("dichotomy outcome", verify_outcome(fam, outcome_from_json(certs.at("outcome"))));
    if (c == "fractional-two-color" && certs.contains("point")) {
        Vector p = vector_from_json(certs.at("point"));
        std::size_t hits = 0;
        for (const auto& s : fam.classes[0])
            hits += s.contains(p) ? 1 : 0;
        ok &= note("point coverage", hits == results.at("point_coverage").get<std::size_t>());
        if (certs.contains("hyperplane")) {
            Polyhedron h(fam.dim, {}, {hyperplane_from_json(certs.at("hyperplane"))});
            std::size_t crossed = 0;
            for (const auto& s : fam.classes[1])
                crossed += intersects(s, h) ? 1 : 0;
            ok &= note("hyperplane coverage", crossed == results.at("hyperplane_coverage").get<std::size_t>());
        }
    }
    if (c == "generic-line") {
        auto line = flat_from_json(certs.at("line"));
        const auto& sets = fam.classes.at(results.at("class").get<std::size_t>());
        ok &= note("line crosses its class",
                   std::all_of(sets.begin(), sets.end(), [&](const Polyhedron& s) { return flat_crosses(line, s); }));
    }
    return ok;
}

Outcome cmd_recheck(const json& report, const SearchBudget& budget)
{
    Outcome out;
    Invocation inv;
    inv.command = report.at("command").get<std::string>();
    inv.input = report.contains("input") ? report.at("input") : json();
    inv.options = report.value("options", json::object());
    inv.seed = report.value("seed", std::uint64_t{0});
    auto it = handlers().find(inv.command);
    if (it == handlers().end())
        throw InputError("cannot recheck command " + inv.command);
    int claimed = report.at("exit_code").get<int>();
    bool ok = check_certificates(inv, report.value("results", json::object()),
                                 report.value("certificates", json::object()), out.log);
    int code = exit_ok;
    Outcome again;
    try {
        again = it->second(inv, budget);
        code = again.code;
    } catch (...) {
        std::string message, status;
        code = code_of(std::current_exception(), message, status);
        out.log.push_back("recomputation raised: " + message);
    }
    bool same_code = code == claimed;
    bool same_results = !report.contains("results") || again.results == report.at("results");
    out.log.push_back(std::string("recomputed exit code ") + (same_code ? "agrees" : "DIFFERS"));
    out.log.push_back(std::string("recomputed results ") + (same_results ? "agree" : "DIFFER"));
    out.results = {{"rechecked_command", inv.command},
                   {"certificates_valid", ok},
                   {"exit_code_agrees", same_code},
                   {"results_agree", same_results}};
    if (!(ok && same_code && same_results))
        out.code = exit_violation;
    return out;
}

json planar_construction_json(const PlanarConstruction& c)
{
    json tris = json::array();
    for (const auto& t : c.triangles)
        tris.push_back({{"height", to_json(t.height)},
                        {"bottom", to_json(t.bottom)},
                        {"vertices", json::array({to_json(t.vertices[0]), to_json(t.vertices[1]), to_json(t.vertices[2])})}});
    json segs = json::array();
    for (const auto& s : c.segments)
        segs.push_back(json::array({to_json(s[0]), to_json(s[1])}));
    json floors = json::array();
    for (const auto& r : c.pair_floor)
        floors.push_back(to_json(r));
    return {{"kind", "planar"},
            {"f", c.f},
            {"m", c.m},
            {"seed", c.seed},
            {"t0", json::array({to_json(c.t0[0]), to_json(c.t0[1]), to_json(c.t0[2])})},
            {"triangles", tris},
            {"pair_floor", floors},
            {"shrink", to_json(c.shrink)},
            {"shift", to_json(c.shift)},
            {"segments", segs},
            {"line_regions", separation_json(c.lines_certificate)},
            {"log", c.log}};
}

json simplex_construction_json(const SimplexConstruction& c)
{
    json verts = json::array();
    for (const auto& v : c.vertices)
        verts.push_back(to_json(v));
    json faces = json::array();
    for (const auto& face : c.face_triangles) {
        json tris = json::array();
        for (const auto& t : face)
            tris.push_back(json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}));
        faces.push_back(tris);
    }
    return {{"kind", "simplex"},
            {"d", c.d},
            {"f", c.f},
            {"m", c.m},
            {"seed", c.seed},
            {"vertices", verts},
            {"face_triangles", faces},
            {"epsilon", to_json(c.epsilon)},
            {"shift", to_json(c.shift)},
            {"line_regions", separation_json(c.lines_certificate)},
            {"log", c.log}};
}

void print_pretty(std::ostream& out, const json& report)
{
    out << report.value("command", "") << ": " << report.value("status", "") << " (exit "
        << report.value("exit_code", 0) << ")\n";
    if (report.contains("error"))
        out << "  error: " << report.at("error").get<std::string>() << "\n";
    if (report.contains("results"))
        for (const auto& [key, value] : report.at("results").items()) {
            if (key == "claims") {
                for (const auto& c : value)
                    out << "  " << (c.at("holds").get<bool>() ? "[ok]   " : "[FAIL] ") << c.at("claim").get<std::string>()
                        << " = " << c.at("value").dump() << "\n";
                continue;
            }
            out << "  " << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    if (report.contains("verification_log"))
        for (const auto& line : report.at("verification_log"))
            out << "  - " << line.get<std::string>() << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact colorful Helly toolkit", "chelly"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t seed = 0;
    bool pretty = false;
    app.add_option("--seed", seed, "Seed for every random choice");
    app.add_flag("--pretty", pretty, "Human-readable table instead of JSON");

    std::string input_path;
    std::map<std::string, CLI::App*> subs;
    auto file_command = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", input_path, "Input document (- for stdin)")->required();
        subs[name] = sub;
        return sub;
    };
    long cls = -1;
    std::string alpha = "1";
    std::size_t b = 1;
    file_command("check-ch", "Decide the colorful Helly hypothesis");
    file_command("intersecting-class", "Find a class with a common point");
    file_command("pierce", "Exact piercing number")->add_option("--class", cls, "Only this class");
    file_command("line-cover", "Minimum line cover")->add_option("--class", cls, "Only this class");
    file_command("two-color", "Two-color lemma on classes A and B");
    file_command("d2-dichotomy", "Planar dichotomy: a pierced class or at most four lines");
    file_command("fractional-two-color", "Fractional two-color search")->add_option("--alpha", alpha)->required();
    file_command("duality", "Matching/transversal duality on a hypergraph")->add_option("--b", b);
    file_command("verify-lower-bound", "Check the claims of a generated construction");
    file_command("generic-line", "Class crossed by one line via a random projection");
    file_command("recheck", "Re-validate a report");

    std::size_t rd = 3, rf = 1;
    auto* relint = app.add_subcommand("relint-check", "Relative-interior sweep over a simplex construction");
    relint->add_option("input", input_path, "Optional generated document");
    relint->add_option("--d", rd);
    relint->add_option("--f", rf);
    subs["relint-check"] = relint;

    auto* gen = app.add_subcommand("generate", "Emit a construction as a family document");
    gen->require_subcommand(1);
    std::size_t gd = 2, gn = 1, gf = 1;
    bool slabs = false;
    auto* g1 = gen->add_subcommand("figure1", "Axis-orthogonal hyperplane classes plus the whole space");
    g1->add_option("--d", gd);
    g1->add_option("--n", gn);
    g1->add_flag("--slabs", slabs, "Bounded slabs in a box instead of hyperplanes");
    auto* gp = gen->add_subcommand("planar", "Planar lower-bound family");
    gp->add_option("--f", gf);
    auto* gs = gen->add_subcommand("simplex", "Simplex lower-bound family");
    gs->add_option("--d", gd);
    gs->add_option("--f", gf);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    auto start = std::chrono::steady_clock::now();
    json report = {{"schema_version", schema_version}, {"seed", seed}};
    int code = exit_ok;
    auto emit = [&](int c) {
        report["exit_code"] = c;
        report["wall_time_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        if (pretty)
            print_pretty(out, report);
        else
            out << report.dump(2) << "\n";
        return c;
    };

    try {
        SearchBudget budget = SearchBudget::from_environment();
        if (gen->parsed()) {
            report["command"] = "generate";
            json doc;
            if (g1->parsed()) {
                auto fam = slabs ? generate_figure1_slabs(gd, gn) : generate_figure1(gd, gn);
                doc = family_to_json(fam);
                doc["construction"] = {{"kind", "figure1"}, {"d", gd}, {"n", gn}, {"slabs", slabs}};
            } else if (gp->parsed()) {
                auto c = generate_planar(gf, seed);
                doc = family_to_json(c.family());
                doc["construction"] = planar_construction_json(c);
            } else {
                auto c = generate_simplex_family(gd, gf, seed);
                doc = family_to_json(c.family());
                doc["construction"] = simplex_construction_json(c);
            }
            if (pretty) {
                const auto& con = doc.at("construction");
                out << "generated " << con.at("kind").get<std::string>() << " family in R^" << doc.at("dim") << "\n";
                for (const auto& cls : doc.at("classes"))
                    out << "  " << cls.at("label").get<std::string>() << ": " << cls.at("sets").size() << " sets\n";
                if (con.contains("log"))
                    for (const auto& line : con.at("log"))
                        out << "  - " << line.get<std::string>() << "\n";
            } else {
                out << doc.dump(2) << "\n";
            }
            return exit_ok;
        }

        std::string command;
        for (const auto& [name, sub] : subs)
            if (sub->parsed())
                command = name;
        report["command"] = command;

        std::string text;
        json input;
        if (!input_path.empty()) {
            text = read_text(input_path);
            input = parse_json(text);
            report["input_digest"] = fnv1a_hex(text);
        }

        if (command == "recheck") {
            auto o = cmd_recheck(input, budget);
            report["results"] = o.results;
            report["verification_log"] = o.log;
            report["status"] = status_name(o.code);
            return emit(o.code);
        }

        Invocation inv{command, input, json::object(), seed};
        if (command == "pierce" || command == "line-cover")
            if (cls >= 0)
                inv.options["class"] = cls;
        if (command == "fractional-two-color")
            inv.options["alpha"] = alpha;
        if (command == "duality")
            inv.options["b"] = b;
        if (command == "relint-check") {
            if (!input.is_null() && input.contains("construction")) {
                const auto& con = input.at("construction");
                if (con.at("kind") != "simplex")
                    throw InputError("relint-check needs a simplex construction");
                rd = con.at("d").get<std::size_t>();
                rf = con.at("f").get<std::size_t>();
                inv.seed = con.at("seed").get<std::uint64_t>();
                report["seed"] = inv.seed;
            }
            inv.options["d"] = rd;
            inv.options["f"] = rf;
        }
        report["options"] = inv.options;
        report["input"] = input;

        auto o = handlers().at(command)(inv, budget);
        code = o.code;
        report["results"] = o.results;
        report["certificates"] = o.certificates;
        report["verification_log"] = o.log;
        report["status"] = status_name(code);
    } catch (...) {
        std::string message, status;
        code = code_of(std::current_exception(), message, status);
        report["status"] = status;
        report["error"] = message;
        err << "chelly: " << message << "\n";
    }
    return emit(code);
}

} // namespace chelly
