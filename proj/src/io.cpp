#include "chelly/io.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "chelly/errors.hpp"

namespace chelly {

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t count_from_json(const json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw InputError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

} // namespace

json to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.dump());
    if (j.is_number_float())
        throw InputError("floating-point literal " + j.dump() + "; write rationals as strings");
    throw InputError("expected a rational, got " + j.dump());
}

json to_json(const Vector& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

Vector vector_from_json(const json& j)
{
    if (!j.is_array())
        throw InputError("expected an array of rationals");
    Vector out;
    for (const auto& x : j)
        out.push_back(rational_from_json(x));
    return out;
}

json to_json(const Halfspace& h) { return {{"normal", to_json(h.normal())}, {"offset", to_json(h.offset())}}; }

Halfspace halfspace_from_json(const json& j)
{
    return Halfspace(vector_from_json(field(j, "normal")), rational_from_json(field(j, "offset")));
}

json to_json(const Hyperplane& h) { return {{"normal", to_json(h.normal())}, {"offset", to_json(h.offset())}}; }

Hyperplane hyperplane_from_json(const json& j)
{
    return Hyperplane(vector_from_json(field(j, "normal")), rational_from_json(field(j, "offset")));
}

json to_json(const Polyhedron& p)
{
    json ineq = json::array(), eq = json::array();
    for (const auto& h : p.inequalities())
        ineq.push_back(to_json(h));
    for (const auto& h : p.equalities())
        eq.push_back(to_json(h));
    return {{"hrep", {{"inequalities", ineq}, {"equalities", eq}}}};
}

Polyhedron polyhedron_from_json(const json& j, std::size_t dim)
{
    if (j.contains("hrep")) {
        const auto& h = j.at("hrep");
        std::vector<Halfspace> ineq;
        std::vector<Hyperplane> eq;
        if (h.contains("inequalities"))
            for (const auto& row : h.at("inequalities"))
                ineq.push_back(halfspace_from_json(row));
        if (h.contains("equalities"))
            for (const auto& row : h.at("equalities"))
                eq.push_back(hyperplane_from_json(row));
        for (const auto& row : ineq)
            if (row.dim() != dim)
                throw DimensionError("inequality of dimension " + std::to_string(row.dim()) + " in R^" +
                                     std::to_string(dim));
        for (const auto& row : eq)
            if (row.dim() != dim)
                throw DimensionError("equality of dimension " + std::to_string(row.dim()) + " in R^" +
                                     std::to_string(dim));
        return Polyhedron(dim, std::move(ineq), std::move(eq));
    }
    if (j.contains("vrep")) {
        if (dim > 3)
            throw InputError("vrep sets are accepted only in dimension <= 3");
        std::vector<Vector> verts;
        for (const auto& v : field(j.at("vrep"), "vertices")) {
            verts.push_back(vector_from_json(v));
            if (verts.back().size() != dim)
                throw DimensionError("vertex of dimension " + std::to_string(verts.back().size()) + " in R^" +
                                     std::to_string(dim));
        }
        if (verts.empty())
            throw InputError("vrep with no vertices");
        return Polyhedron::from_vertices(verts);
    }
    throw InputError("set needs an \"hrep\" or \"vrep\" field");
}

json to_json(const AffineFlat& f)
{
    json dirs = json::array();
    for (const auto& d : f.directions())
        dirs.push_back(to_json(d));
    return {{"base", to_json(f.base().coords)}, {"directions", dirs}};
}

AffineFlat flat_from_json(const json& j)
{
    std::vector<Vector> dirs;
    for (const auto& d : field(j, "directions"))
        dirs.push_back(vector_from_json(d));
    return AffineFlat(Point{vector_from_json(field(j, "base"))}, std::move(dirs));
}

json to_json(const FarkasCertificate& c)
{
    return {{"multipliers", to_json(c.multipliers)}, {"row_counts", c.row_counts}};
}

FarkasCertificate farkas_from_json(const json& j)
{
    FarkasCertificate c;
    c.multipliers = vector_from_json(field(j, "multipliers"));
    for (const auto& n : field(j, "row_counts"))
        c.row_counts.push_back(count_from_json(n, "row count"));
    return c;
}

json family_to_json(const ColoredFamily& fam)
{
    json classes = json::array();
    for (std::size_t i = 0; i < fam.classes.size(); ++i) {
        json sets = json::array();
        for (const auto& s : fam.classes[i])
            sets.push_back(to_json(s));
        classes.push_back({{"label", i < fam.labels.size() ? fam.labels[i] : "class" + std::to_string(i)},
                           {"sets", sets}});
    }
    return {{"schema_version", schema_version}, {"dim", fam.dim}, {"classes", classes}};
}

ColoredFamily family_from_json(const json& j)
{
    if (!j.is_object())
        throw InputError("family document must be a JSON object");
    if (count_from_json(field(j, "schema_version"), "schema_version") != schema_version)
        throw InputError("unsupported schema_version " + j.at("schema_version").dump());
    ColoredFamily fam;
    fam.dim = count_from_json(field(j, "dim"), "dim");
    if (fam.dim == 0)
        throw InputError("dim must be positive");
    const auto& classes = field(j, "classes");
    if (!classes.is_array() || classes.empty())
        throw InputError("classes must be a non-empty array");
    for (const auto& c : classes) {
        std::vector<Polyhedron> sets;
        for (const auto& s : field(c, "sets"))
            sets.push_back(polyhedron_from_json(s, fam.dim));
        fam.classes.push_back(std::move(sets));
        fam.labels.push_back(c.contains("label") ? c.at("label").get<std::string>()
                                                 : "class" + std::to_string(fam.classes.size() - 1));
    }
    fam.validate();
    return fam;
}

json hypergraph_to_json(const Hypergraph& h)
{
    json out = {{"schema_version", schema_version}, {"vertex_count", h.vertex_count}, {"edges", h.edges}};
    if (!h.payload.empty()) {
        json payload = json::array();
        for (const auto& p : h.payload) {
            if (const auto* pt = std::get_if<Point>(&p))
                payload.push_back({{"point", to_json(pt->coords)}});
            else if (const auto* fl = std::get_if<AffineFlat>(&p))
                payload.push_back({{"flat", to_json(*fl)}});
            else
                payload.push_back(nullptr);
        }
        out["payload"] = payload;
    }
    return out;
}

Hypergraph hypergraph_from_json(const json& j)
{
    if (!j.is_object())
        throw InputError("hypergraph document must be a JSON object");
    if (count_from_json(field(j, "schema_version"), "schema_version") != schema_version)
        throw InputError("unsupported schema_version " + j.at("schema_version").dump());
    Hypergraph h;
    h.vertex_count = count_from_json(field(j, "vertex_count"), "vertex_count");
    for (const auto& e : field(j, "edges")) {
        std::vector<std::size_t> edge;
        for (const auto& v : e)
            edge.push_back(count_from_json(v, "vertex index"));
        h.edges.push_back(std::move(edge));
    }
    if (j.contains("payload"))
        for (const auto& p : j.at("payload")) {
            if (p.is_null())
                h.payload.emplace_back(std::monostate{});
            else if (p.contains("point"))
                h.payload.emplace_back(Point{vector_from_json(p.at("point"))});
            else
                h.payload.emplace_back(flat_from_json(field(p, "flat")));
        }
    h.validate();
    return h;
}

std::string fnv1a_hex(std::string_view bytes)
{
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::ostringstream s;
    s << std::hex;
    s.width(16);
    s.fill('0');
    s << hash;
    return s.str();
}

std::string read_text(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace chelly
