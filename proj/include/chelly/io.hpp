#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "chelly/certificate.hpp"
#include "chelly/colorful.hpp"
#include "chelly/geometry.hpp"
#include "chelly/hypergraph.hpp"

namespace chelly {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

/// Rationals are written as "p/q" strings.
json to_json(const Rational& r);
/// Accepts "p/q" and exact decimal strings or JSON integers. Floats are rejected (InputError).
Rational rational_from_json(const json& j);

json to_json(const Vector& v);
Vector vector_from_json(const json& j);

json to_json(const Halfspace& h);
Halfspace halfspace_from_json(const json& j);
json to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const json& j);

/// {"hrep": {"inequalities": [...], "equalities": [...]}}
json to_json(const Polyhedron& p);
/// hrep, or vrep {"vertices": [...]} in dimension <= 3.
Polyhedron polyhedron_from_json(const json& j, std::size_t dim);

json to_json(const AffineFlat& f);
AffineFlat flat_from_json(const json& j);

json to_json(const FarkasCertificate& c);
FarkasCertificate farkas_from_json(const json& j);

/// FamilyDocument: {"schema_version", "dim", "classes": [{"label", "sets"}]}
json family_to_json(const ColoredFamily& fam);
ColoredFamily family_from_json(const json& j);

/// {"schema_version", "vertex_count", "edges", optional "payload"}
json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Reads a whole file ("-" for standard input). InputError if it cannot be read.
std::string read_text(const std::string& path);
/// Parses JSON text; InputError on malformed input.
json parse_json(const std::string& text);

} // namespace chelly
