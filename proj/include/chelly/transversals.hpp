#pragma once

#include <vector>

#include "chelly/budget.hpp"
#include "chelly/geometry.hpp"
#include "chelly/hypergraph.hpp"

namespace chelly {

/// A maximal subfamily with a common point, as indices into the family.
struct IntersectingSubfamily
{
    std::vector<std::size_t> members;
    Point point;
};

/**
 * Every maximal intersecting subfamily (Bron-Kerbosch over exact LP
 * intersection tests). The family budget bounds each connected component
 * of the pairwise intersection graph; beyond it ScaleError.
 */
std::vector<IntersectingSubfamily> maximal_intersecting_subfamilies(const std::vector<Polyhedron>& fam,
                                                                    const SearchBudget& budget = {});

/**
 * One vertex per maximal intersecting subfamily, payload its common point;
 * edge i lists the vertices whose subfamily contains fam[i]. An empty member
 * raises PreconditionError since nothing pierces it.
 */
Hypergraph build_point_hypergraph(const std::vector<Polyhedron>& fam, const SearchBudget& budget = {});

/**
 * Candidate (k-1)-flats inside the carriers: for k = 1 the finite endpoints
 * of each set's interval on each carrier line (plus one point for sets
 * containing the whole line); for k = 2 the lines through two distinct
 * cross-section vertices plus one fallback line per cross-section. Edge i
 * lists the candidates crossing fam[i]. Other k raise InputError.
 */
Hypergraph build_flat_hypergraph(const std::vector<Polyhedron>& fam, const std::vector<AffineFlat>& carriers,
                                 std::size_t k, const SearchBudget& budget = {});

/// Hypergraph over the given candidate flats; PreconditionError if a set meets none.
Hypergraph candidate_hypergraph(const std::vector<Polyhedron>& fam, const std::vector<AffineFlat>& candidates);

/// Canonical form of a line: primitive integer direction with positive leading entry, base on the axis hyperplane.
AffineFlat canonical_line(const AffineFlat& line);

/**
 * Lines through every pair of distinct vertices of the (bounded) sets, plus
 * a horizontal line through the first vertex of each set, deduplicated.
 * Requires bounded non-empty sets of one dimension; ScaleError past the
 * candidate budget.
 */
std::vector<AffineFlat> vertex_pair_lines(const std::vector<Polyhedron>& fam, const SearchBudget& budget = {});

struct PointTransversal
{
    TransversalResult search;
    std::vector<Point> points;
};

struct LineTransversal
{
    TransversalResult search;
    std::vector<AffineFlat> lines;
    std::size_t candidate_count = 0;
};

/// Exact piercing number with its points, each set verified to contain one.
PointTransversal piercing_number(const std::vector<Polyhedron>& fam, const SearchBudget& budget = {});

/**
 * Exact minimum number of lines crossing a family of bounded polygons in
 * the plane, over the vertex-pair candidates. DimensionError off R^2.
 */
LineTransversal line_cover_number(const std::vector<Polyhedron>& fam, const SearchBudget& budget = {});

/**
 * Smallest cover by lines from the vertex-pair candidates in any dimension.
 * Outside the plane the scheme is not complete, so the result is flagged
 * upper_bound_only.
 */
LineTransversal line_cover_upper_bound(const std::vector<Polyhedron>& fam, const SearchBudget& budget = {});

} // namespace chelly
