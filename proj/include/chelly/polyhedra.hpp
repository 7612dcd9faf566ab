#pragma once

#include <optional>
#include <vector>

#include "chelly/certificate.hpp"
#include "chelly/geometry.hpp"
#include "chelly/lp.hpp"

namespace chelly {

/// Inequalities then equalities of p, as LP rows.
std::vector<LinearConstraint> constraint_rows(const Polyhedron& p);

/// Feasibility LP of the concatenated systems, in argument order.
LpProblem intersection_problem(const std::vector<const Polyhedron*>& sets);

/**
 * Decides whether the sets share a point. Returns a PointCertificate or a
 * FarkasCertificate over the concatenated system. Throws InputError on an
 * empty list and DimensionError on mixed dimensions.
 */
Certificate polyhedra_intersect(const std::vector<Polyhedron>& sets);
Certificate polyhedra_intersect(const std::vector<const Polyhedron*>& sets);

/// Convenience: the common point, or nullopt when the intersection is empty.
std::optional<Vector> common_point(const std::vector<const Polyhedron*>& sets);
bool intersects(const Polyhedron& a, const Polyhedron& b);
bool is_empty(const Polyhedron& p);

/// Re-checks a polyhedra_intersect certificate against the sets it concerns.
bool verify_intersection_certificate(const std::vector<const Polyhedron*>& sets,
                                     const Certificate& cert);

/// Maximizes objective . x over p.
LpOutcome maximize_over(const Polyhedron& p, const Vector& objective);

bool is_bounded(const Polyhedron& p);

/// The parameter set { t in R^k : f.at(t) in s } as a polyhedron in R^k (k >= 1).
Polyhedron restrict_to_flat(const Polyhedron& s, const AffineFlat& f);

/**
 * True iff the flat meets s. Exact: for k = 0 a membership test, for k = 1
 * the one-variable LP solved as an interval, otherwise lp_solve over the k
 * flat parameters.
 */
bool flat_crosses(const AffineFlat& f, const Polyhedron& s);

/// Fourier-Motzkin elimination of one coordinate followed by redundancy removal.
Polyhedron eliminate_coordinate(const Polyhedron& p, std::size_t coordinate);

/// Drops duplicate and LP-redundant inequalities. Empty inputs map to a canonical empty set.
Polyhedron remove_redundant(const Polyhedron& p);

/**
 * Coordinate of `direction` used as the dropped axis by affine_project: the
 * first non-zero entry.
 */
std::size_t projection_axis(const Vector& direction);

/**
 * Image of p under the projection along `direction` onto the hyperplane
 * x_a = 0 (a = projection_axis), expressed in the remaining d-1 coordinates.
 */
Polyhedron project_along(const Polyhedron& p, const Vector& direction);

/// project_along applied to each set. Throws InputError for a zero direction.
std::vector<Polyhedron> affine_project(const std::vector<Polyhedron>& family,
                                       const Vector& direction);

/// Inverse image of a point of the projected space: the line through it along `direction`.
AffineFlat lift_projected_point(const Vector& projected, const Vector& direction);

} // namespace chelly
