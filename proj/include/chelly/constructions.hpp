#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chelly/colorful.hpp"
#include "chelly/geometry.hpp"

namespace chelly {

/// x -> coeffs . x + constant
struct AffineFunction
{
    Vector coeffs;
    Rational constant;

    Rational operator()(const Vector& x) const { return dot(coeffs, x) + constant; }
    bool operator==(const AffineFunction&) const = default;
};

/// Barycentric coordinates of a d-simplex given by d + 1 affinely independent vertices.
std::vector<AffineFunction> barycentric_coordinates(const std::vector<Vector>& vertices);

/// Classes 1..d: n hyperplanes x_i = 0..n-1; class d+1: {R^d}.
ColoredFamily generate_figure1(std::size_t d, std::size_t n);

/**
 * Bounded analogue: class i holds n slabs 3j <= x_i <= 3j+1 cut to the box
 * [-1, 3n+1]^d, class d+1 is that box. The diagonal line crosses everything.
 */
ColoredFamily generate_figure1_slabs(std::size_t d, std::size_t n);

/**
 * Line cover lower bound: groups[j] lies in { lambda_j <= delta } and in
 * { lambda_b >= eta } for b != j. With delta < eta a line meets at most two
 * groups, so at least ceil(groups / 2) lines are needed.
 */
struct RegionSeparation
{
    Rational delta;
    Rational eta;
    bool valid = false;
    std::size_t lower_bound = 0;
};

RegionSeparation region_separation(const std::vector<std::vector<Polyhedron>>& groups,
                                   const std::vector<AffineFunction>& lambdas);

/// Inverted triangle with its top side at height `height` and apex at (`bottom`, 0) inside T0.
struct PlanarTriangle
{
    Rational height;
    Rational bottom;
    std::array<Vector, 3> vertices;
};

struct PlanarConstruction
{
    std::size_t f = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;
    std::array<Vector, 3> t0;
    std::vector<PlanarTriangle> triangles;
    std::vector<Polyhedron> f1;
    /// 3m segments: copy k of side j at index j * m + k.
    std::vector<std::array<Vector, 2>> segments;
    std::vector<Polyhedron> f2;
    /// Lowest ordinate of the earlier pairwise intersections, one entry per triangle from the third on.
    std::vector<Rational> pair_floor;
    Rational shrink;
    Rational shift;
    RegionSeparation lines_certificate;
    std::vector<std::string> log;

    ColoredFamily family() const;
};

/**
 * The planar lower-bound family with m = 2f. T0 = (0,0), (12,0), (6,12);
 * triangles are placed recursively below all earlier pairwise
 * intersections; F2 holds m inward translates of each shrunk side of T0.
 * Every invariant is verified; GenerationError if the dyadic searches fail.
 */
PlanarConstruction generate_planar(std::size_t f, std::uint64_t seed);

/// The triangle placement alone (m triangles, in T0 coordinates), as used by both constructions.
std::vector<PlanarTriangle> place_planar_triangles(std::size_t m, std::uint64_t seed, std::vector<Rational>* floors);

struct SimplexConstruction
{
    std::size_t d = 0;
    std::size_t f = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;
    std::vector<Vector> vertices;
    std::vector<AffineFunction> lambdas;
    /// Per face tau_i (i < d): the m triangles mapped into tau_i.
    std::vector<std::vector<std::array<Vector, 3>>> face_triangles;
    /// Before shrinking: d-1 cone classes then the d+1 facets.
    std::vector<std::vector<Polyhedron>> hat_classes;
    /// Final classes F_1..F_d; F_d holds m copies per facet, copy k of facet j at j * m + k.
    std::vector<std::vector<Polyhedron>> classes;
    Rational epsilon;
    Rational shift;
    RegionSeparation lines_certificate;
    std::vector<std::string> log;

    ColoredFamily family() const;
};

/**
 * The simplex lower-bound family for 2 <= d <= 4 with m = 2f. Delta has
 * vertices 0, e_1, ..., e_d; cones over planar triangle families in the
 * faces tau_i; all sets cut by lambda_a + lambda_b >= epsilon; F_d is m
 * translates of each shrunk facet along its inward normal. Verified before
 * return; GenerationError names the failing tuple otherwise.
 */
SimplexConstruction generate_simplex_family(std::size_t d, std::size_t f, std::uint64_t seed);

struct RelintFailure
{
    std::vector<std::size_t> selection;
    /// Optimal margin when the LP is feasible; nullopt when the sets miss the facet altogether.
    std::optional<Rational> margin;
};

struct RelintReport
{
    std::size_t selections = 0;
    Rational min_margin;
    std::vector<RelintFailure> failures;
    bool holds() const { return failures.empty(); }
};

/**
 * For every selection C_1..C_{d-1} of cones and facet C_d, maximizes the
 * margin delta with x in every C_i, lambda_j(x) = 0 and lambda_b(x) >= delta
 * (b != j). The selection passes iff the optimum is positive.
 */
RelintReport verify_relint_property(const std::vector<std::vector<Polyhedron>>& cones,
                                    const std::vector<AffineFunction>& lambdas);
RelintReport verify_relint_property(const SimplexConstruction& c);

struct FacetCrossingReport
{
    std::size_t d = 0;
    std::size_t max_crossed = 0;
    std::size_t lines_checked = 0;
    std::optional<AffineFlat> best_line;
    std::string argument;
};

/**
 * Largest number of facet relative interiors of the standard d-simplex met
 * by one candidate line (through vertices, edge midpoints, facet centroids
 * and perturbed centroids). 2 <= d <= 4.
 */
FacetCrossingReport max_simplex_facets_crossed(std::size_t d);

/// Whether the line meets the relative interior of facet j (lambda_j = 0, others > 0).
bool line_crosses_facet_interior(const AffineFlat& line, const std::vector<AffineFunction>& lambdas, std::size_t j);

} // namespace chelly
