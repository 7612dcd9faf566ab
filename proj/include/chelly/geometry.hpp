#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "chelly/rational.hpp"

namespace chelly {

struct Point
{
    Vector coords;

    std::size_t dim() const { return coords.size(); }
    bool operator==(const Point&) const = default;
};

/// The closed set { x : normal . x <= offset }.
class Halfspace
{
public:
    /// Throws InputError when the normal is the zero vector.
    Halfspace(Vector normal, Rational offset);

    const Vector& normal() const { return normal_; }
    const Rational& offset() const { return offset_; }
    std::size_t dim() const { return normal_.size(); }

    bool contains(const Vector& x) const;
    /// { x + shift : x in this }
    Halfspace translated(const Vector& shift) const;

    bool operator==(const Halfspace&) const = default;

private:
    Vector normal_;
    Rational offset_;
};

/// The set { x : normal . x = offset }.
class Hyperplane
{
public:
    Hyperplane(Vector normal, Rational offset);

    const Vector& normal() const { return normal_; }
    const Rational& offset() const { return offset_; }
    std::size_t dim() const { return normal_.size(); }

    bool contains(const Vector& x) const;
    Hyperplane translated(const Vector& shift) const;

    bool operator==(const Hyperplane&) const = default;

private:
    Vector normal_;
    Rational offset_;
};

/**
 * Convex polyhedron in H-representation: finitely many closed halfspaces and
 * hyperplanes in R^dim. May be empty, flat, or unbounded; an empty
 * constraint list is the whole space.
 */
class Polyhedron
{
public:
    explicit Polyhedron(std::size_t dim,
                        std::vector<Halfspace> inequalities = {},
                        std::vector<Hyperplane> equalities = {});

    static Polyhedron whole_space(std::size_t dim);
    static Polyhedron box(const Vector& lower, const Vector& upper);

    /**
     * Convex hull of a vertex list, converted to H-representation exactly.
     * Supported for hulls in dimension <= 3 and for simplices and prisms in
     * higher dimension; facets are found by testing every affinely independent
     * vertex subset that spans a supporting hyperplane of the hull.
     */
    static Polyhedron from_vertices(const std::vector<Vector>& vertices);

    std::size_t dim() const { return dim_; }
    const std::vector<Halfspace>& inequalities() const { return inequalities_; }
    const std::vector<Hyperplane>& equalities() const { return equalities_; }
    std::size_t row_count() const { return inequalities_.size() + equalities_.size(); }

    bool contains(const Vector& x) const;
    bool contains(const Point& p) const { return contains(p.coords); }

    Polyhedron intersect(const Polyhedron& other) const;
    Polyhedron with(const Halfspace& h) const;
    Polyhedron with(const Hyperplane& h) const;
    Polyhedron translated(const Vector& shift) const;

    bool operator==(const Polyhedron&) const = default;

private:
    std::size_t dim_;
    std::vector<Halfspace> inequalities_;
    std::vector<Hyperplane> equalities_;
};

/**
 * k-dimensional affine subspace base + span(directions) of R^dim.
 * k = 0 is a point, k = 1 a line, k = dim - 1 a hyperplane.
 */
class AffineFlat
{
public:
    /// Throws InputError unless the directions are linearly independent and k < dim.
    AffineFlat(Point base, std::vector<Vector> directions);

    static AffineFlat point(Vector p);
    static AffineFlat line(Vector base, Vector direction);
    /// Line through two distinct points.
    static AffineFlat line_through(const Vector& a, const Vector& b);
    /// The hyperplane normal . x = offset as a (dim-1)-flat.
    static AffineFlat from_hyperplane(const Hyperplane& h);

    std::size_t dim() const { return base_.dim(); }
    std::size_t k() const { return directions_.size(); }
    const Point& base() const { return base_; }
    const std::vector<Vector>& directions() const { return directions_; }

    Vector at(const Vector& params) const;
    bool contains(const Vector& x) const;

    bool operator==(const AffineFlat&) const = default;

private:
    Point base_;
    std::vector<Vector> directions_;
};

/**
 * Vertices of a bounded polyhedron by brute force over tight constraint
 * subsets. Returned in lexicographic order without duplicates. Intended for
 * desk-scale inputs (a few dozen rows, dimension <= 4).
 */
std::vector<Vector> enumerate_vertices(const Polyhedron& p);

/// Lexicographic comparison of equal-length rational vectors.
bool lex_less(const Vector& a, const Vector& b);

/// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit);

/// Affine dimension of the hull of a point list (-1 for the empty list).
int affine_dimension(const std::vector<Vector>& points);

} // namespace chelly
