#pragma once

#include <algorithm>
#include <vector>

#include "chelly/geometry.hpp"
#include "chelly/hypergraph.hpp"
#include "chelly/polyhedra.hpp"

namespace chelly::testing {

/// Minimum number of masks whose union is everything, by subset DP.
inline std::size_t min_cover(std::size_t sets, const std::vector<unsigned>& masks)
{
    const unsigned full = (1U << sets) - 1;
    std::vector<bool> feasible(full + 1, false);
    for (auto m : masks)
        for (unsigned sub = m;; sub = (sub - 1) & m) {
            feasible[sub] = true;
            if (sub == 0)
                break;
        }
    std::vector<std::size_t> best(full + 1, sets + 1);
    best[0] = 0;
    for (unsigned s = 1; s <= full; ++s)
        for (unsigned sub = s; sub; sub = (sub - 1) & s)
            if (feasible[sub])
                best[s] = std::min(best[s], best[s & ~sub] + 1);
    return best[full];
}

/// Piercing oracle: points drawn from vertices of the sets and of all pairwise intersections.
inline std::size_t arrangement_piercing(const std::vector<Polyhedron>& fam)
{
    std::vector<Vector> points;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        auto vs = enumerate_vertices(fam[i]);
        points.insert(points.end(), vs.begin(), vs.end());
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
            auto ws = enumerate_vertices(fam[i].intersect(fam[j]));
            points.insert(points.end(), ws.begin(), ws.end());
        }
    }
    std::vector<unsigned> masks;
    for (const auto& p : points) {
        unsigned m = 0;
        for (std::size_t i = 0; i < fam.size(); ++i)
            if (fam[i].contains(p))
                m |= 1U << i;
        masks.push_back(m);
    }
    return min_cover(fam.size(), masks);
}

inline Rational cross(const Vector& u, const Vector& w)
{
    return u[0] * w[1] - u[1] * w[0];
}

/// Line cover oracle: lines through pairs of points on a grid of each polygon boundary, plus axis lines through each.
inline std::size_t grid_line_cover(const std::vector<Polyhedron>& fam, long steps)
{
    std::vector<Vector> boundary;
    std::vector<std::vector<Vector>> corners;
    for (const auto& s : fam) {
        auto vs = enumerate_vertices(s);
        corners.push_back(vs);
        boundary.insert(boundary.end(), vs.begin(), vs.end());
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                for (long j = 0; j <= steps; ++j) {
                    Vector p = vs[a];
                    axpy(p, make_rational(j, steps), subtract(vs[b], vs[a]));
                    boundary.push_back(p);
                }
    }
    std::sort(boundary.begin(), boundary.end());
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
    std::vector<std::pair<std::size_t, Vector>> lines;
    for (std::size_t a = 0; a < boundary.size(); ++a) {
        lines.emplace_back(a, Vector{Rational(1), Rational(0)});
        lines.emplace_back(a, Vector{Rational(0), Rational(1)});
        for (std::size_t b = a + 1; b < boundary.size(); ++b)
            lines.emplace_back(a, subtract(boundary[b], boundary[a]));
    }
    std::vector<unsigned> masks;
    for (const auto& [a, dir] : lines) {
        unsigned m = 0;
        for (std::size_t i = 0; i < fam.size(); ++i) {
            bool neg = false, pos = false, zero = false;
            for (const auto& v : corners[i]) {
                int s = sgn(cross(dir, subtract(v, boundary[a])));
                neg = neg || s < 0;
                pos = pos || s > 0;
                zero = zero || s == 0;
            }
            if (zero || (neg && pos))
                m |= 1U << i;
        }
        masks.push_back(m);
    }
    return min_cover(fam.size(), masks);
}

/// Smallest hitting set by scanning all vertex subsets (at most 20 vertices).
inline std::size_t brute_tau(const Hypergraph& h)
{
    std::size_t best = h.vertex_count + 1;
    for (unsigned mask = 0; mask < (1U << h.vertex_count); ++mask) {
        bool ok = std::all_of(h.edges.begin(), h.edges.end(), [&](const auto& e) {
            return std::any_of(e.begin(), e.end(), [&](auto v) { return (mask >> v) & 1U; });
        });
        if (ok)
            best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return best;
}

} // namespace chelly::testing
