#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chelly/budget.hpp"
#include "chelly/geometry.hpp"
#include "chelly/rational.hpp"

namespace chelly {

using VertexPayload = std::variant<std::monostate, Point, AffineFlat>;

/**
 * Finite hypergraph. Edges are non-empty vertex-index lists and may repeat.
 * payload is either empty or aligned with the vertex indices.
 */
struct Hypergraph
{
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::size_t>> edges;
    std::vector<VertexPayload> payload;

    /// Throws InputError on an empty edge, an out-of-range index or a misaligned payload.
    void validate() const;
    bool operator==(const Hypergraph&) const = default;
};

struct TransversalResult
{
    std::size_t tau = 0;
    std::vector<std::size_t> witness;
    /// Set for heuristic results; such values are upper bounds only.
    bool upper_bound_only = false;
    /// Proven lower bound (equals tau for exact results).
    std::size_t lower_bound = 0;
    /// Branch-and-bound nodes visited, as the search record.
    std::size_t nodes_explored = 0;
};

struct FractionalResult
{
    Rational value;
    /// Per vertex for transversals, per edge for matchings.
    Vector weights;
};

struct BMatchingResult
{
    std::size_t size = 0;
    std::vector<std::size_t> edges;
};

/**
 * Exact transversal number by branch-and-bound. The hypergraph is first
 * reduced (duplicate and dominated vertices, superset edges) and split into
 * connected components; the budget bounds each reduced component. Throws
 * ScaleError beyond it.
 */
TransversalResult tau(const Hypergraph& h, const SearchBudget& budget = {});

/// Greedy hitting set, flagged upper_bound_only.
TransversalResult greedy_transversal(const Hypergraph& h);

/// Minimum fractional transversal (LP). Throws InputError on an empty edge list.
FractionalResult tau_star(const Hypergraph& h);
/// Maximum fractional matching (LP). Throws InputError on an empty edge list.
FractionalResult nu_star(const Hypergraph& h);

/**
 * Largest sub-list of edges in which every vertex lies in at most b chosen
 * edges. Exact search bounded by floor(b * nu*); the edge budget applies per
 * connected component.
 */
BMatchingResult nu_b(const Hypergraph& h, std::size_t b, const SearchBudget& budget = {});

struct DualityReport
{
    std::size_t b = 1;
    std::optional<BMatchingResult> nu_b;
    FractionalResult nu_star;
    FractionalResult tau_star;
    std::optional<TransversalResult> tau;
    /// Present when an exact search hit its budget; the LP pair is still reported.
    std::optional<std::string> scale_error;
    /// nu_b/b <= nu* = tau* <= tau over the quantities that were computed.
    bool sandwich_holds = false;
};

/// Computes nu_b, nu*, tau*, tau and checks the duality sandwich exactly.
DualityReport duality_report(const Hypergraph& h, std::size_t b, const SearchBudget& budget = {});

bool is_transversal(const Hypergraph& h, const std::vector<std::size_t>& vertices);
bool is_b_matching(const Hypergraph& h, const std::vector<std::size_t>& edges, std::size_t b);
bool is_fractional_transversal(const Hypergraph& h, const Vector& weights);
bool is_fractional_matching(const Hypergraph& h, const Vector& weights);

} // namespace chelly
