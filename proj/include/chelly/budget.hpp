#pragma once

#include <cstddef>
#include <string>

namespace chelly {

/**
 * Limits on the exact searches. Exceeding one raises ScaleError rather than
 * returning an approximation.
 *
 * The hypergraph limits apply per connected component after duplicate and
 * dominated vertices/edges have been removed; the family limit applies per
 * connected component of the pairwise intersection graph.
 */
struct SearchBudget
{
    std::size_t max_tau_vertices = 24;
    std::size_t max_tau_edges = 64;
    std::size_t max_family_size = 16;
    std::size_t max_rainbow_tuples = 100000;
    std::size_t max_line_candidates = 20000;

    /**
     * Defaults overridden by CHELLY_BUDGET, a comma-separated list such as
     * "tau_vertices=64,family=24". Keys: tau_vertices, tau_edges, family,
     * rainbow, line_candidates. Throws InputError on malformed values.
     */
    static SearchBudget from_environment();
    static SearchBudget parse(const std::string& text, SearchBudget base);
    static SearchBudget parse(const std::string& text) { return parse(text, SearchBudget()); }
};

} // namespace chelly
