#pragma once

#include <variant>
#include <vector>

#include "chelly/geometry.hpp"

namespace chelly {

/// A common point of the sets an operation was asked about.
struct PointCertificate
{
    Point point;
};

/**
 * Farkas multipliers over the concatenation of several polyhedra's rows.
 * Each set contributes its inequalities then its equalities; row_counts[i]
 * is the number of rows set i contributed.
 */
struct FarkasCertificate
{
    Vector multipliers;
    std::vector<std::size_t> row_counts;
};

/**
 * One halfspace per input set, each containing its set, with empty common
 * intersection. repaired[i] marks halfspaces that did not come from the
 * Farkas aggregation because the aggregate normal vanished.
 */
struct SeparatingHalfspaces
{
    std::vector<Halfspace> halfspaces;
    FarkasCertificate provenance;
    std::vector<bool> repaired;
};

struct TransversalCertificate
{
    std::vector<AffineFlat> flats;
};

struct MatchingCertificate
{
    Vector weights;
};

using Certificate = std::variant<PointCertificate, FarkasCertificate, SeparatingHalfspaces,
                                 TransversalCertificate, MatchingCertificate>;

} // namespace chelly
