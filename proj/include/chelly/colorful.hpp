#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chelly/bounds.hpp"
#include "chelly/budget.hpp"
#include "chelly/certificate.hpp"
#include "chelly/geometry.hpp"

namespace chelly {

/// Sets grouped by color; class index = color.
struct ColoredFamily
{
    std::size_t dim = 0;
    std::vector<std::vector<Polyhedron>> classes;
    std::vector<std::string> labels;

    /// Throws InputError on an empty class and DimensionError on a stray dimension.
    void validate() const;
    std::vector<Polyhedron> all_sets() const;
    bool operator==(const ColoredFamily&) const = default;
};

struct SetRef
{
    std::size_t cls = 0;
    std::size_t index = 0;
    bool operator==(const SetRef&) const = default;
};

struct ChReport
{
    bool holds = true;
    std::size_t tuples_checked = 0;
    std::optional<std::vector<SetRef>> violating_rainbow;
    std::optional<FarkasCertificate> certificate;
};

/**
 * Decides the colorful Helly hypothesis by depth-first rainbow enumeration
 * with prefix pruning. The product of class sizes must stay within the
 * rainbow budget (ScaleError otherwise).
 */
ChReport check_ch(const ColoredFamily& fam, const SearchBudget& budget = {});

struct ClassPoint
{
    std::size_t cls = 0;
    Point point;
};

/**
 * First class with a common point. When none exists the hypothesis is
 * re-checked: a failing rainbow raises PreconditionError, otherwise
 * TheoremViolation.
 */
ClassPoint intersecting_class(const ColoredFamily& fam, const SearchBudget& budget = {});

/**
 * Halfspaces H_i containing sets[i] with empty intersection, aggregated
 * per set from a Farkas certificate of the joint system. Throws
 * PreconditionError (with the common point) if the sets intersect.
 */
SeparatingHalfspaces separating_halfspaces(const std::vector<Polyhedron>& sets);

/// Each H_i contains sets[i] (LP) and the H_i have no common point (LP).
bool verify_separating_halfspaces(const std::vector<Polyhedron>& sets, const SeparatingHalfspaces& cert);

/// Minimal non-intersecting subfamily (at most dim + 1 indices, ascending).
std::vector<std::size_t> helly_witness(const std::vector<Polyhedron>& sets);

struct PiercedClass
{
    std::size_t cls = 0;
    std::vector<Point> points;
};

struct LineCover
{
    std::vector<AffineFlat> lines;
};

struct HyperplaneCover
{
    std::size_t cls = 0;
    std::vector<Hyperplane> hyperplanes;
};

struct Unresolved
{
    std::string report;
};

using DichotomyOutcome = std::variant<PiercedClass, LineCover, HyperplaneCover, Unresolved>;

/**
 * Either a point common to all of A (PiercedClass, cls 0) or at most d
 * hyperplanes whose union meets every member of B (HyperplaneCover, cls 1).
 * Every pair A x B must intersect (PreconditionError naming a failing pair).
 */
DichotomyOutcome two_color_lemma(const std::vector<Polyhedron>& a, const std::vector<Polyhedron>& b);

/// Two applications of two_color_lemma: one pierced class or at most four lines crossing everything.
DichotomyOutcome theorem_main_d2(const ColoredFamily& fam);

/// Membership / crossing re-check of any outcome against the family it concerns.
bool verify_outcome(const ColoredFamily& fam, const DichotomyOutcome& outcome);

struct GenericLine
{
    std::size_t cls = 0;
    AffineFlat line;
    Vector direction;
    std::vector<Vector> rejected_directions;
};

/**
 * A class of a d-colored CH family in R^d crossed by one line: project
 * along a random integer direction, find an intersecting class below, lift.
 * Up to 32 directions; GenerationError listing them if all fail.
 */
GenericLine generic_line_class(const ColoredFamily& fam, std::uint64_t seed, const SearchBudget& budget = {});

struct FractionalTwoColorReport
{
    Rational alpha;
    std::size_t dim = 0;
    std::size_t intersecting_pairs = 0;
    Rational lambda;
    Rational gamma;
    std::string beta_formula;
    Point best_point;
    std::size_t point_coverage = 0;
    std::optional<Hyperplane> best_hyperplane;
    std::size_t hyperplane_coverage = 0;
    std::size_t hyperplane_candidates = 0;
    bool point_branch = false;
    bool hyperplane_branch = false;
};

/**
 * Best single point over A (exact, via maximal intersecting subfamilies) and
 * best hyperplane over B (candidates from the constructive lemma applied to
 * non-intersecting (d+1)-subsets of A, plus vertex-spanned hyperplanes for
 * d <= 3), compared against gamma |A| and lambda |B|. Requires at least
 * alpha |A| |B| intersecting pairs; TheoremViolation if neither threshold is met.
 */
FractionalTwoColorReport fractional_two_color_search(const std::vector<Polyhedron>& a,
                                                     const std::vector<Polyhedron>& b, const Rational& alpha,
                                                     const SearchBudget& budget = {},
                                                     const BetaFormula& beta = default_beta());

struct SplitResult
{
    std::vector<std::size_t> prefix;
    std::size_t k = 0;
    std::optional<std::size_t> piercing;
    std::optional<std::size_t> cover;
    bool cover_upper_bound_only = false;
    std::string note;
    bool within_budgets = false;
};

struct DichotomyReport
{
    std::vector<SplitResult> splits;
    std::size_t min_class_piercing = 0;
};

/**
 * For every k in [1, d] and every choice of k prefix classes: the exact
 * piercing number of their union and a k-flat cover of the remaining
 * classes (exact for lines in the plane, candidate-based upper bound
 * otherwise; k = d is covered by R^d itself). d <= 3.
 */
DichotomyReport dichotomy_report(const ColoredFamily& fam, std::size_t f_budget, std::size_t g_budget,
                                 const SearchBudget& budget = {});

} // namespace chelly
