#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "chelly/rational.hpp"

namespace chelly {

enum class Relation { LessEqual, Equal };

/// coeffs . x (<= | =) rhs
struct LinearConstraint
{
    Vector coeffs;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

struct VariableBound
{
    std::optional<Rational> lower;
    std::optional<Rational> upper;
};

/**
 * Linear program over free rational variables. With an empty objective the
 * problem is a pure feasibility question; otherwise objective . x is
 * maximized. Bounds, when present, hold one entry per variable.
 */
struct LpProblem
{
    std::size_t num_vars = 0;
    Vector objective;
    std::vector<LinearConstraint> constraints;
    std::vector<VariableBound> bounds;
};

struct LpOptimal
{
    Vector point;
    Rational value;
    /// Multipliers on expanded_rows(): nonnegative on <= rows, sum y_i a_i = objective,
    /// sum y_i b_i = value.
    Vector duals;
};

struct LpFeasible
{
    Vector point;
};

/**
 * Multipliers on expanded_rows(), nonnegative on <= rows, whose aggregate is
 * the zero functional with a strictly negative right-hand side.
 */
struct LpInfeasible
{
    Vector farkas;
};

/// A feasible point plus a recession direction along which the objective grows.
struct LpUnbounded
{
    Vector point;
    Vector ray;
};

using LpOutcome = std::variant<LpOptimal, LpFeasible, LpInfeasible, LpUnbounded>;

/// The constraint rows followed by bound rows (x_j <= u_j, then -x_j <= -l_j, per variable).
std::vector<LinearConstraint> expanded_rows(const LpProblem& p);

/**
 * Two-phase primal simplex with Bland's rule in exact arithmetic. Every
 * outcome is checked against the problem before it is returned. Throws
 * DimensionError on ragged input.
 */
LpOutcome lp_solve(const LpProblem& p);

/// Exact re-verification of any outcome against its problem.
bool certifies(const LpProblem& p, const LpOutcome& outcome);

/// True iff y is a valid Farkas certificate for the given rows.
bool farkas_certifies(const std::vector<LinearConstraint>& rows, const Vector& y);

bool satisfies(const std::vector<LinearConstraint>& rows, const Vector& x);

inline bool is_infeasible(const LpOutcome& o) { return std::holds_alternative<LpInfeasible>(o); }

/// The feasible point of any non-infeasible outcome.
const Vector& outcome_point(const LpOutcome& o);

} // namespace chelly
