#include "chelly/lp.hpp"

#include <stdexcept>
#include <string>

#include "chelly/errors.hpp"

namespace chelly {

std::vector<LinearConstraint> expanded_rows(const LpProblem& p)
{
    std::vector<LinearConstraint> rows = p.constraints;
    for (std::size_t j = 0; j < p.bounds.size(); ++j) {
        if (p.bounds[j].upper)
            rows.push_back({unit_vector(p.num_vars, j), Relation::LessEqual, *p.bounds[j].upper});
        if (p.bounds[j].lower)
            rows.push_back({negate(unit_vector(p.num_vars, j)), Relation::LessEqual,
                            Rational(-*p.bounds[j].lower)});
    }
    return rows;
}

namespace {

void validate(const LpProblem& p)
{
    if (!p.objective.empty() && p.objective.size() != p.num_vars)
        throw DimensionError("objective has " + std::to_string(p.objective.size()) +
                             " entries for " + std::to_string(p.num_vars) + " variables");
    if (!p.bounds.empty() && p.bounds.size() != p.num_vars)
        throw DimensionError("bounds list does not match the variable count");
    for (std::size_t i = 0; i < p.constraints.size(); ++i)
        if (p.constraints[i].coeffs.size() != p.num_vars)
            throw DimensionError("constraint " + std::to_string(i) + " has " +
                                 std::to_string(p.constraints[i].coeffs.size()) +
                                 " coefficients for " + std::to_string(p.num_vars) + " variables");
}

/**
 * Dense tableau in standard form A y = b, y >= 0, b >= 0. Columns are
 * ordered: split free variables (x_j = y_2j - y_2j+1), one slack per <= row,
 * one artificial per row. The artificial block of the tableau is B^{-1}.
 */
class Tableau
{
public:
    explicit Tableau(const std::vector<LinearConstraint>& rows, std::size_t num_vars)
        : n_(num_vars), m_(rows.size())
    {
        std::size_t slacks = 0;
        for (const auto& r : rows)
            if (r.relation == Relation::LessEqual)
                ++slacks;
        slack_begin_ = 2 * n_;
        art_begin_ = slack_begin_ + slacks;
        cols_ = art_begin_ + m_;
        t_.assign(m_, Vector(cols_ + 1, Rational(0)));
        sign_.assign(m_, 1);
        slack_of_row_.assign(m_, -1);
        basis_.resize(m_);

        std::size_t s = slack_begin_;
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& r = rows[i];
            sign_[i] = sgn(r.rhs) < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(r.coeffs[j]) == 0)
                    continue;
                Rational a = r.coeffs[j] * sign_[i];
                t_[i][2 * j] = a;
                t_[i][2 * j + 1] = -a;
            }
            if (r.relation == Relation::LessEqual) {
                slack_of_row_[i] = static_cast<long>(s);
                t_[i][s++] = sign_[i];
            }
            t_[i][art_begin_ + i] = 1;
            t_[i][cols_] = r.rhs * sign_[i];
            basis_[i] = art_begin_ + i;
        }
    }

    /// Minimizes cost . y with Bland's rule. Returns the unbounded entering column, if any.
    std::optional<std::size_t> minimize(const Vector& cost, bool allow_artificials)
    {
        while (true) {
            Vector rc = reduced_costs(cost);
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allow_artificials && j >= art_begin_)
                    break;
                if (sgn(rc[j]) < 0) {
                    entering = j;
                    break;
                }
            }
            if (!entering)
                return std::nullopt;
            const std::size_t e = *entering;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (sgn(t_[r][e]) <= 0)
                    continue;
                Rational ratio = t_[r][cols_] / t_[r][e];
                if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (!leave)
                return e;
            pivot(*leave, e);
        }
    }

    /// Pivots remaining zero-level artificials out of the basis where possible.
    void expel_artificials()
    {
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < art_begin_)
                continue;
            for (std::size_t j = 0; j < art_begin_; ++j) {
                if (sgn(t_[r][j]) != 0) {
                    pivot(r, j);
                    break;
                }
            }
        }
    }

    Rational objective_value(const Vector& cost) const
    {
        Rational v(0);
        for (std::size_t r = 0; r < m_; ++r)
            v += cost[basis_[r]] * t_[r][cols_];
        return v;
    }

    Vector column_values() const
    {
        Vector y = zero_vector(cols_);
        for (std::size_t r = 0; r < m_; ++r)
            y[basis_[r]] = t_[r][cols_];
        return y;
    }

    Vector point() const { return to_x(column_values()); }

    Vector to_x(const Vector& y) const
    {
        Vector x = zero_vector(n_);
        for (std::size_t j = 0; j < n_; ++j)
            x[j] = y[2 * j] - y[2 * j + 1];
        return x;
    }

    /// Direction in y-space obtained by raising the unbounded entering column.
    Vector ray(std::size_t entering) const
    {
        Vector y = zero_vector(cols_);
        y[entering] = 1;
        for (std::size_t r = 0; r < m_; ++r)
            y[basis_[r]] -= t_[r][entering];
        return to_x(y);
    }

    /// Row multipliers y_i = -sign_i * (c_B^T B^{-1})_i in the original row space.
    Vector row_multipliers(const Vector& cost) const
    {
        Vector y = zero_vector(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            Rational pi(0);
            for (std::size_t r = 0; r < m_; ++r)
                if (sgn(cost[basis_[r]]) != 0)
                    pi += cost[basis_[r]] * t_[r][art_begin_ + i];
            y[i] = -pi * sign_[i];
        }
        return y;
    }

    std::size_t columns() const { return cols_; }
    std::size_t artificial_begin() const { return art_begin_; }

private:
    Vector reduced_costs(const Vector& cost) const
    {
        Vector rc = cost;
        for (std::size_t r = 0; r < m_; ++r) {
            const Rational& cb = cost[basis_[r]];
            if (sgn(cb) == 0)
                continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn(t_[r][j]) != 0)
                    rc[j] -= cb * t_[r][j];
        }
        return rc;
    }

    void pivot(std::size_t row, std::size_t col)
    {
        const Rational inv = 1 / t_[row][col];
        for (auto& x : t_[row])
            if (sgn(x) != 0)
                x *= inv;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == row || sgn(t_[r][col]) == 0)
                continue;
            const Rational f = t_[r][col];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(t_[row][j]) != 0)
                    t_[r][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    std::size_t n_, m_;
    std::size_t slack_begin_ = 0, art_begin_ = 0, cols_ = 0;
    std::vector<Vector> t_;
    std::vector<int> sign_;
    std::vector<long> slack_of_row_;
    std::vector<std::size_t> basis_;
};

} // namespace

bool satisfies(const std::vector<LinearConstraint>& rows, const Vector& x)
{
    for (const auto& r : rows) {
        const Rational lhs = dot(r.coeffs, x);
        if (r.relation == Relation::LessEqual ? lhs > r.rhs : lhs != r.rhs)
            return false;
    }
    return true;
}

bool farkas_certifies(const std::vector<LinearConstraint>& rows, const Vector& y)
{
    if (rows.size() != y.size() || rows.empty())
        return false;
    const std::size_t n = rows.front().coeffs.size();
    Vector aggregate = zero_vector(n);
    Rational constant(0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].relation == Relation::LessEqual && sgn(y[i]) < 0)
            return false;
        axpy(aggregate, y[i], rows[i].coeffs);
        constant += y[i] * rows[i].rhs;
    }
    return is_zero(aggregate) && sgn(constant) < 0;
}

namespace {

bool duals_certify(const std::vector<LinearConstraint>& rows, const Vector& objective,
                   const Vector& y, const Rational& value)
{
    if (rows.size() != y.size())
        return false;
    Vector aggregate = zero_vector(objective.size());
    Rational constant(0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].relation == Relation::LessEqual && sgn(y[i]) < 0)
            return false;
        axpy(aggregate, y[i], rows[i].coeffs);
        constant += y[i] * rows[i].rhs;
    }
    return aggregate == objective && constant == value;
}

bool is_recession_ray(const std::vector<LinearConstraint>& rows, const Vector& d)
{
    for (const auto& r : rows) {
        const Rational lhs = dot(r.coeffs, d);
        if (r.relation == Relation::LessEqual ? sgn(lhs) > 0 : sgn(lhs) != 0)
            return false;
    }
    return true;
}

} // namespace

bool certifies(const LpProblem& p, const LpOutcome& outcome)
{
    const auto rows = expanded_rows(p);
    if (const auto* o = std::get_if<LpOptimal>(&outcome))
        return !p.objective.empty() && satisfies(rows, o->point) &&
               dot(p.objective, o->point) == o->value &&
               duals_certify(rows, p.objective, o->duals, o->value);
    if (const auto* f = std::get_if<LpFeasible>(&outcome))
        return satisfies(rows, f->point);
    if (const auto* i = std::get_if<LpInfeasible>(&outcome))
        return farkas_certifies(rows, i->farkas);
    const auto& u = std::get<LpUnbounded>(outcome);
    return !p.objective.empty() && satisfies(rows, u.point) && is_recession_ray(rows, u.ray) &&
           sgn(dot(p.objective, u.ray)) > 0;
}

LpOutcome lp_solve(const LpProblem& p)
{
    validate(p);
    const auto rows = expanded_rows(p);
    Tableau tab(rows, p.num_vars);

    Vector phase1(tab.columns(), Rational(0));
    for (std::size_t j = tab.artificial_begin(); j < tab.columns(); ++j)
        phase1[j] = 1;
    tab.minimize(phase1, true);

    LpOutcome outcome;
    if (sgn(tab.objective_value(phase1)) > 0) {
        outcome = LpInfeasible{tab.row_multipliers(phase1)};
    } else {
        tab.expel_artificials();
        if (p.objective.empty()) {
            outcome = LpFeasible{tab.point()};
        } else {
            Vector phase2(tab.columns(), Rational(0));
            for (std::size_t j = 0; j < p.num_vars; ++j) {
                phase2[2 * j] = -p.objective[j];
                phase2[2 * j + 1] = p.objective[j];
            }
            if (auto unbounded_col = tab.minimize(phase2, false)) {
                outcome = LpUnbounded{tab.point(), tab.ray(*unbounded_col)};
            } else {
                Vector x = tab.point();
                Rational value = dot(p.objective, x);
                outcome = LpOptimal{std::move(x), std::move(value), tab.row_multipliers(phase2)};
            }
        }
    }
    if (!certifies(p, outcome))
        throw std::logic_error("lp_solve produced an outcome that fails exact verification");
    return outcome;
}

const Vector& outcome_point(const LpOutcome& o)
{
    if (const auto* a = std::get_if<LpOptimal>(&o))
        return a->point;
    if (const auto* b = std::get_if<LpFeasible>(&o))
        return b->point;
    if (const auto* c = std::get_if<LpUnbounded>(&o))
        return c->point;
    throw std::logic_error("outcome_point on an infeasible outcome");
}

} // namespace chelly
