#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chelly/rational.hpp"

namespace chelly {

/**
 * A bound that is either a known exact value or an unevaluated expression.
 * Non-constructive constants stay symbolic.
 */
struct SymbolicBound
{
    std::string name;
    std::optional<Rational> value;
    std::string expression;
};

/// Rational lower bound for beta(alpha, d); name describes the formula used.
struct BetaFormula
{
    std::string name;
    std::function<Rational(const Rational& alpha, std::size_t d)> lower_bound;
};

/**
 * 1 - (1 - alpha)^(1/(d+1)), bounded below by bisection on the root with
 * `bits` halvings. Configuration, not a derived constant.
 */
BetaFormula default_beta(unsigned bits = 48);

/// alpha^(d+2) / (4 d 3^(d+1)). Throws InputError unless 0 < alpha <= 1 and d >= 1.
Rational lambda_bound(const Rational& alpha, std::size_t d);

/// min(beta(d lambda(alpha, d), d), alpha / (6 d)).
Rational gamma_bound(const Rational& alpha, std::size_t d, const BetaFormula& beta = default_beta());

/// M(1,d) = 1, M(2,d) = d; 3 <= i <= d-1 recurse through G and stay symbolic.
SymbolicBound m_bound(std::size_t i, std::size_t d);

/// The constants that have no constructive value: W, W_hpl, F, G, f, g, f', g' and friends.
std::vector<SymbolicBound> symbolic_constants(std::size_t d);

} // namespace chelly
