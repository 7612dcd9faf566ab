#include "chelly/bounds.hpp"

#include <algorithm>
#include <string>

#include "chelly/errors.hpp"

namespace chelly {

namespace {

void check_alpha(const Rational& alpha, std::size_t d)
{
    if (sgn(alpha) <= 0 || alpha > 1)
        throw InputError("alpha must lie in (0, 1], got " + format_rational(alpha));
    if (d == 0)
        throw InputError("dimension must be at least 1");
}

Rational power(const Rational& x, std::size_t e)
{
    Rational r = 1;
    for (std::size_t i = 0; i < e; ++i)
        r *= x;
    return r;
}

} // namespace

BetaFormula default_beta(unsigned bits)
{
    return BetaFormula{
        "1 - (1 - alpha)^(1/(d+1)), lower bound by " + std::to_string(bits) + "-step bisection",
        [bits](const Rational& alpha, std::size_t d) -> Rational {
            check_alpha(alpha, d);
            const Rational target = 1 - alpha;
            if (sgn(target) == 0)
                return Rational(1);
            Rational lo = 0, hi = 1;
            for (unsigned i = 0; i < bits; ++i) {
                Rational mid = (lo + hi) / 2;
                if (power(mid, d + 1) >= target)
                    hi = mid;
                else
                    lo = mid;
            }
            return 1 - hi;
        }};
}

Rational lambda_bound(const Rational& alpha, std::size_t d)
{
    check_alpha(alpha, d);
    Rational den = power(Rational(3), d + 1) * Rational(static_cast<unsigned long>(4 * d));
    return power(alpha, d + 2) / den;
}

Rational gamma_bound(const Rational& alpha, std::size_t d, const BetaFormula& beta)
{
    const Rational dl = Rational(static_cast<unsigned long>(d)) * lambda_bound(alpha, d);
    const Rational b = beta.lower_bound(dl, d);
    const Rational a = alpha / Rational(static_cast<unsigned long>(6 * d));
    return b < a ? b : a;
}

SymbolicBound m_bound(std::size_t i, std::size_t d)
{
    if (i == 0 || i > std::max<std::size_t>(2, d - 1))
        throw InputError("M(i,d) is defined for 1 <= i <= max(2, d-1)");
    const std::string name = "M(" + std::to_string(i) + "," + std::to_string(d) + ")";
    if (i == 1)
        return {name, Rational(1), "1"};
    if (i == 2)
        return {name, Rational(static_cast<unsigned long>(d)), std::to_string(d)};
    return {name, std::nullopt,
            "G(M(" + std::to_string(i - 1) + "," + std::to_string(d) + "), " + std::to_string(d - i + 2) + ", " +
                std::to_string(d) + ")"};
}

std::vector<SymbolicBound> symbolic_constants(std::size_t d)
{
    const std::string ds = std::to_string(d);
    std::vector<SymbolicBound> out{
        {"W(eps," + ds + ")", std::nullopt, "weak eps-net size for points"},
        {"W_hpl(eps," + ds + ")", std::nullopt, "weak eps-net size for hyperplanes"},
        {"beta(alpha," + ds + ")", std::nullopt, "fractional Helly constant"},
        {"F(m,k," + ds + ")", std::nullopt, "step-down piercing bound"},
        {"G(m,k," + ds + ")", std::nullopt, "step-down crossing bound"},
        {"f(" + ds + ")", std::nullopt, "piercing bound of the main theorem"},
        {"g(" + ds + ")", std::nullopt, "line bound of the main theorem"},
    };
    if (d == 2) {
        out.push_back({"f'(2)", Rational(1), "1"});
        out.push_back({"g'(2)", Rational(4), "at most 4"});
    } else {
        out.push_back({"f'(" + ds + ")", std::nullopt, "max over 1 <= i <= d-1 of F(M(i,d), d-i+1, d)"});
        out.push_back({"g'(" + ds + ")", std::nullopt, "d * G(M(d-1,d), 2, d)"});
    }
    for (std::size_t i = 1; i <= std::max<std::size_t>(2, d - 1); ++i)
        out.push_back(m_bound(i, d));
    return out;
}

} // namespace chelly
