#include "chelly/rational.hpp"

#include <cctype>

#include "chelly/errors.hpp"

namespace chelly {

Rational make_rational(long numerator, long denominator)
{
    if (denominator == 0)
        throw InputError("rational with zero denominator");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw InputError("malformed rational literal '" + std::string(whole) + "'");
    Integer value(std::string(s), 10);
    return negative ? Integer(-value) : value;
}

Integer power_of_ten(unsigned long exponent)
{
    Integer result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty())
        throw InputError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(s.substr(0, slash), text);
        Integer den = parse_integer(s.substr(slash + 1), text);
        if (den == 0)
            throw InputError("rational with zero denominator: '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    // Exact decimal with optional exponent.
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        Integer exp = parse_integer(s.substr(e + 1), text);
        if (!exp.fits_slong_p() || abs(exp) > 10000)
            throw InputError("exponent out of range in '" + std::string(text) + "'");
        exponent = exp.get_si();
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    if (auto dot_pos = s.find('.'); dot_pos != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot_pos);
        std::string_view frac_part = s.substr(dot_pos + 1);
        if ((int_part.empty() && frac_part.empty()) ||
            (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part)))
            throw InputError("malformed rational literal '" + std::string(text) + "'");
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s))
            throw InputError("malformed rational literal '" + std::string(text) + "'");
        digits = std::string(s);
    }
    Integer mantissa(digits, 10);
    if (negative)
        mantissa = -mantissa;
    Rational r;
    if (exponent >= 0) {
        r = Rational(Integer(mantissa * power_of_ten(static_cast<unsigned long>(exponent))));
    } else {
        r = Rational(mantissa, power_of_ten(static_cast<unsigned long>(-exponent)));
        r.canonicalize();
    }
    return r;
}

std::string format_rational(const Rational& value)
{
    return value.get_str(10);
}

Vector zero_vector(std::size_t dim)
{
    return Vector(dim, Rational(0));
}

Vector unit_vector(std::size_t dim, std::size_t axis)
{
    Vector v = zero_vector(dim);
    v.at(axis) = 1;
    return v;
}

Rational dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionError("dot product of vectors of length " + std::to_string(a.size()) +
                             " and " + std::to_string(b.size()));
    Rational sum(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            sum += a[i] * b[i];
    return sum;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

Vector add(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionError("adding vectors of different length");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vector subtract(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionError("subtracting vectors of different length");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vector scale(const Vector& v, const Rational& factor)
{
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i] * factor;
    return r;
}

Vector negate(const Vector& v)
{
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = -v[i];
    return r;
}

void axpy(Vector& y, const Rational& factor, const Vector& x)
{
    if (y.size() != x.size())
        throw DimensionError("axpy on vectors of different length");
    if (sgn(factor) == 0)
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (sgn(x[i]) != 0)
            y[i] += factor * x[i];
}

Vector primitive_integer_direction(const Vector& v)
{
    Integer lcm_den(1);
    for (const auto& x : v)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    Integer g(0);
    std::vector<Integer> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        Integer n = x.get_num() * (lcm_den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(n);
    }
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = (g == 0) ? Rational(0) : Rational(Integer(ints[i] / g));
    return r;
}

Rational floor_rational(const Rational& value)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return Rational(q);
}

Rational ceil_rational(const Rational& value)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return Rational(q);
}

} // namespace chelly
