#include "lie2mm/rational.hpp"

#include <cctype>

#include "lie2mm/errors.hpp"

namespace lie2mm {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (s.empty())
        return false;
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
        start = 1;
    if (start == s.size())
        return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || (slash != std::string_view::npos && !is_integer_literal(den, false)))
        throw ParseError("", "malformed rational \"" + std::string(text) + "\"");

    std::string n(num);
    if (!n.empty() && n[0] == '+')
        n.erase(0, 1);
    Integer p(n, 10);
    Integer q(1);
    if (slash != std::string_view::npos) {
        q = Integer(std::string(den), 10);
        if (q == 0)
            throw ParseError("", "zero denominator in \"" + std::string(text) + "\"");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n, Rational(0));
    v.at(i) = 1;
    return v;
}

Vector operator+(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector[" + std::to_string(a.size()) + "]",
                                "vector[" + std::to_string(b.size()) + "]");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector[" + std::to_string(a.size()) + "]",
                                "vector[" + std::to_string(b.size()) + "]");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vector operator*(const Rational& s, const Vector& v)
{
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

Rational dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector[" + std::to_string(a.size()) + "]",
                                "vector[" + std::to_string(b.size()) + "]");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::string to_string(const Vector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace lie2mm
