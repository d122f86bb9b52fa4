// Exact rational arithmetic used throughout the library.
//
// All game quantities (coalition worths, payoffs, LP tableau entries) are
// arbitrary-precision rationals kept in canonical form, so every comparison
// and every reported value is exact.

#ifndef COOPGAME_RATIONAL_HPP
#define COOPGAME_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coopgame {

using Integer = boost::multiprecision::cpp_int;

// cpp_rational canonicalizes (gcd-reduced, positive denominator) after every
// arithmetic operation, which keeps tableau entries small.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Serializes as "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "p", "p/q" and plain decimals like "-1.25".
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw ParseError("empty rational literal");

    auto check_int = [](const std::string& t) {
        if (t.empty())
            throw ParseError("empty integer part in rational literal");
        std::size_t start = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (start == t.size())
            throw ParseError("sign without digits in rational literal: '" + t + "'");
        for (std::size_t i = start; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw ParseError("invalid character in rational literal: '" + t + "'");
    };

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        check_int(num);
        check_int(den);
        Integer d(den);
        if (d == 0)
            throw ParseError("zero denominator in rational literal: '" + s + "'");
        return Rational(Integer(num), d);
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '+' || whole[0] == '-'))
            whole = whole.substr(1);
        if (whole.empty())
            whole = "0";
        check_int(whole);
        if (frac.empty())
            throw ParseError("missing digits after decimal point: '" + s + "'");
        check_int(frac);
        Integer den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            den *= 10;
        Rational r = Rational(Integer(whole)) + Rational(Integer(frac), den);
        return neg ? -r : r;
    }

    check_int(s);
    return Rational(Integer(s));
}

inline std::string to_string(const std::vector<Rational>& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(v[i]);
    }
    out += ")";
    return out;
}

} // namespace coopgame

#endif
