#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <string_view>

namespace gstruct {

// Exact rational; GMP keeps it canonical (lowest terms, positive denominator).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline std::string to_string(const Rational& q) { return q.str(); }

inline bool is_rational_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool digits = false, slash = false, den = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            (slash ? den : digits) = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
        } else {
            return false;
        }
    }
    return digits && (!slash || den);
}

// Accepts "p/q" or an integer with optional sign. Throws std::invalid_argument.
inline Rational parse_rational(std::string_view s)
{
    if (!is_rational_literal(s)) throw std::invalid_argument("not a rational: " + std::string(s));
    std::string t(s);
    if (t[0] == '+') t.erase(0, 1);
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        Rational d(t.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    }
    return Rational(t);
}

} // namespace gstruct
