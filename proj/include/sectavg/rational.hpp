#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "sectavg/errors.hpp"

namespace sectavg {

// Exact arithmetic types used everywhere combinatorial decisions are made.
// Rat is always kept in lowest terms with a positive denominator, so
// operator== is true equality and values round-trip through strings.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& r) { return r.sign(); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// "p" when the denominator is 1, "p/q" otherwise; the sign sits on p.
inline std::string rat_to_string(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    std::string s = n.str();
    if (d != 1) {
        s += '/';
        s += d.str();
    }
    return s;
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline Int parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw ParseError("bad rational literal: \"" + std::string(whole) + "\"");
    Int v{std::string(s)};
    return neg ? Int(-v) : v;
}

} // namespace detail

// Accepts "p", "-p", "p/q" with optional sign on the numerator only; q is
// unsigned digits, matching what rat_to_string emits.
inline Rat rat_from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rat(detail::parse_integer(s, s));
    Int n = detail::parse_integer(s.substr(0, slash), s);
    std::string_view dpart = s.substr(slash + 1);
    if (!detail::all_digits(dpart))
        throw ParseError("bad rational literal: \"" + std::string(s) + "\"");
    Int d{std::string(dpart)};
    if (d == 0)
        throw ParseError("zero denominator: \"" + std::string(s) + "\"");
    return Rat(n, d);
}

// Rat's two-argument constructor requires a positive denominator.
inline Rat make_rat(Int n, Int d) {
    if (d < 0) { n = -n; d = -d; }
    return Rat(std::move(n), std::move(d));
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& x) { return boost::multiprecision::abs(x); }
inline Rat abs(const Rat& r) { return boost::multiprecision::abs(r); }

// exact power of two as a rational, used by dyadic sampling
inline Rat pow2_rat(int k) {
    if (k >= 0) return Rat(Int(1) << k);
    return Rat(Int(1), Int(1) << (-k));
}

inline Int rat_floor(const Rat& r) {
    Int q = rat_num(r) / rat_den(r); // truncates toward zero
    if (r < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

} // namespace sectavg
