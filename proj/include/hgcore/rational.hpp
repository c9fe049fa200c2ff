#ifndef HGCORE_RATIONAL_HPP
#define HGCORE_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "hgcore/error.hpp"

namespace hgcore {

using BigInt = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, always kept in reduced form with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "p/q" with q >= 1, integers included ("2/1").
inline std::string to_fraction_string(const Rational& r) {
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "p/q", an integer, or a plain decimal such as "0.25" exactly.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { return InputError("not a rational number: '" + std::string(text) + "'"); };
    if (text.empty()) throw fail();
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw fail();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw fail();
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') throw fail();
        // cpp_int reads a leading 0 as an octal prefix
        std::size_t first = i;
        while (first + 1 < s.size() && s[first] == '0') ++first;
        std::string digits(s.substr(first));
        if (s[0] == '-') digits.insert(0, "-");
        return BigInt(digits);
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) throw fail();
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string digits(text.substr(0, dot));
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() && (digits.empty() || digits == "-" || digits == "+")) throw fail();
        for (char c : frac)
            if (c < '0' || c > '9') throw fail();
        digits += frac;
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        return Rational(parse_int(digits), scale);
    }
    return Rational(parse_int(text));
}

} // namespace hgcore

#endif // HGCORE_RATIONAL_HPP
