#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "qltc/errors.hpp"

namespace qltc {

/// Exact rational; always kept in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "p/q" or a plain integer "p".
inline Rational parse_rational(std::string_view s) {
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
            throw ParseError("invalid rational '" + std::string(s) + "'");
        return v;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    const std::int64_t den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational '" + std::string(s) + "' has a zero denominator");
    return Rational(parse_int(s.substr(0, slash)), den);
}

}  // namespace qltc
