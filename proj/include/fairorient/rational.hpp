#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace fairorient {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest integer <= r.  cpp_int division truncates toward zero, so negative
// numerators need the adjustment.
inline BigInt floor_rat(const Rational& r) {
    BigInt p = numerator(r), q = denominator(r);
    BigInt d = p / q;
    if (p < 0 && d * q != p) --d;
    return d;
}

// Smallest integer >= r.
inline BigInt ceil_rat(const Rational& r) {
    BigInt p = numerator(r), q = denominator(r);
    BigInt d = p / q;
    if (p > 0 && d * q != p) ++d;
    return d;
}

// Canonical text form: "p" when integral, else "p/q" in lowest terms.
inline std::string rat_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p" or "p/q" (optional leading '-' on p). Anything else — including
// decimal notation — is rejected.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&]() -> std::runtime_error {
        return std::runtime_error("cannot parse rational from '" + text + "'");
    };
    if (text.empty()) throw bad();
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw bad();
        return Rational(BigInt(text));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw bad();
    BigInt q(den);
    if (q <= 0) throw bad();
    return Rational(BigInt(num), q);
}

inline std::optional<long long> to_int64(const BigInt& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        return std::nullopt;
    return v.convert_to<long long>();
}

}  // namespace fairorient
