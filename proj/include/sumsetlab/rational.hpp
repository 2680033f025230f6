#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Exact nonnegative-denominator rational on int64.  All quantities this library
// compares (densities, constants, thresholds) stay far below 2^63; comparisons
// cross-multiply in 128 bits so no reduction step can overflow silently.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n, i64 d) : num(n), den(d) { normalize(); }
    /* implicit */ Rational(i64 n) : num(n), den(1) {}

    void normalize() {
        if (den == 0) throw BadParams("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return static_cast<i128>(a.num) * b.den <= static_cast<i128>(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    friend Rational operator*(const Rational& a, const Rational& b) {
        i128 n = static_cast<i128>(a.num) * b.num;
        i128 d = static_cast<i128>(a.den) * b.den;
        i128 lim = static_cast<i128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim) throw Overflow("rational product overflow");
        return Rational(static_cast<i64>(n), static_cast<i64>(d));
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        i128 n = static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den;
        i128 d = static_cast<i128>(a.den) * b.den;
        i128 lim = static_cast<i128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim) throw Overflow("rational sum overflow");
        return Rational(static_cast<i64>(n), static_cast<i64>(d));
    }
};

// Accepts "3", "-3", "1/14", "0.25" (<= 9 fractional digits).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw BadParams("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            i64 n = std::stoll(s.substr(0, slash));
            i64 d = std::stoll(s.substr(slash + 1));
            return Rational(n, d);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(s), 1);
        std::string frac = s.substr(dot + 1);
        if (frac.size() > 9) throw BadParams("too many fractional digits: " + s);
        i64 scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        i64 whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
        i64 f = frac.empty() ? 0 : std::stoll(frac);
        bool negative = s[0] == '-';
        i64 n = whole * scale + (negative ? -f : f);
        return Rational(n, scale);
    } catch (const std::invalid_argument&) {
        throw BadParams("malformed rational literal: " + s);
    } catch (const std::out_of_range&) {
        throw BadParams("rational literal out of range: " + s);
    }
}

}  // namespace sumsetlab
