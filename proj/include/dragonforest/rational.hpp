#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace dragonforest {

// Exact rational value. Canonical form: den > 0, gcd(|num|, den) == 1.
// All density thresholds in this project are exact rationals; floating
// point is never used for comparisons.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
inline bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

inline Rational rational_add(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

}  // namespace dragonforest
