#ifndef UGTOP_RATIONAL_HPP
#define UGTOP_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ugtop {

/// Exact rational on 64-bit numerator/denominator, always normalized
/// (gcd 1, denominator positive). Intermediate products go through
/// __int128; anything that would not fit back into 64 bits throws.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static Rat from_i128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        const __int128 lim = (__int128)INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("rational overflow");
        Rat r;
        r.num = (long long)n;
        r.den = (long long)d;
        if (r.num == 0) r.den = 1;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from_i128((__int128)a.num * b.den + (__int128)b.num * a.den,
                         (__int128)a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from_i128((__int128)a.num * b.den - (__int128)b.num * a.den,
                         (__int128)a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from_i128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return from_i128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
};

} // namespace ugtop

#endif
