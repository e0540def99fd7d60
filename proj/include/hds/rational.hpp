#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hds {

struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline long long narrow(__int128 v, const char* where) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw overflow_error(std::string("integer overflow in ") + where);
    return static_cast<long long>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

// Exact rational with int64 numerator/denominator, always reduced, den > 0.
// Every narrowing from the 128-bit intermediates is checked; arithmetic never
// silently wraps.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long v) : num(v), den(1) {}
    Rat(long long n, long long d) { assign(n, d); }

    void assign(__int128 n, __int128 d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = detail::gcd128(n, d);
        if (g > 1) { n /= g; d /= g; }
        num = detail::narrow(n, "rational numerator");
        den = detail::narrow(d, "rational denominator");
    }

    bool is_integer() const { return den == 1; }
    bool is_even_integer() const { return den == 1 && num % 2 == 0; }
    bool is_zero() const { return num == 0; }
    bool is_negative() const { return num < 0; }

    long long as_integer() const {
        if (den != 1) throw domain_error("rational is not an integer");
        return num;
    }

    friend Rat operator+(const Rat& x, const Rat& y) {
        Rat r;
        r.assign((__int128)x.num * y.den + (__int128)y.num * x.den,
                 (__int128)x.den * y.den);
        return r;
    }
    friend Rat operator-(const Rat& x, const Rat& y) {
        Rat r;
        r.assign((__int128)x.num * y.den - (__int128)y.num * x.den,
                 (__int128)x.den * y.den);
        return r;
    }
    friend Rat operator*(const Rat& x, const Rat& y) {
        Rat r;
        r.assign((__int128)x.num * y.num, (__int128)x.den * y.den);
        return r;
    }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.num == 0) throw domain_error("rational division by zero");
        Rat r;
        r.assign((__int128)x.num * y.den, (__int128)x.den * y.num);
        return r;
    }
    Rat operator-() const {
        Rat r;
        r.num = -num;
        r.den = den;
        return r;
    }
    Rat& operator+=(const Rat& y) { return *this = *this + y; }
    Rat& operator-=(const Rat& y) { return *this = *this - y; }
    Rat& operator*=(const Rat& y) { return *this = *this * y; }

    friend bool operator==(const Rat& x, const Rat& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
    friend bool operator<(const Rat& x, const Rat& y) {
        return (__int128)x.num * y.den < (__int128)y.num * x.den;
    }
    friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
    friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
    friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }
};

// ceil(a / b) for positive b
inline long long ceil_div(long long a, long long b) {
    if (b <= 0) throw domain_error("ceil_div needs positive divisor");
    long long q = a / b;
    if (a % b != 0 && a > 0) q += 1;
    return q;
}

} // namespace hds
