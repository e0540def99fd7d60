#pragma once

#include "hds/rational.hpp"

namespace hds {

namespace detail {

// Splits v = s*s * f with f square-free. Values here stay tiny (products of
// two radicands bounded by (n+1)^2 each), so trial division is plenty.
inline void extract_square(long long v, long long& s, long long& f) {
    s = 1;
    f = 1;
    for (long long p = 2; p * p <= v; ++p) {
        long long e = 0;
        while (v % p == 0) { v /= p; ++e; }
        for (long long i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) f *= p;
    }
    f *= v;
}

} // namespace detail

// Exact value a + b*sqrt(r) with a, b, r rational and r >= 0. Canonical form
// keeps r a square-free integer (square factors of numerator and denominator
// are folded into b), so equality is plain field-wise comparison.
struct QuadraticValue {
    Rat a;
    Rat b;
    Rat r;

    QuadraticValue() = default;
    QuadraticValue(Rat rational) : a(rational) {}
    QuadraticValue(Rat a_, Rat b_, Rat r_) : a(a_), b(b_), r(r_) { canonicalize(); }

    void canonicalize() {
        if (r.is_negative()) throw domain_error("negative radicand");
        if (b.is_zero() || r.is_zero()) {
            b = Rat(0);
            r = Rat(0);
            return;
        }
        // sqrt(p/q) = sqrt(p*q)/q
        Rat scale(1, r.den);
        long long radicand_num = detail::narrow((__int128)r.num * r.den, "radicand");
        long long s, f;
        detail::extract_square(radicand_num, s, f);
        b = b * scale * Rat(s);
        if (f == 1) {
            a += b;
            b = Rat(0);
            r = Rat(0);
        } else {
            r = Rat(f);
        }
    }

    bool is_rational() const { return b.is_zero(); }
    bool equals_rational(const Rat& q) const { return is_rational() && a == q; }

    friend QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y) {
        if (x.is_rational()) return QuadraticValue(x.a + y.a, y.b, y.r);
        if (y.is_rational()) return QuadraticValue(x.a + y.a, x.b, x.r);
        if (x.r != y.r) throw domain_error("mixed radicands in quadratic addition");
        return QuadraticValue(x.a + y.a, x.b + y.b, x.r);
    }

    friend bool operator==(const QuadraticValue& x, const QuadraticValue& y) {
        return x.a == y.a && x.b == y.b && x.r == y.r;
    }
    friend bool operator!=(const QuadraticValue& x, const QuadraticValue& y) {
        return !(x == y);
    }

    std::string str() const {
        if (is_rational()) return a.str();
        std::string s = a.is_zero() ? "" : a.str();
        if (!s.empty() && !b.is_negative()) s += "+";
        s += b.str() + "*sqrt(" + r.str() + ")";
        return s;
    }
};

// (s1*sqrt(r1) - s2*sqrt(r2))^2 as an exact quadratic value, signs in {-1,+1}.
inline QuadraticValue sqrt_diff_squared(int s1, const Rat& r1, int s2, const Rat& r2) {
    Rat cross = Rat(-2 * s1 * s2);
    return QuadraticValue(r1 + r2, cross, r1 * r2);
}

} // namespace hds
