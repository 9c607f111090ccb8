#pragma once

#include "hfold/integer.hpp"

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hfold {

/// Element a + b*tau of Z[tau], tau = (1+sqrt(5))/2, tau^2 = tau + 1.
/// All arithmetic is exact; no floating point is involved anywhere.
struct GoldenInt {
    Integer a; // rational part
    Integer b; // coefficient of tau

    GoldenInt() = default;
    GoldenInt(Integer ra) : a(std::move(ra)), b(0) {}
    GoldenInt(long ra) : a(ra), b(0) {}
    GoldenInt(Integer ra, Integer rb) : a(std::move(ra)), b(std::move(rb)) {}
    GoldenInt(long ra, long rb) : a(ra), b(rb) {}

    static GoldenInt tau() { return GoldenInt(0, 1); }

    bool is_zero() const { return a == 0 && b == 0; }

    friend GoldenInt operator+(const GoldenInt& x, const GoldenInt& y)
    {
        return GoldenInt(x.a + y.a, x.b + y.b);
    }
    friend GoldenInt operator-(const GoldenInt& x, const GoldenInt& y)
    {
        return GoldenInt(x.a - y.a, x.b - y.b);
    }
    friend GoldenInt operator-(const GoldenInt& x) { return GoldenInt(-x.a, -x.b); }

    // (a+b tau)(c+d tau) = (ac+bd) + (ad+bc+bd) tau
    friend GoldenInt operator*(const GoldenInt& x, const GoldenInt& y)
    {
        return GoldenInt(x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b);
    }

    GoldenInt& operator+=(const GoldenInt& y) { return *this = *this + y; }
    GoldenInt& operator-=(const GoldenInt& y) { return *this = *this - y; }
    GoldenInt& operator*=(const GoldenInt& y) { return *this = *this * y; }

    friend bool operator==(const GoldenInt& x, const GoldenInt& y)
    {
        return x.a == y.a && x.b == y.b;
    }

    /// Galois conjugate tau -> 1 - tau.
    GoldenInt conj() const { return GoldenInt(a + b, -b); }

    /// Field norm N(x) = x * conj(x) = a^2 + ab - b^2, multiplicative.
    Integer norm() const { return a * a + a * b - b * b; }

    /// Exact sign of the real number a + b(1+sqrt 5)/2.
    /// With s = 2a+b, t = b we have 2x = s + t*sqrt(5); if s and t agree in
    /// sign the answer is immediate, otherwise compare s^2 with 5 t^2.
    int sgn() const
    {
        Integer s = 2 * a + b;
        const Integer& t = b;
        int ss = sign(s), ts = sign(t);
        if (ss == 0 && ts == 0)
            return 0;
        if (ss == 0)
            return ts;
        if (ts == 0 || ss == ts)
            return ss;
        return (s * s > 5 * t * t) ? ss : ts;
    }

    bool is_unit() const
    {
        Integer n = norm();
        return n == 1 || n == -1;
    }
};

inline int compare(const GoldenInt& x, const GoldenInt& y) { return (x - y).sgn(); }

/// Element of Q(tau): GoldenInt numerator over a positive integer
/// denominator, with gcd(content(num), den) = 1. Canonical form makes
/// equality decidable coordinatewise.
struct GoldenRat {
    GoldenInt num;
    Integer den = 1;

    GoldenRat() = default;
    GoldenRat(GoldenInt n) : num(std::move(n)), den(1) {}
    GoldenRat(long n) : num(n), den(1) {}
    GoldenRat(GoldenInt n, Integer d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    static GoldenRat tau() { return GoldenRat(GoldenInt::tau()); }
    static GoldenRat half(GoldenInt n) { return GoldenRat(std::move(n), 2); }

    void reduce()
    {
        if (den == 0)
            throw std::domain_error("GoldenRat: zero denominator");
        if (den < 0) {
            den = -den;
            num = -num;
        }
        Integer g = gcd(gcd(abs(num.a), abs(num.b)), den);
        if (g > 1) {
            num.a /= g;
            num.b /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num.is_zero(); }
    int sgn() const { return num.sgn(); }

    friend GoldenRat operator+(const GoldenRat& x, const GoldenRat& y)
    {
        return GoldenRat(x.num * GoldenInt(y.den) + y.num * GoldenInt(x.den), x.den * y.den);
    }
    friend GoldenRat operator-(const GoldenRat& x, const GoldenRat& y)
    {
        return GoldenRat(x.num * GoldenInt(y.den) - y.num * GoldenInt(x.den), x.den * y.den);
    }
    friend GoldenRat operator-(const GoldenRat& x) { return GoldenRat(-x.num, x.den); }
    friend GoldenRat operator*(const GoldenRat& x, const GoldenRat& y)
    {
        return GoldenRat(x.num * y.num, x.den * y.den);
    }

    /// Exact division: multiply by the Galois conjugate to clear the
    /// golden part of the divisor, then reduce.
    friend GoldenRat operator/(const GoldenRat& x, const GoldenRat& y)
    {
        if (y.is_zero())
            throw std::domain_error("GoldenRat: division by zero");
        Integer n = y.num.norm(); // num * conj = norm (an integer)
        GoldenInt nn = x.num * y.num.conj() * GoldenInt(y.den);
        Integer dd = x.den * n;
        return GoldenRat(nn, dd);
    }

    GoldenRat& operator+=(const GoldenRat& y) { return *this = *this + y; }
    GoldenRat& operator-=(const GoldenRat& y) { return *this = *this - y; }
    GoldenRat& operator*=(const GoldenRat& y) { return *this = *this * y; }

    friend bool operator==(const GoldenRat& x, const GoldenRat& y)
    {
        return x.num == y.num && x.den == y.den;
    }

    /// Is this an element of Z[tau]?
    bool is_integral() const { return den == 1; }
    GoldenInt as_golden_int() const
    {
        if (den != 1)
            throw std::domain_error("GoldenRat: not integral");
        return num;
    }
};

inline int compare(const GoldenRat& x, const GoldenRat& y) { return (x - y).sgn(); }

/// Table-style rendering: the tau part first, special-casing 1 + tau as
/// "tau^2" exactly as the reference tables print it.
inline std::string to_string(const GoldenInt& x)
{
    if (x.a == 1 && x.b == 1)
        return "tau^2";
    if (x.b == 0)
        return to_string(x.a);
    std::string s;
    if (x.b == 1)
        s = "tau";
    else if (x.b == -1)
        s = "-tau";
    else
        s = to_string(x.b) + "tau";
    if (x.a > 0)
        s += "+" + to_string(x.a);
    else if (x.a < 0)
        s += to_string(x.a);
    return s;
}

inline std::string to_string(const GoldenRat& x)
{
    if (x.den == 1)
        return to_string(x.num);
    return to_string(x.num) + "/" + to_string(x.den);
}

inline std::ostream& operator<<(std::ostream& os, const GoldenInt& x)
{
    return os << to_string(x);
}
inline std::ostream& operator<<(std::ostream& os, const GoldenRat& x)
{
    return os << to_string(x);
}

/// Parse sums of terms over {integers, "tau", "tau^2"}, e.g. "2tau+1",
/// "tau^2", "-3tau+2", "1+2tau". "tau^2" normalises to tau+1.
inline GoldenInt parse_golden(std::string_view s)
{
    GoldenInt out(0, 0);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
    };
    skip_ws();
    bool first = true;
    while (i < s.size()) {
        int sg = 1;
        skip_ws();
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sg = -1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("parse_golden: expected +/- in '" + std::string(s) + "'");
        }
        first = false;
        skip_ws();
        bool have_digits = false;
        Integer k = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            k = k * 10 + (s[i] - '0');
            ++i;
            have_digits = true;
        }
        skip_ws();
        if (i + 2 < s.size() + 1 && s.substr(i, 3) == "tau") {
            i += 3;
            if (!have_digits)
                k = 1;
            if (i + 1 < s.size() && s[i] == '^' && s[i + 1] == '2') {
                i += 2;
                // tau^2 = tau + 1
                out += GoldenInt(k * sg, k * sg);
            } else {
                out += GoldenInt(0, k * sg);
            }
        } else {
            if (!have_digits)
                throw std::invalid_argument("parse_golden: bad term in '" + std::string(s) + "'");
            out += GoldenInt(k * sg, 0);
        }
        skip_ws();
    }
    return out;
}

} // namespace hfold
