#pragma once

#include "hfold/integer.hpp"

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace hfold {

/// A commutative ring presented through a stateful spec object. Elements
/// are plain values; all operations go through the spec so that the same
/// generic code runs over Z, Z/n, polynomial rings and pair rings.
/// Equality must be canonical: representations are normal forms.
template <class R>
concept CommutativeRing = requires(const R& ring, const typename R::Elem& x,
                                   const typename R::Elem& y, long n) {
    typename R::Elem;
    { ring.add(x, y) } -> std::same_as<typename R::Elem>;
    { ring.neg(x) } -> std::same_as<typename R::Elem>;
    { ring.mul(x, y) } -> std::same_as<typename R::Elem>;
    { ring.zero() } -> std::same_as<typename R::Elem>;
    { ring.one() } -> std::same_as<typename R::Elem>;
    { ring.from_int(n) } -> std::same_as<typename R::Elem>;
    { ring.eq(x, y) } -> std::convertible_to<bool>;
    { ring.is_zero(x) } -> std::convertible_to<bool>;
    { ring.is_one(x) } -> std::convertible_to<bool>;
    { ring.invert(x) } -> std::same_as<std::optional<typename R::Elem>>;
    { ring.to_string(x) } -> std::same_as<std::string>;
};

struct IntRing {
    using Elem = Integer;

    Elem add(const Elem& x, const Elem& y) const { return x + y; }
    Elem sub(const Elem& x, const Elem& y) const { return x - y; }
    Elem neg(const Elem& x) const { return -x; }
    Elem mul(const Elem& x, const Elem& y) const { return x * y; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long n) const { return n; }
    bool eq(const Elem& x, const Elem& y) const { return x == y; }
    bool is_zero(const Elem& x) const { return x == 0; }
    bool is_one(const Elem& x) const { return x == 1; }
    std::optional<Elem> invert(const Elem& x) const
    {
        if (x == 1 || x == -1)
            return x;
        return std::nullopt;
    }
    bool is_unit(const Elem& x) const { return x == 1 || x == -1; }
    std::string to_string(const Elem& x) const { return hfold::to_string(x); }
};

/// Z/n with canonical representatives 0..n-1.
struct ModRing {
    using Elem = std::int64_t;
    std::int64_t n;

    explicit ModRing(std::int64_t modulus) : n(modulus)
    {
        if (n < 2)
            throw std::domain_error("ModRing: modulus must be >= 2");
    }

    Elem norm(std::int64_t x) const
    {
        x %= n;
        return x < 0 ? x + n : x;
    }
    Elem add(Elem x, Elem y) const { return norm(x + y); }
    Elem sub(Elem x, Elem y) const { return norm(x - y); }
    Elem neg(Elem x) const { return norm(-x); }
    Elem mul(Elem x, Elem y) const { return norm(x * y); }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long x) const { return norm(x); }
    bool eq(Elem x, Elem y) const { return x == y; }
    bool is_zero(Elem x) const { return x == 0; }
    bool is_one(Elem x) const { return x == 1; }
    std::optional<Elem> invert(Elem x) const
    {
        // extended Euclid; inverse exists iff gcd(x, n) = 1
        std::int64_t a = norm(x), b = n, u = 1, v = 0;
        while (b) {
            std::int64_t q = a / b;
            a -= q * b;
            std::swap(a, b);
            u -= q * v;
            std::swap(u, v);
        }
        if (a != 1)
            return std::nullopt;
        return norm(u);
    }
    bool is_unit(Elem x) const { return invert(x).has_value(); }
    std::string to_string(Elem x) const { return std::to_string(x); }
};

/// The product ring R x R carrying the twisting machinery: the involution
/// star(r,s) = (-r,s) and the sign-group action of {+-1}^2.
template <CommutativeRing R>
struct PairRing {
    using Base = R;
    using Elem = std::pair<typename R::Elem, typename R::Elem>;
    R base;

    explicit PairRing(R b) : base(std::move(b)) {}

    Elem make(typename R::Elem l, typename R::Elem r) const
    {
        return {std::move(l), std::move(r)};
    }
    Elem add(const Elem& x, const Elem& y) const
    {
        return {base.add(x.first, y.first), base.add(x.second, y.second)};
    }
    Elem sub(const Elem& x, const Elem& y) const
    {
        return {base.sub(x.first, y.first), base.sub(x.second, y.second)};
    }
    Elem neg(const Elem& x) const { return {base.neg(x.first), base.neg(x.second)}; }
    Elem mul(const Elem& x, const Elem& y) const
    {
        return {base.mul(x.first, y.first), base.mul(x.second, y.second)};
    }
    Elem zero() const { return {base.zero(), base.zero()}; }
    Elem one() const { return {base.one(), base.one()}; }
    Elem from_int(long n) const { return {base.from_int(n), base.from_int(n)}; }
    bool eq(const Elem& x, const Elem& y) const
    {
        return base.eq(x.first, y.first) && base.eq(x.second, y.second);
    }
    bool is_zero(const Elem& x) const
    {
        return base.is_zero(x.first) && base.is_zero(x.second);
    }
    bool is_one(const Elem& x) const
    {
        return base.is_one(x.first) && base.is_one(x.second);
    }
    std::optional<Elem> invert(const Elem& x) const
    {
        auto l = base.invert(x.first);
        auto r = base.invert(x.second);
        if (!l || !r)
            return std::nullopt;
        return Elem{*l, *r};
    }
    bool is_unit(const Elem& x) const { return invert(x).has_value(); }

    Elem star(const Elem& x) const { return {base.neg(x.first), x.second}; }

    /// Action of (eps, eps') in {+-1}^2, componentwise.
    Elem act(int eps, int epsbar, const Elem& x) const
    {
        return {eps < 0 ? base.neg(x.first) : x.first,
                epsbar < 0 ? base.neg(x.second) : x.second};
    }

    std::string to_string(const Elem& x) const
    {
        return "(" + base.to_string(x.first) + ", " + base.to_string(x.second) + ")";
    }
};

} // namespace hfold
