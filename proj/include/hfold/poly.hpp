#pragma once

#include "hfold/integer.hpp"
#include "hfold/rings.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfold {

/// Exponent vector over at most NV named variables. Degrees stay small
/// (blueprint runs reach total degree ~8), so uint8 per variable is ample.
/// NV = 32 covers everything except the positive-system product map of
/// H4, which gets the wide variant.
template <size_t NV>
struct MonomialT {
    std::array<std::uint8_t, NV> e{};
    int total = 0;

    bool is_one() const { return total == 0; }

    friend MonomialT operator*(const MonomialT& x, const MonomialT& y)
    {
        MonomialT m;
        for (size_t i = 0; i < x.e.size(); ++i) {
            int s = x.e[i] + y.e[i];
            if (s > 255)
                throw std::overflow_error("Monomial: exponent overflow");
            m.e[i] = static_cast<std::uint8_t>(s);
        }
        m.total = x.total + y.total;
        return m;
    }

    friend bool operator==(const MonomialT& x, const MonomialT& y)
    {
        return x.total == y.total && x.e == y.e;
    }
};

using Monomial = MonomialT<32>;

/// Graded lexicographic order, higher degree first; ties broken by the
/// earlier variable with the larger exponent. Used for the term order of
/// polynomials so rendering is deterministic.
template <size_t NV>
struct GradedLexGreaterT {
    bool operator()(const MonomialT<NV>& x, const MonomialT<NV>& y) const
    {
        if (x.total != y.total)
            return x.total > y.total;
        return std::memcmp(x.e.data(), y.e.data(), x.e.size()) > 0;
    }
};
using GradedLexGreater = GradedLexGreaterT<32>;

/// Sparse multivariate polynomial over Z: terms sorted graded-lex
/// descending, no zero coefficients stored.
template <size_t NV>
struct PolyT {
    using Monomial = MonomialT<NV>;
    std::vector<std::pair<Monomial, Integer>> terms;

    bool is_zero() const { return terms.empty(); }

    bool is_constant() const
    {
        return terms.empty() || (terms.size() == 1 && terms[0].first.is_one());
    }

    friend bool operator==(const PolyT& x, const PolyT& y) { return x.terms == y.terms; }
};

using Poly = PolyT<32>;

/// Ring spec for Z[vars]. The variable universe is fixed at construction.
template <size_t NV>
struct PolyRingT {
    using Elem = PolyT<NV>;
    using Poly = PolyT<NV>;
    using Monomial = MonomialT<NV>;
    using GradedLexGreater = GradedLexGreaterT<NV>;
    std::vector<std::string> vars;

    explicit PolyRingT(std::vector<std::string> names) : vars(std::move(names))
    {
        if (vars.size() > NV)
            throw std::domain_error("PolyRingT: too many variables");
        for (size_t i = 0; i < vars.size(); ++i)
            for (size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j])
                    throw std::domain_error("PolyRingT: duplicate variable name");
    }

    size_t var_index(const std::string& name) const
    {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name)
                return i;
        throw std::domain_error("PolyRingT: unknown variable " + name);
    }

    Elem var(size_t i) const
    {
        if (i >= vars.size())
            throw std::domain_error("PolyRingT: variable index out of range");
        Poly p;
        Monomial m;
        m.e[i] = 1;
        m.total = 1;
        p.terms.emplace_back(m, 1);
        return p;
    }
    Elem var(const std::string& name) const { return var(var_index(name)); }

    Elem constant(Integer c) const
    {
        Poly p;
        if (c != 0)
            p.terms.emplace_back(Monomial{}, std::move(c));
        return p;
    }

    Elem zero() const { return Poly{}; }
    Elem one() const { return constant(1); }
    Elem from_int(long n) const { return constant(Integer(n)); }

    Elem add(const Elem& x, const Elem& y) const
    {
        Poly out;
        out.terms.reserve(x.terms.size() + y.terms.size());
        GradedLexGreater gt;
        size_t i = 0, j = 0;
        while (i < x.terms.size() && j < y.terms.size()) {
            if (x.terms[i].first == y.terms[j].first) {
                Integer c = x.terms[i].second + y.terms[j].second;
                if (c != 0)
                    out.terms.emplace_back(x.terms[i].first, std::move(c));
                ++i, ++j;
            } else if (gt(x.terms[i].first, y.terms[j].first)) {
                out.terms.push_back(x.terms[i++]);
            } else {
                out.terms.push_back(y.terms[j++]);
            }
        }
        for (; i < x.terms.size(); ++i)
            out.terms.push_back(x.terms[i]);
        for (; j < y.terms.size(); ++j)
            out.terms.push_back(y.terms[j]);
        return out;
    }

    Elem neg(const Elem& x) const
    {
        Poly out = x;
        for (auto& t : out.terms)
            t.second = -t.second;
        return out;
    }

    Elem sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

    Elem mul(const Elem& x, const Elem& y) const
    {
        if (x.terms.empty() || y.terms.empty())
            return Poly{};
        if (x.terms.size() == 1 && y.terms.size() == 1) {
            Poly out;
            Integer c = x.terms[0].second * y.terms[0].second;
            if (c != 0)
                out.terms.emplace_back(x.terms[0].first * y.terms[0].first, std::move(c));
            return out;
        }
        std::map<Monomial, Integer, GradedLexGreater> acc;
        for (const auto& [mx, cx] : x.terms)
            for (const auto& [my, cy] : y.terms)
                acc[mx * my] += cx * cy;
        Poly out;
        out.terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0)
                out.terms.emplace_back(m, std::move(c));
        return out;
    }

    bool eq(const Elem& x, const Elem& y) const { return x == y; }
    bool is_zero(const Elem& x) const { return x.terms.empty(); }
    bool is_one(const Elem& x) const
    {
        return x.terms.size() == 1 && x.terms[0].first.is_one() && x.terms[0].second == 1;
    }

    /// Invertible elements are the constants +-1 only; Weyl element
    /// construction requires units, which a polynomial ring cannot supply
    /// beyond these.
    std::optional<Elem> invert(const Elem& x) const
    {
        if (x.terms.size() == 1 && x.terms[0].first.is_one() &&
            (x.terms[0].second == 1 || x.terms[0].second == -1))
            return x;
        return std::nullopt;
    }
    bool is_unit(const Elem& x) const { return invert(x).has_value(); }

    std::string to_string(const Elem& x) const
    {
        if (x.terms.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : x.terms) {
            Integer ac = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0)
                    s += "-";
                first = false;
            } else {
                s += c < 0 ? " - " : " + ";
            }
            std::string mono;
            for (size_t i = 0; i < vars.size(); ++i) {
                if (m.e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += vars[i];
                if (m.e[i] > 1)
                    mono += "^" + std::to_string(int(m.e[i]));
            }
            if (mono.empty())
                s += hfold::to_string(ac);
            else if (ac == 1)
                s += mono;
            else
                s += hfold::to_string(ac) + "*" + mono;
        }
        return s;
    }

    /// Evaluation homomorphism into any ring: each variable is sent to an
    /// assigned value, extended additively and multiplicatively.
    template <CommutativeRing R>
    typename R::Elem eval(const R& target, const Elem& p,
                          const std::vector<typename R::Elem>& assignment) const
    {
        if (assignment.size() != vars.size())
            throw std::domain_error("PolyRingT::eval: assignment size mismatch");
        auto out = target.zero();
        for (const auto& [m, c] : p.terms) {
            auto term = target.from_int(0);
            // c as target element via repeated doubling on |c|
            {
                Integer k = c < 0 ? Integer(-c) : c;
                auto base = target.one();
                auto acc = target.zero();
                std::vector<int> bits;
                while (k > 0) {
                    bits.push_back(static_cast<int>(k % 2));
                    k /= 2;
                }
                for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
                    acc = target.add(acc, acc);
                    if (*it)
                        acc = target.add(acc, base);
                }
                term = c < 0 ? target.neg(acc) : acc;
            }
            for (size_t i = 0; i < vars.size(); ++i)
                for (int k = 0; k < m.e[i]; ++k)
                    term = target.mul(term, assignment[i]);
            out = target.add(out, term);
        }
        return out;
    }
};

using PolyRing = PolyRingT<32>;
using WidePolyRing = PolyRingT<128>;

} // namespace hfold
