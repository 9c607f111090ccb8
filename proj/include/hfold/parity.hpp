#pragma once

#include "hfold/rootsys.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hfold {

/// Value of a parity map: a pair of signs in {+1,-1}^2. The group is
/// elementary abelian, so every element is its own inverse.
struct ParityValue {
    int eps = 1;
    int epsbar = 1;

    friend ParityValue operator*(ParityValue x, ParityValue y)
    {
        return {x.eps * y.eps, x.epsbar * y.epsbar};
    }
    ParityValue inv() const { return *this; }
    bool is_one() const { return eps == 1 && epsbar == 1; }
    friend bool operator==(ParityValue, ParityValue) = default;
    friend bool operator<(ParityValue x, ParityValue y)
    {
        return std::pair(x.eps, x.epsbar) < std::pair(y.eps, y.epsbar);
    }
    std::string str() const
    {
        auto f = [](int s) { return s > 0 ? std::string("1") : std::string("-1"); };
        return "(" + f(eps) + "," + f(epsbar) + ")";
    }
};

/// Total map (root, base position) -> {+-1}^2 for H3 or H4, with the
/// defining symmetry eta(-a, d) = eta(a, d).
struct ParityTable {
    const RootSystem* sys = nullptr;
    std::vector<std::array<ParityValue, 4>> values; // indexed by root

    ParityTable() = default;
    explicit ParityTable(const RootSystem& s) : sys(&s), values(s.size()) {}

    ParityValue at(int root, int base_pos) const { return values[root][base_pos]; }
    void set(int root, int base_pos, ParityValue v)
    {
        values[root][base_pos] = v;
        values[sys->neg[root]][base_pos] = v;
    }
};

inline SignedWord braid_word(int m, int s, int t)
{
    SignedWord w;
    for (int k = 0; k < m; ++k)
        w.push_back(SignedLetter{k % 2 == 0 ? s : t, +1});
    return w;
}

/// Product formula eta_{a,(d1..dm)} = prod eta_{a^{s(d1..d_{i-1})}, d_i}
/// with eta_{a,-d} = eta_{a^{s_d}, d}^{-1}; empty word gives the identity.
inline ParityValue parity_extend(const ParityTable& t, int root, const SignedWord& w)
{
    const RootSystem& s = *t.sys;
    ParityValue acc;
    int cur = root;
    for (const auto& l : w) {
        int b = s.base_index(l.index);
        if (l.sign > 0) {
            acc = acc * t.at(cur, l.index);
            cur = s.reflect_idx(cur, b);
        } else {
            cur = s.reflect_idx(cur, b);
            acc = acc * t.at(cur, l.index).inv();
        }
    }
    return acc;
}

struct ParityViolation {
    std::string property;
    std::string instance;
};

struct ParityReport {
    std::vector<ParityViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the four structural properties of a parity map: braid
/// invariance, adjacency triviality, completeness, and the negation
/// symmetry. Adjacency triviality is checked against one reduced word per
/// Weyl element (expressions up to length 2*diam(W)+1, deduplicated by
/// the induced permutation); completeness by closing the reachable
/// (root, sign) pairs under positive letters.
inline ParityReport check_parity_properties(const ParityTable& t)
{
    const RootSystem& s = *t.sys;
    ParityReport rep;
    int rk = s.rank();

    // negation symmetry
    for (int r = 0; r < static_cast<int>(s.size()); ++r)
        for (int d = 0; d < rk; ++d)
            if (!(t.at(r, d) == t.at(s.neg[r], d)))
                rep.violations.push_back(
                    {"negation", s.render_root(r) + " @ base " + std::to_string(d)});

    // braid invariance
    for (int i = 0; i < rk; ++i)
        for (int j = i + 1; j < rk; ++j) {
            int m = s.coxeter_order(i, j);
            auto w1 = braid_word(m, i, j), w2 = braid_word(m, j, i);
            for (int r = 0; r < static_cast<int>(s.size()); ++r)
                if (!(parity_extend(t, r, w1) == parity_extend(t, r, w2)))
                    rep.violations.push_back(
                        {"braid", s.render_root(r) + " @ base pair (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")"});
        }

    // adjacency triviality over one reduced word per Weyl element
    const WeylGroup& w = s.weyl_group();
    for (size_t e = 0; e < w.order(); ++e) {
        auto word = positive_word(w.word(static_cast<int>(e)));
        auto winv = inverse_word(word);
        for (int d = 0; d < rk; ++d) {
            int beta = w.perms[e][s.base_index(d)]; // delta^{s_w}
            SignedWord expr = winv;
            expr.push_back(SignedLetter{d, +1});
            expr.insert(expr.end(), word.begin(), word.end());
            for (int a = 0; a < static_cast<int>(s.size()); ++a) {
                if (!s.ip(a, beta).is_zero())
                    continue;
                if (!parity_extend(t, a, expr).is_one()) {
                    rep.violations.push_back(
                        {"adjacency", s.render_root(a) + " vs expression of " +
                                          s.render_root(beta)});
                }
            }
        }
    }

    // completeness: stabilizing-word parities at one root generate {+-1}^2
    {
        int a0 = s.base_index(0);
        std::set<std::pair<int, std::pair<int, int>>> seen;
        std::vector<std::pair<int, ParityValue>> queue{{a0, ParityValue{}}};
        seen.insert({a0, {1, 1}});
        for (size_t head = 0; head < queue.size(); ++head) {
            auto [r, v] = queue[head];
            for (int d = 0; d < rk; ++d) {
                auto nv = v * t.at(r, d);
                int nr = s.reflect_idx(r, s.base_index(d));
                if (seen.insert({nr, {nv.eps, nv.epsbar}}).second)
                    queue.emplace_back(nr, nv);
            }
        }
        std::set<std::pair<int, int>> stab;
        for (auto& [r, v] : seen)
            if (r == a0)
                stab.insert(v);
        // subgroup closure
        std::set<std::pair<int, int>> grp{{1, 1}};
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto& a : stab)
                for (auto& b : grp) {
                    auto c = std::pair(a.first * b.first, a.second * b.second);
                    if (grp.insert(c).second)
                        grew = true;
                }
        }
        if (grp.size() != 4)
            rep.violations.push_back(
                {"completeness", "stabilizer parities generate a group of order " +
                                     std::to_string(grp.size())});
    }

    return rep;
}

} // namespace hfold
