#pragma once

#include "hfold/golden.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hfold {

enum class Kind { A4, D6, E8, H2, H3, H4, GH2, GH3, GH4 };

inline std::string kind_name(Kind k)
{
    switch (k) {
    case Kind::A4: return "A4";
    case Kind::D6: return "D6";
    case Kind::E8: return "E8";
    case Kind::H2: return "H2";
    case Kind::H3: return "H3";
    case Kind::H4: return "H4";
    case Kind::GH2: return "GH2";
    case Kind::GH3: return "GH3";
    case Kind::GH4: return "GH4";
    }
    return "?";
}

inline bool is_h_kind(Kind k)
{
    return k == Kind::H2 || k == Kind::H3 || k == Kind::H4 || k == Kind::GH2 ||
           k == Kind::GH3 || k == Kind::GH4;
}
inline bool is_gh_kind(Kind k)
{
    return k == Kind::GH2 || k == Kind::GH3 || k == Kind::GH4;
}

/// Which basis the coordinates of a RootVec refer to. A4 and D6 live in
/// the standard orthonormal e-basis; E8 is handled in root-base
/// coordinates (its tables are printed that way); H/GH systems use the
/// fixed simple-root basis together with its Gram matrix.
enum class BasisId { OrthoA4, OrthoD6, BaseE8, SimpleH2, SimpleH3, SimpleH4 };

struct RootVec {
    std::vector<GoldenRat> c;
    BasisId basis;

    friend bool operator==(const RootVec& x, const RootVec& y)
    {
        return x.basis == y.basis && x.c == y.c;
    }
};

enum class SpanType { A1, A1xA1, A2, H2 };

inline std::string span_name(SpanType t)
{
    switch (t) {
    case SpanType::A1: return "A1";
    case SpanType::A1xA1: return "A1xA1";
    case SpanType::A2: return "A2";
    case SpanType::H2: return "H2";
    }
    return "?";
}

enum class Position { Involution, InvertedInvolution, NotH2 };

/// Word over the base and its formal negatives: letters are base
/// positions, sign -1 marking the negative letter.
struct SignedLetter {
    int index;
    int sign; // +1 or -1
    friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};
using SignedWord = std::vector<SignedLetter>;

inline SignedWord positive_word(const std::vector<int>& letters)
{
    SignedWord w;
    w.reserve(letters.size());
    for (int l : letters)
        w.push_back(SignedLetter{l, +1});
    return w;
}

inline SignedWord inverse_word(const SignedWord& w)
{
    SignedWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(SignedLetter{it->index, -it->sign});
    return out;
}

class RootSystem;

/// Fully enumerated Weyl group acting as permutations of the root list,
/// with one generator word retained per element.
struct WeylGroup {
    int num_roots = 0;
    std::vector<std::vector<std::int16_t>> perms; // element -> root permutation
    std::vector<std::pair<int, int>> parent;      // (parent element, letter), -1 for id
    std::unordered_map<std::string, int> index;

    static std::string key(const std::vector<std::int16_t>& p)
    {
        return std::string(reinterpret_cast<const char*>(p.data()),
                           p.size() * sizeof(std::int16_t));
    }

    int find(const std::vector<std::int16_t>& p) const
    {
        auto it = index.find(key(p));
        return it == index.end() ? -1 : it->second;
    }

    size_t order() const { return perms.size(); }

    /// Generator word (base positions, applied left to right).
    std::vector<int> word(int elem) const
    {
        std::vector<int> w;
        while (elem != 0) {
            w.push_back(parent[elem].second);
            elem = parent[elem].first;
        }
        std::reverse(w.begin(), w.end());
        return w;
    }
};

class RootSystem {
public:
    Kind kind;
    BasisId basis;
    int space_dim = 0;                      // coordinate dimension
    std::vector<RootVec> roots;             // all roots
    std::vector<int> base;                  // indices of the ordered root base
    std::vector<std::vector<GoldenRat>> gram; // Gram matrix of the coordinate basis
    std::vector<int> neg;                   // index of -root
    std::vector<bool> positive;
    std::vector<std::vector<GoldenRat>> base_coords; // coords of roots in the root base

    static const RootSystem& get(Kind k); // cached singleton per kind

    size_t size() const { return roots.size(); }
    int rank() const { return static_cast<int>(base.size()); }

    GoldenRat ip_vec(const std::vector<GoldenRat>& u, const std::vector<GoldenRat>& v) const
    {
        GoldenRat s;
        for (int i = 0; i < space_dim; ++i) {
            if (u[i].is_zero())
                continue;
            for (int j = 0; j < space_dim; ++j) {
                if (v[j].is_zero() || gram[i][j].is_zero())
                    continue;
                s += u[i] * gram[i][j] * v[j];
            }
        }
        return s;
    }

    const GoldenRat& ip(int i, int j) const { return ip_table_[i][j]; }
    GoldenRat norm2(int i) const { return ip_table_[i][i]; }

    std::vector<GoldenRat> reflect_vec(const std::vector<GoldenRat>& v,
                                       const std::vector<GoldenRat>& alpha) const
    {
        GoldenRat aa = ip_vec(alpha, alpha);
        if (aa.is_zero())
            throw std::domain_error("reflect: zero root");
        GoldenRat t = (ip_vec(alpha, v) * GoldenRat(2)) / aa;
        std::vector<GoldenRat> out(v);
        for (int i = 0; i < space_dim; ++i)
            out[i] -= t * alpha[i];
        return out;
    }

    RootVec reflect(const RootVec& v, const RootVec& alpha) const
    {
        if (v.basis != basis || alpha.basis != basis)
            throw std::domain_error("reflect: basis mismatch");
        bool zero = true;
        for (const auto& x : alpha.c)
            if (!x.is_zero())
                zero = false;
        if (zero)
            throw std::domain_error("reflect: zero root rejected");
        return RootVec{reflect_vec(v.c, alpha.c), basis};
    }

    /// v^{s_alpha} as a root index (precomputed table).
    int reflect_idx(int v, int alpha) const { return refl_table_[alpha][v]; }

    int index_of(const std::vector<GoldenRat>& coords) const
    {
        auto it = lookup_.find(coord_key(coords));
        return it == lookup_.end() ? -1 : it->second;
    }
    int index_of(const RootVec& v) const { return index_of(v.c); }

    int base_index(int pos) const { return base[pos]; }

    /// Apply a signed word of base reflections (negative letters reflect the
    /// same hyperplane; kept for parity bookkeeping).
    int apply_word(int root, const SignedWord& w) const
    {
        for (const auto& l : w)
            root = reflect_idx(root, base[l.index]);
        return root;
    }
    int apply_word(int root, const std::vector<int>& letters) const
    {
        for (int l : letters)
            root = reflect_idx(root, base[l]);
        return root;
    }

    /// Full enumeration of the Weyl group as root permutations. Refused for
    /// E8 (order ~ 7e8); E8 Weyl action is applied via words on demand.
    const WeylGroup& weyl_group() const;

    /// Coxeter order m of s_i s_j for base positions i, j.
    int coxeter_order(int i, int j) const;

    /// Open root interval ]a, b[ in the unique interval ordering starting
    /// from a (sorted by angle from a; proportional GH pairs short first).
    std::vector<int> open_interval(int a, int b) const;

    /// Crystallographic interval: positive *integral* combinations only.
    std::vector<int> cry_interval(int a, int b) const;

    bool proportional(int a, int b) const;

    SpanType classify_span(int a, int b) const;
    int count_subsystems(int a, SpanType t) const;
    Position position_of(int a, int b) const;

    /// Positive roots lying in the plane of two base roots.
    std::vector<int> e2_plus() const;

    /// H2-quintuple (alpha, beta, gamma, delta, eps) for an H2-pair
    /// (alpha, eps): beta = tau*a+e, gamma = tau*a+tau*e, delta = a+tau*e.
    std::array<int, 5> h2_quintuple(int alpha, int eps) const;

    /// Word w (over base positions) with root_i^w and root_j^w both
    /// positive. Chamber descent along a lexicographic functional.
    std::vector<int> positivizing_word(int i, int j) const;

    /// Height: sum of base coordinates (a GoldenRat for H kinds).
    GoldenRat height(int i) const
    {
        GoldenRat h;
        for (const auto& c : base_coords[i])
            h += c;
        return h;
    }

    std::string render_root(int i) const;

    static RootSystem build(Kind k);

private:
    std::vector<std::vector<GoldenRat>> ip_table_;
    std::vector<std::vector<std::int16_t>> refl_table_;
    std::map<std::string, int> lookup_;
    mutable std::optional<WeylGroup> weyl_;
    mutable std::map<long, std::vector<int>> interval_cache_;
    mutable std::map<long, std::vector<int>> cry_cache_;
    mutable std::unique_ptr<std::mutex> cache_mu_ = std::make_unique<std::mutex>();

    static std::string coord_key(const std::vector<GoldenRat>& c)
    {
        std::string s;
        for (const auto& x : c) {
            s += to_string(x.num.a);
            s += ',';
            s += to_string(x.num.b);
            s += '/';
            s += to_string(x.den);
            s += ';';
        }
        return s;
    }

    void finalize();
    friend RootSystem make_system(Kind);
};

// ---------------------------------------------------------------------------
// construction

namespace detail {

inline std::vector<GoldenRat> gr_vec(std::initializer_list<int> xs)
{
    std::vector<GoldenRat> v;
    v.reserve(xs.size());
    for (int x : xs)
        v.emplace_back(x);
    return v;
}

/// Gram matrix of the H4 simple basis in standard order: all roots length
/// 1, (rho0,rho1) and (rho1,rho2) are A2-pairs (product -1/2), (rho2,rho3)
/// an H2-pair. The fiber tables force the obtuse convention
/// rho2.rho3 = -tau/2.
inline std::vector<std::vector<GoldenRat>> h_gram(int rank)
{
    std::vector<std::vector<GoldenRat>> g(rank, std::vector<GoldenRat>(rank));
    for (int i = 0; i < rank; ++i)
        g[i][i] = GoldenRat(1);
    auto mhalf = GoldenRat(GoldenInt(-1), 2);
    auto mtauhalf = GoldenRat(GoldenInt(0, -1), 2);
    // positions are (.., rho2, rho3): the last pair is the H2-pair
    for (int i = 0; i + 1 < rank; ++i) {
        bool h2pair = (i == rank - 2);
        g[i][i + 1] = g[i + 1][i] = h2pair ? mtauhalf : mhalf;
    }
    return g;
}

} // namespace detail

inline RootSystem make_system(Kind k)
{
    RootSystem s;
    s.kind = k;
    auto tau = GoldenRat::tau();

    auto push = [&](std::vector<GoldenRat> v) {
        s.roots.push_back(RootVec{std::move(v), s.basis});
    };

    switch (k) {
    case Kind::A4: {
        s.basis = BasisId::OrthoA4;
        s.space_dim = 5;
        s.gram.assign(5, std::vector<GoldenRat>(5));
        for (int i = 0; i < 5; ++i)
            s.gram[i][i] = GoldenRat(1);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                if (i == j)
                    continue;
                std::vector<GoldenRat> v(5);
                v[i] = GoldenRat(1);
                v[j] = GoldenRat(-1);
                push(std::move(v));
            }
        break;
    }
    case Kind::D6: {
        s.basis = BasisId::OrthoD6;
        s.space_dim = 6;
        s.gram.assign(6, std::vector<GoldenRat>(6));
        for (int i = 0; i < 6; ++i)
            s.gram[i][i] = GoldenRat(1);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        std::vector<GoldenRat> v(6);
                        v[i] = GoldenRat(si);
                        v[j] = GoldenRat(sj);
                        push(std::move(v));
                    }
        break;
    }
    case Kind::E8: {
        // Base-coordinate realization: Gram = the E8 Cartan matrix for the
        // diagram chain d7-d1-d2-d3-d4(-d5), d4-d6-d8, ordered so that
        // d1..d6 match the D6 base.
        s.basis = BasisId::BaseE8;
        s.space_dim = 8;
        static const int edges[][2] = {{7, 1}, {1, 2}, {2, 3}, {3, 4},
                                       {4, 5}, {4, 6}, {6, 8}};
        s.gram.assign(8, std::vector<GoldenRat>(8));
        for (int i = 0; i < 8; ++i)
            s.gram[i][i] = GoldenRat(2);
        for (auto& e : edges) {
            s.gram[e[0] - 1][e[1] - 1] = GoldenRat(-1);
            s.gram[e[1] - 1][e[0] - 1] = GoldenRat(-1);
        }
        // closure of the base under simple reflections
        std::vector<std::vector<GoldenRat>> work;
        for (int i = 0; i < 8; ++i) {
            std::vector<GoldenRat> v(8);
            v[i] = GoldenRat(1);
            work.push_back(std::move(v));
        }
        std::map<std::string, int> seen;
        auto key = [](const std::vector<GoldenRat>& c) {
            std::string t;
            for (const auto& x : c)
                t += to_string(x) + ";";
            return t;
        };
        for (auto& v : work)
            seen[key(v)] = 1;
        // temporary system shell for reflect_vec
        RootSystem tmp;
        tmp.space_dim = 8;
        tmp.gram = s.gram;
        std::vector<std::vector<GoldenRat>> simple = work;
        for (size_t head = 0; head < work.size(); ++head) {
            for (int i = 0; i < 8; ++i) {
                auto r = tmp.reflect_vec(work[head], simple[i]);
                auto kk = key(r);
                if (!seen.count(kk)) {
                    seen[kk] = 1;
                    work.push_back(std::move(r));
                }
            }
        }
        for (auto& v : work)
            push(std::move(v));
        break;
    }
    case Kind::H2:
    case Kind::H3:
    case Kind::H4:
    case Kind::GH2:
    case Kind::GH3:
    case Kind::GH4: {
        int rank = (k == Kind::H2 || k == Kind::GH2) ? 2
                   : (k == Kind::H3 || k == Kind::GH3) ? 3
                                                       : 4;
        s.basis = rank == 2 ? BasisId::SimpleH2
                  : rank == 3 ? BasisId::SimpleH3
                              : BasisId::SimpleH4;
        s.space_dim = rank;
        s.gram = detail::h_gram(rank);
        RootSystem tmp;
        tmp.space_dim = rank;
        tmp.gram = s.gram;
        std::vector<std::vector<GoldenRat>> work;
        for (int i = 0; i < rank; ++i) {
            std::vector<GoldenRat> v(rank);
            v[i] = GoldenRat(1);
            work.push_back(std::move(v));
        }
        std::vector<std::vector<GoldenRat>> simple = work;
        std::map<std::string, int> seen;
        auto key = [](const std::vector<GoldenRat>& c) {
            std::string t;
            for (const auto& x : c)
                t += to_string(x) + ";";
            return t;
        };
        for (auto& v : work)
            seen[key(v)] = 1;
        for (size_t head = 0; head < work.size(); ++head) {
            for (int i = 0; i < rank; ++i) {
                auto r = tmp.reflect_vec(work[head], simple[i]);
                auto kk = key(r);
                if (!seen.count(kk)) {
                    seen[kk] = 1;
                    work.push_back(std::move(r));
                }
            }
        }
        if (is_gh_kind(k)) {
            size_t n = work.size();
            for (size_t i = 0; i < n; ++i) {
                auto v = work[i];
                for (auto& x : v)
                    x *= tau;
                work.push_back(std::move(v));
            }
        }
        for (auto& v : work)
            push(std::move(v));
        break;
    }
    }
    s.finalize();
    return s;
}

inline void RootSystem::finalize()
{
    // stable deterministic root order: sort by coordinate key
    std::sort(roots.begin(), roots.end(), [&](const RootVec& x, const RootVec& y) {
        for (int i = 0; i < space_dim; ++i) {
            int c = compare(x.c[i], y.c[i]);
            if (c != 0)
                return c < 0;
        }
        return false;
    });
    for (size_t i = 0; i < roots.size(); ++i)
        lookup_[coord_key(roots[i].c)] = static_cast<int>(i);

    // base indices
    auto unit = [&](int pos) {
        std::vector<GoldenRat> v(space_dim);
        v[pos] = GoldenRat(1);
        return v;
    };
    base.clear();
    switch (kind) {
    case Kind::A4: {
        // (d2,d3,d4,d5) = (e1-e2, e2-e3, e3-e4, e4-e5)
        for (int i = 0; i < 4; ++i) {
            std::vector<GoldenRat> v(5);
            v[i] = GoldenRat(1);
            v[i + 1] = GoldenRat(-1);
            base.push_back(index_of(v));
        }
        break;
    }
    case Kind::D6: {
        // (d1..d6) = (e1-e2, ..., e5-e6, e5+e6)
        for (int i = 0; i < 5; ++i) {
            std::vector<GoldenRat> v(6);
            v[i] = GoldenRat(1);
            v[i + 1] = GoldenRat(-1);
            base.push_back(index_of(v));
        }
        std::vector<GoldenRat> v(6);
        v[4] = GoldenRat(1);
        v[5] = GoldenRat(1);
        base.push_back(index_of(v));
        break;
    }
    case Kind::E8:
        for (int i = 0; i < 8; ++i)
            base.push_back(index_of(unit(i)));
        break;
    default:
        for (int i = 0; i < space_dim; ++i)
            base.push_back(index_of(unit(i)));
        break;
    }
    for (int b : base)
        if (b < 0)
            throw std::logic_error("RootSystem: base root missing");

    // inner products and reflection tables
    int n = static_cast<int>(roots.size());
    ip_table_.assign(n, std::vector<GoldenRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            ip_table_[i][j] = ip_vec(roots[i].c, roots[j].c);
            ip_table_[j][i] = ip_table_[i][j];
        }
    refl_table_.assign(n, std::vector<std::int16_t>(n, -1));
    for (int a = 0; a < n; ++a) {
        for (int v = 0; v < n; ++v) {
            auto r = reflect_vec(roots[v].c, roots[a].c);
            int idx = index_of(r);
            if (idx < 0)
                throw std::logic_error("RootSystem: not closed under reflections");
            refl_table_[a][v] = static_cast<std::int16_t>(idx);
        }
    }
    neg.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        auto v = roots[i].c;
        for (auto& x : v)
            x = -x;
        neg[i] = index_of(v);
        if (neg[i] < 0)
            throw std::logic_error("RootSystem: missing negative root");
    }

    // base coordinates: solve B^T G B x = B^T G r for each root r
    int rk = rank();
    std::vector<std::vector<GoldenRat>> m(rk, std::vector<GoldenRat>(rk));
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < rk; ++j)
            m[i][j] = ip(base[i], base[j]);
    base_coords.assign(n, {});
    for (int r = 0; r < n; ++r) {
        std::vector<GoldenRat> rhs(rk);
        for (int i = 0; i < rk; ++i)
            rhs[i] = ip(base[i], r);
        // gaussian elimination, exact
        auto a = m;
        auto x = rhs;
        for (int col = 0; col < rk; ++col) {
            int piv = -1;
            for (int row = col; row < rk; ++row)
                if (!a[row][col].is_zero()) {
                    piv = row;
                    break;
                }
            if (piv < 0)
                throw std::logic_error("RootSystem: singular base Gram");
            std::swap(a[piv], a[col]);
            std::swap(x[piv], x[col]);
            for (int row = 0; row < rk; ++row) {
                if (row == col || a[row][col].is_zero())
                    continue;
                GoldenRat f = a[row][col] / a[col][col];
                for (int cc = col; cc < rk; ++cc)
                    a[row][cc] -= f * a[col][cc];
                x[row] -= f * x[col];
            }
        }
        std::vector<GoldenRat> coords(rk);
        for (int i = 0; i < rk; ++i)
            coords[i] = x[i] / a[i][i];
        base_coords[r] = std::move(coords);
    }

    positive.assign(n, false);
    for (int r = 0; r < n; ++r) {
        int sg = 0;
        for (const auto& c : base_coords[r]) {
            if (c.is_zero())
                continue;
            int cs = c.sgn();
            if (sg == 0)
                sg = cs;
            else if (sg != cs)
                throw std::logic_error("RootSystem: root not sign-coherent in base");
        }
        positive[r] = sg > 0;
    }
}

inline const RootSystem& RootSystem::get(Kind k)
{
    static std::map<Kind, RootSystem> cache;
    auto it = cache.find(k);
    if (it == cache.end())
        it = cache.emplace(k, make_system(k)).first;
    return it->second;
}

inline RootSystem RootSystem::build(Kind k) { return make_system(k); }

// ---------------------------------------------------------------------------
// queries

inline bool RootSystem::proportional(int a, int b) const
{
    // a, b proportional iff |<a,b>|^2 = |a|^2 |b|^2
    GoldenRat p = ip(a, b);
    return (p * p) == (norm2(a) * norm2(b));
}

inline const WeylGroup& RootSystem::weyl_group() const
{
    if (kind == Kind::E8)
        throw std::domain_error("weyl_group: enumeration refused for E8");
    if (weyl_)
        return *weyl_;
    WeylGroup g;
    int n = static_cast<int>(roots.size());
    g.num_roots = n;
    std::vector<std::int16_t> id(n);
    for (int i = 0; i < n; ++i)
        id[i] = static_cast<std::int16_t>(i);
    g.perms.push_back(id);
    g.parent.emplace_back(-1, -1);
    g.index[WeylGroup::key(id)] = 0;
    for (size_t head = 0; head < g.perms.size(); ++head) {
        for (int l = 0; l < rank(); ++l) {
            auto p = g.perms[head];
            for (int i = 0; i < n; ++i)
                p[i] = refl_table_[base[l]][g.perms[head][i]];
            auto key = WeylGroup::key(p);
            if (!g.index.count(key)) {
                g.index[key] = static_cast<int>(g.perms.size());
                g.parent.emplace_back(static_cast<int>(head), l);
                g.perms.push_back(std::move(p));
            }
        }
    }
    weyl_ = std::move(g);
    return *weyl_;
}

inline int RootSystem::coxeter_order(int i, int j) const
{
    int a = base[i], b = base[j];
    // order of s_a s_b: follow the composite permutation on root a
    int m = 0;
    std::vector<int> probe(roots.size());
    for (size_t v = 0; v < roots.size(); ++v)
        probe[v] = static_cast<int>(v);
    while (true) {
        ++m;
        bool ident = true;
        for (size_t v = 0; v < roots.size(); ++v) {
            probe[v] = refl_table_[b][refl_table_[a][probe[v]]];
            if (probe[v] != static_cast<int>(v))
                ident = false;
        }
        // recheck after full application
        ident = true;
        for (size_t v = 0; v < roots.size(); ++v)
            if (probe[v] != static_cast<int>(v)) {
                ident = false;
                break;
            }
        if (ident)
            return m;
        if (m > 64)
            throw std::logic_error("coxeter_order: runaway");
    }
}

/// Solve r = x*a + y*b in the plane of roots a, b; returns false if r is
/// not in that plane.
inline bool plane_coefficients(const RootSystem& s, int r, int a, int b, GoldenRat& x,
                               GoldenRat& y)
{
    GoldenRat A = s.ip(a, a), B = s.ip(a, b), C = s.ip(b, b);
    GoldenRat det = A * C - B * B;
    if (det.is_zero())
        throw std::domain_error("plane_coefficients: proportional pair");
    GoldenRat P = s.ip(r, a), Q = s.ip(r, b);
    x = (P * C - Q * B) / det;
    y = (Q * A - P * B) / det;
    // verify planarity coordinatewise
    for (int i = 0; i < s.space_dim; ++i) {
        GoldenRat v = x * s.roots[a].c[i] + y * s.roots[b].c[i];
        if (!(v == s.roots[r].c[i]))
            return false;
    }
    return true;
}

inline std::vector<int> RootSystem::open_interval(int a, int b) const
{
    if (proportional(a, b))
        throw std::domain_error("open_interval: proportional inputs rejected");
    long key = static_cast<long>(a) * static_cast<long>(size()) + b;
    {
        std::lock_guard<std::mutex> lk(*cache_mu_);
        auto it = interval_cache_.find(key);
        if (it != interval_cache_.end())
            return it->second;
    }
    struct Entry {
        int idx;
        GoldenRat x, y;
    };
    std::vector<Entry> found;
    for (int r = 0; r < static_cast<int>(roots.size()); ++r) {
        if (r == a || r == b)
            continue;
        GoldenRat x, y;
        if (!plane_coefficients(*this, r, a, b, x, y))
            continue;
        if (x.sgn() > 0 && y.sgn() > 0)
            found.push_back(Entry{r, x, y});
    }
    // angle from a increases with y/x; proportional pairs (GH) tie-broken
    // by length, shorter first
    std::sort(found.begin(), found.end(), [&](const Entry& u, const Entry& v) {
        int c = compare(u.y * v.x, v.y * u.x);
        if (c != 0)
            return c < 0;
        return compare(norm2(u.idx), norm2(v.idx)) < 0;
    });
    std::vector<int> out;
    out.reserve(found.size());
    for (auto& e : found)
        out.push_back(e.idx);
    std::lock_guard<std::mutex> lk(*cache_mu_);
    interval_cache_.emplace(key, out);
    return out;
}

inline std::vector<int> RootSystem::cry_interval(int a, int b) const
{
    if (proportional(a, b))
        throw std::domain_error("cry_interval: proportional inputs rejected");
    long key = static_cast<long>(a) * static_cast<long>(size()) + b;
    {
        std::lock_guard<std::mutex> lk(*cache_mu_);
        auto it = cry_cache_.find(key);
        if (it != cry_cache_.end())
            return it->second;
    }
    std::vector<int> out;
    for (int r = 0; r < static_cast<int>(roots.size()); ++r) {
        if (r == a || r == b)
            continue;
        GoldenRat x, y;
        if (!plane_coefficients(*this, r, a, b, x, y))
            continue;
        auto pos_integer = [](const GoldenRat& q) {
            return q.den == 1 && q.num.b == 0 && q.num.a > 0;
        };
        if (pos_integer(x) && pos_integer(y))
            out.push_back(r);
    }
    std::lock_guard<std::mutex> lk(*cache_mu_);
    cry_cache_.emplace(key, out);
    return out;
}

inline SpanType RootSystem::classify_span(int a, int b) const
{
    if (proportional(a, b))
        return SpanType::A1;
    int count = 2; // a and b
    for (int r = 0; r < static_cast<int>(roots.size()); ++r) {
        if (r == a || r == b)
            continue;
        GoldenRat x, y;
        if (plane_coefficients(*this, r, a, b, x, y))
            ++count;
    }
    switch (count) {
    case 4: return SpanType::A1xA1;
    case 6: return SpanType::A2;
    case 10: return SpanType::H2;
    default:
        throw std::logic_error("classify_span: unexpected plane of size " +
                               std::to_string(count));
    }
}

inline int RootSystem::count_subsystems(int a, SpanType t) const
{
    // distinct rank-2 subsystems spanned with some other root
    std::vector<std::vector<int>> planes;
    for (int b = 0; b < static_cast<int>(roots.size()); ++b) {
        if (b == a || proportional(a, b))
            continue;
        if (classify_span(a, b) != t)
            continue;
        std::vector<int> plane;
        for (int r = 0; r < static_cast<int>(roots.size()); ++r) {
            GoldenRat x, y;
            if (r == a || r == b || plane_coefficients(*this, r, a, b, x, y))
                plane.push_back(r);
        }
        std::sort(plane.begin(), plane.end());
        if (std::find(planes.begin(), planes.end(), plane) == planes.end())
            planes.push_back(plane);
    }
    return static_cast<int>(planes.size());
}

inline Position RootSystem::position_of(int a, int b) const
{
    if (proportional(a, b))
        return Position::NotH2;
    if (classify_span(a, b) != SpanType::H2)
        return Position::NotH2;
    // H2-pair angle is 4*pi/5: product -tau/2 at unit lengths; involution
    // position means (a,b) or (a,-b) is an H2-pair
    GoldenRat p = ip(a, b);
    GoldenRat tau_half = GoldenRat(GoldenInt(0, 1), 2);
    if (p == tau_half || p == -tau_half)
        return Position::Involution;
    return Position::InvertedInvolution;
}

inline std::vector<int> RootSystem::e2_plus() const
{
    std::vector<int> out;
    for (int r = 0; r < static_cast<int>(roots.size()); ++r) {
        if (!positive[r])
            continue;
        bool in_plane = false;
        for (int i = 0; i < rank() && !in_plane; ++i)
            for (int j = i + 1; j < rank() && !in_plane; ++j) {
                if (r == base[i] || r == base[j]) {
                    in_plane = true;
                    break;
                }
                if (proportional(base[i], base[j]))
                    continue;
                GoldenRat x, y;
                if (plane_coefficients(*this, r, base[i], base[j], x, y))
                    in_plane = true;
            }
        if (in_plane)
            out.push_back(r);
    }
    return out;
}

inline std::array<int, 5> RootSystem::h2_quintuple(int alpha, int eps) const
{
    auto tau = GoldenRat::tau();
    auto comb = [&](const GoldenRat& x, const GoldenRat& y) {
        std::vector<GoldenRat> v(space_dim);
        for (int i = 0; i < space_dim; ++i)
            v[i] = x * roots[alpha].c[i] + y * roots[eps].c[i];
        int idx = index_of(v);
        if (idx < 0)
            throw std::domain_error("h2_quintuple: not an H2-pair");
        return idx;
    };
    return {alpha, comb(tau, GoldenRat(1)), comb(tau, tau), comb(GoldenRat(1), tau), eps};
}

inline std::vector<int> RootSystem::positivizing_word(int i, int j) const
{
    // exact chamber descent for nu = root_i + root_j with a fixed generic
    // tie-breaking functional mu = sum 64^k base_k
    std::vector<GoldenRat> nu(space_dim), mu(space_dim);
    for (int t = 0; t < space_dim; ++t)
        nu[t] = roots[i].c[t] + roots[j].c[t];
    GoldenRat w(1);
    for (int k = 0; k < rank(); ++k) {
        for (int t = 0; t < space_dim; ++t)
            mu[t] += w * roots[base[k]].c[t];
        w *= GoldenRat(64);
    }
    auto lex_neg = [&](int broot) {
        GoldenRat p = ip_vec(roots[broot].c, nu);
        int sg = p.sgn();
        if (sg != 0)
            return sg < 0;
        return ip_vec(roots[broot].c, mu).sgn() < 0;
    };
    std::vector<int> word;
    int guard = 0;
    while (true) {
        int pick = -1;
        for (int k = 0; k < rank(); ++k)
            if (lex_neg(base[k])) {
                pick = k;
                break;
            }
        if (pick < 0)
            break;
        nu = reflect_vec(nu, roots[base[pick]].c);
        mu = reflect_vec(mu, roots[base[pick]].c);
        word.push_back(pick);
        if (++guard > 4 * static_cast<int>(roots.size()))
            throw std::logic_error("positivizing_word: no convergence");
    }
    // word maps the dominant chamber back; applying it to the roots makes
    // their nu-inner-products certify positivity
    int ri = apply_word(i, word), rj = apply_word(j, word);
    if (!positive[ri] || !positive[rj])
        throw std::logic_error("positivizing_word: descent failed");
    return word;
}

inline std::string RootSystem::render_root(int i) const
{
    if (basis == BasisId::OrthoA4 || basis == BasisId::OrthoD6) {
        // e_i +- e_j style
        std::string out;
        for (int t = 0; t < space_dim; ++t) {
            const auto& c = roots[i].c[t];
            if (c.is_zero())
                continue;
            if (out.empty()) {
                if (c == GoldenRat(-1))
                    out += "-";
                else if (!(c == GoldenRat(1)))
                    out += to_string(c);
            } else {
                out += c.sgn() > 0 ? " + " : " - ";
            }
            out += "e" + std::to_string(t + 1);
        }
        return out;
    }
    std::string out = "<";
    for (int t = 0; t < space_dim; ++t) {
        if (t)
            out += ",";
        out += to_string(base_coords[i][t]);
    }
    out += ">";
    return out;
}

} // namespace hfold
