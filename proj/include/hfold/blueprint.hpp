#pragma once

// Word rewriting around the homotopy cycle of the longest H3 word: the six
// elementary rewriting rules, the forward/backward blueprint computation,
// the evaluated identity bank (1)..(35), and the ring-structure
// consequences, all over a pluggable coordinate provider (concrete pair
// rings for verification, a term algebra for emission).

#include "hfold/commmaps.hpp"
#include "hfold/poly.hpp"
#include "hfold/rings.hpp"
#include "hfold/tables.hpp"

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfold {

// ---------------------------------------------------------------------------
// providers

template <class P>
concept CoordProvider = requires(P& p, typename P::Value v, PsiTag t) {
    typename P::Value;
    { p.add(v, v) } -> std::same_as<typename P::Value>;
    { p.neg(v) } -> std::same_as<typename P::Value>;
    { p.star(v) } -> std::same_as<typename P::Value>;
    { p.mul(v, v) } -> std::same_as<typename P::Value>;
    { p.psi(t, v, v) } -> std::same_as<typename P::Value>;
    { p.zero() } -> std::same_as<typename P::Value>;
};

/// Concrete coordinates: values are pairs over a commutative ring, psi is
/// the standard formula bank.
template <CommutativeRing R>
struct PairProvider {
    using Value = typename PairRing<R>::Elem;
    PairRing<R> S;

    explicit PairProvider(R base) : S(std::move(base)) {}

    Value add(const Value& x, const Value& y) { return S.add(x, y); }
    Value sub(const Value& x, const Value& y) { return S.sub(x, y); }
    Value neg(const Value& x) { return S.neg(x); }
    Value star(const Value& x) { return S.star(x); }
    Value mul(const Value& x, const Value& y) { return S.mul(x, y); }
    Value psi(PsiTag t, const Value& x, const Value& y) { return eval_psi(S, t, x, y); }
    Value zero() { return S.zero(); }
    Value one() { return S.one(); }
    bool eq(const Value& x, const Value& y) const { return S.eq(x, y); }
};

/// Uninterpreted terms with hash-consing; emission-only.
struct TermArena {
    enum class Op : std::uint8_t { Var, Zero, Add, Neg, Star, Mul, Psi };
    struct Node {
        Op op;
        PsiTag tag{};
        int a = -1, b = -1;
        std::string name;
    };
    using Value = int;
    std::vector<Node> nodes;
    std::map<std::string, int> memo;

    int intern(Node n)
    {
        std::string key = std::to_string(static_cast<int>(n.op)) + ":" +
                          std::to_string(static_cast<int>(n.tag)) + ":" +
                          std::to_string(n.a) + ":" + std::to_string(n.b) + ":" + n.name;
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        nodes.push_back(std::move(n));
        int id = static_cast<int>(nodes.size()) - 1;
        memo[key] = id;
        return id;
    }

    Value var(std::string name) { return intern({Op::Var, {}, -1, -1, std::move(name)}); }
    Value zero() { return intern({Op::Zero, {}, -1, -1, {}}); }
    Value add(Value x, Value y)
    {
        if (nodes[x].op == Op::Zero)
            return y;
        if (nodes[y].op == Op::Zero)
            return x;
        return intern({Op::Add, {}, x, y, {}});
    }
    Value neg(Value x)
    {
        if (nodes[x].op == Op::Zero)
            return x;
        if (nodes[x].op == Op::Neg)
            return nodes[x].a;
        return intern({Op::Neg, {}, x, -1, {}});
    }
    Value star(Value x) { return intern({Op::Star, {}, x, -1, {}}); }
    Value mul(Value x, Value y)
    {
        if (nodes[x].op == Op::Zero || nodes[y].op == Op::Zero)
            return zero();
        return intern({Op::Mul, {}, x, y, {}});
    }
    Value psi(PsiTag t, Value x, Value y) { return intern({Op::Psi, t, x, y, {}}); }

    std::string render(Value v) const
    {
        const Node& n = nodes[v];
        switch (n.op) {
        case Op::Var: return n.name;
        case Op::Zero: return "0";
        case Op::Add: return "(" + render(n.a) + " + " + render(n.b) + ")";
        case Op::Neg: return "-" + render(n.a);
        case Op::Star: return render(n.a) + "^*";
        case Op::Mul: return "(" + render(n.a) + " * " + render(n.b) + ")";
        case Op::Psi:
            return psi_tag_name(n.tag) + "(" + render(n.a) + ", " + render(n.b) + ")";
        }
        return "?";
    }
};

// ---------------------------------------------------------------------------
// elementary rules (the formula bank of the rewriting system)

template <class P>
    requires CoordProvider<P>
struct RewriteRules {
    P* p;
    using V = typename P::Value;

    explicit RewriteRules(P& prov) : p(&prov) {}

    V sub(const V& x, const V& y) { return p->add(x, p->neg(y)); }

    // (theta1(a), theta2(b), theta1(c)) -> (theta2(c), theta1(-b-ca), theta2(a))
    std::array<V, 3> r12(const V& a, const V& b, const V& c)
    {
        return {c, p->neg(p->add(b, p->mul(c, a))), a};
    }
    // (theta2(a), theta1(b), theta2(c)) -> (theta1(c), theta2(-b-ac), theta1(a))
    std::array<V, 3> r21(const V& a, const V& b, const V& c)
    {
        return {c, p->neg(p->add(b, p->mul(a, c))), a};
    }
    std::array<V, 2> r13(const V& a, const V& b) { return {b, a}; }
    std::array<V, 2> r31(const V& a, const V& b) { return {b, a}; }

    // (theta2(a), theta3(b), theta2(c), theta3(d), theta2(e))
    //   -> (theta3(e), theta2(B), theta3(C), theta2(D), theta3(a))
    std::array<V, 5> r23(const V& a, const V& b, const V& c, const V& d, const V& e)
    {
        V nb = p->neg(b);
        V w = sub(p->add(p->psi(PsiTag::EA_B, a, e), p->psi(PsiTag::GA, c, e)), d);
        V B = p->neg(p->star(p->add(p->psi(PsiTag::DA_B, nb, e), w)));
        V C = p->neg(p->add(
            p->add(p->add(p->psi(PsiTag::DA_G, nb, e),
                          p->psi(PsiTag::DB, nb, p->psi(PsiTag::DA_B, nb, e))),
                   p->add(p->psi(PsiTag::EA_G, a, e), p->psi(PsiTag::EB_G, a, w))),
            p->add(p->psi(PsiTag::DB, p->add(nb, p->psi(PsiTag::EA_D, a, e)), w), c)));
        V D = p->neg(p->star(p->add(
            p->add(nb, p->psi(PsiTag::EA_D, a, e)),
            p->add(p->psi(PsiTag::EB_D, a, w),
                   p->psi(PsiTag::EG, a,
                          p->add(p->psi(PsiTag::EB_G, a, w),
                                 p->add(p->psi(PsiTag::EA_G, a, e), c)))))));
        return {e, B, C, D, a};
    }

    // (theta3(a), theta2(b), theta3(c), theta2(d), theta3(e))
    //   -> (theta2(e), theta3(B), theta2(C), theta3(D), theta2(a))
    std::array<V, 5> r32(const V& a, const V& b, const V& c, const V& d, const V& e)
    {
        V nbs = p->neg(p->star(b));
        V ds = p->star(d);
        V w = sub(p->add(p->psi(PsiTag::AE_D, a, e), p->psi(PsiTag::GE, p->neg(c), e)), ds);
        V B = p->neg(p->add(p->psi(PsiTag::BE_D, nbs, e), w));
        V C = p->add(
            p->add(p->add(p->psi(PsiTag::BE_G, nbs, e),
                          p->psi(PsiTag::BD, nbs, p->psi(PsiTag::BE_D, nbs, e))),
                   p->add(p->psi(PsiTag::BD, p->add(nbs, p->psi(PsiTag::AE_B, a, e)), w),
                          p->psi(PsiTag::AD_G, a, w))),
            sub(p->psi(PsiTag::AE_G, a, e), c));
        V D = p->neg(p->add(
            p->add(nbs, p->psi(PsiTag::AE_B, a, e)),
            p->add(p->psi(PsiTag::AD_B, a, w),
                   p->psi(PsiTag::AG, a,
                          p->add(p->psi(PsiTag::AD_G, a, w),
                                 sub(p->psi(PsiTag::AE_G, a, e), c))))));
        return {e, B, C, D, a};
    }
};

// ---------------------------------------------------------------------------
// homotopy cycle

struct BraidMove {
    int pos, len;
};

/// Locate the elementary braid move between consecutive words: equal
/// prefix and suffix with swapped braid blocks in between.
inline BraidMove locate_move(const std::string& f, const std::string& g)
{
    if (f.size() != g.size())
        throw std::domain_error("locate_move: length mismatch");
    int n = static_cast<int>(f.size());
    int lo = 0;
    while (lo < n && f[lo] == g[lo])
        ++lo;
    int hi = n - 1;
    while (hi >= 0 && f[hi] == g[hi])
        --hi;
    if (lo > hi)
        throw std::domain_error("locate_move: words are equal");
    int len = hi - lo + 1;
    auto braids = [](char s, char t) {
        if ((s == '1' && t == '3') || (s == '3' && t == '1'))
            return 2;
        if ((s == '1' && t == '2') || (s == '2' && t == '1'))
            return 3;
        if ((s == '2' && t == '3') || (s == '3' && t == '2'))
            return 5;
        return 0;
    };
    char s = f[lo], t = g[lo];
    if (braids(s, t) != len)
        throw std::domain_error("locate_move: block is not a braid word");
    for (int k = 0; k < len; ++k) {
        if (f[lo + k] != (k % 2 == 0 ? s : t) || g[lo + k] != (k % 2 == 0 ? t : s))
            throw std::domain_error("locate_move: malformed braid block");
    }
    return {lo, len};
}

struct CycleReport {
    bool f1_equals_last = false;
    int valid_moves = 0;
    std::vector<std::string> problems;
    bool ok() const { return problems.empty() && f1_equals_last; }
};

/// Validate the three invariants of the homotopy cycle: 62 elementary
/// moves, closed up, and every word a reduced expression of the longest
/// element (length 15, reflection product -1 on the 30 roots of H3).
inline CycleReport validate_cycle(const std::vector<std::string>& cycle)
{
    CycleReport rep;
    const RootSystem& h3 = RootSystem::get(Kind::H3);
    if (cycle.size() != 63)
        rep.problems.push_back("expected 63 words, got " + std::to_string(cycle.size()));
    rep.f1_equals_last = !cycle.empty() && cycle.front() == cycle.back();
    if (!rep.f1_equals_last)
        rep.problems.push_back("cycle is not closed");
    for (size_t i = 0; i < cycle.size(); ++i) {
        const auto& w = cycle[i];
        if (w.size() != 15) {
            rep.problems.push_back("word " + std::to_string(i + 1) + " has length " +
                                   std::to_string(w.size()));
            continue;
        }
        // reflection product must be the longest element, which acts as -1
        std::vector<int> perm(h3.size());
        for (size_t v = 0; v < h3.size(); ++v)
            perm[v] = static_cast<int>(v);
        for (char c : w) {
            int b = h3.base_index(c - '1');
            for (size_t v = 0; v < h3.size(); ++v)
                perm[v] = h3.reflect_idx(perm[v], b);
        }
        for (size_t v = 0; v < h3.size(); ++v)
            if (perm[v] != h3.neg[v]) {
                rep.problems.push_back("word " + std::to_string(i + 1) +
                                       " is not an expression of the longest element");
                break;
            }
    }
    for (size_t i = 0; i + 1 < cycle.size(); ++i) {
        try {
            locate_move(cycle[i], cycle[i + 1]);
            ++rep.valid_moves;
        } catch (const std::exception& ex) {
            rep.problems.push_back("move " + std::to_string(i + 1) + ": " + ex.what());
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// the blueprint computation

template <class P>
    requires CoordProvider<P>
struct BlueprintState {
    std::string word;
    std::vector<typename P::Value> values;
};

/// Apply the elementary move between the given source and target words to
/// the state values (forward or backward is decided by which braid block
/// the source carries).
template <class P>
    requires CoordProvider<P>
BlueprintState<P> apply_move(P& prov, const BlueprintState<P>& st, const std::string& target)
{
    auto mv = locate_move(st.word, target);
    RewriteRules<P> rules(prov);
    BlueprintState<P> out{target, st.values};
    auto& v = out.values;
    int p = mv.pos;
    char s = st.word[p];
    if (mv.len == 2) {
        auto r = rules.r13(st.values[p], st.values[p + 1]);
        v[p] = r[0];
        v[p + 1] = r[1];
    } else if (mv.len == 3) {
        auto r = (s == '1') ? rules.r12(st.values[p], st.values[p + 1], st.values[p + 2])
                            : rules.r21(st.values[p], st.values[p + 1], st.values[p + 2]);
        for (int k = 0; k < 3; ++k)
            v[p + k] = r[k];
    } else if (mv.len == 5) {
        auto r = (s == '2') ? rules.r23(st.values[p], st.values[p + 1], st.values[p + 2],
                                        st.values[p + 3], st.values[p + 4])
                            : rules.r32(st.values[p], st.values[p + 1], st.values[p + 2],
                                        st.values[p + 3], st.values[p + 4]);
        for (int k = 0; k < 5; ++k)
            v[p + k] = r[k];
    } else {
        throw std::logic_error("apply_move: bad block length");
    }
    return out;
}

/// The full blueprint computation: forward over moves 1..31, backward over
/// moves 62..32, then the 15 componentwise identities x32 = x32'.
template <class P>
    requires CoordProvider<P>
std::vector<std::pair<typename P::Value, typename P::Value>>
run_blueprint(P& prov, const std::vector<typename P::Value>& y)
{
    const auto& cycle = tables::homotopy_cycle();
    if (y.size() != 15)
        throw std::domain_error("run_blueprint: 15 letter values expected");
    BlueprintState<P> fwd{cycle[0], y};
    for (int i = 0; i < 31; ++i)
        fwd = apply_move(prov, fwd, cycle[i + 1]);
    BlueprintState<P> bwd{cycle[62], y};
    for (int i = 61; i >= 31; --i)
        bwd = apply_move(prov, bwd, cycle[i]);
    if (fwd.word != bwd.word)
        throw std::logic_error("run_blueprint: passes met at different words");
    std::vector<std::pair<typename P::Value, typename P::Value>> out;
    out.reserve(15);
    for (int k = 0; k < 15; ++k)
        out.emplace_back(fwd.values[k], bwd.values[k]);
    return out;
}

// ---------------------------------------------------------------------------
// evaluated identities (1)..(35)

struct IdentityRecord {
    std::string label;
    bool verified = false;
    std::string detail;
};

/// Check the 35 evaluated identities as polynomial pair identities over
/// fresh symbolic coordinates. Variables are named after the letters they
/// instantiate in the blueprint run.
inline std::vector<IdentityRecord> check_identities_1_35()
{
    std::vector<std::string> names;
    for (int i = 1; i <= 15; ++i) {
        names.push_back("u" + std::to_string(i));
        names.push_back("v" + std::to_string(i));
    }
    PolyRing ring(names);
    PairProvider<PolyRing> prov(ring);
    auto& S = prov.S;
    using V = PairProvider<PolyRing>::Value;

    auto y = [&](int i) {
        return S.make(ring.var(2 * (i - 1)), ring.var(2 * (i - 1) + 1));
    };
    auto f = [&](const V& x, const V& z) { return prov.psi(PsiTag::AG, x, z); };
    auto g = [&](const V& x, const V& z) { return prov.psi(PsiTag::AD_B, x, z); };
    auto h1 = [&](const V& x, const V& z) { return prov.psi(PsiTag::AE_B, x, z); };
    auto h2 = [&](const V& x, const V& z) { return prov.psi(PsiTag::AE_G, x, z); };
    auto P = [&](PsiTag t, const V& x, const V& z) { return prov.psi(t, x, z); };

    std::vector<IdentityRecord> out;
    auto check = [&](const std::string& label, const V& lhs, const V& rhs) {
        IdentityRecord rec{label, prov.eq(lhs, rhs), ""};
        if (!rec.verified) {
            auto diff = S.sub(lhs, rhs);
            rec.detail = "difference " + S.to_string(diff);
        }
        out.push_back(std::move(rec));
    };

    auto st = [&](const V& x) { return prov.star(x); };
    auto ng = [&](const V& x) { return prov.neg(x); };
    auto ml = [&](const V& x, const V& z) { return prov.mul(x, z); };

    check("(1)", st(ng(y(4))), ng(st(y(4))));
    check("(2)", ml(y(15), st(y(2))), st(ml(y(15), y(2))));
    check("(3)", P(PsiTag::EG, y(5), y(8)), ng(P(PsiTag::AG, y(5), y(8))));
    check("(4)", f(y(4), y(5)), f(y(5), y(4)));
    check("(5)", st(f(y(1), y(3))), f(y(1), y(3)));
    check("(6)", f(y(1), st(y(12))), ng(f(y(1), y(12))));
    check("(7)", P(PsiTag::BD, y(10), y(12)), P(PsiTag::EG, y(10), y(12)));
    check("(8)", f(ml(y(4), y(10)), y(12)), f(ml(y(4), y(12)), y(10)));
    check("(9)", P(PsiTag::EB_G, y(1), y(4)), ng(P(PsiTag::AD_G, y(1), st(y(4)))));
    check("(10)", P(PsiTag::BE_D, y(7), y(15)), ng(P(PsiTag::DA_B, y(7), y(15))));
    check("(11)", P(PsiTag::BE_D, st(y(10)), y(14)), P(PsiTag::BE_D, y(10), ng(y(14))));
    check("(12)", st(P(PsiTag::BE_D, y(2), y(5))), ng(P(PsiTag::BE_D, y(2), ng(y(5)))));
    check("(13)", P(PsiTag::BE_D, y(7), st(y(10))), P(PsiTag::BE_D, y(7), y(10)));
    check("(14)", f(f(y(1), y(3)), y(8)), prov.zero());
    check("(15)", f(P(PsiTag::AD_G, y(1), y(4)), y(9)), prov.zero());
    check("(16)", P(PsiTag::AD_G, f(y(3), y(5)), y(13)), prov.zero());
    check("(17)", P(PsiTag::AD_G, P(PsiTag::AD_G, y(1), y(4)), y(12)), prov.zero());
    check("(18)", f(y(6), P(PsiTag::AE_G, y(15), y(4))),
          ml(y(4), P(PsiTag::BE_D, y(6), y(15))));
    check("(19)", f(P(PsiTag::BE_D, y(10), y(14)), y(7)), prov.zero());
    check("(20)", P(PsiTag::BE_D, y(5), y(2)), ng(P(PsiTag::EB_G, y(5), ng(y(2)))));
    check("(21)", P(PsiTag::EA_B, y(1), y(14)), P(PsiTag::AE_D, y(1), ng(y(14))));
    check("(22)", h1(ng(y(15)), y(4)), h1(y(15), st(y(4))));
    check("(23)", h1(ng(y(5)), y(1)), st(h1(y(5), y(1))));
    check("(24)", f(h1(y(1), y(5)), y(8)), ml(f(y(5), y(8)), y(1)));
    check("(25)", ml(f(y(4), y(10)), y(15)), ng(g(y(15), ml(y(4), y(10)))));
    check("(26)", g(y(1), h1(y(15), y(4))), ml(g(y(1), y(4)), y(15)));
    check("(27)", g(ml(y(5), y(15)), y(10)), ml(g(y(15), y(10)), y(5)));
    check("(28)", h2(y(1), y(5)), h2(y(5), y(1)));
    check("(29)", ml(y(1), ml(y(5), y(12))),
          prov.add(ng(h1(ng(f(y(1), y(12))), y(5))), g(y(12), h2(y(1), y(5)))));
    check("(30)", f(h1(y(15), y(3)), ml(y(15), y(5))), h1(y(15), f(y(3), y(5))));
    check("(31)", h1(y(15), h1(y(5), y(1))), h1(ml(y(15), y(5)), y(1)));
    check("(32)", g(g(y(15), y(7)), y(1)), ng(g(y(15), ml(y(1), y(7)))));
    {
        // (33) with y5 in S2
        V y5 = S.make(ring.zero(), ring.var(2 * 4 + 1));
        check("(33)", g(h1(y5, y(10)), y(15)), prov.zero());
    }
    check("(34)", g(h2(y(1), y(5)), prov.one()),
          g(ml(ml(f(y(1), y(5)), y(5)), y(1)), prov.one()));
    check("(35)", g(h1(y(14), y(1)), y(4)), h1(ng(y(14)), g(y(1), y(4))));
    return out;
}

// ---------------------------------------------------------------------------
// ring structure on S = R x R

struct RingStructureReport {
    std::vector<IdentityRecord> checks;
    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.verified)
                return false;
        return true;
    }
};

/// Commutativity, associativity, the ideal decomposition with its
/// projections, the component-swap isomorphism and its inverse, the
/// involution formula, and the explicit commutation-map formulas on
/// coordinates.
inline RingStructureReport verify_ring_structure()
{
    PolyRing ring({"x1", "x2", "y1", "y2", "z1", "z2"});
    PairProvider<PolyRing> prov(ring);
    auto& S = prov.S;
    using V = PairProvider<PolyRing>::Value;
    RingStructureReport out;

    auto record = [&](const std::string& label, const V& lhs, const V& rhs) {
        IdentityRecord rec{label, prov.eq(lhs, rhs), ""};
        if (!rec.verified)
            rec.detail = S.to_string(lhs) + " vs " + S.to_string(rhs);
        out.checks.push_back(std::move(rec));
    };

    V x = S.make(ring.var(size_t{0}), ring.var(size_t{1}));
    V y = S.make(ring.var(size_t{2}), ring.var(size_t{3}));
    V z = S.make(ring.var(size_t{4}), ring.var(size_t{5}));
    V one = prov.one();

    auto f = [&](const V& u, const V& v) { return prov.psi(PsiTag::AG, u, v); };
    auto g = [&](const V& u, const V& v) { return prov.psi(PsiTag::AD_B, u, v); };
    auto h1 = [&](const V& u, const V& v) { return prov.psi(PsiTag::AE_B, u, v); };
    auto h2 = [&](const V& u, const V& v) { return prov.psi(PsiTag::AE_G, u, v); };

    record("commutative", prov.mul(x, y), prov.mul(y, x));
    record("associative", prov.mul(prov.mul(x, y), z), prov.mul(x, prov.mul(y, z)));

    // projections p1(x) = -h1(-f(x,1),1), p2(x) = -g(x,1)
    V p1 = prov.neg(h1(prov.neg(f(x, one)), one));
    V p2 = prov.neg(g(x, one));
    record("p1+p2=id", prov.add(p1, p2), x);
    record("p1 into S1", g(p1, one), prov.zero());
    record("p2 into S2", g(prov.one(), p2), prov.zero());
    record("p1 idempotent", prov.neg(h1(prov.neg(f(p1, one)), one)), p1);
    record("p2 idempotent", prov.neg(g(p2, one)), p2);

    // phi(x) = f(1,x): S1 -> S2 with inverse h1(.,1)
    V x1 = S.make(ring.var(size_t{0}), ring.zero()); // element of S1
    V x2 = S.make(ring.zero(), ring.var(size_t{1})); // element of S2
    record("phi into S2", g(one, f(one, x1)), prov.zero());
    record("phi inverse 1", h1(f(one, x1), one), x1);
    record("phi inverse 2", f(one, h1(x2, one)), x2);
    V y1s = S.make(ring.var(size_t{2}), ring.zero());
    record("phi multiplicative", f(one, prov.mul(x1, y1s)),
           prov.mul(f(one, x1), f(one, y1s)));

    // involution: x^* = -p1(x) + p2(x)
    record("involution", prov.star(x), prov.add(prov.neg(p1), p2));

    // comm-formula rows on bracket coordinates <x1,x2> = x1 + phi(x2)
    auto bra = [&](const typename PolyRing::Elem& u1, const typename PolyRing::Elem& u2) {
        // x1 + phi(x2) with x1 = (u1, 0), x2 = (u2, 0): equals (u1, u2)
        return S.make(u1, u2);
    };
    V bx = bra(ring.var(size_t{0}), ring.var(size_t{1}));
    V by = bra(ring.var(size_t{2}), ring.var(size_t{3}));
    record("comm-formula f", f(bx, by),
           bra(ring.zero(), ring.mul(ring.var(size_t{0}), ring.var(size_t{2}))));
    record("comm-formula g", g(bx, by),
           bra(ring.zero(),
               ring.neg(ring.mul(ring.var(size_t{2}), ring.var(size_t{1})))));
    record("comm-formula h1", h1(bx, by),
           bra(ring.mul(ring.var(size_t{1}), ring.var(size_t{2})),
               ring.mul(ring.var(size_t{0}),
                        ring.mul(ring.var(size_t{1}), ring.var(size_t{3})))));
    record("comm-formula h2", h2(bx, by),
           bra(ring.neg(ring.mul(ring.var(size_t{1}), ring.var(size_t{3}))),
               ring.mul(ring.mul(ring.var(size_t{0}), ring.var(size_t{1})),
                        ring.mul(ring.var(size_t{2}), ring.var(size_t{3})))));
    return out;
}

} // namespace hfold
