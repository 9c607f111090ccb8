#pragma once

// Ring-generic Chevalley models: root elements as unipotent sparse
// matrices over any ring spec, twisted root isomorphisms, Weyl elements,
// folded root groups over R x R, and the peeling machinery that factors a
// unipotent element along an ordered root list by reading marker entries.

#include "hfold/chevrep.hpp"
#include "hfold/folding.hpp"
#include "hfold/matrix.hpp"
#include "hfold/parity.hpp"
#include "hfold/rings.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfold {

struct FactorisationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const ChevalleyRep& chevalley_rep(Kind k)
{
    static std::map<Kind, ChevalleyRep> cache;
    auto it = cache.find(k);
    if (it == cache.end())
        it = cache.emplace(k, ChevalleyRep(k)).first;
    return it->second;
}

inline const FoldingMap& folding_map(Kind k)
{
    static std::map<Kind, FoldingMap> cache;
    auto it = cache.find(k);
    if (it == cache.end())
        it = cache.emplace(k, FoldingMap(k)).first;
    return it->second;
}

/// Integer-level expansion of theta_beta(r,s) = x_{a1}(r) x_{a2}(s):
/// entries are monomials c * r^dr * s^ds with dr, ds <= 2. Precomputed per
/// H root so folded elements assemble without a matrix product.
struct FoldedEntry {
    int row, col, val;
    std::uint8_t dr, ds;
};

class FoldedRep {
public:
    std::vector<std::vector<FoldedEntry>> entries; // per H root

    FoldedRep(const ChevalleyRep& rep, const FoldingMap& fold)
    {
        const RootSystem& h = *fold.h;
        entries.resize(h.size());
        int dim = rep.dim;
        for (int beta = 0; beta < static_cast<int>(h.size()); ++beta) {
            auto fe = fold.fiber(beta);
            // dense scratch of polynomial entries in (dr, ds)
            std::map<std::pair<int, int>, std::array<int, 9>> acc;
            auto key_of = [](int dr, int ds) { return dr * 3 + ds; };
            auto add = [&](int r, int c, int dr, int ds, int v) {
                if (v)
                    acc[{r, c}][key_of(dr, ds)] += v;
            };
            auto put_mat = [&](const RootMatrixData& m, bool second) {
                for (const auto& e : m.linear)
                    add(e.row, e.col, second ? 0 : 1, second ? 1 : 0, e.val);
                for (const auto& e : m.quadratic)
                    add(e.row, e.col, second ? 0 : 2, second ? 2 : 0, e.val);
            };
            const auto& m1 = rep.mats[fe.alpha1];
            const auto& m2 = rep.mats[fe.alpha2];
            // (I + L1 + Q1)(I + L2 + Q2)
            put_mat(m1, false);
            put_mat(m2, true);
            auto cross = [&](const std::vector<IntEntry>& x, int dxr, int dxs,
                             const std::vector<IntEntry>& y, int dyr, int dys) {
                for (const auto& ex : x)
                    for (const auto& ey : y)
                        if (ex.col == ey.row)
                            add(ex.row, ey.col, dxr + dyr, dxs + dys, ex.val * ey.val);
            };
            cross(m1.linear, 1, 0, m2.linear, 0, 1);
            cross(m1.linear, 1, 0, m2.quadratic, 0, 2);
            cross(m1.quadratic, 2, 0, m2.linear, 0, 1);
            cross(m1.quadratic, 2, 0, m2.quadratic, 0, 2);
            auto& out = entries[beta];
            for (const auto& [rc, poly] : acc)
                for (int dr = 0; dr <= 2; ++dr)
                    for (int ds = 0; ds <= 2; ++ds)
                        if (poly[key_of(dr, ds)])
                            out.push_back(FoldedEntry{rc.first, rc.second,
                                                      poly[key_of(dr, ds)],
                                                      static_cast<std::uint8_t>(dr),
                                                      static_cast<std::uint8_t>(ds)});
            (void)dim;
        }
    }
};

inline const FoldedRep& folded_rep(Kind k)
{
    static std::map<Kind, FoldedRep> cache;
    auto it = cache.find(k);
    if (it == cache.end())
        it = cache.emplace(k, FoldedRep(chevalley_rep(k), folding_map(k))).first;
    return it->second;
}

/// Twist given as signs on the source roots, even under negation.
inline std::vector<int> twist_from_set(const RootSystem& s, const std::vector<int>& pos_roots)
{
    std::vector<int> sig(s.size(), 1);
    for (int r : pos_roots) {
        sig[r] = -1;
        sig[s.neg[r]] = -1;
    }
    return sig;
}

template <CommutativeRing R>
class ChevalleyModel {
public:
    using Elem = typename R::Elem;
    using Mat = SparseMatrix<R>;

    const ChevalleyRep* rep;
    const FoldingMap* fold;
    const FoldedRep* folded_;
    R ring;
    std::vector<int> twist; // per source root

    ChevalleyModel(Kind k, R rg, std::vector<int> twist_signs = {})
        : rep(&chevalley_rep(k)), fold(&folding_map(k)), folded_(&folded_rep(k)),
          ring(std::move(rg)), twist(std::move(twist_signs))
    {
        if (twist.empty())
            twist.assign(rep->sys->size(), 1);
        if (twist.size() != rep->sys->size())
            throw std::domain_error("ChevalleyModel: twist size mismatch");
    }

    const RootSystem& src() const { return *rep->sys; }
    const RootSystem& h() const { return *fold->h; }
    int dim() const { return rep->dim; }

    Mat identity() const { return Mat::identity(ring, rep->dim); }

    /// Twisted root element x_xi(r).
    Mat root_elem(int xi, const Elem& r) const
    {
        Elem v = twist[xi] < 0 ? ring.neg(r) : r;
        Mat m = identity();
        auto scaled = [&](int val, const Elem& u) {
            if (val == 1)
                return u;
            if (val == -1)
                return ring.neg(u);
            return ring.mul(ring.from_int(val), u);
        };
        for (const auto& e : rep->mats[xi].linear)
            m.add_to(ring, e.row, e.col, scaled(e.val, v));
        if (!rep->mats[xi].quadratic.empty()) {
            Elem v2 = ring.mul(v, v);
            for (const auto& e : rep->mats[xi].quadratic)
                m.add_to(ring, e.row, e.col, scaled(e.val, v2));
        }
        return m;
    }

    /// w_xi(r) = x_{-xi}(-r^{-1}) x_xi(r) x_{-xi}(-r^{-1}); requires a unit.
    Mat weyl_elem(int xi, const Elem& r) const
    {
        auto inv = ring.invert(r);
        if (!inv)
            throw std::domain_error("weyl_elem: argument is not a unit");
        Mat a = root_elem(src().neg[xi], ring.neg(*inv));
        Mat b = root_elem(xi, r);
        return mul(ring, mul(ring, a, b), a);
    }

    /// theta_beta(r, s) = x_{alpha1}(r) x_{alpha2}(s) along the fiber order,
    /// assembled from the precomputed integer expansion.
    Mat folded_elem(int h_root, const Elem& r, const Elem& s) const
    {
        auto fe = fold->fiber(h_root);
        Elem rr = twist[fe.alpha1] < 0 ? ring.neg(r) : r;
        Elem ss = twist[fe.alpha2] < 0 ? ring.neg(s) : s;
        // powers r^dr s^ds for dr, ds <= 2
        std::array<std::array<Elem, 3>, 3> pw{};
        std::array<std::array<bool, 3>, 3> have{};
        auto power = [&](int dr, int ds) -> const Elem& {
            if (!have[dr][ds]) {
                Elem v = ring.one();
                for (int k = 0; k < dr; ++k)
                    v = ring.mul(v, rr);
                for (int k = 0; k < ds; ++k)
                    v = ring.mul(v, ss);
                pw[dr][ds] = std::move(v);
                have[dr][ds] = true;
            }
            return pw[dr][ds];
        };
        Mat m = identity();
        for (const auto& e : folded_->entries[h_root]) {
            const Elem& p = power(e.dr, e.ds);
            if (e.val == 1)
                m.add_to(ring, e.row, e.col, p);
            else if (e.val == -1)
                m.add_to(ring, e.row, e.col, ring.neg(p));
            else
                m.add_to(ring, e.row, e.col, ring.mul(ring.from_int(e.val), p));
        }
        return m;
    }

    /// w_beta(r, s) = w_{alpha1}(r) w_{alpha2}(s); requires units.
    Mat folded_weyl(int h_root, const Elem& r, const Elem& s) const
    {
        auto fe = fold->fiber(h_root);
        return mul(ring, weyl_elem(fe.alpha1, r), weyl_elem(fe.alpha2, s));
    }

    /// Marker entry of a source root: a linear coefficient position with
    /// value +-1. Distinct roots never share entry positions (the position
    /// weight difference determines the root), so reading a marker during
    /// peeling sees only this root's coefficient plus chain terms, which
    /// the peel orders exclude.
    const IntEntry& marker(int xi) const
    {
        for (const auto& e : rep->mats[xi].linear)
            if (e.val == 1 || e.val == -1)
                return e;
        throw std::logic_error("marker: no unit entry");
    }

    /// Coefficient of the leading root factor, in the twisted
    /// parametrization.
    Elem read_coefficient(const Mat& m, int xi) const
    {
        const auto& e = marker(xi);
        Elem raw = m.get(ring, e.row, e.col);
        if (e.row == e.col)
            raw = ring.sub(raw, ring.one());
        int sign = e.val * twist[xi];
        return sign < 0 ? ring.neg(raw) : raw;
    }

    /// Factor m = prod x_{order[i]}(t_i) in the given order; throws
    /// FactorisationError if the residual is not the identity at the end.
    std::vector<Elem> peel(Mat m, const std::vector<int>& order) const
    {
        std::vector<Elem> out;
        out.reserve(order.size());
        for (int xi : order) {
            Elem t = read_coefficient(m, xi);
            if (!ring.is_zero(t))
                m = mul(ring, root_elem(xi, ring.neg(t)), m);
            out.push_back(std::move(t));
        }
        if (!is_identity(ring, m))
            throw FactorisationError("peel: residual is not the identity");
        return out;
    }

    /// Factor m = prod theta_{h_order[i]}(r_i, s_i) in the given H-root
    /// order (each theta peeled short-then-long along its fiber).
    std::vector<std::pair<Elem, Elem>> peel_h(Mat m, const std::vector<int>& h_order) const
    {
        std::vector<std::pair<Elem, Elem>> out;
        out.reserve(h_order.size());
        for (int hr : h_order) {
            auto fe = fold->fiber(hr);
            Elem t1 = read_coefficient(m, fe.alpha1);
            if (!ring.is_zero(t1))
                m = mul(ring, root_elem(fe.alpha1, ring.neg(t1)), m);
            Elem t2 = read_coefficient(m, fe.alpha2);
            if (!ring.is_zero(t2))
                m = mul(ring, root_elem(fe.alpha2, ring.neg(t2)), m);
            out.emplace_back(std::move(t1), std::move(t2));
        }
        if (!is_identity(ring, m))
            throw FactorisationError("peel_h: residual is not the identity");
        return out;
    }

    Mat commutator(const Mat& g, const Mat& g_inv, const Mat& h, const Mat& h_inv) const
    {
        return mul(ring, mul(ring, mul(ring, g_inv, h_inv), g), h);
    }

    /// [theta_zeta(x), theta_xi(y)] peeled along the interval ordering of
    /// ]zeta, xi[ starting from zeta.
    std::vector<std::pair<Elem, Elem>>
    extract_commutator(int zeta, int xi, const std::pair<Elem, Elem>& x,
                       const std::pair<Elem, Elem>& y) const
    {
        Mat g = folded_elem(zeta, x.first, x.second);
        Mat gi = folded_elem(zeta, ring.neg(x.first), ring.neg(x.second));
        Mat hm = folded_elem(xi, y.first, y.second);
        Mat hi = folded_elem(xi, ring.neg(y.first), ring.neg(y.second));
        Mat k = commutator(g, gi, hm, hi);
        return peel_h(std::move(k), h().open_interval(zeta, xi));
    }

    /// Source-level commutator [x_a(r), x_b(s)] peeled along the
    /// crystallographic interval (at most one root in a simply-laced
    /// system).
    std::vector<Elem> extract_commutator_x(int a, int b, const Elem& r, const Elem& s,
                                           const std::vector<int>& support) const
    {
        Mat g = root_elem(a, r), gi = root_elem(a, ring.neg(r));
        Mat hm = root_elem(b, s), hi = root_elem(b, ring.neg(s));
        Mat k = commutator(g, gi, hm, hi);
        return peel(std::move(k), support);
    }

    /// Conjugate theta_beta(r, s) by a precomputed Weyl pair (w, w_inv) for
    /// the H root rho and solve for the sign pair; throws if no signs fit.
    ParityValue parity_under(int beta, int rho_h, const Mat& w, const Mat& w_inv,
                             const Elem& r, const Elem& s) const
    {
        Mat m = mul(ring, mul(ring, w_inv, folded_elem(beta, r, s)), w);
        int target = h().reflect_idx(beta, rho_h);
        for (int e1 : {1, -1})
            for (int e2 : {1, -1}) {
                Mat cand = folded_elem(target, e1 < 0 ? ring.neg(r) : r,
                                       e2 < 0 ? ring.neg(s) : s);
                if (m == cand)
                    return ParityValue{e1, e2};
            }
        throw FactorisationError("parity_under: no sign pair fits at root " +
                                 h().render_root(beta));
    }
};

/// Extremal peel order for the full positive system of the target: H roots
/// sorted by an exact generic linear functional of their (short) GH
/// coordinates, ascending. The minimal remaining root is never a positive
/// combination of the others, which keeps marker reads clean.
inline std::vector<int> extremal_positive_order(const RootSystem& h)
{
    struct Key {
        GoldenRat v;
        int root;
    };
    std::vector<Key> keys;
    for (int r = 0; r < static_cast<int>(h.size()); ++r) {
        if (!h.positive[r])
            continue;
        GoldenRat acc, w(1);
        for (int t = 0; t < h.space_dim; ++t) {
            acc += w * h.roots[r].c[t];
            w *= GoldenRat(64);
        }
        keys.push_back({acc, r});
    }
    std::sort(keys.begin(), keys.end(),
              [](const Key& a, const Key& b) { return compare(a.v, b.v) < 0; });
    std::vector<int> out;
    for (auto& k : keys)
        out.push_back(k.root);
    return out;
}

} // namespace hfold
