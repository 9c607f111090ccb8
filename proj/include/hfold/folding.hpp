#pragma once

#include "hfold/rootsys.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hfold {

struct FiberEntry {
    int beta;   // H root
    int alpha1; // source root with short image
    int alpha2; // source root with image tau * image(alpha1)
};

/// The linear bijection source -> GH target determined by the base images,
/// and the fold = scaling to the indivisible ray representative. Source is
/// one of A4, D6, E8; targets GH2/H2, GH3/H3, GH4/H4 respectively.
class FoldingMap {
public:
    const RootSystem* src;
    const RootSystem* gh;
    const RootSystem* h;

    explicit FoldingMap(Kind source_kind)
        : src(&RootSystem::get(source_kind))
    {
        auto tau = GoldenRat::tau(), one = GoldenRat(1);
        std::vector<std::vector<GoldenRat>> img;
        switch (source_kind) {
        case Kind::A4:
            gh = &RootSystem::get(Kind::GH2);
            h = &RootSystem::get(Kind::H2);
            // (d2,d3,d4,d5) -> rho2, tau rho3, tau rho2, rho3
            img = {{one, {}}, {{}, tau}, {tau, {}}, {{}, one}};
            break;
        case Kind::D6:
            gh = &RootSystem::get(Kind::GH3);
            h = &RootSystem::get(Kind::H3);
            // (d1..d6) -> rho1, rho2, tau rho3, tau rho2, rho3, tau rho1
            img = {{one, {}, {}}, {{}, one, {}},  {{}, {}, tau},
                   {{}, tau, {}}, {{}, {}, one}, {tau, {}, {}}};
            break;
        case Kind::E8:
            gh = &RootSystem::get(Kind::GH4);
            h = &RootSystem::get(Kind::H4);
            // (d1..d8) -> rho1, rho2, tau rho3, tau rho2, rho3, tau rho1,
            //             rho0, tau rho0
            img = {{{}, one, {}, {}}, {{}, {}, one, {}}, {{}, {}, {}, tau},
                   {{}, {}, tau, {}}, {{}, {}, {}, one}, {{}, tau, {}, {}},
                   {one, {}, {}, {}}, {tau, {}, {}, {}}};
            break;
        default:
            throw std::domain_error("FoldingMap: source must be A4, D6 or E8");
        }
        for (auto& v : img)
            v.resize(h->space_dim);
        base_images_ = std::move(img);

        // images of all source roots, and the inverse dictionary
        goldfold_.assign(src->size(), -1);
        preimage_.assign(gh->size(), -1);
        for (int r = 0; r < static_cast<int>(src->size()); ++r) {
            std::vector<GoldenRat> v(h->space_dim);
            for (int p = 0; p < src->rank(); ++p) {
                const GoldenRat& c = src->base_coords[r][p];
                if (c.is_zero())
                    continue;
                for (int t = 0; t < h->space_dim; ++t)
                    v[t] += c * base_images_[p][t];
            }
            int idx = gh->index_of(v);
            if (idx < 0)
                throw std::logic_error("FoldingMap: image is not a GH root");
            if (preimage_[idx] != -1)
                throw std::logic_error("FoldingMap: goldfold not injective");
            goldfold_[r] = idx;
            preimage_[idx] = r;
        }

        fold_.assign(src->size(), -1);
        for (int r = 0; r < static_cast<int>(src->size()); ++r) {
            int g = goldfold_[r];
            auto v = gh->roots[g].c;
            if (!(gh->norm2(g) == GoldenRat(1))) {
                for (auto& x : v)
                    x = x / tau;
            }
            fold_[r] = h->index_of(v);
            if (fold_[r] < 0)
                throw std::logic_error("FoldingMap: fold image is not an H root");
        }
    }

    int goldfold(int src_root) const { return goldfold_[src_root]; }
    int fold(int src_root) const { return fold_[src_root]; }

    /// Source root whose golden image is the given GH root.
    int preimage(int gh_root) const { return preimage_[gh_root]; }

    bool image_is_short(int src_root) const
    {
        return gh->norm2(goldfold_[src_root]) == GoldenRat(1);
    }

    FiberEntry fiber(int h_root) const
    {
        auto tau = GoldenRat::tau();
        const auto& v = h->roots[h_root].c;
        std::vector<GoldenRat> vt(v);
        for (auto& x : vt)
            x *= tau;
        int g1 = gh->index_of(v), g2 = gh->index_of(vt);
        if (g1 < 0 || g2 < 0)
            throw std::logic_error("fiber: ray not present in GH system");
        return {h_root, preimage_[g1], preimage_[g2]};
    }

    /// u(s_beta) for an H root beta: the commuting pair of source
    /// reflections along the fiber. A word over the H base positions maps
    /// to the concatenation of its letters' images.
    std::pair<int, int> embed_weyl_reflection(int h_root) const
    {
        auto f = fiber(h_root);
        return {f.alpha1, f.alpha2};
    }

    /// Apply u(w) to a source root, w given as a word over H base positions.
    int apply_embedded_word(int src_root, const std::vector<int>& h_word) const
    {
        for (int l : h_word) {
            auto [a1, a2] = embed_weyl_reflection(h->base_index(l));
            src_root = src->reflect_idx(src_root, a1);
            src_root = src->reflect_idx(src_root, a2);
        }
        return src_root;
    }

    struct CompatibilityReport {
        long pairs_checked = 0;
        std::vector<std::string> violations;      // fold, real intervals
        std::vector<std::string> gh_violations;   // goldfold, crystallographic
        std::vector<std::string> cry_violations;  // fold, crystallographic (expected nonempty)
        long possys_checked = 0;
        std::vector<std::string> possys_violations;
        bool ok() const { return violations.empty() && gh_violations.empty(); }
    };

    /// Root-interval compatibility of the fold and of the golden fold, plus
    /// the positive-system hypothesis: every non-proportional target pair
    /// has its full preimage inside some positive system of the source.
    CompatibilityReport check_interval_compatibility() const
    {
        CompatibilityReport rep;
        int n = static_cast<int>(src->size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b || src->proportional(a, b))
                    continue;
                ++rep.pairs_checked;
                auto ivl = src->open_interval(a, b);
                int fa = fold_[a], fb = fold_[b];
                bool prop_h = (fa == fb || h->neg[fa] == fb);
                for (int r : ivl) {
                    if (!prop_h) {
                        auto hi = h->open_interval(fa, fb);
                        bool found = false;
                        for (int x : hi)
                            found = found || x == fold_[r];
                        found = found || fold_[r] == fa || fold_[r] == fb;
                        if (!found)
                            rep.violations.push_back("fold ]" + src->render_root(a) + "," +
                                                     src->render_root(b) + "[ at " +
                                                     src->render_root(r));
                    }
                }
                auto cry = src->cry_interval(a, b);
                int ga = goldfold_[a], gb = goldfold_[b];
                if (!gh->proportional(ga, gb)) {
                    auto ghi = gh->cry_interval(ga, gb);
                    for (int r : cry) {
                        bool found = false;
                        for (int x : ghi)
                            found = found || x == goldfold_[r];
                        if (!found)
                            rep.gh_violations.push_back("goldfold ]" + src->render_root(a) +
                                                        "," + src->render_root(b) + "[cry at " +
                                                        src->render_root(r));
                    }
                    // crystallographic compatibility of the fold itself is
                    // expected to fail; collect witnesses
                    if (!prop_h) {
                        auto hcry = h->cry_interval(fa, fb);
                        for (int r : cry) {
                            bool found = false;
                            for (int x : hcry)
                                found = found || x == fold_[r];
                            if (!found)
                                rep.cry_violations.push_back(
                                    "fold-cry ]" + src->render_root(a) + "," +
                                    src->render_root(b) + "[ at " + src->render_root(r));
                        }
                    }
                }
            }

        // positive-system hypothesis for the fold and the golden fold
        for (int fa = 0; fa < static_cast<int>(h->size()); ++fa)
            for (int fb = 0; fb < static_cast<int>(h->size()); ++fb) {
                if (fa == fb || h->proportional(fa, fb))
                    continue;
                ++rep.possys_checked;
                auto word = h->positivizing_word(fa, fb);
                // the preimage of the positive system Pi_H^{w^{-1}} is
                // Pi_X^{u(w)^{-1}}; check all four preimage roots land
                // positively when u(word) is applied
                auto f1 = fiber(fa), f2 = fiber(fb);
                for (int r : {f1.alpha1, f1.alpha2, f2.alpha1, f2.alpha2}) {
                    int moved = apply_embedded_word(r, word);
                    if (!src->positive[moved])
                        rep.possys_violations.push_back(
                            "possys " + h->render_root(fa) + "," + h->render_root(fb));
                }
            }
        return rep;
    }

private:
    std::vector<std::vector<GoldenRat>> base_images_;
    std::vector<int> goldfold_;
    std::vector<int> fold_;
    std::vector<int> preimage_;
};

} // namespace hfold
