#pragma once

// The standard commutation maps on R x R: the full formula table for pairs
// inside the base planes (A2 base pairs and the H2-quintuple of
// (rho2, rho3)), exposed both as concrete formulas over a pair ring and as
// uninterpreted symbols over a term algebra. The rewriting rules and the
// identity checks consume them through a provider interface.

#include "hfold/rings.hpp"
#include "hfold/rootsys.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfold {

/// Commutation maps for ordered pairs within the quintuple
/// (alpha, beta, gamma, delta, eps) of the H2-pair (rho2, rho3), the
/// superscript letter being the interval position, plus the two A2
/// base-pair formulas.
enum class PsiTag : std::uint8_t {
    A2POS, A2NEG,                            // (ac, bd) and (-ac, -bd)
    AG, GA, BD, DB, GE, EG,                  // single-interval, H2 plane
    AD_B, DA_B, AD_G, DA_G,                  // (alpha, delta) pairs
    BE_G, EB_G, BE_D, EB_D,                  // (beta, eps) pairs
    AE_B, EA_B, AE_G, EA_G, AE_D, EA_D,      // (alpha, eps) pairs
};

inline std::string psi_tag_name(PsiTag t)
{
    switch (t) {
    case PsiTag::A2POS: return "a2pos";
    case PsiTag::A2NEG: return "a2neg";
    case PsiTag::AG: return "psi_{alpha,gamma}";
    case PsiTag::GA: return "psi_{gamma,alpha}";
    case PsiTag::BD: return "psi_{beta,delta}";
    case PsiTag::DB: return "psi_{delta,beta}";
    case PsiTag::GE: return "psi_{gamma,eps}";
    case PsiTag::EG: return "psi_{eps,gamma}";
    case PsiTag::AD_B: return "psi_{alpha,delta}^beta";
    case PsiTag::DA_B: return "psi_{delta,alpha}^beta";
    case PsiTag::AD_G: return "psi_{alpha,delta}^gamma";
    case PsiTag::DA_G: return "psi_{delta,alpha}^gamma";
    case PsiTag::BE_G: return "psi_{beta,eps}^gamma";
    case PsiTag::EB_G: return "psi_{eps,beta}^gamma";
    case PsiTag::BE_D: return "psi_{beta,eps}^delta";
    case PsiTag::EB_D: return "psi_{eps,beta}^delta";
    case PsiTag::AE_B: return "psi_{alpha,eps}^beta";
    case PsiTag::EA_B: return "psi_{eps,alpha}^beta";
    case PsiTag::AE_G: return "psi_{alpha,eps}^gamma";
    case PsiTag::EA_G: return "psi_{eps,alpha}^gamma";
    case PsiTag::AE_D: return "psi_{alpha,eps}^delta";
    case PsiTag::EA_D: return "psi_{eps,alpha}^delta";
    }
    return "?";
}

/// Concrete standard formulas with x = (a,b), y = (c,d).
template <CommutativeRing R>
typename PairRing<R>::Elem eval_psi(const PairRing<R>& S, PsiTag t,
                                    const typename PairRing<R>::Elem& x,
                                    const typename PairRing<R>::Elem& y)
{
    const R& b = S.base;
    const auto &a1 = x.first, &a2 = x.second, &c1 = y.first, &c2 = y.second;
    auto mk = [&](typename R::Elem l, typename R::Elem r) {
        return S.make(std::move(l), std::move(r));
    };
    switch (t) {
    case PsiTag::A2POS: return mk(b.mul(a1, c1), b.mul(a2, c2));
    case PsiTag::A2NEG: return mk(b.neg(b.mul(a1, c1)), b.neg(b.mul(a2, c2)));
    case PsiTag::AG:
    case PsiTag::DB:
    case PsiTag::GE: return mk(b.zero(), b.mul(a1, c1)); // (0, ac)
    case PsiTag::GA:
    case PsiTag::BD:
    case PsiTag::EG: return mk(b.zero(), b.neg(b.mul(a1, c1))); // (0, -ac)
    case PsiTag::AD_B:
    case PsiTag::DA_G: return mk(b.zero(), b.neg(b.mul(a2, c1))); // (0, -bc)
    case PsiTag::DA_B:
    case PsiTag::AD_G: return mk(b.zero(), b.mul(a1, c2)); // (0, ad)
    case PsiTag::BE_G:
    case PsiTag::EB_D: return mk(b.zero(), b.mul(a2, c1)); // (0, bc)
    case PsiTag::EB_G:
    case PsiTag::BE_D: return mk(b.zero(), b.neg(b.mul(a1, c2))); // (0, -ad)
    case PsiTag::AE_B: // (bc, abd)
        return mk(b.mul(a2, c1), b.mul(a1, b.mul(a2, c2)));
    case PsiTag::EA_B: // (-ad, -bcd)
        return mk(b.neg(b.mul(a1, c2)), b.neg(b.mul(a2, b.mul(c1, c2))));
    case PsiTag::AE_G: // (-bd, abcd)
        return mk(b.neg(b.mul(a2, c2)), b.mul(b.mul(a1, a2), b.mul(c1, c2)));
    case PsiTag::EA_G: // (bd, -abcd)
        return mk(b.mul(a2, c2), b.neg(b.mul(b.mul(a1, a2), b.mul(c1, c2))));
    case PsiTag::AE_D: // (ad, -bcd)
        return mk(b.mul(a1, c2), b.neg(b.mul(a2, b.mul(c1, c2))));
    case PsiTag::EA_D: // (-bc, abd)
        return mk(b.neg(b.mul(a2, c1)), b.mul(a1, b.mul(a2, c2)));
    }
    throw std::logic_error("eval_psi: bad tag");
}

/// Lookup table keyed by root triples (zeta, xi, rho) of an H system:
/// every non-adjacent ordered pair within a base plane together with its
/// interval positions and formulas, in the reference print order. Pairs
/// outside the base planes are handled by Weyl transport elsewhere.
class StandardMaps {
public:
    const RootSystem* sys;

    struct Row {
        int zeta, xi, rho;
        PsiTag tag;
        std::string label;
    };
    std::vector<Row> rows;
    std::array<int, 5> quintuple{}; // (alpha, beta, gamma, delta, eps)

    explicit StandardMaps(const RootSystem& s) : sys(&s)
    {
        int rk = s.rank();
        if (rk < 3)
            throw std::domain_error("StandardMaps: H3 or H4 required");
        int rho1 = s.base_index(rk - 3), rho2 = s.base_index(rk - 2),
            rho3 = s.base_index(rk - 1);
        quintuple = s.h2_quintuple(rho2, rho3);
        int A = quintuple[0], B = quintuple[1], G = quintuple[2], D = quintuple[3],
            E = quintuple[4];

        if (rk == 4)
            add_a2(s.base_index(0), rho1, "psi_{rho0,rho1}", "psi_{rho1,rho0}");
        add_a2(rho1, rho2, "psi_{rho1,rho2}", "psi_{rho2,rho1}");

        add(A, G, B, PsiTag::AG);
        add(G, A, B, PsiTag::GA);
        add(B, D, G, PsiTag::BD);
        add(D, B, G, PsiTag::DB);
        add(G, E, D, PsiTag::GE);
        add(E, G, D, PsiTag::EG);
        add(A, D, B, PsiTag::AD_B);
        add(D, A, B, PsiTag::DA_B);
        add(A, D, G, PsiTag::AD_G);
        add(D, A, G, PsiTag::DA_G);
        add(B, E, G, PsiTag::BE_G);
        add(E, B, G, PsiTag::EB_G);
        add(B, E, D, PsiTag::BE_D);
        add(E, B, D, PsiTag::EB_D);
        add(A, E, B, PsiTag::AE_B);
        add(E, A, B, PsiTag::EA_B);
        add(A, E, G, PsiTag::AE_G);
        add(E, A, G, PsiTag::EA_G);
        add(A, E, D, PsiTag::AE_D);
        add(E, A, D, PsiTag::EA_D);
    }

    bool covers(int zeta, int xi) const
    {
        for (const auto& r : rows)
            if (r.zeta == zeta && r.xi == xi)
                return true;
        return false;
    }

    PsiTag tag_at(int zeta, int xi, int rho) const
    {
        for (const auto& r : rows)
            if (r.zeta == zeta && r.xi == xi && r.rho == rho)
                return r.tag;
        throw std::domain_error("StandardMaps: position not in the table");
    }

    template <CommutativeRing R>
    typename PairRing<R>::Elem psi(const PairRing<R>& S, int zeta, int xi, int rho,
                                   const typename PairRing<R>::Elem& x,
                                   const typename PairRing<R>::Elem& y) const
    {
        return eval_psi(S, tag_at(zeta, xi, rho), x, y);
    }

private:
    void add(int z, int x, int rho, PsiTag t)
    {
        rows.push_back(Row{z, x, rho, t, psi_tag_name(t)});
    }

    void add_a2(int z, int x, const std::string& fwd, const std::string& rev)
    {
        auto ivl = sys->open_interval(z, x);
        if (ivl.size() != 1)
            throw std::logic_error("StandardMaps: expected an A2 base pair");
        rows.push_back(Row{z, x, ivl[0], PsiTag::A2POS, fwd});
        rows.push_back(Row{x, z, ivl[0], PsiTag::A2NEG, rev});
    }
};

} // namespace hfold
