#pragma once

// Verification suites on the matrix models: commutation-map extraction
// against the standard table, parity-map computation, the twist searches
// that pin down the sign freedom in the models, square actions of Weyl
// elements, and the grading axioms.

#include "hfold/chevalley.hpp"
#include "hfold/poly.hpp"
#include "hfold/commmaps.hpp"
#include "hfold/standard_tables.hpp"
#include "hfold/util.hpp"

#include <bitset>
#include <cstdlib>
#include <mutex>
#include <random>
#include <optional>
#include <sstream>

namespace hfold {

struct CheckResult {
    std::string id;
    std::string anchor;
    bool pass = false;
    std::string witness;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    long failures() const
    {
        long n = 0;
        for (const auto& c : checks)
            n += !c.pass;
        return n;
    }
};

inline PolyRing abcd_ring() { return PolyRing({"a", "b", "c", "d"}); }

inline std::uint64_t trial_seed()
{
    const char* env = std::getenv("HFOLD_SEED");
    return env ? std::strtoull(env, nullptr, 10) : 0x5eed;
}

/// Model over Z[a,b,c,d] with symbolic first/second arguments.
template <CommutativeRing R>
std::pair<typename R::Elem, typename R::Elem> sym_pair_x(const R& ring)
{
    return {ring.var(size_t{0}), ring.var(size_t{1})};
}
template <CommutativeRing R>
std::pair<typename R::Elem, typename R::Elem> sym_pair_y(const R& ring)
{
    return {ring.var(size_t{2}), ring.var(size_t{3})};
}

/// Extract every commutation map listed in the standard table from the
/// model and compare with the formulas. An H4 model covers the whole
/// table; an H3 model covers the rows inside H3.
inline SuiteReport verify_commutation_rows(const ChevalleyModel<PolyRing>& model,
                                           const StandardMaps& maps)
{
    SuiteReport rep{"commaps"};
    const PolyRing& ring = model.ring;
    PairRing<PolyRing> S(ring);
    auto x = sym_pair_x(ring), y = sym_pair_y(ring);

    for (const auto& row : maps.rows) {
        CheckResult c;
        c.id = row.label;
        c.anchor = "commutator-table/" + row.label;
        try {
            auto ivl = model.h().open_interval(row.zeta, row.xi);
            auto got = model.extract_commutator(row.zeta, row.xi, x, y);
            bool pass = true;
            for (size_t i = 0; i < ivl.size(); ++i) {
                auto want = maps.psi(S, row.zeta, row.xi, ivl[i], x, y);
                if (!S.eq(got[i], want)) {
                    pass = false;
                    c.witness = "at " + model.h().render_root(ivl[i]) + ": got " +
                                S.to_string(got[i]) + ", formula " + S.to_string(want);
                }
            }
            c.pass = pass;
        } catch (const std::exception& ex) {
            c.pass = false;
            c.witness = ex.what();
        }
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

/// Compute the full parity table of the model by conjugating symbolic
/// folded elements with the base Weyl elements w_rho(1,1).
inline ParityTable compute_parity_table(Kind source_kind, const std::vector<int>& twist)
{
    PolyRing ring({"r", "s"});
    ChevalleyModel<PolyRing> model(source_kind, ring, twist);
    const RootSystem& h = model.h();
    ParityTable out(h);
    auto r = ring.var(size_t{0}), s = ring.var(size_t{1});
    for (int d = 0; d < h.rank(); ++d) {
        auto w = model.folded_weyl(h.base_index(d), ring.one(), ring.one());
        auto w_inv =
            model.folded_weyl(h.base_index(d), ring.neg(ring.one()), ring.neg(ring.one()));
        for (int beta = 0; beta < static_cast<int>(h.size()); ++beta) {
            if (!h.positive[beta])
                continue;
            out.set(beta, d, model.parity_under(beta, h.base_index(d), w, w_inv, r, s));
        }
    }
    return out;
}

inline SuiteReport compare_parity_tables(const ParityTable& got, const ParityTable& want,
                                         const std::string& suite)
{
    SuiteReport rep{suite};
    const RootSystem& s = *want.sys;
    for (int r = 0; r < static_cast<int>(s.size()); ++r) {
        if (!s.positive[r])
            continue;
        for (int d = 0; d < s.rank(); ++d) {
            CheckResult c;
            c.id = "eta(" + s.render_root(r) + ", rho" +
                   std::to_string(d + (s.rank() == 4 ? 0 : 1)) + ")";
            c.anchor = "parity-table";
            c.pass = got.at(r, d) == want.at(r, d);
            if (!c.pass)
                c.witness = "got " + got.at(r, d).str() + ", table " + want.at(r, d).str();
            rep.checks.push_back(std::move(c));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// twist searches

/// All subsets of the D6 base whose twist reproduces the full commutation
/// table (in particular a sign-free psi_{rho1,rho2}). The reference text
/// names delta6 in one place and delta1 in another; this search settles it.
inline std::vector<std::vector<int>> resolve_d6_twist()
{
    std::vector<std::vector<int>> found;
    const RootSystem& d6 = RootSystem::get(Kind::D6);
    StandardMaps maps(RootSystem::get(Kind::H3));
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < 6; ++i)
            if (mask & (1 << i))
                subset.push_back(d6.base_index(i));
        auto twist = twist_from_set(d6, subset);
        PolyRing ring = abcd_ring();
        ChevalleyModel<PolyRing> model(Kind::D6, ring, twist);
        auto rep = verify_commutation_rows(model, maps);
        if (rep.ok())
            found.push_back(subset);
    }
    return found;
}

/// Conjugation sign data of the untwisted model at the source level:
/// x_gamma(r)^{w_a(t)} = x_{gamma^{s_a}}(sign * r) for t = 1 and t = -1.
struct XParityData {
    // indexed [a-slot][gamma]: sign at t=+1 and exponent flip bit for t=-1
    std::vector<std::vector<int>> sign_pos;
    std::vector<std::vector<int>> flip;
    std::vector<int> a_roots; // the fiber roots of the H base
};

template <CommutativeRing R>
int conjugation_sign(const ChevalleyModel<R>& model, int gamma, int target,
                     const SparseMatrix<R>& w, const SparseMatrix<R>& w_inv,
                     const typename R::Elem& r)
{
    auto m = mul(model.ring, mul(model.ring, w_inv, model.root_elem(gamma, r)), w);
    auto t = model.read_coefficient(m, target);
    if (model.ring.eq(t, r)) {
        // strip and double-check the residual
        auto res = mul(model.ring, model.root_elem(target, model.ring.neg(t)), m);
        if (is_identity(model.ring, res))
            return 1;
    } else if (model.ring.eq(t, model.ring.neg(r))) {
        auto res = mul(model.ring, model.root_elem(target, model.ring.neg(t)), m);
        if (is_identity(model.ring, res))
            return -1;
    }
    throw FactorisationError("conjugation_sign: image is not a signed root element");
}

inline XParityData compute_x_parity_data(Kind source_kind)
{
    PolyRing ring({"r"});
    ChevalleyModel<PolyRing> model(source_kind, ring, {});
    const RootSystem& src = model.src();
    const RootSystem& h = model.h();
    XParityData out;
    for (int d = 0; d < h.rank(); ++d) {
        auto fe = model.fold->fiber(h.base_index(d));
        out.a_roots.push_back(fe.alpha1);
        out.a_roots.push_back(fe.alpha2);
    }
    auto rvar = ring.var(size_t{0});
    out.sign_pos.assign(out.a_roots.size(), std::vector<int>(src.size(), 0));
    out.flip.assign(out.a_roots.size(), std::vector<int>(src.size(), 0));
    for (size_t ai = 0; ai < out.a_roots.size(); ++ai) {
        int a = out.a_roots[ai];
        auto wp = model.weyl_elem(a, ring.one());
        auto wp_inv = model.weyl_elem(a, ring.neg(ring.one()));
        for (int g = 0; g < static_cast<int>(src.size()); ++g) {
            int target = src.reflect_idx(g, a);
            int sp = conjugation_sign(model, g, target, wp, wp_inv, rvar);
            // t = -1 swaps w and its inverse
            int sn = conjugation_sign(model, g, target, wp_inv, wp, rvar);
            out.sign_pos[ai][g] = sp;
            out.flip[ai][g] = sp == sn ? 0 : 1;
        }
    }
    return out;
}

/// Solve for a diagonal sign twist of the E8 model that reproduces the
/// embedded H4 parity table and the sign-free A2 commutation rows. The
/// constraints are affine over GF(2) in the per-ray sign exponents.
inline std::optional<std::vector<int>> solve_e8_twist()
{
    const RootSystem& e8 = RootSystem::get(Kind::E8);
    const RootSystem& h4 = RootSystem::get(Kind::H4);
    const FoldingMap& fold = folding_map(Kind::E8);
    const ChevalleyRep& rep = chevalley_rep(Kind::E8);
    auto xdata = compute_x_parity_data(Kind::E8);
    const ParityTable& table = standard_parity(Kind::H4);

    // unknown exponent per positive root
    std::vector<int> pos_index(e8.size(), -1);
    std::vector<int> pos_roots;
    for (int r = 0; r < static_cast<int>(e8.size()); ++r)
        if (e8.positive[r]) {
            pos_index[r] = static_cast<int>(pos_roots.size());
            pos_roots.push_back(r);
        }
    auto var_of = [&](int root) {
        return pos_index[e8.positive[root] ? root : e8.neg[root]];
    };
    auto a_slot = [&](int root) {
        for (size_t i = 0; i < xdata.a_roots.size(); ++i)
            if (xdata.a_roots[i] == root)
                return static_cast<int>(i);
        throw std::logic_error("a_slot: not a base fiber root");
    };

    using Row = std::bitset<121>; // 120 unknowns + constant column
    std::vector<Row> rows;
    auto add_equation = [&](const std::vector<int>& vars, int rhs_exponent) {
        Row row;
        for (int v : vars)
            row.flip(static_cast<size_t>(v));
        if (rhs_exponent & 1)
            row.set(120);
        rows.push_back(row);
    };

    // parity constraints: one chain per component of eta(beta, delta)
    for (int beta = 0; beta < static_cast<int>(h4.size()); ++beta) {
        if (!h4.positive[beta])
            continue;
        for (int d = 0; d < 4; ++d) {
            auto dfiber = fold.fiber(h4.base_index(d));
            int a1 = dfiber.alpha1, a2 = dfiber.alpha2;
            int s1 = a_slot(a1), s2 = a_slot(a2);
            auto bfiber = fold.fiber(beta);
            auto target = table.at(beta, d);
            for (int comp = 0; comp < 2; ++comp) {
                int g0 = comp == 0 ? bfiber.alpha1 : bfiber.alpha2;
                int g1 = e8.reflect_idx(g0, a1);
                int g2 = e8.reflect_idx(g1, a2);
                int base_sign = xdata.sign_pos[s1][g0] * xdata.sign_pos[s2][g1];
                int want = comp == 0 ? target.eps : target.epsbar;
                std::vector<int> vars{var_of(g0), var_of(g2)};
                if (xdata.flip[s1][g0])
                    vars.push_back(var_of(a1));
                if (xdata.flip[s2][g1])
                    vars.push_back(var_of(a2));
                add_equation(vars, (base_sign == want) ? 0 : 1);
            }
        }
    }

    // sign-free A2 rows: [x(fiber(rho_i)_k), x(fiber(rho_j)_k)] = x(sum)(+rs)
    auto add_comm_equation = [&](int hz, int hx) {
        auto fz = fold.fiber(h4.base_index(hz)), fx = fold.fiber(h4.base_index(hx));
        for (auto [u, v] : {std::pair{fz.alpha1, fx.alpha1}, {fz.alpha2, fx.alpha2}}) {
            int sum = rep.sum_root(u, v);
            if (sum < 0)
                throw std::logic_error("add_comm_equation: fiber sum not a root");
            int c0 = rep.structure_sign(u, v);
            add_equation({var_of(u), var_of(v), var_of(sum)}, c0 == 1 ? 0 : 1);
        }
    };
    add_comm_equation(0, 1); // (rho0, rho1)
    add_comm_equation(1, 2); // (rho1, rho2)

    // gaussian elimination over GF(2)
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < 120 && rank < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r].test(static_cast<size_t>(col))) {
                sel = r;
                break;
            }
        if (sel < 0)
            continue;
        std::swap(rows[rank], rows[sel]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && rows[r].test(static_cast<size_t>(col)))
                rows[r] ^= rows[rank];
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (rows[r].test(120))
            return std::nullopt; // inconsistent
    std::vector<int> exponent(120, 0);
    for (int r = 0; r < rank; ++r)
        exponent[pivot_col[r]] = rows[r].test(120) ? 1 : 0;

    std::vector<int> twist(e8.size(), 1);
    for (int i = 0; i < 120; ++i)
        if (exponent[i]) {
            twist[pos_roots[i]] = -1;
            twist[e8.neg[pos_roots[i]]] = -1;
        }
    return twist;
}

inline bool e8_twist_aligned()
{
    static const bool aligned = solve_e8_twist().has_value();
    return aligned;
}

/// The resolved model twists: D6 by subset search, E8 by the GF(2) solve,
/// verified against the embedded tables before use.
inline const std::vector<int>& model_twist(Kind k)
{
    static std::vector<int> d6, e8;
    static std::once_flag d6_once, e8_once;
    if (k == Kind::D6) {
        std::call_once(d6_once, [] {
            auto subsets = resolve_d6_twist();
            if (subsets.empty())
                throw std::logic_error("model_twist: no D6 base twist matches the table");
            d6 = twist_from_set(RootSystem::get(Kind::D6), subsets.front());
        });
        return d6;
    }
    if (k == Kind::E8) {
        std::call_once(e8_once, [] {
            auto solved = solve_e8_twist();
            // with no aligning twist the untwisted model still carries a
            // valid coordinatisation; callers fall back to structural checks
            e8 = solved ? *solved
                        : std::vector<int>(RootSystem::get(Kind::E8).size(), 1);
        });
        return e8;
    }
    if (k == Kind::A4) {
        static std::vector<int> a4(RootSystem::get(Kind::A4).size(), 1);
        return a4;
    }
    throw std::domain_error("model_twist: A4, D6 or E8 only");
}

// ---------------------------------------------------------------------------
// square actions (AC12)

// ---------------------------------------------------------------------------
// grading axioms (commutator containment, Weyl elements, positivity)

struct GradingOptions {
    int jobs = 0;
    long pair_stride = 1;
    bool product_injectivity = true;
};

/// Commutator containment for every non-proportional H pair (the peel
/// succeeding is the containment certificate), Weyl conjugation for every
/// H root, and injectivity of the positive-system product map on symbolic
/// coordinates along an extremal ordering.
template <size_t NV>
SuiteReport verify_grading_impl(Kind source_kind, const GradingOptions& opt)
{
    SuiteReport rep{"grading"};
    std::mutex mu;
    PolyRing ring = abcd_ring();
    ChevalleyModel<PolyRing> model(source_kind, ring, model_twist(source_kind));
    const RootSystem& h = model.h();
    auto x = sym_pair_x(ring), y = sym_pair_y(ring);

    std::vector<std::pair<int, int>> pairs;
    {
        long count = 0;
        for (int a = 0; a < static_cast<int>(h.size()); ++a)
            for (int b = 0; b < static_cast<int>(h.size()); ++b) {
                if (a == b || h.proportional(a, b))
                    continue;
                if (count++ % opt.pair_stride == 0)
                    pairs.emplace_back(a, b);
            }
    }
    parallel_for(static_cast<long>(pairs.size()), [&](long i) {
        auto [a, b] = pairs[i];
        CheckResult c;
        c.id = "containment " + h.render_root(a) + " | " + h.render_root(b);
        c.anchor = "grading/commutator-containment";
        try {
            model.extract_commutator(a, b, x, y);
            c.pass = true;
        } catch (const std::exception& ex) {
            c.pass = false;
            c.witness = ex.what();
        }
        std::lock_guard<std::mutex> lk(mu);
        rep.checks.push_back(std::move(c));
    }, opt.jobs);

    {
        PolyRing rs({"r", "s"});
        ChevalleyModel<PolyRing> m2(source_kind, rs, model_twist(source_kind));
        auto r = rs.var(size_t{0}), s = rs.var(size_t{1});
        for (int rho = 0; rho < static_cast<int>(h.size()); ++rho) {
            auto w = m2.folded_weyl(rho, rs.one(), rs.one());
            auto wi = m2.folded_weyl(rho, rs.neg(rs.one()), rs.neg(rs.one()));
            CheckResult c;
            c.id = "weyl " + h.render_root(rho);
            c.anchor = "grading/weyl-element";
            c.pass = true;
            try {
                if (!is_identity(rs, mul(rs, w, wi)))
                    throw FactorisationError("inverse mismatch");
                for (int beta = 0; beta < static_cast<int>(h.size()); ++beta)
                    m2.parity_under(beta, rho, w, wi, r, s);
            } catch (const std::exception& ex) {
                c.pass = false;
                c.witness = ex.what();
            }
            rep.checks.push_back(std::move(c));
        }
    }

    if (opt.product_injectivity && source_kind != Kind::E8) {
        // full symbolic certificate: the peel recovers every coordinate of
        // the positive-system product
        CheckResult c;
        c.id = "positive product map injective";
        c.anchor = "grading/product-map";
        try {
            std::vector<std::string> names;
            auto order = extremal_positive_order(h);
            for (size_t i = 0; i < order.size(); ++i) {
                names.push_back("p" + std::to_string(i));
                names.push_back("q" + std::to_string(i));
            }
            PolyRingT<NV> big(names);
            ChevalleyModel<PolyRingT<NV>> m3(source_kind, big, model_twist(source_kind));
            auto prod = SparseMatrix<PolyRingT<NV>>::identity(big, m3.dim());
            for (size_t i = 0; i < order.size(); ++i)
                prod = mul(big, prod,
                           m3.folded_elem(order[i], big.var(2 * i), big.var(2 * i + 1)));
            auto peeled = m3.peel_h(std::move(prod), order);
            c.pass = true;
            for (size_t i = 0; i < order.size(); ++i)
                if (!big.eq(peeled[i].first, big.var(2 * i)) ||
                    !big.eq(peeled[i].second, big.var(2 * i + 1)))
                    c.pass = false;
        } catch (const std::exception& ex) {
            c.pass = false;
            c.witness = ex.what();
        }
        rep.checks.push_back(std::move(c));
    } else if (opt.product_injectivity) {
        // the adjoint E8 product of 120 symbolic factors does not fit in
        // memory; the extremal order makes every marker read clean, so the
        // peel is a left inverse, exercised here on exact integer rounds
        CheckResult c;
        c.id = "positive product map peel (integer rounds)";
        c.anchor = "grading/product-map";
        try {
            IntRing z;
            ChevalleyModel<IntRing> m3(source_kind, z, model_twist(source_kind));
            auto order = extremal_positive_order(h);
            std::mt19937_64 rng(trial_seed());
            std::uniform_int_distribution<long> d(-9, 9);
            c.pass = true;
            for (int round = 0; round < 5 && c.pass; ++round) {
                std::vector<std::pair<Integer, Integer>> vals;
                auto prod = SparseMatrix<IntRing>::identity(z, m3.dim());
                for (size_t i = 0; i < order.size(); ++i) {
                    vals.emplace_back(d(rng), d(rng));
                    prod = mul(z, prod,
                               m3.folded_elem(order[i], vals.back().first,
                                              vals.back().second));
                }
                auto peeled = m3.peel_h(std::move(prod), order);
                for (size_t i = 0; i < order.size(); ++i)
                    if (peeled[i].first != vals[i].first ||
                        peeled[i].second != vals[i].second)
                        c.pass = false;
            }
        } catch (const std::exception& ex) {
            c.pass = false;
            c.witness = ex.what();
        }
        rep.checks.push_back(std::move(c));
    }
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return rep;
}

inline SuiteReport verify_grading(Kind source_kind, const GradingOptions& opt = {})
{
    if (source_kind == Kind::E8)
        return verify_grading_impl<128>(source_kind, opt);
    return verify_grading_impl<32>(source_kind, opt);
}

/// Crystallographic relations for the GH-indexed family: every source
/// commutator factors over the crystallographic interval, and the tau-ray
/// pairs commute.
inline SuiteReport verify_gh_crystallographic(Kind source_kind, long pair_stride = 1,
                                              int jobs = 0)
{
    SuiteReport rep{"gh-crystallographic"};
    std::mutex mu;
    PolyRing ring({"r", "s"});
    ChevalleyModel<PolyRing> model(source_kind, ring, model_twist(source_kind));
    const RootSystem& src = model.src();
    const RootSystem& gh = *model.fold->gh;
    auto r = ring.var(size_t{0}), s = ring.var(size_t{1});

    std::vector<std::pair<int, int>> pairs;
    {
        long count = 0;
        for (int a = 0; a < static_cast<int>(src.size()); ++a)
            for (int b = 0; b < static_cast<int>(src.size()); ++b) {
                if (a == b || b == src.neg[a])
                    continue;
                if (count++ % pair_stride == 0)
                    pairs.emplace_back(a, b);
            }
    }
    parallel_for(static_cast<long>(pairs.size()), [&](long i) {
        auto [a, b] = pairs[i];
        int ga = model.fold->goldfold(a), gb = model.fold->goldfold(b);
        CheckResult c;
        c.id = "ghcry " + gh.render_root(ga) + " | " + gh.render_root(gb);
        c.anchor = "gh-family/crystallographic";
        try {
            std::vector<int> support;
            if (!gh.proportional(ga, gb))
                for (int gr : gh.cry_interval(ga, gb))
                    support.push_back(model.fold->preimage(gr));
            model.extract_commutator_x(a, b, r, s, support);
            c.pass = true;
        } catch (const std::exception& ex) {
            c.pass = false;
            c.witness = ex.what();
        }
        std::lock_guard<std::mutex> lk(mu);
        rep.checks.push_back(std::move(c));
    }, jobs);
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return rep;
}

/// The refinement [U_alpha, U_delta] <= U_{tau gamma} U_{tau beta}: both
/// extracted components land in the long part (left coordinates vanish).
inline SuiteReport verify_gh_refinement(Kind source_kind)
{
    SuiteReport rep{"gh-refinement"};
    PolyRing ring = abcd_ring();
    ChevalleyModel<PolyRing> model(source_kind, ring, model_twist(source_kind));
    const RootSystem& h = model.h();
    auto x = sym_pair_x(ring), y = sym_pair_y(ring);
    int rho2 = h.base_index(h.rank() - 2), rho3 = h.base_index(h.rank() - 1);
    auto q = h.h2_quintuple(rho2, rho3);
    CheckResult c;
    c.id = "refinement [U_alpha, U_delta]";
    c.anchor = "gh-family/refinement";
    try {
        auto vals = model.extract_commutator(q[0], q[3], x, y);
        c.pass = true;
        for (const auto& v : vals)
            if (!ring.is_zero(v.first)) {
                c.pass = false;
                c.witness = "short component " + ring.to_string(v.first);
            }
    } catch (const std::exception& ex) {
        c.pass = false;
        c.witness = ex.what();
    }
    rep.checks.push_back(std::move(c));
    return rep;
}

inline SuiteReport verify_square_actions()
{
    SuiteReport rep{"squareaction"};
    ModRing z5(5);
    ChevalleyModel<ModRing> model(Kind::D6, z5, model_twist(Kind::D6));
    const RootSystem& h3 = model.h();
    std::mutex mu;

    std::vector<std::pair<int, int>> pairs;
    for (int xi = 0; xi < static_cast<int>(h3.size()); ++xi)
        for (int zeta = 0; zeta < static_cast<int>(h3.size()); ++zeta)
            pairs.emplace_back(xi, zeta);

    parallel_for(static_cast<long>(pairs.size()), [&](long idx) {
        auto [xi, zeta] = pairs[idx];
        ParityValue expected;
        if (h3.proportional(xi, zeta)) {
            expected = ParityValue{1, 1};
        } else {
            switch (h3.classify_span(xi, zeta)) {
            case SpanType::A1xA1: expected = ParityValue{1, 1}; break;
            case SpanType::A2: expected = ParityValue{-1, -1}; break;
            default:
                expected = h3.position_of(xi, zeta) == Position::Involution
                               ? ParityValue{-1, 1}
                               : ParityValue{1, -1};
            }
        }
        bool pass = true;
        std::string witness;
        for (std::int64_t r = 1; r <= 4 && pass; ++r)
            for (std::int64_t s = 1; s <= 4 && pass; ++s) {
                auto w = model.folded_weyl(zeta, r, s);
                auto wi = model.folded_weyl(zeta, z5.neg(r), z5.neg(s));
                auto w2 = mul(z5, w, w);
                auto w2i = mul(z5, wi, wi);
                auto m1 = mul(z5, mul(z5, w2i, model.folded_elem(xi, 1, 0)), w2);
                auto m2 = mul(z5, mul(z5, w2i, model.folded_elem(xi, 0, 1)), w2);
                int eps = 0, epsbar = 0;
                for (int e : {1, -1}) {
                    if (m1 == model.folded_elem(xi, z5.from_int(e), 0))
                        eps = e;
                    if (m2 == model.folded_elem(xi, 0, z5.from_int(e)))
                        epsbar = e;
                }
                if (eps == 0 || epsbar == 0 ||
                    !(ParityValue{eps, epsbar} == expected)) {
                    pass = false;
                    witness = "(r,s)=(" + std::to_string(r) + "," + std::to_string(s) +
                              ") acts by (" + std::to_string(eps) + "," +
                              std::to_string(epsbar) + ")";
                }
            }
        CheckResult c;
        c.id = "square(" + h3.render_root(xi) + " | " + h3.render_root(zeta) + ")";
        c.anchor = "weyl-square-action";
        c.pass = pass;
        c.witness = witness;
        std::lock_guard<std::mutex> lk(mu);
        rep.checks.push_back(std::move(c));
    });
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return rep;
}

} // namespace hfold
