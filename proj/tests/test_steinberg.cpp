#include "hfold/steinberg.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hfold;

TEST_CASE("transported maps agree with the base table", "[steinberg]")
{
    const auto& tm = transported_maps(Kind::H3);
    const auto& h3 = *tm.h;
    PolyRing ring = abcd_ring();
    PairRing<PolyRing> S(ring);
    auto x = sym_pair_x(ring), y = sym_pair_y(ring);
    for (const auto& row : tm.maps.rows) {
        auto ivl = h3.open_interval(row.zeta, row.xi);
        auto got = tm.psi_all(S, row.zeta, row.xi, x, y);
        for (size_t i = 0; i < ivl.size(); ++i)
            CHECK(S.eq(got[i], tm.maps.psi(S, row.zeta, row.xi, ivl[i], x, y)));
    }
}

TEST_CASE("transport is word independent", "[steinberg]")
{
    auto rep = verify_transport_independence(Kind::H3);
    CHECK(rep.ok());
    auto rep4 = verify_transport_independence(Kind::H4, 23);
    CHECK(rep4.ok());
}

TEST_CASE("rho0 rho1 standard map", "[steinberg]")
{
    const auto& tm = transported_maps(Kind::H4);
    const auto& h4 = *tm.h;
    PolyRing ring = abcd_ring();
    PairRing<PolyRing> S(ring);
    auto x = sym_pair_x(ring), y = sym_pair_y(ring);
    auto got = tm.psi_all(S, h4.base_index(0), h4.base_index(1), x, y);
    REQUIRE(got.size() == 1);
    // (x1 y1, x2 y2)
    CHECK(ring.eq(got[0].first, ring.mul(x.first, y.first)));
    CHECK(ring.eq(got[0].second, ring.mul(x.second, y.second)));
}

TEST_CASE("negative pair formula from conjugation", "[steinberg]")
{
    // [theta_{-delta}(x), theta_gamma(y)] factors through (-eps, alpha, beta)
    // with the star-twisted h1/h2 formulas
    const auto& tm = transported_maps(Kind::H3);
    const auto& h3 = *tm.h;
    PolyRing ring = abcd_ring();
    PairRing<PolyRing> S(ring);
    auto x = sym_pair_x(ring), y = sym_pair_y(ring);
    auto q = h3.h2_quintuple(h3.base_index(1), h3.base_index(2));
    int A = q[0], B = q[1], G = q[2], D = q[3], E = q[4];

    auto ivl = h3.open_interval(h3.neg[D], G);
    REQUIRE(ivl.size() == 3);
    CHECK(ivl[0] == h3.neg[E]);
    CHECK(ivl[1] == A);
    CHECK(ivl[2] == B);

    auto got = tm.psi_all(S, h3.neg[D], G, x, y);
    auto xs = S.star(x);
    auto ny = S.neg(y);
    auto h1 = [&](const auto& u, const auto& v) { return eval_psi(S, PsiTag::AE_B, u, v); };
    auto h2 = [&](const auto& u, const auto& v) { return eval_psi(S, PsiTag::AE_G, u, v); };
    CHECK(S.eq(got[0], S.star(h1(xs, ny))));
    // the alpha factor carries a plain negation: the parity values
    // eta(gamma, rho2) * eta(delta, rho3) = (-1,-1) act without the
    // involution, and the matrix model confirms it below
    CHECK(S.eq(got[1], S.neg(h2(xs, ny))));
    CHECK(S.eq(got[2], S.neg(h1(y, xs))));

    // and the matrix model agrees
    ChevalleyModel<PolyRing> model(Kind::D6, ring, model_twist(Kind::D6));
    auto vals = model.extract_commutator(h3.neg[D], G, x, y);
    for (size_t i = 0; i < 3; ++i)
        CHECK(S.eq(vals[i], got[i]));
}

TEST_CASE("steinberg relations hold in the D6 model", "[steinberg]")
{
    auto rep = verify_steinberg_relations(Kind::D6);
    CHECK(rep.checks.size() == 870);
    CHECK(rep.ok());
}

TEST_CASE("steinberg relations hold in the E8 model (sampled)", "[steinberg]")
{
    SteinbergOptions opt;
    opt.sample_stride = 67;
    auto rep = verify_steinberg_relations(Kind::E8, opt);
    CHECK(rep.ok());
}

TEST_CASE("weyl parametrisation over Z/5", "[steinberg]")
{
    auto rep = verify_weyl_parametrisation(Kind::D6, RootSystem::get(Kind::H3).base_index(1));
    CHECK(rep.ok());
}

TEST_CASE("hall-witt instance in the D6 model", "[steinberg]")
{
    PolyRing ring({"u", "v"});
    ChevalleyModel<PolyRing> model(Kind::D6, ring, model_twist(Kind::D6));
    const auto& h3 = model.h();
    auto q = h3.h2_quintuple(h3.base_index(1), h3.base_index(2));
    auto u = ring.var(size_t{0}), v = ring.var(size_t{1});
    auto X = model.folded_elem(h3.neg[q[3]], ring.zero(), ring.one());
    auto Xi = model.folded_elem(h3.neg[q[3]], ring.zero(), ring.neg(ring.one()));
    auto Y = model.folded_elem(q[2], ring.zero(), u);
    auto Yi = model.folded_elem(q[2], ring.zero(), ring.neg(u));
    auto Z = model.folded_elem(h3.neg[q[0]], ring.zero(), v);
    auto Zi = model.folded_elem(h3.neg[q[0]], ring.zero(), ring.neg(v));

    auto conj = [&](const auto& g, const auto& w, const auto& wi) {
        return mul(ring, mul(ring, wi, g), w);
    };
    auto comm = [&](const auto& g, const auto& gi, const auto& m, const auto& mi) {
        return mul(ring, mul(ring, mul(ring, gi, mi), g), m);
    };
    auto inv_of = [&](const auto& g, const auto& gi) { return gi; };
    (void)inv_of;
    // [[x,y],z^x] [[z,x],y^z] [[y,z],x^y] = 1
    auto c1 = comm(comm(X, Xi, Y, Yi), comm(Y, Yi, X, Xi), conj(Z, X, Xi),
                   conj(Zi, X, Xi));
    auto c2 = comm(comm(Z, Zi, X, Xi), comm(X, Xi, Z, Zi), conj(Y, Z, Zi),
                   conj(Yi, Z, Zi));
    auto c3 = comm(comm(Y, Yi, Z, Zi), comm(Z, Zi, Y, Yi), conj(X, Y, Yi),
                   conj(Xi, Y, Yi));
    CHECK(is_identity(ring, mul(ring, mul(ring, c1, c2), c3)));
}

TEST_CASE("unfold suite for D6", "[steinberg]")
{
    auto rep = verify_unfold(Kind::D6);
    CHECK(rep.ok());
}

TEST_CASE("unfold suite for E8 (sampled)", "[steinberg]")
{
    UnfoldOptions opt;
    opt.pair_stride = 29;
    auto rep = verify_unfold(Kind::E8, opt);
    CHECK(rep.ok());
}
