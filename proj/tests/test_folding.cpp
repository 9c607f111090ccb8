#include "hfold/folding.hpp"
#include "hfold/standard_tables.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace hfold;

TEST_CASE("goldfold base images and bijectivity", "[folding]")
{
    FoldingMap f(Kind::E8);
    const auto& e8 = *f.src;
    const auto& gh4 = *f.gh;
    auto tau = GoldenRat::tau(), one = GoldenRat(1), zero = GoldenRat(0);

    // d3 -> tau rho3
    int d3 = e8.base_index(2);
    CHECK(f.goldfold(d3) == gh4.index_of({zero, zero, zero, tau}));
    int d7 = e8.base_index(6);
    CHECK(f.goldfold(d7) == gh4.index_of({one, zero, zero, zero}));

    // bijection onto GH4
    std::set<int> images;
    for (int r = 0; r < static_cast<int>(e8.size()); ++r)
        images.insert(f.goldfold(r));
    CHECK(images.size() == 240);
}

TEST_CASE("goldfold(D6) = GH3 setwise", "[folding]")
{
    FoldingMap f(Kind::D6);
    std::set<int> images;
    for (int r = 0; r < static_cast<int>(f.src->size()); ++r)
        images.insert(f.goldfold(r));
    CHECK(images.size() == f.gh->size());
}

TEST_CASE("fiber structure", "[folding]")
{
    FoldingMap f(Kind::E8);
    const auto& e8 = *f.src;
    const auto& h4 = *f.h;
    auto tau = GoldenRat::tau();
    long total = 0;
    for (int b = 0; b < static_cast<int>(h4.size()); ++b) {
        auto fe = f.fiber(b);
        total += 2;
        // orthogonal pair, images differing by tau
        CHECK(e8.ip(fe.alpha1, fe.alpha2).is_zero());
        CHECK(f.fold(fe.alpha1) == b);
        CHECK(f.fold(fe.alpha2) == b);
        CHECK(f.gh->norm2(f.goldfold(fe.alpha1)) == GoldenRat(1));
        CHECK(f.gh->norm2(f.goldfold(fe.alpha2)) == tau * tau);
    }
    CHECK(total == 240);
}

TEST_CASE("fiber tables match the reference rows", "[folding]")
{
    // H3 from D6
    {
        FoldingMap f(Kind::D6);
        const auto& h3 = *f.h;
        const auto& d6 = *f.src;
        for (const auto& row : tables::fiber_h3()) {
            int beta = root_from_coords(h3, row.beta);
            auto fe = f.fiber(beta);
            CHECK(fe.alpha1 == d6_root_from_name(d6, row.alpha[0]));
            CHECK(fe.alpha2 == d6_root_from_name(d6, row.alpha[1]));
        }
        CHECK(tables::fiber_h3().size() == 15);
    }
    // H4 from E8
    {
        FoldingMap f(Kind::E8);
        const auto& h4 = *f.h;
        const auto& e8 = *f.src;
        for (const auto& row : tables::fiber_h4()) {
            int beta = root_from_coords(h4, row.beta);
            auto fe = f.fiber(beta);
            CHECK(fe.alpha1 == e8_root_from_coords(e8, row.alpha[0]));
            CHECK(fe.alpha2 == e8_root_from_coords(e8, row.alpha[1]));
        }
        CHECK(tables::fiber_h4().size() == 60);
    }
}

TEST_CASE("A4 fold hits the introductory fiber pattern", "[folding]")
{
    // the ten H2 root groups pair up A4 roots exactly as in the 5x5 example
    FoldingMap f(Kind::A4);
    const auto& a4 = *f.src;
    const auto& h2 = *f.h;
    auto root = [&](int i, int j) {
        std::vector<GoldenRat> v(5);
        v[i - 1] = GoldenRat(1);
        v[j - 1] = GoldenRat(-1);
        return a4.index_of(v);
    };
    int alpha = h2.base_index(0), eps = h2.base_index(1);
    auto q = h2.h2_quintuple(alpha, eps);
    // V1 = V12 V34, V2 = V35 V14, V3 = V24 V15, V4 = V13 V25, V5 = V45 V23
    std::array<std::array<int, 2>, 5> expected = {{{root(1, 2), root(3, 4)},
                                                   {root(3, 5), root(1, 4)},
                                                   {root(2, 4), root(1, 5)},
                                                   {root(1, 3), root(2, 5)},
                                                   {root(4, 5), root(2, 3)}}};
    for (int i = 0; i < 5; ++i) {
        auto fe = f.fiber(q[i]);
        CHECK(fe.alpha1 == expected[i][0]);
        CHECK(fe.alpha2 == expected[i][1]);
    }
}

TEST_CASE("weyl embedding is equivariant and order preserving", "[folding]")
{
    FoldingMap f(Kind::D6);
    const auto& h3 = *f.h;
    const auto& w = h3.weyl_group();
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dw(0, static_cast<int>(w.order()) - 1);
    std::uniform_int_distribution<int> db(0, static_cast<int>(h3.size()) - 1);
    for (int rep = 0; rep < 80; ++rep) {
        int e = dw(rng), b = db(rng);
        auto word = w.word(e);
        auto fe = f.fiber(b);
        auto fe2 = f.fiber(w.perms[e][b]);
        // fiber(beta^w) = fiber(beta)^{u(w)}, preserving the short/long order
        CHECK(fe2.alpha1 == f.apply_embedded_word(fe.alpha1, word));
        CHECK(fe2.alpha2 == f.apply_embedded_word(fe.alpha2, word));
    }
}

TEST_CASE("u(s_rho1) is the commuting pair for rho1", "[folding]")
{
    FoldingMap f(Kind::E8);
    const auto& e8 = *f.src;
    int rho1 = f.h->base_index(1);
    auto [a1, a2] = f.embed_weyl_reflection(rho1);
    CHECK(a1 == e8.base_index(0)); // d1
    CHECK(a2 == e8.base_index(5)); // d6
    CHECK(e8.ip(a1, a2).is_zero());
}

TEST_CASE("fiber order is preserved by the H4 base generators", "[folding]")
{
    FoldingMap f(Kind::E8);
    const auto& h4 = *f.h;
    for (int d = 0; d < h4.rank(); ++d)
        for (int b = 0; b < static_cast<int>(h4.size()); ++b) {
            auto fe = f.fiber(b);
            auto fe2 = f.fiber(h4.reflect_idx(b, h4.base_index(d)));
            CHECK(fe2.alpha1 == f.apply_embedded_word(fe.alpha1, {d}));
            CHECK(fe2.alpha2 == f.apply_embedded_word(fe.alpha2, {d}));
        }
}

// exhaustive over all 57120 ordered E8 pairs; takes a few minutes, so it
// is opt-in: ./test_folding "[e8compat]"
TEST_CASE("interval compatibility for the E8 fold", "[.e8compat]")
{
    FoldingMap f(Kind::E8);
    auto rep = f.check_interval_compatibility();
    CHECK(rep.pairs_checked == 240 * 238);
    CHECK(rep.violations.empty());
    CHECK(rep.gh_violations.empty());
    CHECK(rep.possys_violations.empty());
    CHECK_FALSE(rep.cry_violations.empty());
}

TEST_CASE("interval compatibility for the D6 fold", "[folding]")
{
    FoldingMap f(Kind::D6);
    auto rep = f.check_interval_compatibility();
    CHECK(rep.pairs_checked == 60 * 58);
    CHECK(rep.violations.empty());
    CHECK(rep.gh_violations.empty());
    CHECK(rep.possys_violations.empty());
    // the crystallographic version for the fold itself must fail somewhere
    CHECK_FALSE(rep.cry_violations.empty());
}
