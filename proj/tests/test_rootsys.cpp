#include "hfold/rootsys.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>
#include <set>

using namespace hfold;

namespace {

std::mt19937_64 seeded_rng()
{
    const char* env = std::getenv("HFOLD_SEED");
    return std::mt19937_64(env ? std::strtoull(env, nullptr, 10) : 0x5eed);
}

int root_at(const RootSystem& s, std::vector<GoldenRat> v)
{
    int idx = s.index_of(v);
    REQUIRE(idx >= 0);
    return idx;
}

} // namespace

TEST_CASE("cardinalities", "[rootsys]")
{
    CHECK(RootSystem::get(Kind::H2).size() == 10);
    CHECK(RootSystem::get(Kind::H3).size() == 30);
    CHECK(RootSystem::get(Kind::H4).size() == 120);
    CHECK(RootSystem::get(Kind::GH2).size() == 20);
    CHECK(RootSystem::get(Kind::GH3).size() == 60);
    CHECK(RootSystem::get(Kind::GH4).size() == 240);
    CHECK(RootSystem::get(Kind::A4).size() == 20);
    CHECK(RootSystem::get(Kind::D6).size() == 60);
    CHECK(RootSystem::get(Kind::E8).size() == 240);
}

TEST_CASE("indivisible H roots have unit length", "[rootsys]")
{
    for (Kind k : {Kind::H2, Kind::H3, Kind::H4}) {
        const auto& s = RootSystem::get(k);
        for (size_t i = 0; i < s.size(); ++i)
            CHECK(s.norm2(static_cast<int>(i)) == GoldenRat(1));
    }
}

TEST_CASE("weyl group orders and transitivity", "[rootsys]")
{
    CHECK(RootSystem::get(Kind::H2).weyl_group().order() == 10);
    CHECK(RootSystem::get(Kind::H3).weyl_group().order() == 120);
    CHECK(RootSystem::get(Kind::H4).weyl_group().order() == 14400);
    CHECK(RootSystem::get(Kind::A4).weyl_group().order() == 120);
    CHECK(RootSystem::get(Kind::D6).weyl_group().order() == 23040);
    CHECK_THROWS(RootSystem::get(Kind::E8).weyl_group());

    // single orbit of size 30 in H3
    const auto& h3 = RootSystem::get(Kind::H3);
    const auto& w = h3.weyl_group();
    std::set<int> orbit;
    for (size_t e = 0; e < w.order(); ++e)
        orbit.insert(w.perms[e][0]);
    CHECK(orbit.size() == 30);
}

TEST_CASE("reflection basics", "[rootsys]")
{
    const auto& h3 = RootSystem::get(Kind::H3);
    int r2 = h3.base_index(1), r3 = h3.base_index(2);
    CHECK(h3.reflect_idx(r2, r2) == h3.neg[r2]);
    // involution
    auto rng = seeded_rng();
    std::uniform_int_distribution<int> d(0, static_cast<int>(h3.size()) - 1);
    for (int i = 0; i < 50; ++i) {
        int v = d(rng), a = d(rng);
        CHECK(h3.reflect_idx(h3.reflect_idx(v, a), a) == v);
    }
    // reflect(rho2, rho3) = rho2 + tau rho3 with the obtuse Gram convention
    auto tau = GoldenRat::tau();
    int expect = root_at(h3, {GoldenRat(0), GoldenRat(1), tau});
    CHECK(h3.reflect_idx(r2, r3) == expect);
    CHECK_THROWS(h3.reflect(h3.roots[0], RootVec{{GoldenRat(0), GoldenRat(0), GoldenRat(0)},
                                                 h3.basis}));
}

TEST_CASE("s_{v^w} = (s_v)^w", "[rootsys]")
{
    const auto& h3 = RootSystem::get(Kind::H3);
    const auto& w = h3.weyl_group();
    auto rng = seeded_rng();
    std::uniform_int_distribution<int> dv(0, static_cast<int>(h3.size()) - 1);
    std::uniform_int_distribution<int> dw(0, static_cast<int>(w.order()) - 1);
    for (int rep = 0; rep < 60; ++rep) {
        int v = dv(rng), e = dw(rng), x = dv(rng);
        const auto& p = w.perms[e];
        // (x^{s_v})^w  ==  (x^w)^{s_{v^w}}
        CHECK(p[h3.reflect_idx(x, v)] == h3.reflect_idx(p[x], p[v]));
    }
}

TEST_CASE("H2 quintuple and intervals", "[rootsys]")
{
    const auto& h3 = RootSystem::get(Kind::H3);
    int a = h3.base_index(1), e = h3.base_index(2); // (rho2, rho3) is an H2-pair
    auto q = h3.h2_quintuple(a, e);
    auto ivl = h3.open_interval(a, e);
    REQUIRE(ivl.size() == 3);
    CHECK(ivl[0] == q[1]);
    CHECK(ivl[1] == q[2]);
    CHECK(ivl[2] == q[3]);

    // A2-pair: single interior root
    int r1 = h3.base_index(0), r2 = h3.base_index(1);
    auto ivl2 = h3.open_interval(r1, r2);
    REQUIRE(ivl2.size() == 1);
    CHECK(ivl2[0] == root_at(h3, {GoldenRat(1), GoldenRat(1), GoldenRat(0)}));

    // orthogonal pair: empty
    int r3 = h3.base_index(2);
    CHECK(h3.open_interval(r1, r3).empty());
    CHECK_THROWS(h3.open_interval(a, h3.neg[a]));
}

TEST_CASE("interval ordering is the unique nesting labelling", "[rootsys]")
{
    const auto& h3 = RootSystem::get(Kind::H3);
    int n = static_cast<int>(h3.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || h3.proportional(a, b))
                continue;
            auto ivl = h3.open_interval(a, b);
            int k = static_cast<int>(ivl.size());
            // nesting property for the computed labelling, with a0 = a,
            // a_{k+1} = b
            auto at = [&](int i) { return i == 0 ? a : (i == k + 1 ? b : ivl[i - 1]); };
            bool nests = true;
            for (int i = 0; i <= k + 1 && nests; ++i)
                for (int j = i + 1; j <= k + 1 && nests; ++j) {
                    auto sub = h3.open_interval(at(i), at(j));
                    std::vector<int> expect;
                    for (int p = i + 1; p < j; ++p)
                        expect.push_back(at(p));
                    nests = (sub == expect);
                }
            CHECK(nests);
            // uniqueness: no other permutation of the labels nests
            if (k >= 2) {
                std::vector<int> perm(ivl);
                std::sort(perm.begin(), perm.end());
                int good = 0;
                do {
                    auto at2 = [&](int i) {
                        return i == 0 ? a : (i == k + 1 ? b : perm[i - 1]);
                    };
                    bool ok = true;
                    for (int i = 0; i <= k + 1 && ok; ++i)
                        for (int j = i + 1; j <= k + 1 && ok; ++j) {
                            auto sub = h3.open_interval(at2(i), at2(j));
                            std::vector<int> expect;
                            for (int p = i + 1; p < j; ++p)
                                expect.push_back(at2(p));
                            ok = (sub == expect);
                        }
                    good += ok;
                } while (std::next_permutation(perm.begin(), perm.end()));
                CHECK(good == 1);
            }
        }
}

TEST_CASE("span classification and the 2-2-2 property", "[rootsys]")
{
    const auto& h3 = RootSystem::get(Kind::H3);
    int r2 = h3.base_index(1), r3 = h3.base_index(2);
    CHECK(h3.classify_span(r2, r3) == SpanType::H2);
    CHECK(h3.classify_span(h3.base_index(0), r2) == SpanType::A2);

    for (int a = 0; a < static_cast<int>(h3.size()); ++a) {
        CHECK(h3.count_subsystems(a, SpanType::H2) == 2);
        CHECK(h3.count_subsystems(a, SpanType::A2) == 2);
        CHECK(h3.count_subsystems(a, SpanType::A1xA1) == 2);
    }

    // every rank-2 subsystem of H3 is one of the three types: classify_span
    // throws otherwise
    for (int a = 0; a < static_cast<int>(h3.size()); ++a)
        for (int b = 0; b < static_cast<int>(h3.size()); ++b)
            if (a != b && !h3.proportional(a, b))
                CHECK_NOTHROW(h3.classify_span(a, b));
}

TEST_CASE("involution positions", "[rootsys]")
{
    const auto& h3 = RootSystem::get(Kind::H3);
    int a = h3.base_index(1), e = h3.base_index(2);
    auto q = h3.h2_quintuple(a, e);
    CHECK(h3.position_of(q[1], q[0]) == Position::Involution);
    CHECK(h3.position_of(q[4], q[0]) == Position::Involution);
    CHECK(h3.position_of(h3.neg[q[1]], q[0]) == Position::Involution);
    CHECK(h3.position_of(q[2], q[0]) == Position::InvertedInvolution);
    CHECK(h3.position_of(q[3], q[0]) == Position::InvertedInvolution);
    CHECK(h3.position_of(h3.base_index(0), h3.base_index(2)) == Position::NotH2);
    // symmetry and Weyl invariance
    const auto& w = h3.weyl_group();
    auto rng = seeded_rng();
    std::uniform_int_distribution<int> dv(0, static_cast<int>(h3.size()) - 1);
    std::uniform_int_distribution<int> dw(0, static_cast<int>(w.order()) - 1);
    for (int rep = 0; rep < 40; ++rep) {
        int x = dv(rng), y = dv(rng), ei = dw(rng);
        if (x == y || h3.proportional(x, y))
            continue;
        CHECK(h3.position_of(x, y) == h3.position_of(y, x));
        const auto& p = w.perms[ei];
        CHECK(h3.position_of(x, y) == h3.position_of(p[x], p[y]));
    }
}

TEST_CASE("E2+ sets", "[rootsys]")
{
    const auto& h2 = RootSystem::get(Kind::H2);
    CHECK(h2.e2_plus().size() == 5);

    const auto& h3 = RootSystem::get(Kind::H3);
    auto e2 = h3.e2_plus();
    int r12 = h3.index_of({GoldenRat(1), GoldenRat(1), GoldenRat(0)});
    CHECK(std::count(e2.begin(), e2.end(), r12) == 1);
    // membership agrees with exhaustive per-plane testing, and roots with
    // three nonzero base coordinates are excluded
    for (int r : e2) {
        int nonzero = 0;
        for (const auto& c : h3.base_coords[r])
            nonzero += !c.is_zero();
        CHECK(nonzero <= 2);
    }
    CHECK(e2.size() == 7); // rho1, rho1+rho2 and the five H2-plane positives
}

TEST_CASE("positivizing words", "[rootsys]")
{
    const auto& h4 = RootSystem::get(Kind::H4);
    auto rng = seeded_rng();
    std::uniform_int_distribution<int> dv(0, static_cast<int>(h4.size()) - 1);
    for (int rep = 0; rep < 100; ++rep) {
        int a = dv(rng), b = dv(rng);
        if (a == b || h4.proportional(a, b))
            continue;
        auto word = h4.positivizing_word(a, b);
        CHECK(h4.positive[h4.apply_word(a, word)]);
        CHECK(h4.positive[h4.apply_word(b, word)]);
    }
}

TEST_CASE("coxeter orders", "[rootsys]")
{
    const auto& h4 = RootSystem::get(Kind::H4);
    CHECK(h4.coxeter_order(0, 1) == 3);
    CHECK(h4.coxeter_order(1, 2) == 3);
    CHECK(h4.coxeter_order(2, 3) == 5);
    CHECK(h4.coxeter_order(0, 2) == 2);
    CHECK(h4.coxeter_order(0, 3) == 2);
    CHECK(h4.coxeter_order(1, 3) == 2);
}

TEST_CASE("GH intervals may contain proportional pairs", "[rootsys]")
{
    const auto& gh3 = RootSystem::get(Kind::GH3);
    // base rho2, rho3 in the GH system: interval contains tau-multiples too
    int a = gh3.base_index(1), e = gh3.base_index(2);
    auto ivl = gh3.open_interval(a, e);
    CHECK(ivl.size() == 6); // three rays, two lengths each, short first
    auto tau = GoldenRat::tau();
    for (size_t i = 0; i + 1 < ivl.size(); i += 2) {
        CHECK(gh3.norm2(ivl[i]) == GoldenRat(1));
        CHECK(gh3.norm2(ivl[i + 1]) == tau * tau);
    }
}
