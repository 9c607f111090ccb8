#include "hfold/standard_tables.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hfold;

TEST_CASE("parity extension basics", "[parity]")
{
    const auto& t = standard_parity(Kind::H3);
    const auto& s = RootSystem::get(Kind::H3);
    int rho2 = s.base_index(1);

    CHECK(parity_extend(t, rho2, SignedWord{}) == ParityValue{1, 1});
    CHECK(parity_extend(t, rho2, positive_word({0, 0})) == ParityValue{-1, -1});
    CHECK(parity_extend(t, rho2, positive_word({2, 2})) == ParityValue{-1, 1});

    // negative letters invert: eta_{a, (d, -d)} = 1
    for (int a = 0; a < static_cast<int>(s.size()); ++a)
        for (int d = 0; d < 3; ++d) {
            SignedWord w{{d, +1}, {d, -1}};
            CHECK(parity_extend(t, a, w).is_one());
        }
}

TEST_CASE("inverse word identity", "[parity]")
{
    const auto& t = standard_parity(Kind::H3);
    const auto& s = RootSystem::get(Kind::H3);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dl(0, 2), dn(0, 1),
        dr(0, static_cast<int>(s.size()) - 1);
    for (int rep = 0; rep < 200; ++rep) {
        SignedWord w;
        int len = 1 + rep % 7;
        for (int i = 0; i < len; ++i)
            w.push_back(SignedLetter{dl(rng), dn(rng) ? 1 : -1});
        int a = dr(rng);
        // eta_{a, w^{-1}} = eta_{a^{s_w^{-1}}, w}^{-1}
        int b = s.apply_word(a, inverse_word(w));
        CHECK(parity_extend(t, a, inverse_word(w)) == parity_extend(t, b, w).inv());
    }
}

TEST_CASE("standard parity tables satisfy all four properties", "[parity]")
{
    auto rep3 = check_parity_properties(standard_parity(Kind::H3));
    for (const auto& v : rep3.violations)
        INFO(v.property + ": " + v.instance);
    CHECK(rep3.ok());

    auto rep4 = check_parity_properties(standard_parity(Kind::H4));
    CHECK(rep4.ok());
}

TEST_CASE("mutated table is rejected", "[parity]")
{
    ParityTable t = standard_parity(Kind::H3);
    const auto& s = RootSystem::get(Kind::H3);
    auto v = t.at(s.base_index(1), 2);
    t.set(s.base_index(1), 2, ParityValue{-v.eps, v.epsbar});
    auto rep = check_parity_properties(t);
    CHECK_FALSE(rep.ok());
    bool braid_violation = false;
    for (const auto& viol : rep.violations)
        braid_violation = braid_violation || viol.property == "braid";
    CHECK(braid_violation);
}

TEST_CASE("completeness witnesses generate the sign group", "[parity]")
{
    const auto& t = standard_parity(Kind::H3);
    const auto& s = RootSystem::get(Kind::H3);
    int rho2 = s.base_index(1);
    auto a = parity_extend(t, rho2, positive_word({0, 0}));
    auto b = parity_extend(t, rho2, positive_word({2, 2}));
    CHECK(a == ParityValue{-1, -1});
    CHECK(b == ParityValue{-1, 1});
    CHECK(a * b == ParityValue{1, -1});
}
