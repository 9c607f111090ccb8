#include "hfold/poly.hpp"
#include "hfold/rings.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

using namespace hfold;

namespace {

std::mt19937_64 seeded_rng()
{
    const char* env = std::getenv("HFOLD_SEED");
    return std::mt19937_64(env ? std::strtoull(env, nullptr, 10) : 0x5eed);
}

template <CommutativeRing R>
void check_ring_axioms(const R& ring, const std::vector<typename R::Elem>& samples)
{
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t j = 0; j < samples.size(); ++j)
            for (size_t k = 0; k < samples.size(); k += 3) {
                const auto &x = samples[i], &y = samples[j], &z = samples[k];
                CHECK(ring.eq(ring.add(ring.add(x, y), z), ring.add(x, ring.add(y, z))));
                CHECK(ring.eq(ring.mul(ring.mul(x, y), z), ring.mul(x, ring.mul(y, z))));
                CHECK(ring.eq(ring.mul(x, y), ring.mul(y, x)));
                CHECK(ring.eq(ring.mul(x, ring.add(y, z)),
                              ring.add(ring.mul(x, y), ring.mul(x, z))));
            }
    for (const auto& x : samples) {
        CHECK(ring.eq(ring.add(x, ring.zero()), x));
        CHECK(ring.eq(ring.mul(x, ring.one()), x));
        CHECK(ring.is_zero(ring.add(x, ring.neg(x))));
    }
}

} // namespace

TEST_CASE("integers and mod-n ring axioms", "[rings]")
{
    auto rng = seeded_rng();
    std::uniform_int_distribution<long> d(-50, 50);
    IntRing z;
    std::vector<Integer> zs;
    for (int i = 0; i < 12; ++i)
        zs.push_back(d(rng));
    check_ring_axioms(z, zs);

    ModRing z6(6);
    std::vector<std::int64_t> ms;
    for (int i = 0; i < 6; ++i)
        ms.push_back(i);
    check_ring_axioms(z6, ms);
    CHECK(z6.invert(5) == 5);
    CHECK_FALSE(z6.invert(2).has_value());
    ModRing z5(5);
    CHECK(z5.invert(2) == 3);
    CHECK(z5.invert(4) == 4);
}

TEST_CASE("pair ring ops", "[rings]")
{
    PairRing<IntRing> p{IntRing{}};
    {
        auto rng = seeded_rng();
        std::uniform_int_distribution<long> d(-20, 20);
        std::vector<PairRing<IntRing>::Elem> samples;
        for (int i = 0; i < 9; ++i)
            samples.push_back(p.make(d(rng), d(rng)));
        check_ring_axioms(p, samples);
    }
    auto x = p.make(2, 3), y = p.make(5, 7);
    CHECK(p.eq(p.mul(x, y), p.make(10, 21)));
    CHECK(p.eq(p.star(x), p.make(-2, 3)));
    CHECK(p.eq(p.star(p.star(x)), x));
    CHECK(p.eq(p.act(-1, 1, x), p.make(-2, 3)));
    CHECK(p.eq(p.act(1, -1, x), p.make(2, -3)));
    // x * star(y) = star(x * y)
    CHECK(p.eq(p.mul(x, p.star(y)), p.star(p.mul(x, y))));
}

TEST_CASE("polynomials", "[rings]")
{
    PolyRing r({"x", "y"});
    auto x = r.var("x"), y = r.var("y");
    auto p = r.mul(r.add(x, y), r.sub(x, y));
    CHECK(r.to_string(p) == "x^2 - y^2");
    CHECK(r.to_string(r.add(p, r.one())) == "x^2 - y^2 + 1");
    CHECK(r.to_string(r.zero()) == "0");

    IntRing z;
    CHECK(r.eval(z, p, {Integer(2), Integer(3)}) == -5);
    ModRing z5(5);
    auto q = r.add(r.mul(r.from_int(5), x), r.one()); // 5x + 1
    CHECK(r.eval(z5, q, {2, 0}) == 1);

    // ring axioms on random sparse polynomials
    auto rng = seeded_rng();
    std::uniform_int_distribution<int> dc(-4, 4), de(0, 3);
    std::vector<Poly> samples;
    for (int i = 0; i < 8; ++i) {
        Poly s;
        auto acc = r.zero();
        for (int t = 0; t < 4; ++t) {
            auto term = r.constant(dc(rng));
            for (int k = de(rng); k-- > 0;)
                term = r.mul(term, x);
            for (int k = de(rng); k-- > 0;)
                term = r.mul(term, y);
            acc = r.add(acc, term);
        }
        samples.push_back(acc);
    }
    check_ring_axioms(r, samples);
}

TEST_CASE("polynomial units", "[rings]")
{
    PolyRing r({"x"});
    CHECK(r.invert(r.one()).has_value());
    CHECK(r.invert(r.neg(r.one())).has_value());
    CHECK_FALSE(r.invert(r.var(size_t{0})).has_value());
    CHECK_FALSE(r.invert(r.from_int(2)).has_value());
}

TEST_CASE("eval is a homomorphism", "[rings]")
{
    PolyRing r({"x", "y", "z"});
    auto rng = seeded_rng();
    std::uniform_int_distribution<int> dc(-3, 3);
    IntRing z;
    for (int rep = 0; rep < 40; ++rep) {
        auto p = r.add(r.mul(r.var(size_t{0}), r.var(size_t{1})),
                       r.constant(dc(rng)));
        auto q = r.add(r.mul(r.var(size_t{2}), r.var(size_t{0})),
                       r.constant(dc(rng)));
        std::vector<Integer> a{dc(rng), dc(rng), dc(rng)};
        CHECK(r.eval(z, r.mul(p, q), a) == r.eval(z, p, a) * r.eval(z, q, a));
        CHECK(r.eval(z, r.add(p, q), a) == r.eval(z, p, a) + r.eval(z, q, a));
    }
}
