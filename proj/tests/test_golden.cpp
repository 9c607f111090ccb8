#include "hfold/golden.hpp"

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

GoldenInt random_golden(std::mt19937_64& rng, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    return GoldenInt(d(rng), d(rng));
}

} // namespace

TEST_CASE("golden multiplication", "[golden]")
{
    auto tau = GoldenInt::tau();
    CHECK(tau * tau == GoldenInt(1, 1)); // tau^2 = 1 + tau
    CHECK(GoldenInt(1, 1) * GoldenInt(2, -1) == GoldenInt(1)); // (1+tau)(2-tau) = 1
    CHECK(GoldenInt(1, 2) * GoldenInt(1) == GoldenInt(1, 2));
}

TEST_CASE("golden sign", "[golden]")
{
    CHECK(GoldenInt(1, -1).sgn() == -1); // 1 - tau < 0
    CHECK(GoldenInt(0, 0).sgn() == 0);
    CHECK(GoldenInt(5, -3).sgn() == 1); // s=13, t=-3, 169 > 45
    CHECK(GoldenInt(0, 1).sgn() == 1);
    CHECK(GoldenInt(-2, 1).sgn() == -1); // tau - 2 < 0
    CHECK(GoldenInt(-1, 1).sgn() == 1);  // tau - 1 > 0
}

TEST_CASE("golden conjugate and norm", "[golden]")
{
    auto tau = GoldenInt::tau();
    CHECK(tau.conj() == GoldenInt(1, -1));
    CHECK(tau.norm() == -1);
    auto x = GoldenInt(1, 1), y = GoldenInt(2, -1);
    CHECK((x * y).norm() == x.norm() * y.norm());
}

TEST_CASE("golden ring axioms randomized", "[golden]")
{
    auto rng = seeded_rng();
    for (int i = 0; i < 300; ++i) {
        auto x = random_golden(rng, 1000), y = random_golden(rng, 1000),
             z = random_golden(rng, 1000);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("sign is a total order certificate vs double", "[golden]")
{
    auto rng = seeded_rng();
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int i = 0; i < 500; ++i) {
        auto x = random_golden(rng, 1000000), y = random_golden(rng, 1000000);
        double dx = static_cast<double>(x.a.convert_to<long>()) +
                    phi * static_cast<double>(x.b.convert_to<long>());
        double dy = static_cast<double>(y.a.convert_to<long>()) +
                    phi * static_cast<double>(y.b.convert_to<long>());
        // keep away from roundoff territory
        if (std::abs(dx - dy) < 1e-3)
            continue;
        CHECK(compare(x, y) == (dx < dy ? -1 : 1));
    }
}

TEST_CASE("golden rationals canonical", "[golden]")
{
    GoldenRat a(GoldenInt(2, 4), 6);
    CHECK(a.num == GoldenInt(1, 2));
    CHECK(a.den == 3);
    GoldenRat z(GoldenInt(0, 0), 5);
    CHECK(z.is_zero());
    CHECK(z.den == 1);
    GoldenRat m(GoldenInt(1, 0), -2);
    CHECK(m.num == GoldenInt(-1, 0));
    CHECK(m.den == 2);

    auto tau = GoldenRat::tau();
    CHECK(tau * tau == tau + GoldenRat(1));
    CHECK((tau / tau) == GoldenRat(1));
    CHECK((GoldenRat(1) / tau) == tau - GoldenRat(1));
}

TEST_CASE("render and parse", "[golden]")
{
    CHECK(to_string(GoldenInt(1, 2)) == "2tau+1");
    CHECK(to_string(GoldenInt(1, 1)) == "tau^2");
    CHECK(to_string(GoldenInt(0, 1)) == "tau");
    CHECK(to_string(GoldenInt(0, 2)) == "2tau");
    CHECK(to_string(GoldenInt(3, 0)) == "3");
    CHECK(to_string(GoldenInt(2, 1)) == "tau+2");
    CHECK(parse_golden("2tau+1") == GoldenInt(1, 2));
    CHECK(parse_golden("tau^2") == GoldenInt(1, 1));
    CHECK(parse_golden("1+2tau") == GoldenInt(1, 2));
    CHECK(parse_golden("-tau+3") == GoldenInt(3, -1));
    CHECK(parse_golden("0") == GoldenInt(0, 0));
    auto rng = seeded_rng();
    for (int i = 0; i < 100; ++i) {
        auto x = random_golden(rng, 50);
        CHECK(parse_golden(to_string(x)) == x);
    }
}
