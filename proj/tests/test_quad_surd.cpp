#include <doctest.h>

#include <random>

#include "degcut/errors.hpp"
#include "degcut/quad_surd.hpp"
#include "oracles.hpp"

using namespace degcut;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-60, 60);
    std::uniform_int_distribution<long long> den(1, 40);
    return Rational(num(rng), den(rng));
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).den() == 2);
    CHECK(Rational::parse("27/5") == Rational(27, 5));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational(7, 5).to_string() == "7/5");
    CHECK(Rational(4).to_string() == "4");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("quadratic surd arithmetic") {
    auto r2 = QuadSurd::root(2);
    CHECK(r2 * r2 == QuadSurd::rational(2, 2));
    auto x = QuadSurd(1, 1, 2);
    auto y = QuadSurd(1, -1, 2);
    CHECK(x * y == QuadSurd::rational(-1, 2));
    CHECK((x / y) * y == x);
    CHECK(x.sign() > 0);
    CHECK(y.sign() < 0);
    CHECK(QuadSurd(0, 0, 7).sign() == 0);
    CHECK(QuadSurd(3, -2, 2).sign() > 0); // 9 > 8
    CHECK(QuadSurd(-3, 2, 2).sign() < 0);
    CHECK(QuadSurd(2, -1, 4).sign() == 0); // perfect square radicand
    CHECK_THROWS_AS(QuadSurd(1, 1, 2) + QuadSurd(1, 1, 3), invalid_input);
    CHECK_THROWS(QuadSurd(1, 1, 0));
    CHECK(QuadSurd(Rational(1, 2), Rational(-3, 4), 5).to_string() == "1/2 + -3/4*sqrt(5)");
}

TEST_CASE("division with a perfect square radicand") {
    auto num = QuadSurd(1, 1, 4); // 3
    auto den = QuadSurd(2, -1, 4); // 0 in value, zero norm
    CHECK_THROWS(num / den);
    auto three = QuadSurd(1, 1, 9); // 4
    auto two = QuadSurd(5, -1, 9);  // 2
    CHECK(((three / two) - QuadSurd::rational(2, 9)).sign() == 0);
}

TEST_CASE("comparisons agree with 50-digit decimals") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long long> radicand(1, 1000);
    for (int i = 0; i < 10000; ++i) {
        long long k = radicand(rng);
        QuadSurd x(random_rational(rng), random_rational(rng), k);
        QuadSurd y(random_rational(rng), random_rational(rng), k);
        auto dx = oracle::decimal(x);
        auto dy = oracle::decimal(y);
        auto ord = x <=> y;
        if (dx < dy)
            REQUIRE(ord == std::strong_ordering::less);
        else if (dx > dy)
            REQUIRE(ord == std::strong_ordering::greater);
        else
            REQUIRE((x - y).sign() == 0);
        CHECK(((x + y) - y) == x);
        CHECK(x.sign() * (-x).sign() <= 0);
        CHECK(oracle::decimal(x * y) - dx * dy < oracle::Decimal50("1e-40"));
        CHECK(dx * dy - oracle::decimal(x * y) < oracle::Decimal50("1e-40"));
    }
}

TEST_CASE("near-ties are decided exactly") {
    // 99/70 and 140/99 bracket sqrt(2) to within 1e-4.
    CHECK(QuadSurd(Rational(-99, 70), 1, 2).sign() < 0);
    CHECK(QuadSurd(Rational(-140, 99), 1, 2).sign() > 0);
    // Pell convergents: 665857/470832 > sqrt 2 by about 1.6e-12.
    CHECK(QuadSurd(Rational(665857, 470832), -1, 2).sign() > 0);
    CHECK(QuadSurd(Rational(-665857, 470832), 1, 2).sign() < 0);
}
