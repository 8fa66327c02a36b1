#include <doctest.h>

#include <random>

#include "srg/quadratic.hpp"

using srg::BigInt;
using srg::QuadraticNumber;

TEST_CASE("square factor extraction") {
    auto check = [](long d, long t, long e) {
        auto [tt, ee] = srg::split_square_factor(BigInt(d));
        CHECK(tt == t);
        CHECK(ee == e);
    };
    check(1, 1, 1);
    check(5, 1, 5);
    check(8, 2, 2);
    check(72, 6, 2);
    check(225, 15, 1);
    check(2 * 3 * 3 * 7 * 7 * 11, 21, 22);
    check(97 * 97 * 3, 97, 3);
}

TEST_CASE("canonical form") {
    // (2 + 2 sqrt(8)) / 4 = (1 + 2 sqrt(2)) / 2
    QuadraticNumber x(2, 2, 8, 4);
    CHECK(x.a() == 1);
    CHECK(x.b() == 2);
    CHECK(x.d() == 2);
    CHECK(x.den() == 2);

    // Perfect-square radicand collapses to a rational: (1 + 3)/2 = 2.
    QuadraticNumber y(1, 1, 9, 2);
    CHECK(y.is_rational());
    CHECK(y.is_integer());
    CHECK(y.to_integer() == 2);
    CHECK(y.d() == 0);

    // Negative denominator is normalised.
    CHECK(QuadraticNumber(3, 0, 0, -2) == QuadraticNumber(-3, 0, 0, 2));

    // b = 0 forgets the radicand.
    CHECK(QuadraticNumber(4, 0, 7, 2) == QuadraticNumber::integer(2));

    // Same value built through t^2 e.
    CHECK(QuadraticNumber(-1, 1, 20, 2) == QuadraticNumber(-1, 2, 5, 2));

    CHECK_THROWS_AS(QuadraticNumber(1, 1, -5, 2), std::domain_error);
    CHECK_THROWS_AS(QuadraticNumber(1, 1, 5, 0), std::domain_error);
}

TEST_CASE("is_integer means zero irrational part and even numerator over 2") {
    CHECK(QuadraticNumber(4, 0, 0, 2).is_integer());
    CHECK_FALSE(QuadraticNumber(3, 0, 0, 2).is_integer());
    CHECK_FALSE(QuadraticNumber(4, 2, 5, 2).is_integer());
    CHECK_THROWS_AS(QuadraticNumber(3, 0, 0, 2).to_integer(), std::domain_error);
}

TEST_CASE("golden ratio arithmetic") {
    const QuadraticNumber r1(-1, 1, 5, 2);
    const QuadraticNumber r2(-1, -1, 5, 2);
    CHECK(r1 + r2 == QuadraticNumber::integer(-1));
    CHECK(r1 * r2 == QuadraticNumber::integer(-1));
    CHECK(r1 > r2);
    CHECK(r1.sign() > 0);
    CHECK(r2.sign() < 0);
    // r^2 = 1 - r for r = (-1 +- sqrt 5)/2
    CHECK(pow(r1, 2) == QuadraticNumber::integer(1) - r1);
    CHECK(pow(r1, 0) == QuadraticNumber::integer(1));
    CHECK(pow(r1, 5) + pow(r2, 5) == QuadraticNumber::integer(-11));
}

TEST_CASE("string form") {
    CHECK(QuadraticNumber(-1, 1, 5, 2).to_string() == "(-1+sqrt(5))/2");
    CHECK(QuadraticNumber(-1, -1, 5, 2).to_string() == "(-1-sqrt(5))/2");
    CHECK(QuadraticNumber(0, 3, 13, 2).to_string() == "3*sqrt(13)/2");
    CHECK(QuadraticNumber(2, -2, 3, 1).to_string() == "2-2*sqrt(3)");
    CHECK(QuadraticNumber::integer(-8).to_string() == "-8");
    CHECK(QuadraticNumber(3, 0, 0, 2).to_string() == "3/2");
}

TEST_CASE("mixed radicands are rejected") {
    CHECK_THROWS_AS(QuadraticNumber(0, 1, 2, 1) + QuadraticNumber(0, 1, 3, 1), std::domain_error);
    CHECK_NOTHROW(QuadraticNumber(0, 1, 2, 1) + QuadraticNumber::integer(3));
}

TEST_CASE("sign and ordering against floating point on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-40, 40);
    std::uniform_int_distribution<long> rad(1, 60);
    std::uniform_int_distribution<long> den(1, 6);
    for (int i = 0; i < 2000; ++i) {
        QuadraticNumber x(coef(rng), coef(rng), rad(rng), den(rng));
        const double v = x.approx();
        if (std::abs(v) > 1e-9) CHECK(x.sign() == (v > 0 ? 1 : -1));
        else CHECK(x.sign() == 0);
    }
}

TEST_CASE("ring axioms on random values sharing a radicand") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-25, 25);
    std::uniform_int_distribution<long> den(1, 4);
    for (long d : {2L, 3L, 5L, 12L, 13L, 20L, 45L}) {
        for (int i = 0; i < 150; ++i) {
            auto draw = [&] { return QuadraticNumber(coef(rng), coef(rng), d, den(rng)); };
            const QuadraticNumber x = draw(), y = draw(), z = draw();
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x - x == QuadraticNumber{});
        }
    }
}
