#include "arp/rational.hpp"

#include <doctest.h>

#include <random>

using arp::Rational;

TEST_CASE("rational: canonical form") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational(8, 4).fraction_str() == "2/1");
    CHECK(Rational(0, 7).fraction_str() == "0/1");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational: parse") {
    CHECK(Rational::parse("10/3") == Rational(10, 3));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational::parse("2.5") == Rational(5, 2));
    CHECK(Rational::parse(".25") == Rational(1, 4));
    CHECK(Rational::parse("3.") == Rational(3));
    CHECK(Rational::parse("-0.125") == Rational(-1, 8));
    CHECK(Rational::parse("1.5e2") == Rational(150));
    CHECK(Rational::parse("25e-3") == Rational(1, 40));
    CHECK(Rational::parse(" 7 ") == Rational(7));
    // 0.1 has no finite binary expansion; the parse must still be exact.
    CHECK(Rational::parse("0.1") == Rational(1, 10));
    CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");

    for (const char *bad : {"", "abc", "1/0", "1/-2", "1/2.5", "1.2.3", "--1", "1e", "e5", ".", "1/"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("rational: decimal rendering is exact and rounded") {
    CHECK(Rational(10, 3).decimal_str() == "3.333333333333");
    CHECK(Rational(17, 4).decimal_str() == "4.250000000000");
    CHECK(Rational(2, 3).decimal_str(3) == "0.667");
    CHECK(Rational(-2, 3).decimal_str(3) == "-0.667");
    CHECK(Rational(1, 2000).decimal_str(3) == "0.001");
    CHECK(Rational(-1, 3000).decimal_str(3) == "0.000");
    CHECK(Rational(7).decimal_str(0) == "7");
}

TEST_CASE("rational: arithmetic identities on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-50, 50);
    auto draw = [&] {
        long long den = 0;
        while (den == 0) den = d(rng);
        return Rational(d(rng), den);
    };
    for (int i = 0; i < 500; ++i) {
        const Rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        if (b.sign() != 0) CHECK((a / b) * b == a);
        CHECK(((a < b) == (a - b).sign() < 0));
        CHECK(Rational::parse(a.str()) == a);
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}
