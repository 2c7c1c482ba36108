#include <doctest.h>

#include "dlab/rational.hpp"

using dlab::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK((Rational(7, 2) - Rational(7, 2)).str() == "0");
    CHECK((Rational(5, 3) * Rational(3, 5)) == Rational(1));
    CHECK(Rational(13, 6) > Rational(2));
    CHECK(Rational(1, 6) < Rational(1, 3));
}

TEST_CASE("rational parsing round-trips") {
    for (const char* s : {"0", "7", "-4", "5/3", "-13/6", "1/2"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK_THROWS_AS(Rational::parse("x"), dlab::Error);
    CHECK_THROWS_AS(Rational(1, 0), dlab::Error);
}
