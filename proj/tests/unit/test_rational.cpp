#include <doctest.h>

#include "cbn/errors.hpp"
#include "cbn/rational.hpp"

using namespace cbn;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("2") == Rational(2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK(parse_rational(" 1/3 ") == Rational(1, 3));
}

TEST_CASE("parse_rational rejects malformed text") {
    for (const char* bad : {"", "abc", "1/0", "1//2", "1.2.3", "/3", "3/"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), InvalidArgument);
    }
}

TEST_CASE("to_string always renders p/q") {
    CHECK(to_string(Rational(0)) == "0/1");
    CHECK(to_string(Rational(1)) == "1/1");
    CHECK(to_string(Rational(3, 10)) == "3/10");
    CHECK(to_string(Rational(-2, 4)) == "-1/2");
}

TEST_CASE("total_variation") {
    std::vector<Rational> a{Rational(1, 2), Rational(1, 2)};
    std::vector<Rational> b{Rational(1), Rational(0)};
    CHECK(total_variation(a, b) == Rational(1, 2));
    CHECK(total_variation(a, a) == 0);
}

TEST_CASE("unit interval predicates") {
    CHECK(in_unit_interval(Rational(0)));
    CHECK(in_unit_interval(Rational(1)));
    CHECK_FALSE(in_open_unit_interval(Rational(1)));
    CHECK(in_open_unit_interval(Rational(1, 2)));
    CHECK_FALSE(in_unit_interval(Rational(-1, 2)));
}
