#include <doctest.h>

#include "lpolya/rational.hpp"

using namespace lpolya;

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
    CHECK(rat(3, 12) == rat(1, 4));
    CHECK(rat(1, -2) == rat(-1, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat(0, 7) == Rat(0));
    CHECK(rat(1, -2).get_den() == 2);
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("string round trip") {
    CHECK(rat_str(rat(5887, 11520)) == "5887/11520");
    CHECK(rat_str(rat(4)) == "4");
    CHECK(rat_str(rat(-7, 240)) == "-7/240");
    CHECK(rat_parse("5887/11520") == rat(5887, 11520));
    CHECK(rat_parse("-7/240") == rat(-7, 240));
    CHECK(rat_parse("42") == rat(42));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
}

TEST_CASE("power and factorial helpers") {
    CHECK(rat_pow(rat(-2, 3), 3) == rat(-8, 27));
    CHECK(rat_pow(rat(7, 5), 0) == Rat(1));
    CHECK(int_pow(Int(3), 5) == 243);
    CHECK(factorial(6) == 720);
    const std::vector<Int> row = binomial_row(7);
    CHECK(row[0] == 1);
    CHECK(row[3] == 35);
    CHECK(row[7] == 1);
}
