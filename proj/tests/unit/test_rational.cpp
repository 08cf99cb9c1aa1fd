#include <doctest.h>

#include <stdexcept>

#include "macmahon/errors.hpp"
#include "macmahon/rational.hpp"

using namespace macmahon;

TEST_CASE("rational arithmetic examples") {
    CHECK(rat_add(ExactRational(1, 2), ExactRational(1, 3)) == ExactRational(5, 6));
    CHECK(ExactRational(2, 4).num() == 1);
    CHECK(ExactRational(2, 4).den() == 2);
    CHECK(rat_mul(ExactRational(1, 2), ExactRational(1, 3)) == ExactRational(1, 6));
    CHECK(rat_sub(ExactRational(1, 2), ExactRational(1, 3)) == ExactRational(1, 6));
    CHECK(rat_div(ExactRational(1, 2), ExactRational(1, 3)) == ExactRational(3, 2));
}

TEST_CASE("canonical form") {
    CHECK(ExactRational(0, 5).den() == 1);
    CHECK(ExactRational(3, -6).num() == -1);
    CHECK(ExactRational(3, -6).den() == 2);
    CHECK(ExactRational(3, -6).to_string() == "-1/2");
    CHECK(ExactRational(4, 2).to_string() == "2");
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(rat_div(ExactRational(1), ExactRational(0)), std::domain_error);
    CHECK_THROWS_AS(ExactRational(1, 0), std::domain_error);
    CHECK_THROWS_AS(ExactRational(0).pow(-1), std::domain_error);
}

TEST_CASE("powers") {
    CHECK(ExactRational(2, 3).pow(3) == ExactRational(8, 27));
    CHECK(ExactRational(2, 3).pow(-2) == ExactRational(9, 4));
    CHECK(ExactRational(-1, 2).pow(0) == ExactRational(1));
}

TEST_CASE("parse") {
    CHECK(ExactRational::parse("1/2") == ExactRational(1, 2));
    CHECK(ExactRational::parse("-2/4") == ExactRational(-1, 2));
    CHECK(ExactRational::parse("7") == ExactRational(7));
    CHECK_THROWS_AS(ExactRational::parse("1/0"), ValidationError);
    CHECK_THROWS_AS(ExactRational::parse("a/2"), ValidationError);
    CHECK_THROWS_AS(ExactRational::parse(""), ValidationError);
    CHECK_THROWS_AS(ExactRational::parse("1/"), ValidationError);
}

TEST_CASE("values beyond 64 bits stay exact") {
    const ExactRational big = ExactRational(3).pow(80);
    CHECK((big / ExactRational(3).pow(79)) == ExactRational(3));
    CHECK(big.num().str() == "147808829414345923316083210206383297601");
}
