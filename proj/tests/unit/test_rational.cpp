#include "treeshift/rational.hpp"
#include "treeshift/sqrt_rational.hpp"
#include "treeshift/errors.hpp"

#include <doctest.h>

using namespace treeshift;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("2/5") == Rational(2, 5));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(rational_to_string(rat(4, 8)) == "1/2");
    CHECK(rational_to_string(Rational(-3)) == "-3");
    CHECK(rational_to_string(parse_rational("0/9")) == "0");
    CHECK_THROWS_AS(parse_rational(""), StructuralError);
    CHECK_THROWS_AS(parse_rational("x/2"), StructuralError);
    CHECK_THROWS_AS(parse_rational("1/0"), StructuralError);
}

TEST_CASE("rational powers") {
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(2, 3), 0) == 1);
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), StructuralError);
}

TEST_CASE("roots") {
    CHECK(is_perfect_square(Rational(9, 4)));
    CHECK(!is_perfect_square(Rational(2)));
    CHECK(!is_perfect_square(Rational(-4)));
    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(exact_nth_root(Rational(8, 27), 3) == Rational(2, 3));
    CHECK(exact_nth_root(Rational(16), 2) == Rational(4));
    CHECK(exact_nth_root(Rational(16), 4) == Rational(2));
    CHECK(!exact_nth_root(Rational(2), 2).has_value());
    CHECK(!exact_nth_root(Rational(8, 9), 3).has_value());
}

TEST_CASE("sqrt-rational arithmetic") {
    SqrtRat two = SqrtRat::sqrt_of(4);
    CHECK(two.is_rational());
    CHECK(two.as_rational() == 2);

    SqrtRat r2 = SqrtRat::sqrt_of(2);
    CHECK(!r2.is_rational());
    CHECK((r2 * r2).as_rational() == 2);
    CHECK(r2.squared() == 2);

    // sqrt(2) + sqrt(8) = 3 sqrt(2)
    SqrtRat sum = r2 + SqrtRat::sqrt_of(8);
    CHECK(sum.squared() == 18);
    CHECK((sum - SqrtRat::scaled_sqrt(3, 2)).is_zero());

    CHECK((r2 - r2).is_zero());
    CHECK_THROWS_AS(r2 + SqrtRat::sqrt_of(3), RadicandMismatch);
    CHECK((r2 * SqrtRat::sqrt_of(3)).squared() == 6);

    SqrtRat zero;
    CHECK((zero + r2) == r2);
    CHECK((zero * r2).is_zero());
}
