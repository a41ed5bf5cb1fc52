#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "pentatile/exact.hpp"

using namespace pentatile;

TEST_SUITE("exact") {
    TEST_CASE("rational normalization") {
        Rational q(6, -8);
        CHECK(q.num() == -3);
        CHECK(q.den() == 4);
        CHECK(Rational(q.num(), q.den()) == q);
        CHECK(Rational(0, 5) == Rational(0));
        CHECK(Rational(0, 5).den() == 1);
        CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
        CHECK(Rational::parse("-3/4") == q);
        CHECK(Rational::parse(q.str()) == q);
        CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    }

    TEST_CASE("rational overflow is a hard error") {
        Rational big(std::numeric_limits<std::int64_t>::max());
        CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
        CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
        CHECK(big * Rational(1, 2) + big * Rational(1, 2) == big);
    }

    TEST_CASE("fangle_eval") {
        CHECK(fangle_eval({Rational(5, 6), -2}, TilingParameters(24)) == Rational(3, 4));
        CHECK(fangle_eval({0, 0}, TilingParameters(18)) == Rational(0));
        CHECK(fangle_eval({Rational(4, 3), -8}, TilingParameters(60)) == Rational(6, 5));
    }

    TEST_CASE("fangle_cmp") {
        TilingParameters p24(24), p18(18);
        CHECK(fangle_cmp({Rational(5, 6), -2}, {Rational(-1, 6), 10}, p24) == std::strong_ordering::greater);
        FAngle a{Rational(1, 7), 3};
        CHECK(fangle_cmp(a, a, p24) == std::strong_ordering::equal);
        CHECK(fangle_cmp({Rational(1, 3), 4}, FAngle::constant(Rational(2, 3)), p18) == std::strong_ordering::less);
    }

    TEST_CASE("fangle_linear_solve") {
        auto all = fangle_linear_solve({{FAngle::constant(Rational(2, 3)), 3}}, FAngle::constant(2));
        CHECK(all.all_f);
        FAngle alpha = FAngle::constant(Rational(2, 3)), theta2{Rational(1, 6), 2};
        auto f36 = fangle_linear_solve({{alpha, 1}, {theta2, 6}}, FAngle::constant(2));
        CHECK_FALSE(f36.all_f);
        CHECK(f36.fs == std::vector<int>{36});
        auto f24 = fangle_linear_solve({{alpha, 0}, {theta2, 8}}, FAngle::constant(2));
        CHECK(f24.fs == std::vector<int>{24});
        auto none = fangle_linear_solve({{FAngle::constant(Rational(1, 2)), 3}}, FAngle::constant(2));
        CHECK(none.empty());
    }

    TEST_CASE("solve_multiplicity") {
        FAngle alpha = FAngle::constant(Rational(2, 3)), theta2{Rational(1, 6), 2};
        CHECK(solve_multiplicity({{alpha, 1}}, theta2, FAngle::constant(2), 36) == 6);
        CHECK_FALSE(solve_multiplicity({{alpha, 1}}, theta2, FAngle::constant(2), 30).has_value());
    }

    TEST_CASE("tiling parameters") {
        CHECK(TilingParameters(12).f == 12);
        CHECK_THROWS_AS(TilingParameters(17), std::invalid_argument);
        CHECK_THROWS_AS(TilingParameters(10), std::invalid_argument);
    }

    TEST_CASE("evaluation is additive at every even f") {
        FAngle x{Rational(5, 6), -2}, y{Rational(-1, 6), 10};
        for (int f = 12; f <= 200; f += 2) CHECK((x + y).eval(f) == x.eval(f) + y.eval(f));
    }

    TEST_CASE("rendering") {
        CHECK(FAngle(Rational(5, 6), -2).str() == "5/6 - 2/f");
        CHECK(FAngle(0, 8).str() == "8/f");
        CHECK(FAngle::constant(Rational(2, 3)).str() == "2/3");
        CHECK(pi_str(Rational(3, 4)) == "3/4 π");
        CHECK(pi_str(Rational(1)) == "π");
        CHECK(pi_str(Rational(0)) == "0");
    }
}
