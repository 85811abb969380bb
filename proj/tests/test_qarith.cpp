#include <doctest.h>

#include "deltaq/error.hpp"
#include "deltaq/qarith.hpp"
#include "deltaq/rational.hpp"
#include "oracles.hpp"

using namespace deltaq;
using oracles::poly;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational::from_string("-6/4").str() == "-3/2");
    CHECK_THROWS_AS(Rational(1, 0), RangeError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("banana"), ParseError);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
}

TEST_CASE("laurent basics") {
    QLaurent f = QLaurent::monomial(2, Rational(3)) + QLaurent::monomial(-1) + QLaurent::one();
    CHECK(f.min_exp() == -1);
    CHECK(f.max_exp() == 2);
    CHECK(f.coeff(2) == Rational(3));
    CHECK(f.coeff(5) == Rational(0));
    CHECK_FALSE(f.is_polynomial());
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS(QLaurent::zero().min_exp(), RangeError);
    CHECK(f.eval_at_one() == Rational(5));
    CHECK(f.shifted(1).min_exp() == 0);
    CHECK((poly({1, 1}) * poly({1, -1})) == poly({1, 0, -1}));
    CHECK(poly({1, 1}).str() == "1 + q");
    CHECK(QLaurent::monomial(-1).str() == "q^-1");
    CHECK(QLaurent::zero().str() == "0");
}

TEST_CASE("q integers and factorials") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == QLaurent::one());
    CHECK(q_int(3) == poly({1, 1, 1}));
    CHECK(q_factorial(0) == QLaurent::one());
    CHECK(q_factorial(3) == poly({1, 1, 1}) * poly({1, 1}));
    CHECK(q_factorial(3).eval_at_one() == Rational(6));
    CHECK_THROWS_AS(q_int(-1), RangeError);
    CHECK_THROWS_AS(q_factorial(-2), RangeError);
}

TEST_CASE("gaussian binomials against the recurrence oracle") {
    for (int n = 0; n <= 12; ++n)
        for (int k = -1; k <= n + 1; ++k)
            CHECK(q_binomial(n, k) == oracles::qbinom(n, k));
    CHECK(q_binomial(2, 1) == poly({1, 1}));
    CHECK(q_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
    CHECK_THROWS_AS(q_binomial(-1, 0), RangeError);
}

TEST_CASE("gaussian binomial symmetry and palindromicity") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            const QLaurent b = q_binomial(n, k);
            CHECK(b == q_binomial(n, n - k));               // symmetry
            CHECK(b == reverse_coeffs(b, k * (n - k)));     // palindromic coefficients
            CHECK(b.has_nonneg_int_coeffs());
        }
}

TEST_CASE("q multinomials") {
    CHECK(q_multinomial({}) == QLaurent::one());
    CHECK(q_multinomial({3}) == QLaurent::one());
    CHECK(q_multinomial({0, 2, 0}) == QLaurent::one());
    CHECK(q_multinomial({1, 1}) == q_binomial(2, 1));
    CHECK(q_multinomial({2, 1}) == q_binomial(3, 2));
    CHECK(q_multinomial({1, 1, 1}) == q_factorial(3));
    // [a+b+c choose a,b,c] = [a+b+c choose a] [b+c choose b]
    CHECK(q_multinomial({2, 2, 1}) == q_binomial(5, 2) * q_binomial(3, 2));
    CHECK_THROWS_AS(q_multinomial({1, -1}), RangeError);
}

TEST_CASE("pochhammer symbols") {
    CHECK(pochhammer(1, 0) == QLaurent::one());
    CHECK(pochhammer(1, 2) == poly({1, -1}) * poly({1, 0, -1}));
    CHECK(pochhammer(0, 1).is_zero());                       // factor 1 - q^0
    CHECK(pochhammer(-1, 3).is_zero());                      // hits 1 - q^0 at i = 1
    CHECK(pochhammer(-1, 1) == QLaurent::one() - QLaurent::monomial(-1));
    CHECK_THROWS_AS(pochhammer(1, -1), RangeError);
}

TEST_CASE("coefficient reversal") {
    // rev at degree 2 of 3q^2 + 2q + 1 is 3 + 2q + q^2.
    CHECK(reverse_coeffs(poly({1, 2, 3}), 2) == poly({3, 2, 1}));
    CHECK(reverse_coeffs(poly({0, 1}), 3) == poly({0, 0, 1}));
    CHECK(reverse_coeffs(QLaurent::zero(), 5).is_zero());
    CHECK_THROWS_AS(reverse_coeffs(poly({1, 2, 3}), 1), DegreeOverflowError);
    CHECK_THROWS_AS(reverse_coeffs(QLaurent::monomial(-1), 2), DegreeOverflowError);
    // Involution at the exact degree.
    for (int d = 0; d <= 6; ++d) {
        QLaurent f = q_binomial(6, 3);
        QLaurent r = reverse_coeffs(f, 9);
        CHECK(reverse_coeffs(r, 9) == f);
    }
}

TEST_CASE("exact division") {
    CHECK(exact_div(q_factorial(4), q_factorial(3)) == q_int(4));
    CHECK(exact_div(QLaurent::zero(), q_int(2)).is_zero());
    // Laurent operands divide exactly too.
    QLaurent f = QLaurent::monomial(-2) * poly({1, 1});
    CHECK(exact_div(f, QLaurent::monomial(-2)) == poly({1, 1}));
    CHECK_THROWS_AS(exact_div(QLaurent::one(), QLaurent::zero()), RangeError);
    CHECK_THROWS_AS(exact_div(poly({1, 1, 1}), poly({1, 1})), InternalArithmeticError);
}
