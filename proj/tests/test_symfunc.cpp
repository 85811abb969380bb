#include <doctest.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deltaq/error.hpp"
#include "deltaq/symfunc.hpp"
#include "oracles.hpp"

using namespace deltaq;
using oracles::poly;

TEST_CASE("symfunc term bookkeeping") {
    SymFunc f = SymFunc::schur(Partition({2}));
    f.add_term(Partition({1, 1}), poly({0, 1}));
    CHECK(f.coeff(Partition({2})) == QLaurent::one());
    CHECK(f.coeff(Partition({1, 1})) == poly({0, 1}));
    f.add_term(Partition({2}), -QLaurent::one());
    CHECK(f.coeff(Partition({2})).is_zero());
    CHECK(f.terms().size() == 1);                      // zero terms dropped
    CHECK_THROWS_AS(f.add_term(Partition({3}), QLaurent::one()), DegreeMismatchError);
    CHECK_THROWS_AS(SymFunc::schur(Partition({2})) + SymFunc::schur(Partition({3})),
                    DegreeMismatchError);
    CHECK(SymFunc::one().degree() == 0);
    CHECK((f - f).is_zero());
    CHECK(f.scaled(QLaurent::zero()).is_zero());
}

TEST_CASE("omega is the conjugating involution") {
    CHECK(omega(SymFunc::schur(Partition({3}))) == SymFunc::schur(Partition({1, 1, 1})));
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            SymFunc s = SymFunc::schur(lam).scaled(poly({1, 2}));
            CHECK(omega(omega(s)) == s);
        }
}

TEST_CASE("hall inner product is schur-orthonormal") {
    SymFunc f(3), g(3);
    f.add_term(Partition({3}), poly({1, 1}));
    f.add_term(Partition({2, 1}), QLaurent::monomial(2));
    g.add_term(Partition({2, 1}), poly({0, 3}));
    g.add_term(Partition({1, 1, 1}), QLaurent::one());
    CHECK(hall_inner(f, g) == QLaurent::monomial(2) * poly({0, 3}));
    CHECK(hall_inner(SymFunc::schur(Partition({3})), SymFunc::schur(Partition({3}))) ==
          QLaurent::one());
    CHECK(hall_inner(SymFunc::schur(Partition({3})), SymFunc::schur(Partition({2, 1}))).is_zero());
    CHECK_THROWS_AS(hall_inner(SymFunc::one(), SymFunc::schur(Partition({1}))),
                    DegreeMismatchError);
}

TEST_CASE("dual pieri rule for e_j") {
    // e_1 * s_(1) = s_(2) + s_(1,1).
    SymFunc r = e_multiply(1, SymFunc::schur(Partition({1})));
    CHECK(r.coeff(Partition({2})) == QLaurent::one());
    CHECK(r.coeff(Partition({1, 1})) == QLaurent::one());
    // e_2 * s_(2) = s_(3,1) + s_(2,1,1): add a vertical 2-strip to (2).
    SymFunc r2 = e_multiply(2, SymFunc::schur(Partition({2})));
    CHECK(r2.terms().size() == 2);
    CHECK(r2.coeff(Partition({3, 1})) == QLaurent::one());
    CHECK(r2.coeff(Partition({2, 1, 1})) == QLaurent::one());
    // e_n * 1 = s_(1^n).
    CHECK(e_multiply(3, SymFunc::one()) == SymFunc::schur(Partition({1, 1, 1})));
    CHECK(e_multiply(0, SymFunc::schur(Partition({2}))) == SymFunc::schur(Partition({2})));
}

TEST_CASE("skewing is adjoint to multiplication") {
    for (int d = 1; d <= 5; ++d)
        for (int j = 1; j <= d; ++j)
            for (const Partition& lam : enumerate_partitions(d))
                for (const Partition& mu : enumerate_partitions(d - j))
                    CHECK(hall_inner(e_perp(j, SymFunc::schur(lam)), SymFunc::schur(mu)) ==
                          hall_inner(SymFunc::schur(lam), e_multiply(j, SymFunc::schur(mu))));
    CHECK_THROWS_AS(e_perp(2, SymFunc::schur(Partition({1}))), RangeError);
}

TEST_CASE("joint injectivity of low skewings at small degree") {
    // The family f -> (e_1^perp f, ..., e_d^perp f) separates nonzero
    // homogeneous f of degree d <= 5: check that the linear map
    // s_lam -> sum_j images has full rank by pairwise independence of rows.
    for (int d = 1; d <= 5; ++d) {
        auto lams = enumerate_partitions(d);
        // Build the "row" of each lam: concatenated coefficient maps.
        std::vector<std::map<std::pair<int, Partition>, QLaurent>> rows;
        for (const Partition& lam : lams) {
            std::map<std::pair<int, Partition>, QLaurent> row;
            for (int j = 1; j <= d; ++j) {
                SymFunc image = e_perp(j, SymFunc::schur(lam));
                for (const auto& [mu, c] : image.terms()) row[{j, mu}] = c;
            }
            rows.push_back(row);
        }
        // Distinct Schur functions must have distinct, nonempty rows.
        for (size_t a = 0; a < rows.size(); ++a) {
            CHECK_FALSE(rows[a].empty());
            for (size_t b = a + 1; b < rows.size(); ++b) CHECK(rows[a] != rows[b]);
        }
    }
}

TEST_CASE("dual hall-littlewood expansions") {
    // Q'_(1^n) has K_{lam,(1^n)}(q) coefficients; top term q^b(lam').
    SymFunc q3 = qprime(Partition({1, 1, 1}));
    CHECK(q3.coeff(Partition({3})) == poly({0, 0, 0, 1}));
    CHECK(q3.coeff(Partition({2, 1})) == poly({0, 1, 1}));
    CHECK(q3.coeff(Partition({1, 1, 1})) == QLaurent::one());
    // Q'_(n) = s_(n).
    CHECK(qprime(Partition({4})) == SymFunc::schur(Partition({4})));
    CHECK(qprime(Partition()) == SymFunc::one());
    // q = 1 specialization: column of Kostka numbers (h_mu expansion).
    SymFunc q21 = qprime(Partition({2, 1}));
    CHECK(q21.coeff(Partition({3})).eval_at_one() == Rational(1));
    CHECK(q21.coeff(Partition({2, 1})).eval_at_one() == Rational(1));
    CHECK(q21.coeff(Partition({1, 1, 1})).is_zero());
}

TEST_CASE("coefficient reversal on symmetric functions") {
    // rev at the common degree 2 of 3q^2 s_(2,1) + 2q s_(1,1,1) + s_(3)
    // gives 3 s_(2,1) + 2q s_(1,1,1) + q^2 s_(3).
    SymFunc f(3);
    f.add_term(Partition({2, 1}), QLaurent::monomial(2, Rational(3)));
    f.add_term(Partition({1, 1, 1}), QLaurent::monomial(1, Rational(2)));
    f.add_term(Partition({3}), QLaurent::one());
    SymFunc r = rev_q_sym(f, 2);
    CHECK(r.coeff(Partition({2, 1})) == QLaurent(Rational(3)));
    CHECK(r.coeff(Partition({1, 1, 1})) == QLaurent::monomial(1, Rational(2)));
    CHECK(r.coeff(Partition({3})) == QLaurent::monomial(2));
    CHECK(rev_q_sym(r, 2) == f);
    CHECK_THROWS_AS(rev_q_sym(f, 1), DegreeOverflowError);
    // The error names the offending partition.
    try {
        rev_q_sym(f, 1);
        CHECK(false);
    } catch (const DegreeOverflowError& e) {
        CHECK(std::string(e.what()).find("(2,1)") != std::string::npos);
    }
}

TEST_CASE("monomial expansion in finitely many variables") {
    // s_(2,1) in 2 variables: x1^2 x2 + x1 x2^2.
    auto table = expand_in_vars(SymFunc::schur(Partition({2, 1})), 2);
    REQUIRE(table.size() == 2);
    CHECK(table.at({2, 1}) == QLaurent::one());
    CHECK(table.at({1, 2}) == QLaurent::one());
    // s_(1,1,1) needs three variables.
    CHECK(expand_in_vars(SymFunc::schur(Partition({1, 1, 1})), 2).empty());
    // Symmetric-polynomial sanity: coefficient is constant on permutations.
    auto t2 = expand_in_vars(SymFunc::schur(Partition({3, 1})), 3);
    CHECK(t2.at({3, 1, 0}) == t2.at({0, 1, 3}));
    CHECK(t2.at({2, 1, 1}) == t2.at({1, 1, 2}));
}

TEST_CASE("bisymmetric functions") {
    BiSymFunc f = bisym_product(SymFunc::schur(Partition({2})).scaled(poly({0, 1})),
                                SymFunc::schur(Partition({1, 1})));
    CHECK(f.ydegree() == 2);
    CHECK(f.xdegree() == 2);
    CHECK(f.terms().size() == 1);
    SymFunc c = bisym_y_coefficient(f, Partition({2}));
    CHECK(c.coeff(Partition({1, 1})) == poly({0, 1}));
    CHECK(bisym_y_coefficient(f, Partition({1, 1})).is_zero());
    CHECK_THROWS_AS(bisym_y_coefficient(f, Partition({1})), DegreeMismatchError);
    BiSymFunc g = f;
    g += bisym_product(SymFunc::schur(Partition({2})).scaled(-poly({0, 1})),
                       SymFunc::schur(Partition({1, 1})));
    CHECK(g.is_zero());
}
