#include "doctest.h"

#include "ncb/formulas.hpp"

using namespace ncb;

TEST_CASE("exact helpers")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-3, 2) == 6);
    CHECK(binomial(4, -1) == 0);
    CHECK(factorial(10) == 3628800);
    CHECK(power(3, 4) == 81);
    CHECK(ratio(6, -4) == Rational(-3, 2));
    CHECK_THROWS_AS(ratio(1, 0), std::domain_error);
    CHECK(require_integer(Rational(8, 2), "x") == 4);
    CHECK_THROWS_AS(require_integer(Rational(1, 2), "x"), std::domain_error);
    CHECK(to_string(BigInt(-12)) == "-12");
}

TEST_CASE("polynomials")
{
    const IntPolynomial a({1, 2});
    const IntPolynomial b({BigInt(-1), BigInt(0), BigInt(1), BigInt(0)});
    CHECK(b.degree() == 2);
    CHECK(IntPolynomial().degree() == -1);
    CHECK((a * a) == IntPolynomial({1, 4, 4}));
    CHECK((a + b) == IntPolynomial({0, 2, 1}));
    CHECK(a(BigInt(3)) == 7);
    CHECK(IntPolynomial({1, 9, 9, 1}).to_string() == "1 + 9*x + 9*x^2 + x^3");
}

TEST_CASE("disc counts")
{
    CHECK(catalan(5) == 42);
    CHECK(narayana(4, 1) == 6);
    const DiscCounts d = disc_counts(3);
    CHECK(d.rank_counts == std::vector<BigInt>{1, 9, 9, 1});
    CHECK(d.total == 20);
    CHECK(d.mobius_b == -10);
    CHECK(d.mobius_a == 2);
    CHECK(disc_rank_gen(3) == IntPolynomial({1, 9, 9, 1}));
    CHECK(max_chains_disc(3) == 27);
}

TEST_CASE("annulus counts")
{
    CHECK(annulus_total(1, 1) == 6);
    CHECK(annulus_total(2, 1) == 20);
    CHECK(annulus_total(4, 4) == 14700);
    CHECK(annulus_total(7, 1) == 12870);
    CHECK(annulus_positive_total(1, 1) == 2);
    CHECK(annulus_cell_count(5, 3, 1, 2, 1) == 2 * binomial(5, 2) * binomial(5, 3) * binomial(3, 1) * binomial(3, 2));
    CHECK(annulus_cell_count(2, 1, 2, 0, 0) == 0);
    BigInt sum = 0;
    for (int c = 0; c <= 3; ++c) sum += annulus_connectivity_count(3, 4, c);
    CHECK(sum == annulus_total(3, 4));
    CHECK(rank_gen(2, 1) == IntPolynomial({1, 9, 9, 1}));
    for (int p = 1; p <= 5; ++p) {
        for (int q = 1; q <= 5; ++q) {
            CHECK(rank_gen_compact(p, q) == rank_gen(p, q));
            CHECK(rank_gen(p, q)(BigInt(1)) == annulus_total(p, q));
        }
    }
}

TEST_CASE("zeta polynomial, chains and Mobius values")
{
    CHECK(zeta_poly(1, 1, 3) == 15);
    CHECK(zeta_poly(2, 1, 3) == 85);
    CHECK(zeta_poly(2, 1, 2) == 20);
    CHECK(zeta_poly(3, 2, 1) == 1);
    CHECK(zeta_poly(2, 1, -1) == -11);
    CHECK(zeta_poly_q1(3, 3) == 85);
    CHECK(zeta_poly_q1(4, 1) == 1);
    for (int m = 2; m <= 5; ++m) CHECK(zeta_positive_direct(2, 3, m) == zeta_positive_closed(2, 3, m));
    CHECK(max_chains(1, 1) == 4);
    CHECK(max_chains(2, 1) == 28);
    CHECK(mobius_annulus(1, 1) == 3);
    CHECK(mobius_annulus(2, 1) == -11);
    CHECK(mobius_q1(3) == -11);
    const auto coeffs = zeta_coefficients(2, 1);
    CHECK(coeffs.size() == 4);
    CHECK(coeffs.back() * Rational(factorial(3)) == Rational(28));
}

TEST_CASE("three circles")
{
    CHECK(multi3_total(1, 1, 1) == 20);
    CHECK(multi3_total(1, 1, 2) == 68);
    CHECK(multi3_total(1, 2, 2) == 240);
    CHECK(multi3_total(2, 2, 2) == 864);
}

TEST_CASE("identities")
{
    for (int n = 0; n <= 12; ++n) {
        for (int r = 0; r <= n; ++r) CHECK(vandermonde_sum(n, r) == vandermonde_closed(n, r));
    }
    CHECK(hypersum_sum({2, 3, 4}, 1) == hypersum_closed({2, 3, 4}, 1));
    CHECK(hypersum_sum({1, 2, 3, 4}, 2) == hypersum_closed({1, 2, 3, 4}, 2));
    for (int p = 1; p <= 8; ++p) {
        for (int q = 1; q <= 8; ++q) CHECK(Rational(dixon_sum(p, q)) == dixon_closed(p, q));
    }
}
