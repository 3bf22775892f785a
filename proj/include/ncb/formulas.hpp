#pragma once

#include "ncb/exact.hpp"

#include <string>
#include <vector>

namespace ncb {

/// Polynomial with arbitrary-precision integer coefficients (index = degree).
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coefficient(int k) const;
    BigInt operator()(const BigInt& x) const;

    /// "1 + 9*x + 9*x^2 + x^3"
    std::string to_string() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
};

// Disc ------------------------------------------------------------------------

/// (1/n)·C(n,k)·C(n,k+1); requires 0 <= k <= n-1.
BigInt narayana(int n, int k);
BigInt catalan(int n);

struct DiscCounts {
    std::vector<BigInt> rank_counts;  ///< C(n,k)², k = 0..n
    BigInt total;                     ///< C(2n,n)
    BigInt mobius_a;                  ///< μ(0̂,1̂) of NC^(A)(n)
    BigInt mobius_b;                  ///< μ(0̂,1̂) of NC^(B)(n)
};
DiscCounts disc_counts(int n);

/// Σ_k C(n,k)² x^k.
IntPolynomial disc_rank_gen(int n);

// Annulus counts --------------------------------------------------------------

/// Partitions of NC^(B)(p,q) with connectivity c >= 1, e exterior and i
/// interior pairs of blocks. Zero outside the admissible range.
BigInt annulus_cell_count(int p, int q, int c, int e, int i);
BigInt annulus_connectivity_count(int p, int q, int c);
BigInt annulus_total(int p, int q);
/// Partitions with positive connectivity: (pq/(p+q))·C(2p,p)·C(2q,q).
BigInt annulus_positive_total(int p, int q);

/// Rank generating function as a triple sum over (c, e, i).
IntPolynomial rank_gen(int p, int q);
/// Same polynomial with the positive-connectivity part in two-index form.
IntPolynomial rank_gen_compact(int p, int q);

// Zeta polynomial, chains, Möbius ---------------------------------------------

/// Z(m) = C(mp,p)C(mq,q) + Σ_{c=1..p} 2c·C(mp,p−c)C(mq,q+c) at any integer m.
BigInt zeta_poly(int p, int q, long long m);
/// Positive-connectivity multichains as the raw sum over per-level set sizes (m >= 2).
BigInt zeta_positive_direct(int p, int q, int m);
/// Its collapsed form Σ_{c>=1} 2c·C(mp,p−c)C(mq,q+c).
BigInt zeta_positive_closed(int p, int q, long long m);
/// (2 + mn/((m−1)(n−1)))·C(m(n−1),n) with the removable pole at m = 1 cancelled.
BigInt zeta_poly_q1(int n, long long m);
/// Coefficients of Z as a polynomial in m, by exact interpolation.
std::vector<Rational> zeta_coefficients(int p, int q);

BigInt max_chains(int p, int q);
/// n^n, the maximal chains of NC^(B)(n).
BigInt max_chains_disc(int n);

BigInt mobius_annulus(int p, int q);
/// (−1)^n C(2n−1,n)(5n−4)/(4n−2); n >= 2.
BigInt mobius_q1(int n);

/// |NC^(B)(n1,n2,n3)| via the four admissible partial matchings of the circles.
BigInt multi3_total(int n1, int n2, int n3);

// Identities ------------------------------------------------------------------

/// Σ_k C(n,k)C(n,k+r) and C(2n,n−r).
BigInt vandermonde_sum(int n, int r);
BigInt vandermonde_closed(int n, int r);

/// Σ_{a_1..a_k} Π C(A_j,a_j) · C(A_{k+1}, a_1+…+a_k+b) and C(ΣA, A_{k+1}−b);
/// `tops` holds A_1..A_{k+1}.
BigInt hypersum_sum(const std::vector<int>& tops, int b);
BigInt hypersum_closed(const std::vector<int>& tops, int b);

/// Σ_{c>=1} 2c·C(2p,p−c)C(2q,q−c) and 2C(2p,p−1)C(2q,q−1)(p+1)(q+1)/(2(p+q)).
BigInt dixon_sum(int p, int q);
Rational dixon_closed(int p, int q);

}  // namespace ncb
