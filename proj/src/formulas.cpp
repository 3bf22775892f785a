#include "ncb/formulas.hpp"

#include <stdexcept>

namespace ncb {

namespace {

void require_positive(int value, const char* name)
{
    if (value < 1) throw std::invalid_argument(std::string(name) + " must be positive");
}

// Coefficients of (Σ_a C(n,a) x^a)^levels.
std::vector<BigInt> binomial_row_power(int n, int levels)
{
    std::vector<BigInt> result{1};
    for (int level = 0; level < levels; ++level) {
        std::vector<BigInt> next(result.size() + n, 0);
        for (std::size_t s = 0; s < result.size(); ++s) {
            for (int a = 0; a <= n; ++a) next[s + a] += result[s] * binomial(n, a);
        }
        result = std::move(next);
    }
    return result;
}

std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients))
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

BigInt IntPolynomial::operator()(const BigInt& x) const
{
    BigInt value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
    return value;
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        const BigInt magnitude = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += magnitude.str();
            continue;
        }
        if (magnitude != 1) out += magnitude.str() + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> sum(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) sum[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) sum[k] += b.coeffs_[k];
    return IntPolynomial(std::move(sum));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<BigInt> product(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) product[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(product));
}

// ---------------------------------------------------------------------------
// Disc

BigInt narayana(int n, int k)
{
    require_positive(n, "n");
    if (k < 0 || k > n - 1) throw std::invalid_argument("narayana needs 0 <= k <= n-1");
    return require_integer(Rational(binomial(n, k) * binomial(n, k + 1), n), "narayana number");
}

BigInt catalan(int n)
{
    if (n < 0) throw std::invalid_argument("catalan needs n >= 0");
    return require_integer(Rational(binomial(2 * n, n), n + 1), "catalan number");
}

DiscCounts disc_counts(int n)
{
    require_positive(n, "n");
    DiscCounts counts;
    for (int k = 0; k <= n; ++k) counts.rank_counts.push_back(binomial(n, k) * binomial(n, k));
    counts.total = binomial(2 * n, n);
    counts.mobius_a = sign_power(n + 1) *
                      require_integer(Rational(factorial(2 * n - 2), factorial(n - 1) * factorial(n)), "type A Möbius value");
    counts.mobius_b = sign_power(n) * binomial(2 * n - 1, n);
    return counts;
}

IntPolynomial disc_rank_gen(int n)
{
    return IntPolynomial(disc_counts(n).rank_counts);
}

// ---------------------------------------------------------------------------
// Annulus counts

BigInt annulus_cell_count(int p, int q, int c, int e, int i)
{
    require_positive(p, "p");
    require_positive(q, "q");
    if (c < 1 || e < 0 || i < 0 || e + c > p || i + c > q) return 0;
    return 2 * c * binomial(p, e) * binomial(p, e + c) * binomial(q, i) * binomial(q, i + c);
}

BigInt annulus_connectivity_count(int p, int q, int c)
{
    require_positive(p, "p");
    require_positive(q, "q");
    if (c < 0) throw std::invalid_argument("connectivity must be nonnegative");
    if (c == 0) return binomial(2 * p, p) * binomial(2 * q, q);
    return 2 * c * binomial(2 * p, p - c) * binomial(2 * q, q - c);
}

BigInt annulus_total(int p, int q)
{
    require_positive(p, "p");
    require_positive(q, "q");
    return require_integer(Rational(p + q + p * q, p + q) * binomial(2 * p, p) * binomial(2 * q, q), "annulus total");
}

BigInt annulus_positive_total(int p, int q)
{
    require_positive(p, "p");
    require_positive(q, "q");
    return require_integer(Rational(p * q, p + q) * binomial(2 * p, p) * binomial(2 * q, q), "positive-connectivity total");
}

IntPolynomial rank_gen(int p, int q)
{
    require_positive(p, "p");
    require_positive(q, "q");
    std::vector<BigInt> positive(p + q + 1, 0);
    for (int c = 1; c <= std::min(p, q); ++c) {
        for (int e = 0; e + c <= p; ++e) {
            for (int i = 0; i + c <= q; ++i) positive[p + q - e - i - c] += annulus_cell_count(p, q, c, e, i);
        }
    }
    return disc_rank_gen(p) * disc_rank_gen(q) + IntPolynomial(std::move(positive));
}

IntPolynomial rank_gen_compact(int p, int q)
{
    require_positive(p, "p");
    require_positive(q, "q");
    const Rational factor(2 * p * q, p + q);
    std::vector<Rational> sums(p + q + 1, Rational(0));
    for (int i = 1; i <= p; ++i) {
        for (int j = 1; j <= q; ++j) {
            const BigInt inner = (binomial(p, i) * binomial(q, j - 1) + binomial(p, i - 1) * binomial(q, j)) *
                                 binomial(p - 1, i - 1) * binomial(q - 1, j - 1);
            sums[i + j - 1] += factor * inner;
        }
    }
    std::vector<BigInt> positive;
    for (const auto& s : sums) positive.push_back(require_integer(s, "compact rank coefficient"));
    return disc_rank_gen(p) * disc_rank_gen(q) + IntPolynomial(std::move(positive));
}

// ---------------------------------------------------------------------------
// Zeta polynomial, chains, Möbius

BigInt zeta_poly(int p, int q, long long m)
{
    require_positive(p, "p");
    require_positive(q, "q");
    return binomial(BigInt(m * p), p) * binomial(BigInt(m * q), q) + zeta_positive_closed(p, q, m);
}

BigInt zeta_positive_direct(int p, int q, int m)
{
    require_positive(p, "p");
    require_positive(q, "q");
    if (m < 2) throw std::invalid_argument("multichain sums need m >= 2");
    const auto ext = binomial_row_power(p, m - 1);  // weight of each total Σa_j
    const auto in = binomial_row_power(q, m - 1);   // weight of each total Σb_j
    BigInt total = 0;
    for (int c = 1; c <= p; ++c) {
        BigInt outer = 0, inner = 0;
        for (std::size_t s = 0; s < ext.size(); ++s) outer += ext[s] * binomial(p, static_cast<long long>(s) + c);
        for (std::size_t s = 0; s < in.size(); ++s) inner += in[s] * binomial(q, static_cast<long long>(s) - c);
        total += 2 * c * outer * inner;
    }
    return total;
}

BigInt zeta_positive_closed(int p, int q, long long m)
{
    BigInt total = 0;
    for (int c = 1; c <= p; ++c) total += 2 * c * binomial(BigInt(m * p), p - c) * binomial(BigInt(m * q), q + c);
    return total;
}

BigInt zeta_poly_q1(int n, long long m)
{
    if (n < 2) throw std::invalid_argument("zeta_poly_q1 needs n >= 2");
    const BigInt top = BigInt(m) * (n - 1);
    // mn/((m−1)(n−1))·C(m(n−1),n): the factor (m−1)(n−1) = top − (n−1) of the
    // falling factorial cancels.
    BigInt reduced = m * n;
    for (int j = 0; j < n; ++j) {
        if (j != n - 1) reduced *= top - j;
    }
    return 2 * binomial(top, n) + require_integer(Rational(reduced, factorial(n)), "zeta value");
}

std::vector<Rational> zeta_coefficients(int p, int q)
{
    const int degree = p + q;
    std::vector<Rational> result(degree + 1, Rational(0));
    for (int j = 0; j <= degree; ++j) {
        std::vector<Rational> basis{Rational(1)};
        Rational denominator(1);
        for (int k = 0; k <= degree; ++k) {
            if (k == j) continue;
            basis = multiply(basis, {Rational(-k), Rational(1)});
            denominator *= j - k;
        }
        const Rational scale = Rational(zeta_poly(p, q, j)) / denominator;
        for (std::size_t t = 0; t < basis.size(); ++t) result[t] += scale * basis[t];
    }
    return result;
}

BigInt max_chains(int p, int q)
{
    require_positive(p, "p");
    require_positive(q, "q");
    BigInt total = binomial(p + q, p) * power(p, p) * power(q, q);
    for (int c = 1; c <= p; ++c) total += 2 * c * binomial(p + q, p - c) * power(p, p - c) * power(q, q + c);
    return total;
}

BigInt max_chains_disc(int n)
{
    require_positive(n, "n");
    return power(n, static_cast<unsigned>(n));
}

BigInt mobius_annulus(int p, int q)
{
    require_positive(p, "p");
    require_positive(q, "q");
    BigInt total = binomial(2 * p - 1, p) * binomial(2 * q - 1, q);
    for (int c = 1; c <= p; ++c) total += 2 * c * binomial(2 * p - c - 1, p - 1) * binomial(2 * q + c - 1, q - 1);
    return sign_power(p + q) * total;
}

BigInt mobius_q1(int n)
{
    if (n < 2) throw std::invalid_argument("mobius_q1 needs n >= 2");
    return sign_power(n) * require_integer(Rational(binomial(2 * n - 1, n) * (5 * n - 4), 4 * n - 2), "Möbius value");
}

BigInt multi3_total(int n1, int n2, int n3)
{
    require_positive(n1, "n1");
    require_positive(n2, "n2");
    require_positive(n3, "n3");
    const Rational factor = Rational(1) + Rational(n1 * n2, n1 + n2) + Rational(n1 * n3, n1 + n3) + Rational(n2 * n3, n2 + n3);
    return require_integer(factor * binomial(2 * n1, n1) * binomial(2 * n2, n2) * binomial(2 * n3, n3), "three-circle total");
}

// ---------------------------------------------------------------------------
// Identities

BigInt vandermonde_sum(int n, int r)
{
    BigInt total = 0;
    for (int k = 0; k <= n - r; ++k) total += binomial(n, k) * binomial(n, k + r);
    return total;
}

BigInt vandermonde_closed(int n, int r) { return binomial(2 * n, n - r); }

BigInt hypersum_sum(const std::vector<int>& tops, int b)
{
    if (tops.size() < 2) throw std::invalid_argument("hypersum needs at least two tops");
    const std::size_t k = tops.size() - 1;
    std::vector<int> a(k, 0);
    BigInt total = 0;
    for (;;) {
        BigInt term = 1;
        int sum = 0;
        for (std::size_t j = 0; j < k; ++j) {
            term *= binomial(tops[j], a[j]);
            sum += a[j];
        }
        total += term * binomial(tops[k], sum + b);
        std::size_t j = 0;
        while (j < k && ++a[j] > tops[j]) a[j++] = 0;
        if (j == k) break;
    }
    return total;
}

BigInt hypersum_closed(const std::vector<int>& tops, int b)
{
    int sum = 0;
    for (int t : tops) sum += t;
    return binomial(sum, tops.back() - b);
}

BigInt dixon_sum(int p, int q)
{
    BigInt total = 0;
    for (int c = 1; c <= std::min(p, q); ++c) total += 2 * c * binomial(2 * p, p - c) * binomial(2 * q, q - c);
    return total;
}

Rational dixon_closed(int p, int q)
{
    return Rational(2 * binomial(2 * p, p - 1) * binomial(2 * q, q - 1) * (p + 1) * (q + 1), 2 * (p + q));
}

}  // namespace ncb
