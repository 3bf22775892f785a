#include "ncb/exact.hpp"

#include <stdexcept>

namespace ncb {

BigInt binomial(const BigInt& top, long long k)
{
    if (k < 0) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (long long j = 0; j < k; ++j) {
        num *= top - j;
        den *= j + 1;
    }
    return num / den;  // exact: k consecutive integers are divisible by k!
}

BigInt binomial(long long top, long long k) { return binomial(BigInt(top), k); }

Rational ratio(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

BigInt factorial(long long n)
{
    if (n < 0) throw std::domain_error("factorial of a negative number");
    BigInt result = 1;
    for (long long j = 2; j <= n; ++j) result *= j;
    return result;
}

BigInt power(long long base, unsigned exponent)
{
    return boost::multiprecision::pow(BigInt(base), exponent);
}

BigInt require_integer(const Rational& value, std::string_view what)
{
    if (boost::multiprecision::denominator(value) != 1) {
        throw std::domain_error(std::string(what) + " is not an integer: " + to_string(value));
    }
    return boost::multiprecision::numerator(value);
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value)
{
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

}  // namespace ncb
