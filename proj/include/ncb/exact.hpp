#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ncb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(top, k) as the polynomial top(top-1)...(top-k+1)/k!.
/// Zero for k < 0; for top >= 0 this is the ordinary coefficient (zero when k > top).
BigInt binomial(const BigInt& top, long long k);
BigInt binomial(long long top, long long k);

/// num/den in lowest terms; accepts a negative denominator. Throws
/// std::domain_error when den is zero.
Rational ratio(const BigInt& num, const BigInt& den);

BigInt factorial(long long n);
BigInt power(long long base, unsigned exponent);

/// Converts an exact rational to an integer, throwing std::domain_error naming
/// `what` when the value is not integral.
BigInt require_integer(const Rational& value, std::string_view what);

inline int sign_power(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

}  // namespace ncb
