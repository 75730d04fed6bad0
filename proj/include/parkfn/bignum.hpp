#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace parkfn {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(std::int64_t n, std::int64_t k);

// Multinomial coefficient n! / (parts[0]! parts[1]! ...); parts must sum to n.
BigInt multinomial(std::int64_t n, const std::vector<std::int64_t>& parts);

// base^exp over the rationals. A negative exponent inverts the base and
// throws DomainError when the base is zero. 0^0 = 1.
BigRat rat_pow(const BigRat& base, std::int64_t exp);

BigInt int_pow(const BigInt& base, unsigned long exp);

bool is_integral(const BigRat& q);

// Returns q as an integer, throwing ArithmeticError naming `what` if the
// denominator is not 1.
BigInt require_integral(const BigRat& q, std::string_view what);

// Decimal string "n" for integers, "n/d" otherwise.
std::string to_string(const BigInt& z);
std::string to_string(const BigRat& q);

double to_double(const BigRat& q);

// Parses "3", "-7/2" or "0.25" into an exact rational.
BigRat parse_rational(std::string_view text);

// Power sums 0..n of j^p: result[t] = sum_{j=1}^{t} j^p.
std::vector<BigInt> power_prefix_sums(std::int64_t n, unsigned p);

} // namespace parkfn
