#include "parkfn/bignum.hpp"

#include <numeric>

#include "parkfn/errors.hpp"

namespace parkfn {

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt multinomial(std::int64_t n, const std::vector<std::int64_t>& parts)
{
    std::int64_t rest = n;
    BigInt r = 1;
    for (auto p : parts) {
        if (p < 0 || p > rest) {
            throw UsageError("multinomial: parts must be nonnegative and sum to n");
        }
        r *= binomial(rest, p);
        rest -= p;
    }
    if (rest != 0) {
        throw UsageError("multinomial: parts must be nonnegative and sum to n");
    }
    return r;
}

BigInt int_pow(const BigInt& base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigRat rat_pow(const BigRat& base, std::int64_t exp)
{
    if (exp >= 0) {
        BigRat r(int_pow(base.get_num(), static_cast<unsigned long>(exp)),
                 int_pow(base.get_den(), static_cast<unsigned long>(exp)));
        return r;
    }
    if (base == 0) {
        throw DomainError("zero raised to a negative power");
    }
    auto e = static_cast<unsigned long>(-exp);
    BigRat r(int_pow(base.get_den(), e), int_pow(base.get_num(), e));
    r.canonicalize();
    return r;
}

bool is_integral(const BigRat& q)
{
    return q.get_den() == 1;
}

BigInt require_integral(const BigRat& q, std::string_view what)
{
    if (!is_integral(q)) {
        throw ArithmeticError(std::string(what) + " is not integral: " + to_string(q));
    }
    return q.get_num();
}

std::string to_string(const BigInt& z)
{
    return z.get_str(10);
}

std::string to_string(const BigRat& q)
{
    return q.get_str(10);
}

double to_double(const BigRat& q)
{
    return mpq_get_d(q.get_mpq_t());
}

BigRat parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) {
        throw UsageError("empty rational");
    }
    auto dot = s.find('.');
    try {
        if (dot == std::string::npos) {
            BigRat r(s, 10);
            r.canonicalize();
            return r;
        }
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+") {
            throw UsageError("malformed rational: " + s);
        }
        BigInt num(digits, 10);
        BigRat r(num, int_pow(10, s.size() - dot - 1));
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rational: " + s);
    }
}

std::vector<BigInt> power_prefix_sums(std::int64_t n, unsigned p)
{
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
    out[0] = 0;
    for (std::int64_t j = 1; j <= n; ++j) {
        out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j) - 1] + int_pow(j, p);
    }
    return out;
}

} // namespace parkfn
