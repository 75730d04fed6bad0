#include "parkfn/abel.hpp"

#include <sstream>

#include "parkfn/compositions.hpp"
#include "parkfn/errors.hpp"

namespace parkfn {

namespace {

std::string describe(const std::vector<std::int64_t>& s)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? "," : "") << s[i];
    }
    os << ')';
    return os.str();
}

} // namespace

BigRat abel_multinomial(const AbelSpec& spec)
{
    if (spec.x.size() != spec.p.size()) {
        throw UsageError("x and p must have the same length");
    }
    if (spec.n < 0) {
        throw UsageError("n must be nonnegative");
    }
    const auto m = spec.x.size();
    BigRat sum = 0;
    for_each_composition(spec.n, m, [&](const std::vector<std::int64_t>& s) {
        BigRat term(multinomial(spec.n, s));
        for (std::size_t j = 0; j < m; ++j) {
            const BigRat base = spec.x[j] + BigRat(s[j]);
            const auto exp = s[j] + spec.p[j];
            if (base == 0 && exp < 0) {
                throw DomainError("Abel term undefined at composition " + describe(s) +
                                  ": x_" + std::to_string(j + 1) + " + s_" + std::to_string(j + 1) +
                                  " = 0 under exponent " + std::to_string(exp));
            }
            term *= rat_pow(base, exp);
        }
        sum += term;
    });
    return sum;
}

BigRat abel_special(const std::vector<BigRat>& x, std::int64_t n, AbelVariant variant)
{
    if (x.empty()) {
        throw UsageError("abel_special needs at least one variable");
    }
    if (n < 0) {
        throw UsageError("n must be nonnegative");
    }
    BigRat product = 1;
    BigRat total = 0;
    for (const auto& xj : x) {
        if (xj == 0) {
            throw DomainError("abel_special requires every x_j to be nonzero");
        }
        product *= xj;
        total += xj;
    }
    switch (variant) {
    case AbelVariant::AllMinusOne:
        return total * rat_pow(total + BigRat(n), n - 1) / product;
    case AbelVariant::LastZero:
        return x.back() * rat_pow(total + BigRat(n), n) / product;
    }
    throw UsageError("unknown Abel variant");
}

} // namespace parkfn
