#pragma once

#include <cstdint>
#include <vector>

#include "parkfn/bignum.hpp"

namespace parkfn {

/// Arguments of Abel's multinomial sum
///   A_n(x; p) = sum over compositions s of n into m parts of
///               multinomial(n; s) * prod_j (x_j + s_j)^{s_j + p_j}.
struct AbelSpec {
    std::vector<BigRat> x;
    std::vector<std::int64_t> p;
    std::int64_t n = 0;
};

/// Exact value of A_n(x; p). Throws DomainError naming the composition when a
/// term has a zero base under a negative exponent.
BigRat abel_multinomial(const AbelSpec& spec);

enum class AbelVariant {
    AllMinusOne,  // p = (-1, ..., -1)
    LastZero,     // p = (-1, ..., -1, 0)
};

/// Closed forms of A_n for the two special exponent patterns:
///   AllMinusOne: (x_1...x_m)^{-1} (sum x) (sum x + n)^{n-1}
///   LastZero:    (x_1...x_m)^{-1} x_m (sum x + n)^n
BigRat abel_special(const std::vector<BigRat>& x, std::int64_t n, AbelVariant variant);

} // namespace parkfn
