#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parkfn/bignum.hpp"
#include "parkfn/core.hpp"

namespace parkfn {

using NodeSequence = std::vector<BigRat>;

/// g_m(x; a_0..a_{m-1}) from the (m+1)x(m+1) determinant whose i-th row holds
/// a_i^{k-i}/(k-i)! and whose last row holds x^k/k!, scaled by m!.
/// The matrix is unit upper triangular apart from the last row, so
/// eliminating that row against the others is exact Gaussian elimination in
/// O(m^2) rational operations. g_0 = 1.
BigRat goncarov_eval(const BigRat& x, std::span<const BigRat> nodes);

/// Coefficients c_0..c_m of g_m(x) = sum_k c_k x^k, obtained by running the
/// same elimination with the last row kept symbolic in x.
std::vector<BigRat> goncarov_coefficients(std::span<const BigRat> nodes);

/// Abel closed form (x-a)(x-a-mb)^{m-1} for nodes a, a+b, ..., a+(m-1)b.
BigRat abel_goncarov(const BigRat& x, const BigRat& a, const BigRat& b, std::int64_t m);

// |PF(u)| = (-1)^m g_m(0; u_1..u_m).
BigInt count_pf(const UVector& u);

// |PF(a,b,m)| = a (a+mb)^{m-1}.
BigInt count_pf_ab(const ABParams& p);

NodeSequence to_nodes(std::span<const Value> values);

} // namespace parkfn
