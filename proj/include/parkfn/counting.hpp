#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "parkfn/bignum.hpp"
#include "parkfn/core.hpp"

namespace parkfn {

/// Gončarov factors g_s(u_j; u_{j+1}, ..., u_{j+s}) for one threshold vector,
/// memoized on the window (j, s). Shift invariance reduces each window to
/// g_s(0; u_{j+1}-u_j, ..., u_{j+s}-u_j). Not thread-safe; use one per call.
class GoncarovWindowCache {
public:
    explicit GoncarovWindowCache(const UVector& u) : u_(u) {}

    const BigRat& get(std::size_t start, std::size_t length);

private:
    const UVector& u_;
    std::map<std::pair<std::size_t, std::size_t>, BigRat> cache_;
};

/// Number of pi in PF(u) with pi_1 = w_1, ..., pi_l = w_l (w non-decreasing,
/// 1 <= l <= m), summed over the prescribed-coordinate compositions with
/// Gončarov factors per window.
BigInt count_prescribed(const UVector& u, std::span<const Value> w);

/// |PF(u)| as a sum over compositions of m into u_m - m + 1 segment lengths,
/// each segment contributing a classical count (s+1)^{s-1}.
BigInt count_pf_composition(const UVector& u);

/// Number of pi in PF(a,b,m) with pi_1..pi_l = a+kb, ..., a+(k+l-1)b.
BigInt count_run_prescribed(const ABParams& p, std::int64_t l, std::int64_t k);

/// counts[j] = #{pi in PF(a,b,m) : pi_1 = j} for j in [1, a+(m-1)b];
/// counts[0] is unused and zero.
struct CoordinateDistribution {
    ABParams params;
    std::vector<BigInt> counts;

    BigInt total() const;
    Value top() const { return params.top(); }
    BigRat probability(Value j) const;
};

CoordinateDistribution first_coord_distribution(const ABParams& p);

// E(pi_1^pexp) under the uniform law on PF(a,b,m).
BigRat exact_moment(const ABParams& p, unsigned pexp);
BigRat exact_moment(const CoordinateDistribution& dist, unsigned pexp);

// E(pi_1^pexp pi_2^qexp) under the uniform law on PF(a,b,m); needs m >= 2.
BigRat exact_joint_moment(const ABParams& p, unsigned pexp, unsigned qexp);

} // namespace parkfn
