#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "parkfn/bignum.hpp"

namespace parkfn {

/// Scaling regime a = c m + b. c > 0 is the generic case, c = 0 the special one.
struct Regime {
    std::int64_t b = 1;
    double c = 0.0;
    std::int64_t m = 1;

    Regime(std::int64_t b_, double c_, std::int64_t m_);

    bool generic() const noexcept { return c > 0.0; }
};

/// F(z) = sum_{s>=0} z^s (s+1)^{s-1} / s! on [0, 1/e], by inverting
/// x e^{-x} = z on [0, 1] with Halley steps and returning e^x.
double tree_function(double z);

// Partial sum of the defining series up to and including s = terms-1.
double tree_function_series(double z, int terms);

struct BorelLaw {
    double mu = 0.0;
};

// P(X = j) = e^{-mu j} (mu j)^{j-1} / j!, j >= 1.
double borel_pmf(const BorelLaw& law, std::int64_t j);
// P(X >= j) = 1 - sum_{i<j} pmf(i), j >= 1.
double borel_tail(const BorelLaw& law, std::int64_t j);

/// Two-term expansion of E(prod pi_i^{p_i}) for c > 0:
///   ((b+c)m)^P / prod(p_i+1) * (1 + (c(P+l)/2 - b^2 P) / (c(b+c)m)),  P = sum p_i.
/// The dropped remainder is O(m^-2) relative.
double asym_mixed_moment(const Regime& r, std::span<const int> p);

struct VarCov {
    double variance;
    double covariance;
};

// Leading behaviour of Var(pi_1) and Cov(pi_1, pi_2) in either regime.
VarCov asym_var_cov(const Regime& r);

struct MomentsC0 {
    double e1;   // E(pi_1)
    double e2;   // E(pi_1^2)
    double e11;  // E(pi_1 pi_2)
};

// c = 0 expansions with the sqrt(2 pi) m^{1/2} correction.
MomentsC0 asym_moments_c0(std::int64_t b, std::int64_t m);

struct DisplacementLaw {
    double mean;
    double variance;
};

DisplacementLaw asym_displacement(const Regime& r);

enum class Side { Left, Right };

/// Boundary probabilities of pi_1:
///   Right: P(pi_1 = a + (m-1)b - j) ~ (1 - Q_{b/(b+c)}(floor(j/b) + 2)) / ((b+c)m)
///   Left, c > 0: P(pi_1 = a + j) from the rescaled Poisson(cm/(be)) deviation
///   Left, c = 0: P(pi_1 = b + j) ~ (1 + Q_1(ceil(j/b) + 1)) / (bm)
double asym_boundary(const Regime& r, Side side, std::int64_t j);

// Flat value of P(pi_1 = j) for j <= a: 1/((b+c)m) or 2/(bm).
double asym_plateau(const Regime& r);

struct PowerSumComparison {
    BigRat exact;
    double asymptotic;
};

/// Sum over (s_1..s_l) with #{i : s_i <= S_k} >= k for every k of
/// prod f_i(s_i), f_i(s) = sum_{j=u_s+1}^{u_{s+1}} j^{p_i}, u_s = a + (s-1)b,
/// u_0 = 0, a = cm + b. Exact side by staged inclusion-exclusion (l <= 3);
/// asymptotic side (cm + (S_l+1)b)^{P+l} / prod(p_i+1) (1 + (P+l)/(2(b+c)m)).
PowerSumComparison constrained_power_sum(const Regime& r, std::span<const int> p,
                                         std::span<const std::int64_t> S);

// f(s) = sum_{j=u_s+1}^{u_{s+1}} j^p for the arithmetic thresholds with first term a.
BigInt block_power_sum(std::int64_t a, std::int64_t b, std::int64_t s, int p);

} // namespace parkfn
