#include "parkfn/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "parkfn/errors.hpp"

namespace parkfn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

void require_generic(const Regime& r, const char* what)
{
    if (!r.generic()) {
        throw RegimeError(std::string(what) + " is stated for c > 0; use the c = 0 formulas");
    }
}

} // namespace

Regime::Regime(std::int64_t b_, double c_, std::int64_t m_) : b(b_), c(c_), m(m_)
{
    if (b < 1 || m < 1) {
        throw UsageError("regime needs b >= 1 and m >= 1");
    }
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw RegimeError("c must be a finite nonnegative number");
    }
}

double tree_function(double z)
{
    const double branch = std::exp(-1.0);
    if (!(z >= 0.0) || z > branch * (1.0 + 4 * std::numeric_limits<double>::epsilon())) {
        throw DomainError("tree function is defined on [0, 1/e]");
    }
    if (z == 0.0) {
        return 1.0;
    }
    double x;
    if (z < 0.25) {
        x = z * (1.0 + z * (1.0 + 1.5 * z));
    } else {
        // expansion of the inverse around the branch point x = 1
        const double p = std::sqrt(std::max(0.0, 2.0 * (1.0 - kE * z)));
        x = 1.0 - p + p * p / 3.0 - 11.0 * p * p * p / 72.0;
    }
    for (int iter = 0; iter < 60 && x < 1.0; ++iter) {
        const double ex = std::exp(-x);
        const double f = x * ex - z;
        const double f1 = (1.0 - x) * ex;
        const double f2 = (x - 2.0) * ex;
        const double denom = f1 * f1 - 0.5 * f * f2;
        if (denom == 0.0) {
            break;
        }
        const double step = f * f1 / denom;
        double next = x - step;
        if (next > 1.0) {
            next = 1.0;
        }
        if (next < 0.0) {
            next = 0.5 * x;
        }
        const bool converged = std::abs(next - x) <= 1e-17 * std::max(1.0, x);
        x = next;
        if (converged) {
            break;
        }
    }
    return std::exp(x);
}

double tree_function_series(double z, int terms)
{
    double sum = 0.0;
    for (int s = 0; s < terms; ++s) {
        if (s == 0) {
            sum += 1.0;
            continue;
        }
        if (z == 0.0) {
            break;
        }
        const double lt = s * std::log(z) + (s - 1) * std::log(s + 1.0) - std::lgamma(s + 1.0);
        sum += std::exp(lt);
    }
    return sum;
}

double borel_pmf(const BorelLaw& law, std::int64_t j)
{
    if (j < 1) {
        throw UsageError("Borel pmf is supported on j >= 1");
    }
    if (law.mu < 0.0 || law.mu > 1.0) {
        throw DomainError("Borel parameter must lie in [0, 1]");
    }
    if (law.mu == 0.0) {
        return j == 1 ? 1.0 : 0.0;
    }
    const double dj = static_cast<double>(j);
    const double lp = -law.mu * dj + (dj - 1.0) * std::log(law.mu * dj) - std::lgamma(dj + 1.0);
    return std::exp(lp);
}

double borel_tail(const BorelLaw& law, std::int64_t j)
{
    if (j < 1) {
        throw UsageError("Borel tail is defined for j >= 1");
    }
    double below = 0.0;
    for (std::int64_t i = 1; i < j; ++i) {
        below += borel_pmf(law, i);
    }
    return 1.0 - below;
}

double asym_mixed_moment(const Regime& r, std::span<const int> p)
{
    require_generic(r, "asym_mixed_moment");
    if (p.empty()) {
        throw UsageError("need at least one exponent");
    }
    double total = 0.0;
    double denom = 1.0;
    for (int pi : p) {
        if (pi < 1) {
            throw UsageError("exponents must be positive");
        }
        total += pi;
        denom *= pi + 1.0;
    }
    const double b = static_cast<double>(r.b);
    const double m = static_cast<double>(r.m);
    const double l = static_cast<double>(p.size());
    const double lead = std::pow((b + r.c) * m, total) / denom;
    const double corr = (r.c * (total + l) / 2.0 - b * b * total) / (r.c * (b + r.c) * m);
    return lead * (1.0 + corr);
}

VarCov asym_var_cov(const Regime& r)
{
    const double b = static_cast<double>(r.b);
    const double m = static_cast<double>(r.m);
    if (r.generic()) {
        const double bc = b + r.c;
        return {bc * m * bc * m / 12.0 - b * b * bc * m / (6.0 * r.c),
                -b * b * bc * bc / (4.0 * r.c * r.c)};
    }
    return {b * b * m * m / 12.0 + b * b * (4.0 - 3.0 * kPi) * m / 24.0,
            b * b * (8.0 - 3.0 * kPi) * m / 24.0};
}

MomentsC0 asym_moments_c0(std::int64_t b_, std::int64_t m_)
{
    if (b_ < 1 || m_ < 1) {
        throw UsageError("need b >= 1 and m >= 1");
    }
    const double b = static_cast<double>(b_);
    const double m = static_cast<double>(m_);
    const double k = std::sqrt(2.0 * kPi) / 4.0;
    MomentsC0 out;
    out.e1 = b * (m / 2.0 - k * std::sqrt(m) + 7.0 / 6.0) + 0.5;
    out.e2 = b * b * (m * m / 3.0 - k * std::pow(m, 1.5) + 4.0 / 3.0 * m) + b / 2.0 * m;
    out.e11 = b * b * (m * m / 4.0 - k * std::pow(m, 1.5) + 1.5 * m) + b / 2.0 * m;
    return out;
}

DisplacementLaw asym_displacement(const Regime& r)
{
    const double b = static_cast<double>(r.b);
    const double m = static_cast<double>(r.m);
    if (r.generic()) {
        const double c = r.c;
        return {c * m * m / 2.0 + (b * b / (2.0 * c) + b / 2.0 - 0.5) * m,
                (b + c) * (b + c) / 12.0 * m * m * m};
    }
    return {b * std::sqrt(2.0 * kPi) / 4.0 * std::pow(m, 1.5) - (2.0 * b / 3.0 + 0.5) * m,
            b * b * (10.0 - 3.0 * kPi) / 24.0 * m * m * m};
}

double asym_plateau(const Regime& r)
{
    const double b = static_cast<double>(r.b);
    const double m = static_cast<double>(r.m);
    return r.generic() ? 1.0 / ((b + r.c) * m) : 2.0 / (b * m);
}

double asym_boundary(const Regime& r, Side side, std::int64_t j)
{
    if (j < 0) {
        throw UsageError("boundary offset j must be nonnegative");
    }
    const double b = static_cast<double>(r.b);
    const double m = static_cast<double>(r.m);
    const double c = r.c;
    if (side == Side::Right) {
        const BorelLaw law{b / (b + c)};
        return (1.0 - borel_tail(law, j / r.b + 2)) / ((b + c) * m);
    }
    const std::int64_t steps = (j + r.b - 1) / r.b;  // ceil(j/b)
    if (!r.generic()) {
        return (1.0 + borel_tail(BorelLaw{1.0}, steps + 1)) / (b * m);
    }
    // e^{cm/(be) - b/(b+c)} (b/(b+c))^{m-1} / (c m^2) * (P(Y >= steps) - 1),
    // Y ~ Poisson(lambda = cm/(be)). The e^{lambda} prefactor cancels the
    // e^{-lambda} of each Poisson term, so everything stays in log space.
    const double lambda = c * m / (b * kE);
    const double log_scale = -b / (b + c) + (m - 1.0) * std::log(b / (b + c)) - std::log(c * m * m);
    double deficit = 0.0;
    for (std::int64_t i = 0; i < steps; ++i) {
        const double di = static_cast<double>(i);
        deficit += std::exp(log_scale + di * std::log(lambda) - std::lgamma(di + 1.0));
    }
    return 1.0 / ((b + c) * m) - deficit;
}

BigInt block_power_sum(std::int64_t a, std::int64_t b, std::int64_t s, int p)
{
    const std::int64_t lo = s == 0 ? 0 : a + (s - 1) * b;
    const std::int64_t hi = a + s * b;
    BigInt sum = 0;
    for (std::int64_t j = lo + 1; j <= hi; ++j) {
        sum += int_pow(BigInt(j), static_cast<unsigned long>(p));
    }
    return sum;
}

PowerSumComparison constrained_power_sum(const Regime& r, std::span<const int> p,
                                         std::span<const std::int64_t> S)
{
    const auto l = p.size();
    if (l == 0 || S.size() != l) {
        throw UsageError("p and S must be nonempty and of equal length");
    }
    if (l > 3) {
        throw ResourceError("exact constrained power sum is limited to l <= 3");
    }
    for (std::size_t i = 0; i < l; ++i) {
        if (p[i] < 1) {
            throw UsageError("exponents must be positive");
        }
        if (S[i] < 0 || (i > 0 && S[i] <= S[i - 1]) || S[i] > r.m - 1) {
            throw UsageError("S must be strictly increasing within [0, m-1]");
        }
    }
    const double cm_real = r.c * static_cast<double>(r.m);
    const auto cm = static_cast<std::int64_t>(std::llround(cm_real));
    if (std::abs(cm_real - static_cast<double>(cm)) > 1e-9) {
        throw DomainError("exact side needs c*m to be an integer");
    }
    const std::int64_t a = cm + r.b;
    const std::int64_t b = r.b;
    auto u = [&](std::int64_t s) { return s == 0 ? std::int64_t{0} : a + (s - 1) * b; };

    const std::int64_t top = u(S[l - 1] + 1);
    std::vector<std::vector<BigInt>> prefix;
    for (int pi : p) {
        prefix.push_back(power_prefix_sums(top, static_cast<unsigned>(pi)));
    }
    // sum of f_i(s) over s in [lo, hi]
    auto block = [&](std::size_t i, std::int64_t lo, std::int64_t hi) -> BigInt {
        if (lo > hi) {
            return 0;
        }
        return prefix[i][static_cast<std::size_t>(u(hi + 1))] - prefix[i][static_cast<std::size_t>(u(lo))];
    };

    BigInt exact;
    const std::int64_t last = S[l - 1];
    if (l == 1) {
        exact = block(0, 0, last);
    } else if (l == 2) {
        exact = block(0, 0, last) * block(1, 0, last) -
                block(0, S[0] + 1, last) * block(1, S[0] + 1, last);
    } else {
        BigInt stage1 = block(0, 0, last) * block(1, 0, last) * block(2, 0, last);
        BigInt stage2 = block(0, S[0] + 1, last) * block(1, S[0] + 1, last) * block(2, S[0] + 1, last);
        BigInt stage3 = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            BigInt t = block(i, 0, S[0]);
            for (std::size_t o = 0; o < 3; ++o) {
                if (o != i) {
                    t *= block(o, S[1] + 1, last);
                }
            }
            stage3 += t;
        }
        exact = stage1 - stage2 - stage3;
    }

    double total = 0.0;
    double denom = 1.0;
    for (int pi : p) {
        total += pi;
        denom *= pi + 1.0;
    }
    const double bb = static_cast<double>(r.b);
    const double m = static_cast<double>(r.m);
    const double lf = static_cast<double>(l);
    const double base = cm_real + (static_cast<double>(last) + 1.0) * bb;
    const double asym = std::pow(base, total + lf) / denom * (1.0 + (total + lf) / (2.0 * (bb + r.c) * m));
    return {BigRat(exact), asym};
}

} // namespace parkfn
