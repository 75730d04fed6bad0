#include "parkfn/counting.hpp"

#include <string>

#include "parkfn/compositions.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/goncarov.hpp"

namespace parkfn {

const BigRat& GoncarovWindowCache::get(std::size_t start, std::size_t length)
{
    auto [it, inserted] = cache_.try_emplace({start, length});
    if (inserted) {
        NodeSequence nodes;
        nodes.reserve(length);
        const Value base = u_(start);
        for (std::size_t i = 1; i <= length; ++i) {
            nodes.emplace_back(static_cast<long>(u_(start + i) - base));
        }
        it->second = goncarov_eval(0, nodes);
    }
    return it->second;
}

BigInt count_prescribed(const UVector& u, std::span<const Value> w)
{
    const auto m = u.size();
    const auto l = w.size();
    if (l < 1 || l > m) {
        throw UsageError("count_prescribed needs 1 <= l <= m");
    }
    for (std::size_t i = 0; i < l; ++i) {
        if (w[i] < 1 || (i > 0 && w[i] < w[i - 1])) {
            throw UsageError("prescribed values must be positive and non-decreasing");
        }
    }

    GoncarovWindowCache windows(u);
    const auto free_cars = static_cast<std::int64_t>(m - l);
    BigRat sum = 0;
    for_each_composition(
        free_cars, l + 1,
        [&](std::size_t i, const std::vector<std::int64_t>&, std::int64_t prefix) {
            if (i >= l) {
                return true;
            }
            // car i+1 sits at threshold index s_1 + ... + s_{i+1} + (i+1)
            auto idx = static_cast<std::size_t>(prefix) + i + 1;
            return idx <= m && u(idx) >= w[i];
        },
        [&](const std::vector<std::int64_t>& s) {
            BigRat term(multinomial(free_cars, s));
            std::size_t start = 0;
            for (std::size_t i = 0; i <= l; ++i) {
                auto len = static_cast<std::size_t>(s[i]);
                term *= windows.get(start, len);
                start += len + 1;
            }
            sum += term;
        });
    if (free_cars % 2 == 1) {
        sum = -sum;
    }
    BigInt n = require_integral(sum, "prescribed-coordinate count");
    if (n < 0) {
        throw ArithmeticError("negative prescribed-coordinate count " + to_string(n));
    }
    return n;
}

BigInt count_pf_composition(const UVector& u)
{
    const auto m = static_cast<std::int64_t>(u.size());
    const auto parts = static_cast<std::size_t>(u.back() - m + 1);
    // required[t]: lower bound on s_1 + ... + s_t
    std::vector<std::int64_t> required(parts + 1, 0);
    for (std::int64_t i = 1; i <= m; ++i) {
        auto t = static_cast<std::size_t>(u(static_cast<std::size_t>(i)) - i + 1);
        required[t] = std::max(required[t], i);
    }
    BigRat sum = 0;
    for_each_composition(
        m, parts,
        [&](std::size_t i, const std::vector<std::int64_t>&, std::int64_t prefix) {
            return prefix >= required[i + 1];
        },
        [&](const std::vector<std::int64_t>& s) {
            BigRat term(multinomial(m, s));
            for (auto si : s) {
                term *= rat_pow(BigRat(si + 1), si - 1);
            }
            sum += term;
        });
    return require_integral(sum, "composition count");
}

BigInt count_run_prescribed(const ABParams& p, std::int64_t l, std::int64_t k)
{
    const auto m = p.m;
    if (l < 1 || l > m || k < 0 || k > m - l) {
        throw UsageError("count_run_prescribed needs 1 <= l <= m and 0 <= k <= m - l");
    }
    const BigRat a(static_cast<long>(p.a));
    const BigRat b(static_cast<long>(p.b));
    BigRat sum = 0;
    for (std::int64_t s = 0; s <= m - l - k; ++s) {
        BigRat term(binomial(m - l, s));
        term *= rat_pow(a + BigRat(m - l - s) * b, m - s - l - 1);
        term *= rat_pow(b, s);
        term *= BigRat(l);
        term *= rat_pow(BigRat(s + l), s - 1);
        sum += term;
    }
    sum *= a;
    return require_integral(sum, "run-prescribed count");
}

BigInt CoordinateDistribution::total() const
{
    BigInt t = 0;
    for (const auto& c : counts) {
        t += c;
    }
    return t;
}

BigRat CoordinateDistribution::probability(Value j) const
{
    if (j < 1 || j > top()) {
        return 0;
    }
    BigRat q(counts[static_cast<std::size_t>(j)], total());
    q.canonicalize();
    return q;
}

CoordinateDistribution first_coord_distribution(const ABParams& p)
{
    const auto m = p.m;
    const BigRat a(static_cast<long>(p.a));
    const BigRat b(static_cast<long>(p.b));

    // tail[s] = sum over s' >= s of the s'-th summand; pi_1 = j uses the
    // summands with a + s b >= j.
    std::vector<BigInt> tail(static_cast<std::size_t>(m) + 1, 0);
    BigRat running = 0;
    for (std::int64_t s = m - 1; s >= 0; --s) {
        BigRat term = a * b;
        term *= BigRat(binomial(m - 1, s));
        term *= rat_pow(a + BigRat(s) * b, s - 1);
        term *= rat_pow(BigRat(m - s) * b, m - 2 - s);
        running += term;
        tail[static_cast<std::size_t>(s)] = require_integral(running, "first-coordinate count");
    }

    CoordinateDistribution dist;
    dist.params = p;
    dist.counts.assign(static_cast<std::size_t>(p.top()) + 1, 0);
    for (Value j = 1; j <= p.top(); ++j) {
        Value s0 = j <= p.a ? 0 : (j - p.a + p.b - 1) / p.b;
        dist.counts[static_cast<std::size_t>(j)] = tail[static_cast<std::size_t>(s0)];
    }
    return dist;
}

BigRat exact_moment(const CoordinateDistribution& dist, unsigned pexp)
{
    BigInt weighted = 0;
    for (Value j = 1; j <= dist.top(); ++j) {
        weighted += int_pow(BigInt(j), pexp) * dist.counts[static_cast<std::size_t>(j)];
    }
    BigRat q(weighted, dist.total());
    q.canonicalize();
    return q;
}

BigRat exact_moment(const ABParams& p, unsigned pexp)
{
    return exact_moment(first_coord_distribution(p), pexp);
}

BigRat exact_joint_moment(const ABParams& p, unsigned pexp, unsigned qexp)
{
    const auto m = p.m;
    if (m < 2) {
        throw UsageError("joint moment of two coordinates needs m >= 2");
    }
    const BigRat a(static_cast<long>(p.a));
    const BigRat b(static_cast<long>(p.b));
    const auto u = p.thresholds();

    // With pi_1, pi_2 sorted into (lo, hi), the count splits the other m-2
    // cars into windows of sizes s1, s2, s3 around thresholds u_{s1+1} >= lo
    // and u_{s1+s2+2} >= hi. first[s] and inner[s] are the signed Gončarov
    // factors (-1)^s g_s of the first window and of any later window.
    std::vector<BigInt> first(static_cast<std::size_t>(m - 1));
    std::vector<BigInt> inner(static_cast<std::size_t>(m - 1));
    for (std::int64_t s = 0; s <= m - 2; ++s) {
        BigRat g1 = s == 0 ? BigRat(1) : abel_goncarov(0, a, b, s);
        BigRat g2 = s == 0 ? BigRat(1) : abel_goncarov(0, b, b, s);
        if (s % 2 == 1) {
            g1 = -g1;
            g2 = -g2;
        }
        first[static_cast<std::size_t>(s)] = require_integral(g1, "first-window factor");
        inner[static_cast<std::size_t>(s)] = require_integral(g2, "inner-window factor");
    }

    const auto pp = power_prefix_sums(p.top(), pexp);
    const auto pq = power_prefix_sums(p.top(), qexp);

    BigInt total = 0;
    BigInt outer_binom = 1;  // C(m-2, s1)
    for (std::int64_t s1 = 0; s1 <= m - 2; ++s1) {
        const auto u1 = static_cast<std::size_t>(u(static_cast<std::size_t>(s1 + 1)));
        const std::int64_t rest = m - 2 - s1;

        BigInt sum_p = 0;  // sum of weights * P_p(U2)
        BigInt sum_q = 0;
        BigInt sum_1 = 0;
        BigInt row_binom = 1;  // C(rest, s2)
        for (std::int64_t s2 = 0; s2 <= rest; ++s2) {
            BigInt weight = row_binom * inner[static_cast<std::size_t>(s2)];
            weight *= inner[static_cast<std::size_t>(rest - s2)];
            const auto u2 = static_cast<std::size_t>(u(static_cast<std::size_t>(s1 + s2 + 2)));
            sum_p += weight * pp[u2];
            sum_q += weight * pq[u2];
            sum_1 += weight;
            if (s2 < rest) {
                row_binom *= static_cast<unsigned long>(rest - s2);
                mpz_divexact_ui(row_binom.get_mpz_t(), row_binom.get_mpz_t(),
                                static_cast<unsigned long>(s2 + 1));
            }
        }
        // sum of j^p k^q over pairs with min <= U1 and max <= U2
        BigInt block = pq[u1] * sum_p + pp[u1] * sum_q - pp[u1] * pq[u1] * sum_1;
        total += outer_binom * first[static_cast<std::size_t>(s1)] * block;

        if (s1 < m - 2) {
            outer_binom *= static_cast<unsigned long>(m - 2 - s1);
            mpz_divexact_ui(outer_binom.get_mpz_t(), outer_binom.get_mpz_t(),
                            static_cast<unsigned long>(s1 + 1));
        }
    }
    BigRat q(total, count_pf_ab(p));
    q.canonicalize();
    return q;
}

} // namespace parkfn
