#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "parkfn/counting.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/goncarov.hpp"

using namespace parkfn;
using W = std::vector<Value>;

namespace {

// E(pi_1^p pi_2^q) by enumeration.
BigRat brute_joint(const ABParams& ab, unsigned p, unsigned q)
{
    auto all = oracle::enumerate(oracle::arithmetic(ab.a, ab.b, ab.m));
    BigInt sum = 0;
    for (const auto& w : all) {
        sum += int_pow(BigInt(w[0]), p) * int_pow(BigInt(w[1]), q);
    }
    BigRat mean(sum, BigInt(static_cast<long>(all.size())));
    mean.canonicalize();
    return mean;
}

BigRat brute_moment(const ABParams& ab, unsigned p)
{
    auto all = oracle::enumerate(oracle::arithmetic(ab.a, ab.b, ab.m));
    BigInt sum = 0;
    for (const auto& w : all) {
        sum += int_pow(BigInt(w[0]), p);
    }
    BigRat mean(sum, BigInt(static_cast<long>(all.size())));
    mean.canonicalize();
    return mean;
}

} // namespace

TEST_CASE("count_prescribed examples")
{
    UVector u({2, 5});
    CHECK(count_prescribed(u, W{1}) == 5);
    CHECK(count_prescribed(u, W{5}) == 2);
    CHECK(count_prescribed(UVector({2, 3, 5, 8}), W{1, 1, 1}) ==
          oracle::count_with_prefix({2, 3, 5, 8}, {1, 1, 1}));
    CHECK(count_prescribed(u, W{6}) == 0);
    CHECK_THROWS_AS(count_prescribed(u, W{2, 1}), UsageError);
    CHECK_THROWS_AS(count_prescribed(u, W{}), UsageError);
}

TEST_CASE("count_prescribed matches brute force and decreases past thresholds")
{
    for (const auto& uw : oracle::threshold_grid(4, 6)) {
        UVector u(uw);
        for (std::size_t l = 1; l <= uw.size(); ++l) {
            oracle::for_each_word(u.back(), l, [&](const oracle::Word& w) {
                if (!std::is_sorted(w.begin(), w.end())) {
                    return;
                }
                const auto got = count_prescribed(u, w);
                REQUIRE(got == oracle::count_with_prefix(uw, w));
                // raising w_i inside (u_{i-1}, u_i] keeps the count; passing u_i lowers it
                for (std::size_t i = 0; i < l; ++i) {
                    auto up = w;
                    ++up[i];
                    if (up[i] > u.back() || (i + 1 < l && up[i] > up[i + 1])) {
                        continue;
                    }
                    REQUIRE(count_prescribed(u, up) <= got);
                }
            });
        }
    }
}

TEST_CASE("count_pf_composition")
{
    CHECK(count_pf_composition(UVector({2, 5})) == 16);
    CHECK(count_pf_composition(UVector({2, 3})) == 8);
    for (std::int64_t m = 1; m <= 6; ++m) {
        CHECK(count_pf_composition(UVector::arithmetic(1, 1, m)) ==
              int_pow(BigInt(m + 1), static_cast<unsigned long>(m - 1)));
    }
    for (const auto& uw : oracle::threshold_grid(4, 6)) {
        UVector u(uw);
        REQUIRE(count_pf_composition(u) == count_pf(u));
        REQUIRE(count_pf(u) == static_cast<long>(oracle::enumerate(uw).size()));
    }
}

TEST_CASE("count_run_prescribed")
{
    CHECK(count_run_prescribed(ABParams(2, 1, 2), 1, 0) == 3);
    CHECK(count_run_prescribed(ABParams(2, 1, 2), 2, 0) == 1);
    CHECK_THROWS_AS(count_run_prescribed(ABParams(2, 1, 2), 2, 1), UsageError);
    for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = 1; b <= 2; ++b) {
            for (std::int64_t m = 2; m <= 4; ++m) {
                const ABParams p(a, b, m);
                const auto u = oracle::arithmetic(a, b, m);
                for (std::int64_t l = 1; l <= m; ++l) {
                    for (std::int64_t k = 0; k <= m - l; ++k) {
                        oracle::Word w;
                        for (std::int64_t i = 0; i < l; ++i) {
                            w.push_back(a + (k + i) * b);
                        }
                        REQUIRE(count_run_prescribed(p, l, k) == oracle::count_with_prefix(u, w));
                    }
                }
            }
        }
    }
}

TEST_CASE("first coordinate distribution")
{
    auto d = first_coord_distribution(ABParams(2, 1, 2));
    REQUIRE(d.counts.size() == 4);
    CHECK(d.counts[1] == 3);
    CHECK(d.counts[2] == 3);
    CHECK(d.counts[3] == 2);
    CHECK(d.total() == 8);
    CHECK(d.probability(3) == BigRat(1, 4));

    for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = 1; b <= 2; ++b) {
            for (std::int64_t m = 2; m <= 4; ++m) {
                const ABParams p(a, b, m);
                const auto u = oracle::arithmetic(a, b, m);
                auto dist = first_coord_distribution(p);
                REQUIRE(dist.total() == count_pf_ab(p));
                REQUIRE(dist.counts[static_cast<std::size_t>(p.top())] ==
                        a * int_pow(BigInt(p.top()), static_cast<unsigned long>(m - 2)));
                for (Value j = 1; j <= p.top(); ++j) {
                    const auto& n = dist.counts[static_cast<std::size_t>(j)];
                    REQUIRE(n == oracle::count_with_prefix(u, {j}));
                    REQUIRE(n == count_prescribed(p.thresholds(), W{j}));
                    if (j <= a) {
                        REQUIRE(n == dist.counts[1]);
                    } else {
                        REQUIRE(n <= dist.counts[static_cast<std::size_t>(j - 1)]);
                    }
                }
            }
        }
    }
}

TEST_CASE("exact moments")
{
    CHECK(exact_moment(ABParams(2, 1, 2), 1) == BigRat(15, 8));
    CHECK(exact_moment(ABParams(5, 3, 4), 0) == 1);
    CHECK(exact_moment(ABParams(2, 2, 3), 1) == brute_moment(ABParams(2, 2, 3), 1));
    for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = 1; b <= 2; ++b) {
            for (std::int64_t m = 2; m <= 4; ++m) {
                const ABParams p(a, b, m);
                for (unsigned e = 1; e <= 3; ++e) {
                    REQUIRE(exact_moment(p, e) == brute_moment(p, e));
                }
            }
        }
    }
}

TEST_CASE("exact joint moment")
{
    // 27/8 by enumerating the eight members of PF(2,1,2)
    CHECK(exact_joint_moment(ABParams(2, 1, 2), 1, 1) == BigRat(27, 8));
    CHECK(exact_joint_moment(ABParams(3, 2, 3), 1, 1) == BigRat(911, 81));
    CHECK(exact_joint_moment(ABParams(3, 2, 3), 2, 1) == exact_joint_moment(ABParams(3, 2, 3), 1, 2));
    CHECK(exact_joint_moment(ABParams(3, 2, 3), 2, 0) == exact_moment(ABParams(3, 2, 3), 2));
    CHECK_THROWS_AS(exact_joint_moment(ABParams(3, 2, 1), 1, 1), UsageError);
    for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = 1; b <= 2; ++b) {
            for (std::int64_t m = 2; m <= 4; ++m) {
                const ABParams p(a, b, m);
                for (unsigned e = 1; e <= 2; ++e) {
                    for (unsigned f = 1; f <= 2; ++f) {
                        REQUIRE(exact_joint_moment(p, e, f) == brute_joint(p, e, f));
                    }
                }
            }
        }
    }
}
