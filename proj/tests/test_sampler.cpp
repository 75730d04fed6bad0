#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include <map>

#include "oracle.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/sampler.hpp"

using namespace parkfn;

TEST_CASE("derive_seed separates streams")
{
    CHECK(derive_seed(0, 0) != derive_seed(0, 1));
    CHECK(derive_seed(1, 0) != derive_seed(0, 0));
    CHECK(derive_seed(42, 7) == derive_seed(42, 7));
}

TEST_CASE("uniform_int stays in range and hits both ends")
{
    std::mt19937_64 rng(1);
    bool lo = false;
    bool hi = false;
    for (int i = 0; i < 2000; ++i) {
        auto x = uniform_int(rng, -3, 4);
        REQUIRE(x >= -3);
        REQUIRE(x <= 4);
        lo = lo || x == -3;
        hi = hi || x == 4;
    }
    CHECK(lo);
    CHECK(hi);
    CHECK(uniform_int(rng, 5, 5) == 5);
}

TEST_CASE("fast shift search matches the naive one")
{
    std::mt19937_64 rng(2);
    for (std::int64_t a = 1; a <= 4; ++a) {
        for (std::int64_t b = 1; b <= 3; ++b) {
            for (std::int64_t m = 1; m <= 4; ++m) {
                ABParams p(a, b, m);
                for (int t = 0; t < 40; ++t) {
                    std::vector<Value> w(static_cast<std::size_t>(m));
                    for (auto& x : w) {
                        x = uniform_int(rng, 1, p.modulus());
                    }
                    PreferenceVector raw(w);
                    auto ks = parking_shifts(p, raw);
                    REQUIRE(ks == parking_shifts_naive(p, raw));
                    REQUIRE(static_cast<Value>(ks.size()) == a);
                }
            }
        }
    }
}

TEST_CASE("shift wraps into [1, a+mb]")
{
    ABParams p(2, 1, 2);  // modulus 4
    auto s = shift_wrapped(p, PreferenceVector({4, 1}), 1);
    CHECK(s == PreferenceVector({1, 2}));
}

TEST_CASE("samples park and are reproducible")
{
    ABParams p(3, 2, 5);
    SamplerState s1(p, 99);
    SamplerState s2(p, 99);
    for (int i = 0; i < 500; ++i) {
        auto x = s1.sample();
        REQUIRE(x == s2.sample());
        REQUIRE(check_u_parking(p.thresholds(), x));
    }
    SamplerState one(ABParams(4, 3, 1), 5);
    for (int i = 0; i < 200; ++i) {
        auto x = one.sample();
        REQUIRE(x[0] >= 1);
        REQUIRE(x[0] <= 4);
    }
}

TEST_CASE("uniform on PF(2,1,2)")
{
    ABParams p(2, 1, 2);
    SamplerState s(p, 2024);
    std::map<std::vector<Value>, long> freq;
    const long n = 80000;
    for (long i = 0; i < n; ++i) {
        auto x = s.sample();
        ++freq[{x.values().begin(), x.values().end()}];
    }
    auto members = oracle::enumerate({2, 3});
    REQUIRE(freq.size() == members.size());
    double chi2 = 0.0;
    const double expected = static_cast<double>(n) / 8.0;
    for (const auto& w : members) {
        const double d = static_cast<double>(freq[w]) - expected;
        chi2 += d * d / expected;
    }
    boost::math::chi_squared dist(7.0);
    CHECK(chi2 < boost::math::quantile(dist, 1.0 - 1e-3));
}

TEST_CASE("running statistics")
{
    RunningMoments a;
    a.add(3.0);
    CHECK_FALSE(a.variance().has_value());
    RunningMoments whole;
    RunningMoments left;
    RunningMoments right;
    for (int i = 0; i < 100; ++i) {
        const double x = i * 0.37 - (i % 7);
        whole.add(x);
        (i < 40 ? left : right).add(x);
    }
    left.merge(right);
    CHECK(left.n == whole.n);
    CHECK(left.mean == doctest::Approx(whole.mean).epsilon(1e-12));
    CHECK(*left.variance() == doctest::Approx(*whole.variance()).epsilon(1e-9));

    RunningCovariance c;
    RunningCovariance c1;
    RunningCovariance c2;
    for (int i = 0; i < 60; ++i) {
        c.add(i, 2.0 * i + (i % 3));
        (i % 2 ? c1 : c2).add(i, 2.0 * i + (i % 3));
    }
    c1.merge(c2);
    CHECK(*c1.covariance() == doctest::Approx(*c.covariance()).epsilon(1e-9));
}

TEST_CASE("estimate_statistics")
{
    ABParams p(4, 2, 6);
    auto r1 = estimate_statistics(p, 20000, 7, 1);
    auto r4 = estimate_statistics(p, 20000, 7, 4);
    CHECK(r1.n_samples == 20000);
    CHECK(r1.pi1.mean == r4.pi1.mean);
    CHECK(*r1.disp.variance() == *r4.disp.variance());
    CHECK(r1.pi1_hist == r4.pi1_hist);
    CHECK(r1.disp_hist == r4.disp_hist);
    std::uint64_t total = 0;
    for (auto c : r1.pi1_hist) {
        total += c;
    }
    CHECK(total == 20000);
    CHECK(r1.pi1_hist.size() == static_cast<std::size_t>(p.top()) + 1);

    auto single = estimate_statistics(p, 1, 3);
    CHECK_FALSE(single.pi1.variance().has_value());
    CHECK_THROWS_AS(estimate_statistics(p, 0, 3), UsageError);
}
