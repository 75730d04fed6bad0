#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parkfn/abel.hpp"
#include "parkfn/errors.hpp"

using namespace parkfn;

namespace {

// Direct expansion over all compositions, written independently of the library.
BigRat expand(const std::vector<BigRat>& x, const std::vector<std::int64_t>& p, std::int64_t n)
{
    const auto m = x.size();
    BigRat total = 0;
    std::vector<std::int64_t> s(m, 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i + 1 == m) {
            s[i] = left;
            BigRat term(factorial(static_cast<unsigned>(n)));
            for (std::size_t j = 0; j < m; ++j) {
                term /= BigRat(factorial(static_cast<unsigned>(s[j])));
                const BigRat base = x[j] + BigRat(s[j]);
                const std::int64_t e = s[j] + p[j];
                BigRat f = 1;
                for (std::int64_t t = 0; t < (e < 0 ? -e : e); ++t) {
                    f *= base;
                }
                term *= e < 0 ? 1 / f : f;
            }
            total += term;
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            s[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, n);
    return total;
}

struct Spec {
    std::vector<BigRat> x;
    std::vector<std::int64_t> p;
    std::int64_t n;
};

Spec random_spec(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> mdist(1, 4), ndist(0, 8), xdist(1, 10), pdist(-1, 3);
    Spec s;
    const int m = mdist(rng);
    s.n = ndist(rng);
    for (int j = 0; j < m; ++j) {
        // positive x keeps every base nonzero
        s.x.emplace_back(xdist(rng));
        s.p.push_back(pdist(rng));
    }
    return s;
}

BigRat A(const std::vector<BigRat>& x, const std::vector<std::int64_t>& p, std::int64_t n)
{
    return abel_multinomial(AbelSpec{x, p, n});
}

} // namespace

TEST_CASE("abel examples")
{
    CHECK(A({BigRat(2), BigRat(3)}, {2, -1}, 0) == BigRat(4, 3));
    CHECK(A({BigRat(1), BigRat(1)}, {-1, -1}, 1) == 2);
    CHECK(A({BigRat(1), BigRat(2)}, {-1, 0}, 2) == 25);
    CHECK(A({BigRat(1), BigRat(2), BigRat(3)}, {-1, -1, -1}, 3) == 81);
    CHECK(abel_special({BigRat(1), BigRat(2), BigRat(3)}, 3, AbelVariant::AllMinusOne) == 81);
    CHECK(abel_special({BigRat(1), BigRat(2)}, 2, AbelVariant::LastZero) == 25);
    CHECK(abel_special({BigRat(7)}, 4, AbelVariant::AllMinusOne) == int_pow(BigInt(11), 3));
    CHECK(abel_special({BigRat(2), BigRat(5)}, 0, AbelVariant::LastZero) == BigRat(1, 2));
}

TEST_CASE("abel errors")
{
    CHECK_THROWS_AS(abel_special({BigRat(0), BigRat(1)}, 2, AbelVariant::AllMinusOne), DomainError);
    try {
        A({BigRat(0), BigRat(1)}, {-1, 0}, 1);
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
    }
    CHECK_THROWS_AS(A({BigRat(1)}, {0, 0}, 1), UsageError);
}

TEST_CASE("abel sum equals direct expansion")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 200; ++t) {
        auto s = random_spec(rng);
        REQUIRE(A(s.x, s.p, s.n) == expand(s.x, s.p, s.n));
    }
}

TEST_CASE("symmetry, recurrences and closed forms")
{
    std::mt19937_64 rng(29);
    for (int t = 0; t < 250; ++t) {
        auto s = random_spec(rng);
        const auto m = s.x.size();
        const BigRat lhs = A(s.x, s.p, s.n);

        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                auto x = s.x;
                auto p = s.p;
                std::swap(x[i], x[j]);
                std::swap(p[i], p[j]);
                REQUIRE(A(x, p, s.n) == lhs);
            }
        }

        if (s.n > 0) {
            BigRat rhs = 0;
            for (std::size_t i = 0; i < m; ++i) {
                auto x = s.x;
                auto p = s.p;
                x[i] += 1;
                p[i] += 1;
                rhs += A(x, p, s.n - 1);
            }
            REQUIRE(rhs == lhs);
        }

        if (s.p[0] >= 0) {
            BigRat rhs = 0;
            for (std::int64_t k = 0; k <= s.n; ++k) {
                auto x = s.x;
                auto p = s.p;
                x[0] += k;
                p[0] -= 1;
                rhs += BigRat(binomial(s.n, k) * factorial(static_cast<unsigned>(k))) * (s.x[0] + k) *
                       A(x, p, s.n - k);
            }
            REQUIRE(rhs == lhs);
        }

        std::vector<std::int64_t> minus(m, -1);
        REQUIRE(A(s.x, minus, s.n) == abel_special(s.x, s.n, AbelVariant::AllMinusOne));
        minus.back() = 0;
        REQUIRE(A(s.x, minus, s.n) == abel_special(s.x, s.n, AbelVariant::LastZero));
    }
}
