#include "parkfn/goncarov.hpp"

#include "parkfn/errors.hpp"

namespace parkfn {

namespace {

// Row i of the determinant (i < m): entry k is a_i^{k-i}/(k-i)! for k >= i.
std::vector<BigRat> node_row(const BigRat& node, std::size_t i, std::size_t m)
{
    std::vector<BigRat> row(m + 1, BigRat(0));
    BigRat term = 1;
    for (std::size_t k = i; k <= m; ++k) {
        if (k > i) {
            term *= node;
            term /= BigRat(static_cast<long>(k - i));
        }
        row[k] = term;
    }
    return row;
}

} // namespace

BigRat goncarov_eval(const BigRat& x, std::span<const BigRat> nodes)
{
    const auto m = nodes.size();
    std::vector<BigRat> last(m + 1);
    BigRat term = 1;
    for (std::size_t k = 0; k <= m; ++k) {
        if (k > 0) {
            term *= x;
            term /= BigRat(static_cast<long>(k));
        }
        last[k] = term;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (last[i] == 0) {
            continue;
        }
        const BigRat pivot_multiple = last[i];
        auto row = node_row(nodes[i], i, m);
        for (std::size_t k = i; k <= m; ++k) {
            last[k] -= pivot_multiple * row[k];
        }
    }
    // determinant = product of the unit diagonal times the reduced corner
    return BigRat(factorial(static_cast<unsigned>(m))) * last[m];
}

std::vector<BigRat> goncarov_coefficients(std::span<const BigRat> nodes)
{
    const auto m = nodes.size();
    // last[k] is a polynomial in x, stored as coefficient vectors of degree <= m.
    std::vector<std::vector<BigRat>> last(m + 1, std::vector<BigRat>(m + 1, BigRat(0)));
    for (std::size_t k = 0; k <= m; ++k) {
        last[k][k] = BigRat(1, factorial(static_cast<unsigned>(k)));
    }
    for (std::size_t i = 0; i < m; ++i) {
        const auto pivot_multiple = last[i];
        auto row = node_row(nodes[i], i, m);
        for (std::size_t k = i; k <= m; ++k) {
            if (row[k] == 0) {
                continue;
            }
            for (std::size_t d = 0; d <= m; ++d) {
                last[k][d] -= pivot_multiple[d] * row[k];
            }
        }
    }
    const BigRat scale(factorial(static_cast<unsigned>(m)));
    std::vector<BigRat> coeffs = last[m];
    for (auto& c : coeffs) {
        c *= scale;
    }
    return coeffs;
}

BigRat abel_goncarov(const BigRat& x, const BigRat& a, const BigRat& b, std::int64_t m)
{
    if (m < 1) {
        throw UsageError("abel_goncarov requires m >= 1");
    }
    return (x - a) * rat_pow(x - a - BigRat(m) * b, m - 1);
}

NodeSequence to_nodes(std::span<const Value> values)
{
    NodeSequence out;
    out.reserve(values.size());
    for (auto v : values) {
        out.emplace_back(static_cast<long>(v));
    }
    return out;
}

BigInt count_pf(const UVector& u)
{
    auto nodes = to_nodes(u.values());
    BigRat g = goncarov_eval(0, nodes);
    if (u.size() % 2 == 1) {
        g = -g;
    }
    BigInt n = require_integral(g, "(-1)^m g_m(0; u)");
    if (n < 0) {
        throw ArithmeticError("negative parking function count " + to_string(n));
    }
    return n;
}

BigInt count_pf_ab(const ABParams& p)
{
    return BigInt(p.a) * int_pow(BigInt(p.a + p.m * p.b), static_cast<unsigned long>(p.m - 1));
}

} // namespace parkfn
