#include "parkfn/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "parkfn/errors.hpp"

namespace parkfn {

UVector::UVector(std::vector<Value> thresholds) : u_(std::move(thresholds))
{
    if (u_.empty()) {
        throw UsageError("u must have at least one threshold");
    }
    if (u_.front() < 1) {
        throw UsageError("thresholds must be positive");
    }
    for (std::size_t i = 1; i < u_.size(); ++i) {
        if (u_[i] <= u_[i - 1]) {
            throw UsageError("thresholds must be strictly increasing");
        }
    }
}

UVector UVector::arithmetic(Value a, Value b, std::int64_t m)
{
    if (a < 1 || b < 1 || m < 1) {
        throw UsageError("arithmetic thresholds need a, b, m >= 1");
    }
    std::vector<Value> u(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        u[static_cast<std::size_t>(i)] = a + i * b;
    }
    return UVector(std::move(u));
}

ABParams::ABParams(Value a_, Value b_, std::int64_t m_) : a(a_), b(b_), m(m_)
{
    if (a < 1 || b < 1 || m < 1) {
        throw UsageError("(a,b,m) must all be positive");
    }
}

ABParams ABParams::from_regime(Value b, const BigRat& c, std::int64_t m)
{
    if (c < 0) {
        throw UsageError("c must be nonnegative");
    }
    BigRat cm = c * BigRat(m);
    if (!is_integral(cm)) {
        throw DomainError("c*m must be an integer so that a = c*m + b is integral");
    }
    ABParams p(cm.get_num().get_si() + b, b, m);
    p.c = c;
    return p;
}

PreferenceVector::PreferenceVector(std::vector<Value> prefs) : pi_(std::move(prefs))
{
    for (auto v : pi_) {
        if (v < 1) {
            throw UsageError("preferences must be positive integers");
        }
    }
}

std::vector<Value> PreferenceVector::sorted() const
{
    std::vector<Value> s = pi_;
    std::sort(s.begin(), s.end());
    return s;
}

Value PreferenceVector::sum() const
{
    return std::accumulate(pi_.begin(), pi_.end(), Value{0});
}

namespace {

void require_same_length(const UVector& u, const PreferenceVector& pi)
{
    if (u.size() != pi.size()) {
        throw UsageError("preference length " + std::to_string(pi.size()) +
                         " does not match threshold length " + std::to_string(u.size()));
    }
}

} // namespace

bool check_u_parking(const UVector& u, const PreferenceVector& pi)
{
    require_same_length(u, pi);
    auto lambda = pi.sorted();
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] > u(i + 1)) {
            return false;
        }
    }
    return true;
}

ParkingOutcome park(const UVector& u, const PreferenceVector& pi)
{
    require_same_length(u, pi);
    const auto m = u.size();
    ParkingOutcome out;
    out.spots.assign(m, 0);

    // u-street: only u_1..u_m are free. Sorted free slots; a car takes the
    // first free slot >= its preference.
    std::vector<Value> free(u.values().begin(), u.values().end());
    std::vector<bool> taken(m, false);
    out.success = true;
    for (std::size_t car = 0; car < m; ++car) {
        auto it = std::lower_bound(free.begin(), free.end(), pi[car]);
        auto idx = static_cast<std::size_t>(it - free.begin());
        while (idx < m && taken[idx]) {
            ++idx;
        }
        if (idx == m) {
            out.success = false;
            continue;
        }
        taken[idx] = true;
        out.spots[car] = free[idx];
    }

    // Companion run on a fully empty street of u_m spots: the spots left
    // unused split pi into independent classical segments.
    if (out.success) {
        const auto len = static_cast<std::size_t>(u.back());
        std::vector<bool> occupied(len + 1, false);
        for (std::size_t car = 0; car < m; ++car) {
            auto s = static_cast<std::size_t>(pi[car]);
            while (s <= len && occupied[s]) {
                ++s;
            }
            if (s > len) {
                throw ArithmeticError("u-parking function failed on the full street");
            }
            occupied[s] = true;
        }
        for (std::size_t s = 1; s <= len; ++s) {
            if (!occupied[s]) {
                out.empty_positions.push_back(static_cast<Value>(s));
            }
        }
    }
    return out;
}

Value displacement(const ABParams& p, const ParkingFunction& pi)
{
    auto u = p.thresholds();
    if (!check_u_parking(u, pi)) {
        throw DomainError("displacement requires a member of PF(a,b,m)");
    }
    return p.b * p.m * (p.m - 1) / 2 + p.a * p.m - pi.sum();
}

std::uint64_t enumeration_candidates(const UVector& u)
{
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    const auto base = static_cast<std::uint64_t>(u.back());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (total > cap / base) {
            return cap;
        }
        total *= base;
    }
    return total;
}

PfEnumerator::PfEnumerator(UVector u, std::uint64_t budget) : u_(std::move(u))
{
    auto need = enumeration_candidates(u_);
    if (need > budget) {
        throw ResourceError("enumeration needs " + std::to_string(need) +
                            " candidates, budget is " + std::to_string(budget));
    }
}

std::optional<PreferenceVector> PfEnumerator::next()
{
    const auto m = u_.size();
    const Value top = u_.back();
    while (!done_) {
        if (cursor_.empty()) {
            cursor_.assign(m, 1);
        } else {
            // odometer step, last coordinate fastest
            std::size_t i = m;
            while (i > 0 && cursor_[i - 1] == top) {
                cursor_[i - 1] = 1;
                --i;
            }
            if (i == 0) {
                done_ = true;
                break;
            }
            ++cursor_[i - 1];
        }
        PreferenceVector pi(cursor_);
        if (check_u_parking(u_, pi)) {
            return pi;
        }
    }
    return std::nullopt;
}

std::vector<PreferenceVector> enumerate_pf(const UVector& u, std::uint64_t budget)
{
    std::vector<PreferenceVector> out;
    PfEnumerator e(u, budget);
    for (const auto& pi : e) {
        out.push_back(pi);
    }
    return out;
}

} // namespace parkfn
