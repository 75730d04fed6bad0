#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "parkfn/bignum.hpp"

namespace parkfn {

using Value = std::int64_t;

/// Strictly increasing positive thresholds u_1 < ... < u_m defining PF(u).
///
/// Indexing is 1-based to match the threshold notation: `u(1)` is the first
/// threshold. `u(0)` returns 0, the conventional empty prefix.
class UVector {
public:
    explicit UVector(std::vector<Value> thresholds);

    // u_i = a + (i-1) b for i = 1..m.
    static UVector arithmetic(Value a, Value b, std::int64_t m);

    std::size_t size() const noexcept { return u_.size(); }
    Value operator()(std::size_t i) const { return i == 0 ? 0 : u_.at(i - 1); }
    Value back() const noexcept { return u_.back(); }
    std::span<const Value> values() const noexcept { return u_; }

    friend bool operator==(const UVector&, const UVector&) = default;

private:
    std::vector<Value> u_;
};

/// (a, b, m) with thresholds u_i = a + (i-1) b. When built from a regime,
/// `c` records a = c m + b.
struct ABParams {
    Value a = 1;
    Value b = 1;
    std::int64_t m = 1;
    std::optional<BigRat> c;

    ABParams() = default;
    ABParams(Value a_, Value b_, std::int64_t m_);

    // a = c m + b; throws DomainError unless c m is an integer.
    static ABParams from_regime(Value b, const BigRat& c, std::int64_t m);

    UVector thresholds() const { return UVector::arithmetic(a, b, m); }
    Value top() const noexcept { return a + (m - 1) * b; }      // u_m
    Value modulus() const noexcept { return a + m * b; }        // a + m b
};

/// A length-m sequence of positive preferences. Membership in PF(u) is a
/// predicate, not a type constraint.
class PreferenceVector {
public:
    PreferenceVector() = default;
    explicit PreferenceVector(std::vector<Value> prefs);

    std::size_t size() const noexcept { return pi_.size(); }
    Value operator[](std::size_t i) const { return pi_[i]; }
    std::span<const Value> values() const noexcept { return pi_; }

    // Non-decreasing rearrangement; the original is untouched.
    std::vector<Value> sorted() const;

    Value sum() const;

    friend bool operator==(const PreferenceVector&, const PreferenceVector&) = default;
    friend auto operator<=>(const PreferenceVector&, const PreferenceVector&) = default;

private:
    std::vector<Value> pi_;
};

// A preference vector known (by the caller) to lie in PF(u).
using ParkingFunction = PreferenceVector;

struct ParkingOutcome {
    std::vector<Value> spots;            // spot taken by car i (0 where it failed)
    bool success = false;
    std::vector<Value> empty_positions;  // never-attempted spots, ascending
};

bool check_u_parking(const UVector& u, const PreferenceVector& pi);

// One-way street of u_m spots of which exactly u_1..u_m are empty. Car i
// takes the first empty spot at or after pi_i.
ParkingOutcome park(const UVector& u, const PreferenceVector& pi);

// b*C(m,2) + a*m - sum(pi); throws DomainError unless pi is in PF(a,b,m).
Value displacement(const ABParams& p, const ParkingFunction& pi);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Lexicographic stream over every pi in [u_m]^m with check_u_parking true.
/// Construction throws ResourceError if u_m^m exceeds the candidate budget.
class PfEnumerator {
public:
    explicit PfEnumerator(UVector u, std::uint64_t budget = kDefaultEnumerationBudget);

    std::optional<PreferenceVector> next();

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = PreferenceVector;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(PfEnumerator* owner) : owner_(owner) { ++*this; }

        const PreferenceVector& operator*() const { return *current_; }
        const PreferenceVector* operator->() const { return &*current_; }
        iterator& operator++()
        {
            current_ = owner_->next();
            if (!current_) {
                owner_ = nullptr;
            }
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& x, const iterator& y) { return x.owner_ == y.owner_; }

    private:
        PfEnumerator* owner_ = nullptr;
        std::optional<PreferenceVector> current_;
    };

    iterator begin() { return iterator(this); }
    iterator end() { return {}; }

private:
    UVector u_;
    std::vector<Value> cursor_;
    bool done_ = false;
};

// Number of candidates u_m^m, saturated at UINT64_MAX.
std::uint64_t enumeration_candidates(const UVector& u);

std::vector<PreferenceVector> enumerate_pf(const UVector& u,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace parkfn
