#include "parkfn/multishuffle.hpp"

#include <algorithm>
#include <string>

#include "parkfn/errors.hpp"

namespace parkfn {

namespace {

bool parks_in(std::span<const Value> thresholds, std::vector<Value> word)
{
    if (word.size() != thresholds.size()) {
        return false;
    }
    std::sort(word.begin(), word.end());
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 1 || word[i] > thresholds[i]) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> threshold_indices(const UVector& u, std::span<const Value> v)
{
    auto values = u.values();
    std::vector<std::size_t> k;
    k.reserve(v.size());
    for (auto x : v) {
        auto it = std::lower_bound(values.begin(), values.end(), x);
        if (it == values.end() || *it != x) {
            throw DecompositionError("v entry " + std::to_string(x) + " is not a threshold of u");
        }
        auto idx = static_cast<std::size_t>(it - values.begin()) + 1;
        if (!k.empty() && idx <= k.back()) {
            throw DecompositionError("v must be strictly increasing");
        }
        k.push_back(idx);
    }
    return k;
}

// u_{k_{j-1}} for 1-based window j; 0 for the first window.
Value window_offset(const UVector& u, std::span<const std::size_t> k, std::size_t j)
{
    return j == 1 ? 0 : u(k[j - 2]);
}

std::size_t window_end(const UVector& u, std::span<const std::size_t> k, std::size_t j)
{
    return j <= k.size() ? k[j - 1] : u.size() + 1;
}

} // namespace

std::vector<Value> window_thresholds(const UVector& u, std::span<const std::size_t> k, std::size_t j)
{
    if (j < 1 || j > k.size() + 1) {
        throw UsageError("window index out of range");
    }
    const std::size_t begin = j == 1 ? 0 : k[j - 2];
    const std::size_t end = window_end(u, k, j);
    const Value offset = window_offset(u, k, j);
    std::vector<Value> out;
    for (std::size_t i = begin + 1; i < end; ++i) {
        out.push_back(u(i) - offset);
    }
    return out;
}

std::optional<MaximalVector> maximal_v(const UVector& u, std::span<const Value> suffix)
{
    const auto m = u.size();
    if (suffix.size() > m) {
        throw UsageError("suffix longer than u");
    }
    if (std::any_of(suffix.begin(), suffix.end(), [](Value x) { return x < 1; })) {
        throw UsageError("suffix entries must be positive");
    }
    std::vector<Value> sorted(suffix.begin(), suffix.end());
    std::stable_sort(sorted.begin(), sorted.end());

    std::vector<bool> claimed(m + 1, false);
    std::size_t n = 0;
    for (auto x : sorted) {
        ++n;
        while (n <= m && u(n) < x) {
            ++n;
        }
        if (n > m) {
            return std::nullopt;
        }
        claimed[n] = true;
    }
    MaximalVector out;
    for (std::size_t i = 1; i <= m; ++i) {
        if (!claimed[i]) {
            out.v.push_back(u(i));
            out.k.push_back(i);
        }
    }
    return out;
}

namespace {

struct Attempt {
    std::optional<ShuffleDecomposition> result;
    std::string failure;
};

Attempt try_decompose(const UVector& u, std::span<const Value> v, std::span<const Value> suffix)
{
    if (v.size() + suffix.size() != u.size()) {
        throw UsageError("|v| + |suffix| must equal m");
    }
    Attempt attempt;
    std::vector<std::size_t> k;
    try {
        k = threshold_indices(u, v);
    } catch (const DecompositionError& e) {
        attempt.failure = e.what();
        return attempt;
    }

    const auto windows = v.size() + 1;
    ShuffleDecomposition d;
    d.v.assign(v.begin(), v.end());
    d.k = k;
    d.components.assign(windows, {});
    d.interleaving.reserve(suffix.size());

    for (auto x : suffix) {
        auto pos = std::lower_bound(v.begin(), v.end(), x);
        if (pos != v.end() && *pos == x) {
            attempt.failure = "suffix entry " + std::to_string(x) + " equals a shuffle point";
            return attempt;
        }
        if (x < 1 || x > u.back()) {
            attempt.failure = "suffix entry " + std::to_string(x) + " lies outside every window";
            return attempt;
        }
        auto j = static_cast<std::size_t>(pos - v.begin()) + 1;
        d.components[j - 1].push_back(x - window_offset(u, k, j));
        d.interleaving.push_back(j - 1);
    }

    for (std::size_t j = 1; j <= windows; ++j) {
        auto thresholds = window_thresholds(u, k, j);
        if (!parks_in(thresholds, d.components[j - 1])) {
            attempt.failure = "window " + std::to_string(j) + " holds " +
                              std::to_string(d.components[j - 1].size()) +
                              " entries that are not a parking function of its " +
                              std::to_string(thresholds.size()) + " thresholds";
            return attempt;
        }
    }
    attempt.result = std::move(d);
    return attempt;
}

} // namespace

ShuffleDecomposition decompose(const UVector& u, std::span<const Value> v, std::span<const Value> suffix)
{
    auto attempt = try_decompose(u, v, suffix);
    if (!attempt.result) {
        throw DecompositionError("not a multi-shuffle: " + attempt.failure);
    }
    return std::move(*attempt.result);
}

bool is_multishuffle(const UVector& u, std::span<const Value> v, std::span<const Value> suffix)
{
    return try_decompose(u, v, suffix).result.has_value();
}

std::vector<Value> compose(const UVector& u, std::span<const Value> v,
                           const std::vector<std::vector<Value>>& components,
                           std::span<const std::size_t> interleaving)
{
    auto k = threshold_indices(u, v);
    const auto windows = v.size() + 1;
    if (components.size() != windows) {
        throw DomainError("expected " + std::to_string(windows) + " components");
    }
    std::size_t total = 0;
    for (std::size_t j = 1; j <= windows; ++j) {
        if (!parks_in(window_thresholds(u, k, j), components[j - 1])) {
            throw DomainError("component " + std::to_string(j) +
                              " is not a parking function of its window");
        }
        total += components[j - 1].size();
    }
    if (interleaving.size() != total) {
        throw DomainError("interleaving length does not match the components");
    }
    std::vector<std::size_t> cursor(windows, 0);
    std::vector<Value> suffix;
    suffix.reserve(total);
    for (auto j : interleaving) {
        if (j >= windows || cursor[j] >= components[j].size()) {
            throw DomainError("interleaving is not a shuffle of the components");
        }
        suffix.push_back(components[j][cursor[j]++] + window_offset(u, k, j + 1));
    }
    return suffix;
}

} // namespace parkfn
