#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parkfn/core.hpp"

namespace parkfn {

/// The unique maximal prefix compatible with a fixed suffix: v_i = u_{k_i}.
/// Indices k are 1-based threshold positions.
struct MaximalVector {
    std::vector<Value> v;
    std::vector<std::size_t> k;

    friend bool operator==(const MaximalVector&, const MaximalVector&) = default;
};

/// A suffix written as a multi-shuffle of l+1 parking functions.
///
/// components[j] is the word alpha_{j+1}, shifted down into its threshold
/// window. interleaving[t] names the component that suffix position t was
/// drawn from, so compose() can restore the original order.
struct ShuffleDecomposition {
    std::vector<Value> v;
    std::vector<std::size_t> k;
    std::vector<std::vector<Value>> components;
    std::vector<std::size_t> interleaving;
};

/// Greedy search for the maximal compatible v. The sorted suffix entries
/// claim the smallest unused thresholds that cover them; the l thresholds
/// left over form v. Returns nullopt when some entry cannot be covered,
/// i.e. no prefix completes the suffix to a u-parking function.
std::optional<MaximalVector> maximal_v(const UVector& u, std::span<const Value> suffix);

// Thresholds of window j (1-based, 1..l+1) shifted down by u_{k_{j-1}}:
// (u_{k_{j-1}+1} - u_{k_{j-1}}, ..., u_{k_j - 1} - u_{k_{j-1}}). May be empty.
std::vector<Value> window_thresholds(const UVector& u, std::span<const std::size_t> k, std::size_t j);

ShuffleDecomposition decompose(const UVector& u, std::span<const Value> v,
                               std::span<const Value> suffix);

std::vector<Value> compose(const UVector& u, std::span<const Value> v,
                           const std::vector<std::vector<Value>>& components,
                           std::span<const std::size_t> interleaving);

bool is_multishuffle(const UVector& u, std::span<const Value> v, std::span<const Value> suffix);

} // namespace parkfn
