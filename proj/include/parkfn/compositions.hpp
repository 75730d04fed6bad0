#pragma once

#include <cstdint>
#include <vector>

namespace parkfn {

/// Visits every weak composition s = (s_1..s_parts) of `total` in
/// lexicographic order. `admit(i, s, prefix_sum)` is consulted after part i
/// (0-based) is fixed; returning false prunes every completion of that
/// prefix. Prefix sums are non-decreasing in s_i, so callers whose
/// constraints are lower bounds on partial sums prune exactly.
template <class Admit, class Visit>
void for_each_composition(std::int64_t total, std::size_t parts, Admit&& admit, Visit&& visit)
{
    if (parts == 0) {
        if (total == 0) {
            std::vector<std::int64_t> empty;
            visit(empty);
        }
        return;
    }
    std::vector<std::int64_t> s(parts, 0);
    auto recurse = [&](auto&& self, std::size_t i, std::int64_t used) -> void {
        if (i + 1 == parts) {
            s[i] = total - used;
            if (admit(i, s, total)) {
                visit(s);
            }
            return;
        }
        for (std::int64_t v = 0; v <= total - used; ++v) {
            s[i] = v;
            if (admit(i, s, used + v)) {
                self(self, i + 1, used + v);
            }
        }
    };
    recurse(recurse, 0, 0);
}

template <class Visit>
void for_each_composition(std::int64_t total, std::size_t parts, Visit&& visit)
{
    for_each_composition(
        total, parts, [](std::size_t, const std::vector<std::int64_t>&, std::int64_t) { return true; },
        std::forward<Visit>(visit));
}

} // namespace parkfn
