#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// beyond plain value types, so the tests compare two independent routes.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Word = std::vector<std::int64_t>;

// Every word in [1, n]^len, lexicographic.
inline void for_each_word(std::int64_t n, std::size_t len, const std::function<void(const Word&)>& f)
{
    Word w(len, 1);
    if (len == 0) {
        f(w);
        return;
    }
    while (true) {
        f(w);
        std::size_t i = len;
        while (i > 0 && w[i - 1] == n) {
            w[i - 1] = 1;
            --i;
        }
        if (i == 0) {
            return;
        }
        ++w[i - 1];
    }
}

inline bool is_pf(const Word& u, Word pi)
{
    if (pi.size() != u.size()) {
        return false;
    }
    std::sort(pi.begin(), pi.end());
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (pi[i] < 1 || pi[i] > u[i]) {
            return false;
        }
    }
    return true;
}

inline std::vector<Word> enumerate(const Word& u)
{
    std::vector<Word> out;
    for_each_word(u.back(), u.size(), [&](const Word& w) {
        if (is_pf(u, w)) {
            out.push_back(w);
        }
    });
    return out;
}

// All strictly increasing u with 1 <= m <= max_m and u_m <= max_top.
inline std::vector<Word> threshold_grid(std::size_t max_m, std::int64_t max_top)
{
    std::vector<Word> out;
    std::function<void(Word&)> grow = [&](Word& u) {
        if (!u.empty()) {
            out.push_back(u);
        }
        if (u.size() == max_m) {
            return;
        }
        for (std::int64_t x = u.empty() ? 1 : u.back() + 1; x <= max_top; ++x) {
            u.push_back(x);
            grow(u);
            u.pop_back();
        }
    };
    Word u;
    grow(u);
    return out;
}

inline Word arithmetic(std::int64_t a, std::int64_t b, std::int64_t m)
{
    Word u;
    for (std::int64_t i = 0; i < m; ++i) {
        u.push_back(a + i * b);
    }
    return u;
}

// Number of pi in PF(u) whose first |w| entries equal w.
inline std::int64_t count_with_prefix(const Word& u, const Word& w)
{
    std::int64_t n = 0;
    for_each_word(u.back(), u.size() - w.size(), [&](const Word& rest) {
        Word pi = w;
        pi.insert(pi.end(), rest.begin(), rest.end());
        n += is_pf(u, pi);
    });
    return n;
}

// Sorted prefixes w in [u_m]^l (non-decreasing) with (w, suffix) in PF(u).
inline std::vector<Word> compatible_prefixes(const Word& u, const Word& suffix)
{
    const std::size_t l = u.size() - suffix.size();
    std::vector<Word> out;
    for_each_word(u.back(), l, [&](const Word& w) {
        if (!std::is_sorted(w.begin(), w.end())) {
            return;
        }
        Word pi = w;
        pi.insert(pi.end(), suffix.begin(), suffix.end());
        if (is_pf(u, pi)) {
            out.push_back(w);
        }
    });
    return out;
}

inline bool leq(const Word& x, const Word& y)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) {
            return false;
        }
    }
    return true;
}

struct MaxPrefix {
    bool nonempty = false;
    Word top;          // componentwise maximum of the compatible set
    bool ideal = false;  // compatible set is exactly {sorted w <= top}
};

inline MaxPrefix max_prefix(const Word& u, const Word& suffix)
{
    MaxPrefix r;
    auto set = compatible_prefixes(u, suffix);
    if (set.empty()) {
        return r;
    }
    r.nonempty = true;
    r.top = set.front();
    for (const auto& w : set) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            r.top[i] = std::max(r.top[i], w[i]);
        }
    }
    std::size_t below = 0;
    for_each_word(u.back(), r.top.size(), [&](const Word& w) {
        if (std::is_sorted(w.begin(), w.end()) && leq(w, r.top)) {
            ++below;
        }
    });
    bool all_below = std::all_of(set.begin(), set.end(), [&](const Word& w) { return leq(w, r.top); });
    r.ideal = all_below && below == set.size();
    return r;
}

} // namespace oracle
