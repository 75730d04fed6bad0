#include "parkfn/sampler.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

#include "parkfn/errors.hpp"

namespace parkfn {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) {
        return static_cast<std::int64_t>(rng());
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % range);
}

PreferenceVector shift_wrapped(const ABParams& p, const PreferenceVector& raw, Value k)
{
    const Value n = p.modulus();
    std::vector<Value> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        out[i] = (raw[i] - 1 + k) % n + 1;
    }
    return PreferenceVector(std::move(out));
}

std::vector<Value> parking_shifts_naive(const ABParams& p, const PreferenceVector& raw)
{
    const auto u = p.thresholds();
    std::vector<Value> ks;
    for (Value k = 0; k < p.modulus(); ++k) {
        if (check_u_parking(u, shift_wrapped(p, raw, k))) {
            ks.push_back(k);
        }
    }
    return ks;
}

std::vector<Value> parking_shifts(const ABParams& p, const PreferenceVector& raw)
{
    const Value n = p.modulus();
    const auto un = static_cast<std::size_t>(n);
    // prefix[x] = number of residues (pi_i - 1) below x, over two laps of the circle
    std::vector<std::int64_t> prefix(2 * un + 1, 0);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto r = static_cast<std::size_t>((raw[i] - 1) % n);
        ++prefix[r + 1];
        ++prefix[r + 1 + un];
    }
    for (std::size_t x = 1; x <= 2 * un; ++x) {
        prefix[x] += prefix[x - 1];
    }

    std::vector<Value> ks;
    for (Value k = 0; k < n; ++k) {
        // shifted values <= t come from residues in [n-k, n-k+t-1] mod n
        const auto start = static_cast<std::size_t>((n - k) % n);
        bool ok = true;
        for (std::int64_t i = 1; i <= p.m && ok; ++i) {
            const auto t = static_cast<std::size_t>(p.a + (i - 1) * p.b);
            ok = prefix[start + t] - prefix[start] >= i;
        }
        if (ok) {
            ks.push_back(k);
        }
    }
    return ks;
}

SamplerState::SamplerState(ABParams params, std::uint64_t seed) : params_(std::move(params)), rng_(seed) {}

ParkingFunction SamplerState::sample()
{
    const Value n = params_.modulus();
    std::vector<Value> draw(static_cast<std::size_t>(params_.m));
    for (auto& x : draw) {
        x = uniform_int(rng_, 1, n);
    }
    PreferenceVector raw(std::move(draw));
    auto ks = parking_shifts(params_, raw);
    if (static_cast<Value>(ks.size()) != params_.a) {
        throw ArithmeticError("cyclic construction found " + std::to_string(ks.size()) +
                              " parking shifts, expected a = " + std::to_string(params_.a));
    }
    auto pick = uniform_int(rng_, 0, static_cast<std::int64_t>(ks.size()) - 1);
    return shift_wrapped(params_, raw, ks[static_cast<std::size_t>(pick)]);
}

void RunningMoments::add(double x)
{
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
}

void RunningMoments::merge(const RunningMoments& o)
{
    if (o.n == 0) {
        return;
    }
    if (n == 0) {
        *this = o;
        return;
    }
    const double na = static_cast<double>(n);
    const double nb = static_cast<double>(o.n);
    const double delta = o.mean - mean;
    const double total = na + nb;
    mean += delta * nb / total;
    m2 += o.m2 + delta * delta * na * nb / total;
    n += o.n;
}

std::optional<double> RunningMoments::variance() const
{
    if (n < 2) {
        return std::nullopt;
    }
    return m2 / static_cast<double>(n - 1);
}

void RunningCovariance::add(double x, double y)
{
    ++n;
    const double dx = x - mean_x;
    mean_x += dx / static_cast<double>(n);
    mean_y += (y - mean_y) / static_cast<double>(n);
    c += dx * (y - mean_y);
}

void RunningCovariance::merge(const RunningCovariance& o)
{
    if (o.n == 0) {
        return;
    }
    if (n == 0) {
        *this = o;
        return;
    }
    const double na = static_cast<double>(n);
    const double nb = static_cast<double>(o.n);
    const double total = na + nb;
    const double dx = o.mean_x - mean_x;
    const double dy = o.mean_y - mean_y;
    c += o.c + dx * dy * na * nb / total;
    mean_x += dx * nb / total;
    mean_y += dy * nb / total;
    n += o.n;
}

std::optional<double> RunningCovariance::covariance() const
{
    if (n < 2) {
        return std::nullopt;
    }
    return c / static_cast<double>(n - 1);
}

void StatisticsRecord::merge(const StatisticsRecord& o)
{
    n_samples += o.n_samples;
    pi1.merge(o.pi1);
    pi12.merge(o.pi12);
    disp.merge(o.disp);
    if (pi1_hist.size() < o.pi1_hist.size()) {
        pi1_hist.resize(o.pi1_hist.size(), 0);
    }
    for (std::size_t v = 0; v < o.pi1_hist.size(); ++v) {
        pi1_hist[v] += o.pi1_hist[v];
    }
    for (const auto& [v, count] : o.disp_hist) {
        disp_hist[v] += count;
    }
}

namespace {

StatisticsRecord run_chunk(const ABParams& params, std::uint64_t count, std::uint64_t seed)
{
    StatisticsRecord rec;
    rec.params = params;
    rec.pi1_hist.assign(static_cast<std::size_t>(params.top()) + 1, 0);
    SamplerState state(params, seed);
    const Value full = params.b * params.m * (params.m - 1) / 2 + params.a * params.m;
    for (std::uint64_t i = 0; i < count; ++i) {
        auto pi = state.sample();
        const Value d = full - pi.sum();
        rec.pi1.add(static_cast<double>(pi[0]));
        if (params.m >= 2) {
            rec.pi12.add(static_cast<double>(pi[0]), static_cast<double>(pi[1]));
        }
        rec.disp.add(static_cast<double>(d));
        ++rec.pi1_hist[static_cast<std::size_t>(pi[0])];
        ++rec.disp_hist[d];
    }
    rec.n_samples = count;
    return rec;
}

} // namespace

StatisticsRecord estimate_statistics(const ABParams& params, std::uint64_t n_samples,
                                     std::uint64_t seed, unsigned threads)
{
    if (n_samples < 1) {
        throw UsageError("n_samples must be at least 1");
    }
    const std::uint64_t chunks = (n_samples + kChunk - 1) / kChunk;
    std::vector<StatisticsRecord> parts(chunks);
    auto work = [&](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t c = first; c < chunks; c += stride) {
            const std::uint64_t count = std::min(kChunk, n_samples - c * kChunk);
            parts[c] = run_chunk(params, count, derive_seed(seed, c));
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1 || chunks == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t, threads);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    StatisticsRecord out;
    out.params = params;
    out.pi1_hist.assign(static_cast<std::size_t>(params.top()) + 1, 0);
    for (const auto& part : parts) {
        out.merge(part);
    }
    return out;
}

} // namespace parkfn
