#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "parkfn/core.hpp"

namespace parkfn {

// splitmix64 finalizer; stream i of a run seeded with s uses derive_seed(s, i).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform integer in [lo, hi] from a 64-bit engine by rejection (no modulo bias).
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Shifts k in [0, a+mb-1] for which raw + k (wrapped into [1, a+mb]) is an
/// (a,b)-parking function. One pass over a doubled prefix-count table;
/// parking_shifts_naive re-sorts for every k and serves as its reference.
std::vector<Value> parking_shifts(const ABParams& p, const PreferenceVector& raw);
std::vector<Value> parking_shifts_naive(const ABParams& p, const PreferenceVector& raw);

PreferenceVector shift_wrapped(const ABParams& p, const PreferenceVector& raw, Value k);

/// Uniform sampler on PF(a,b,m) via the cyclic-shift construction: draw a
/// word in [1, a+mb]^m, collect the a shifts that park, pick one uniformly.
/// mt19937_64 is fully specified by the standard, so a seed reproduces the
/// same stream on any conforming library.
class SamplerState {
public:
    SamplerState(ABParams params, std::uint64_t seed);

    ParkingFunction sample();

    const ABParams& params() const noexcept { return params_; }

private:
    ABParams params_;
    std::mt19937_64 rng_;
};

// Welford accumulator with Chan's pairwise merge.
struct RunningMoments {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x);
    void merge(const RunningMoments& other);
    std::optional<double> variance() const;  // unbiased; absent for n < 2
};

struct RunningCovariance {
    std::uint64_t n = 0;
    double mean_x = 0.0;
    double mean_y = 0.0;
    double c = 0.0;

    void add(double x, double y);
    void merge(const RunningCovariance& other);
    std::optional<double> covariance() const;
};

struct StatisticsRecord {
    ABParams params;
    std::uint64_t n_samples = 0;
    RunningMoments pi1;
    RunningCovariance pi12;  // empty when m == 1
    RunningMoments disp;
    std::vector<std::uint64_t> pi1_hist;      // index = value of pi_1
    std::map<Value, std::uint64_t> disp_hist;

    void merge(const StatisticsRecord& other);
};

/// Monte Carlo statistics over n_samples uniform draws. Samples are drawn in
/// fixed chunks of kChunk, chunk c seeded with derive_seed(seed, c), and
/// merged in chunk order, so the record does not depend on `threads`.
StatisticsRecord estimate_statistics(const ABParams& params, std::uint64_t n_samples,
                                     std::uint64_t seed, unsigned threads = 1);

inline constexpr std::uint64_t kChunk = 8192;

} // namespace parkfn
