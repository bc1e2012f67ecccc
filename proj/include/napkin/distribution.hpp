#pragma once

// Closed-form distribution of the maximum napkinless count over uniformly
// random preference orders, its exact expectation, and a seeded Monte
// Carlo cross-check that drives the full trap-setting pipeline. All
// arithmetic is exact; doubles appear only in rendered views.
//
// With q = floor(n/3), the count of preference orders whose maximum is k
// is 4*C(n,k) for k < q, and 2^n minus the sum of those for k = q.

#include "napkin/bench.hpp"
#include "napkin/exact.hpp"
#include "napkin/parallel.hpp"
#include "napkin/seating.hpp"

#include <cmath>
#include <cstdint>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace napkin {

/// Count of length-n preference orders with maximum napkinless count k.
inline BigInt distribution_count(int n, int k) {
    if (n < 3) throw std::invalid_argument("distribution defined for n >= 3");
    if (k < 0) throw std::out_of_range("k must be nonnegative");
    const int q = n / 3;
    if (k > q) return 0;
    if (k < q) return 4 * binomial(n, k);
    BigInt tail = pow2(n);
    for (int i = 0; i < q; ++i) tail -= 4 * binomial(n, i);
    return tail;
}

inline BigRational distribution_probability(int n, int k) {
    return BigRational(distribution_count(n, k), pow2(n));
}

/// Exact expectation q - sum_{k<q} (q-k) C(n,k) / 2^(n-2).
inline BigRational expected_napkinless(int n) {
    if (n < 3) throw std::invalid_argument("expectation defined for n >= 3");
    const int q = n / 3;
    BigInt weighted = 0;
    for (int k = 0; k < q; ++k) weighted += BigInt(q - k) * binomial(n, k);
    return BigRational(q) - BigRational(weighted, pow2(n - 2));
}

/// q - E_n; positive for every n and vanishing as n grows.
inline BigRational convergence_gap(int n) {
    if (n < 3) throw std::invalid_argument("gap defined for n >= 3");
    const int q = n / 3;
    BigInt weighted = 0;
    for (int k = 0; k < q; ++k) weighted += BigInt(q - k) * binomial(n, k);
    return BigRational(4 * weighted, pow2(n));
}

struct DistributionTable {
    int n = 0;
    int q = 0;
    std::vector<BigInt> counts;            // index k = 0..q
    std::vector<BigRational> probabilities;
    BigRational expectation;
};

inline DistributionTable distribution_table(int n) {
    DistributionTable table;
    table.n = n;
    table.q = n / 3;
    for (int k = 0; k <= table.q; ++k) {
        table.counts.push_back(distribution_count(n, k));
        table.probabilities.push_back(distribution_probability(n, k));
    }
    table.expectation = expected_napkinless(n);
    return table;
}

struct MonteCarloResult {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t state) {
    state += 0x9e3779b97f4a7c15ULL;
    state = (state ^ (state >> 30)) * 0xbf58476d1ce4e5b9ULL;
    state = (state ^ (state >> 27)) * 0x94d049bb133111ebULL;
    return state ^ (state >> 31);
}

}  // namespace detail

/// Seeded Monte Carlo estimate of the expected napkinless count: draw
/// uniform preference orders, seat them with the trap-setting strategy,
/// simulate, and average. Samples are split into fixed blocks of 1024,
/// block b drawing from an engine seeded with splitmix64(seed xor b+1), so
/// the result is reproducible and independent of the worker count.
inline MonteCarloResult monte_carlo_expectation(int n, std::int64_t samples, std::uint64_t seed,
                                                int threads = 0) {
    if (n < 3) throw std::invalid_argument("expectation defined for n >= 3");
    if (samples < 1) throw std::invalid_argument("need at least one sample");

    constexpr std::int64_t kBlock = 1024;
    const std::int64_t blocks = (samples + kBlock - 1) / kBlock;

    std::mutex merge_mutex;
    std::uint64_t sum = 0, sum_squares = 0;
    parallel_chunks(blocks, resolve_thread_count(threads), [&](std::int64_t begin, std::int64_t end) {
        std::uint64_t local_sum = 0, local_squares = 0;
        std::vector<Sign> signs(static_cast<size_t>(n));
        for (std::int64_t block = begin; block < end; ++block) {
            std::mt19937_64 rng(detail::splitmix64(seed ^ static_cast<std::uint64_t>(block + 1)));
            const std::int64_t first = block * kBlock;
            const std::int64_t last = std::min(samples, first + kBlock);
            for (std::int64_t i = first; i < last; ++i) {
                std::uint64_t bits = 0;
                for (int j = 0; j < n; ++j) {
                    if (j % 64 == 0) bits = rng();
                    signs[static_cast<size_t>(j)] = (bits >> (j % 64)) & 1 ? Sign{1} : Sign{-1};
                }
                PreferenceOrder prefs(signs);
                const auto nu = static_cast<std::uint64_t>(
                    simulate_dining(clairvoyant_seating(prefs).arrangement).napkinless_count());
                local_sum += nu;
                local_squares += nu * nu;
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        sum += local_sum;
        sum_squares += local_squares;
    });

    MonteCarloResult result;
    result.samples = samples;
    result.seed = seed;
    const double count = static_cast<double>(samples);
    result.mean = static_cast<double>(sum) / count;
    if (samples > 1) {
        const double variance =
            (static_cast<double>(sum_squares) - count * result.mean * result.mean) / (count - 1.0);
        result.std_error = std::sqrt(std::max(0.0, variance) / count);
    }
    return result;
}

struct ExpectationRow {
    int n = 0;
    BigRational expectation;
    std::string expectation_text;  // fixed decimal, 15 fraction digits
    std::string proportion_text;   // expectation / n
};

/// Rows (n, E_n, E_n/n) for the expectation curve; exact values rendered
/// to well past 12 significant digits.
inline std::vector<ExpectationRow> expectation_table(int n_min, int n_max) {
    if (n_min < 3 || n_min > n_max)
        throw std::invalid_argument("expectation table needs 3 <= n_min <= n_max");
    std::vector<ExpectationRow> rows;
    rows.reserve(static_cast<size_t>(n_max - n_min) + 1);
    for (int n = n_min; n <= n_max; ++n) {
        ExpectationRow row;
        row.n = n;
        row.expectation = expected_napkinless(n);
        row.expectation_text = to_fixed_decimal(row.expectation, 15);
        row.proportion_text = to_fixed_decimal(row.expectation / n, 15);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace napkin
