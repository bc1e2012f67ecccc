#pragma once

// Independent brute-force computations used to cross-validate the closed
// forms and the online strategy at small sizes. The seating search walks
// every seating order with Diner 1 fixed in Seat 1 (rotation quotient) and
// simulates each one; the bench search walks every partition of the diners
// into q unordered triples plus spares and counts balanced benches.

#include "napkin/bench.hpp"
#include "napkin/seating.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace napkin {

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleBudget {
    int max_seating_n = 9;  // (n-1)! seating orders
    int max_bench_n = 12;   // bench partitions
    int max_sigma_n = 20;   // 2^n preference sweeps

    void validate() const {
        if (max_seating_n < 2 || max_bench_n < 2 || max_sigma_n < 2)
            throw std::invalid_argument("oracle budget caps must be at least 2");
    }

    void require_seating(int n) const {
        validate();
        if (n > max_seating_n)
            throw BudgetError("seating oracle capped at n = " + std::to_string(max_seating_n));
    }
    void require_bench(int n) const {
        validate();
        if (n > max_bench_n)
            throw BudgetError("bench oracle capped at n = " + std::to_string(max_bench_n));
    }
    void require_sigma(int n) const {
        validate();
        if (n > max_sigma_n)
            throw BudgetError("preference sweep capped at n = " + std::to_string(max_sigma_n));
    }
};

namespace detail {

template <typename Visit>
void for_each_anchored_order(int n, Visit&& visit) {
    std::vector<int> seats(static_cast<size_t>(n));
    std::iota(seats.begin(), seats.end(), 1);
    do {
        visit(seats);
    } while (std::next_permutation(seats.begin() + 1, seats.end()));
}

// Walks every partition of the not-yet-used labels into triples, anchoring
// each triple at the smallest remaining label so each unordered partition
// is produced once. `spare_mask` marks labels left out of all benches.
template <typename Visit>
void for_each_triple_partition(std::uint32_t used, int n, std::vector<Bench>& benches,
                               Visit&& visit) {
    int anchor = 0;
    for (int label = 1; label <= n; ++label)
        if (!(used & (std::uint32_t{1} << label))) {
            anchor = label;
            break;
        }
    if (anchor == 0) {
        visit(benches);
        return;
    }
    used |= std::uint32_t{1} << anchor;
    for (int second = anchor + 1; second <= n; ++second) {
        if (used & (std::uint32_t{1} << second)) continue;
        used |= std::uint32_t{1} << second;
        for (int third = second + 1; third <= n; ++third) {
            if (used & (std::uint32_t{1} << third)) continue;
            benches.emplace_back(anchor, second, third);
            for_each_triple_partition(used | (std::uint32_t{1} << third), n, benches, visit);
            benches.pop_back();
        }
        used &= ~(std::uint32_t{1} << second);
    }
}

template <typename Visit>
void for_each_spare_mask(int n, int r, Visit&& visit) {
    if (r == 0) {
        visit(std::uint32_t{0});
    } else if (r == 1) {
        for (int s = 1; s <= n; ++s) visit(std::uint32_t{1} << s);
    } else {
        for (int s = 1; s <= n; ++s)
            for (int t = s + 1; t <= n; ++t)
                visit((std::uint32_t{1} << s) | (std::uint32_t{1} << t));
    }
}

}  // namespace detail

/// Exact maximum napkinless count over all seating orders with Diner 1 in
/// Seat 1, by simulation.
inline int max_napkinless_seating_oracle(const PreferenceOrder& prefs,
                                         const OracleBudget& budget = {}) {
    budget.require_seating(prefs.size());
    int best = 0;
    detail::for_each_anchored_order(prefs.size(), [&](const std::vector<int>& seats) {
        SeatingArrangement arrangement{SeatingOrder(seats), prefs};
        best = std::max(best, simulate_dining(arrangement).napkinless_count());
    });
    return best;
}

/// Exact maximum balance number over all bench collections covering the
/// diners. Agrees with the seating oracle.
inline int max_napkinless_bench_oracle(const PreferenceOrder& prefs,
                                       const OracleBudget& budget = {}) {
    const int n = prefs.size();
    budget.require_bench(n);
    if (n > 31) throw std::invalid_argument("bench oracle limited to n <= 31");
    const int q = prefs.bench_count();
    if (q == 0) return 0;
    int best = 0;
    std::vector<Bench> benches;
    benches.reserve(static_cast<size_t>(q));
    detail::for_each_spare_mask(n, prefs.remainder(), [&](std::uint32_t spare_mask) {
        if (best == q) return;
        detail::for_each_triple_partition(spare_mask, n, benches,
                                          [&](const std::vector<Bench>& partition) {
                                              int balanced = 0;
                                              for (const Bench& bench : partition)
                                                  balanced += is_balanced(bench, prefs);
                                              best = std::max(best, balanced);
                                          });
    });
    return best;
}

/// A napkinless diner together with the nearest happy positive diner on
/// their left and the nearest happy negative diner on their right.
struct MinimalBlock {
    int left_happy = 0;   // positive, arrived earlier
    int diner = 0;        // the napkinless diner
    int right_happy = 0;  // negative, arrived earlier
};

inline MinimalBlock minimal_napkinless_block(const DiningOutcome& outcome, int diner) {
    const int n = outcome.size();
    if (outcome.status_of(diner) != DinerStatus::Napkinless)
        throw std::invalid_argument("diner " + std::to_string(diner) + " is not napkinless");
    const int seat = outcome.seat_of(diner);
    auto wrap = [n](int s) { return (s - 1 + n) % n + 1; };

    MinimalBlock block;
    block.diner = diner;
    for (int offset = 1; offset < n; ++offset) {
        const SeatOutcome& left = outcome.at_seat(wrap(seat - offset));
        if (left.status == DinerStatus::Happy) {
            if (left.preference < 0 || left.diner > diner)
                throw std::logic_error("left neighbor of a napkinless diner must be an earlier happy positive");
            block.left_happy = left.diner;
            break;
        }
        if (left.status != DinerStatus::Frustrated)
            throw std::logic_error("diners between a napkinless diner and its block must be frustrated");
    }
    for (int offset = 1; offset < n; ++offset) {
        const SeatOutcome& right = outcome.at_seat(wrap(seat + offset));
        if (right.status == DinerStatus::Happy) {
            if (right.preference > 0 || right.diner > diner)
                throw std::logic_error("right neighbor of a napkinless diner must be an earlier happy negative");
            block.right_happy = right.diner;
            break;
        }
        if (right.status != DinerStatus::Frustrated)
            throw std::logic_error("diners between a napkinless diner and its block must be frustrated");
    }
    if (block.left_happy == 0 || block.right_happy == 0)
        throw std::logic_error("napkinless diner without happy neighbors");
    return block;
}

/// Repack a maximal arrangement so its napkinless diners sit in Seats
/// {2, 5, ..., 3k-1}: each minimal block becomes three consecutive seats,
/// remaining diners follow in increasing order. The result need not keep
/// Diner 1 in Seat 1.
inline SeatingArrangement canonicalize_max_arrangement(const SeatingArrangement& maximal) {
    const DiningOutcome outcome = simulate_dining(maximal);
    const int n = maximal.size();
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<bool> placed(static_cast<size_t>(n), false);
    for (int diner : outcome.napkinless_diners()) {
        const MinimalBlock block = minimal_napkinless_block(outcome, diner);
        for (int member : {block.left_happy, block.diner, block.right_happy}) {
            order.push_back(member);
            placed[static_cast<size_t>(member) - 1] = true;
        }
    }
    for (int diner = 1; diner <= n; ++diner)
        if (!placed[static_cast<size_t>(diner) - 1]) order.push_back(diner);
    return {SeatingOrder(std::move(order)), maximal.prefs};
}

inline SeatingArrangement canonicalize_max_arrangement(const PreferenceOrder& prefs,
                                                       const OracleBudget& budget = {}) {
    budget.require_seating(prefs.size());
    const int target = max_napkinless_seating_oracle(prefs, budget);
    SeatingArrangement best{SeatingOrder::sequential(prefs.size()), prefs};
    bool found = false;
    detail::for_each_anchored_order(prefs.size(), [&](const std::vector<int>& seats) {
        if (found) return;
        SeatingArrangement arrangement{SeatingOrder(seats), prefs};
        if (simulate_dining(arrangement).napkinless_count() == target) {
            best = arrangement;
            found = true;
        }
    });
    return canonicalize_max_arrangement(best);
}

enum class DistributionBackend { FormulaNu, SeatingOracle };

/// Histogram of the maximum napkinless count over all 2^n preference
/// orders, indexed by k = 0..q. Entries sum to 2^n.
inline std::vector<std::uint64_t> napkinless_distribution_oracle(int n, DistributionBackend mode,
                                                                 const OracleBudget& budget = {}) {
    if (n < 2) throw std::invalid_argument("distribution oracle needs n >= 2");
    if (mode == DistributionBackend::FormulaNu) {
        budget.require_sigma(n);
    } else {
        budget.require_seating(n);
    }
    std::vector<std::uint64_t> histogram(static_cast<size_t>(n / 3) + 1, 0);
    std::vector<Sign> signs(static_cast<size_t>(n));
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int i = 0; i < n; ++i)
            signs[static_cast<size_t>(i)] = (mask >> i) & 1 ? Sign{1} : Sign{-1};
        PreferenceOrder prefs(signs);
        const int value = mode == DistributionBackend::FormulaNu
                              ? max_napkinless_count(prefs)
                              : max_napkinless_seating_oracle(prefs, budget);
        histogram.at(static_cast<size_t>(value)) += 1;
    }
    return histogram;
}

}  // namespace napkin
