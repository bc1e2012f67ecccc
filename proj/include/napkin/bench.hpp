#pragma once

// Bench collections and the clairvoyant trap-setting strategy. Seats come
// in q = floor(n/3) three-seat benches, bench j holding Seats
// {3j-2, 3j-1, 3j}, plus r = n - 3q remainder seats at the end. A bench is
// balanced for a preference order when its two lowest-labeled diners have
// opposite preferences; each balanced bench can be seated so its third
// member finds no napkin.
//
// The online strategy seats each arriving diner by the first applicable
// rule. Positive diner: (1a) the leftmost seat of the lowest open-left
// bench, else (1b) the lowest primed bench (center seat, or the leftmost
// free remainder seat), else (1c) the rightmost seat of the lowest bench
// that still has one, which strands an unbalanced bench. Negative diners
// mirror the rules left-to-right as (2a)-(2c). "Primed" means exactly the
// two end seats are taken; unfilled remainder seats count as one primed
// pseudo-bench numbered q+1, so real benches win the tie in (1b)/(2b).

#include "napkin/paths.hpp"
#include "napkin/seating.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace napkin {

struct Bench {
    int a, b, c;  // diner labels, a < b < c

    Bench(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
        if (a < 1 || !(a < b && b < c))
            throw std::invalid_argument("bench labels must satisfy 1 <= a < b < c");
    }

    bool operator==(const Bench& other) const = default;
};

class BenchCollection {
public:
    BenchCollection(std::vector<Bench> benches, std::vector<int> spares)
        : benches_(std::move(benches)), spares_(std::move(spares)) {
        std::sort(spares_.begin(), spares_.end());
        std::vector<int> all = spares_;
        for (const Bench& bench : benches_) {
            all.push_back(bench.a);
            all.push_back(bench.b);
            all.push_back(bench.c);
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::invalid_argument("bench collection members overlap");
    }

    /// Collection whose spares are the labels of 1..n not used by any bench.
    static BenchCollection covering(std::vector<Bench> benches, int n) {
        std::vector<bool> used(static_cast<size_t>(n), false);
        for (const Bench& bench : benches)
            for (int label : {bench.a, bench.b, bench.c}) {
                if (label > n)
                    throw std::invalid_argument("bench label " + std::to_string(label) +
                                                " exceeds n = " + std::to_string(n));
                used[static_cast<size_t>(label) - 1] = true;
            }
        std::vector<int> spares;
        for (int label = 1; label <= n; ++label)
            if (!used[static_cast<size_t>(label) - 1]) spares.push_back(label);
        return BenchCollection(std::move(benches), std::move(spares));
    }

    /// Parse semicolon-separated triples, e.g. "1,10,11;5,8,14"; labels not
    /// mentioned become spares.
    static BenchCollection parse(std::string_view text, int n) {
        std::vector<Bench> benches;
        size_t pos = 0;
        while (pos < text.size()) {
            size_t semi = text.find(';', pos);
            if (semi == std::string_view::npos) semi = text.size();
            std::vector<int> labels =
                detail::parse_int_csv(text.substr(pos, semi - pos), "bench collection");
            if (labels.size() != 3)
                throw std::invalid_argument("bench collection: each bench needs 3 labels");
            std::sort(labels.begin(), labels.end());
            benches.emplace_back(labels[0], labels[1], labels[2]);
            pos = semi + 1;
        }
        return covering(std::move(benches), n);
    }

    int bench_count() const { return static_cast<int>(benches_.size()); }
    const std::vector<Bench>& benches() const { return benches_; }
    const std::vector<int>& spares() const { return spares_; }

    /// True when the n/3 benches and the spares together partition {1..n}.
    bool covers(int n) const {
        return bench_count() == n / 3 &&
               3 * bench_count() + static_cast<int>(spares_.size()) == n && highest_label() <= n;
    }

private:
    int highest_label() const {
        int high = 0;
        for (const Bench& bench : benches_) high = std::max(high, bench.c);
        if (!spares_.empty()) high = std::max(high, spares_.back());
        return high;
    }

    std::vector<Bench> benches_;
    std::vector<int> spares_;
};

inline bool is_balanced(const Bench& bench, const PreferenceOrder& prefs) {
    if (bench.c > prefs.size()) throw std::out_of_range("bench label out of range");
    return prefs.sign(bench.a) + prefs.sign(bench.b) == 0;
}

inline int balance_number(const BenchCollection& collection, const PreferenceOrder& prefs) {
    int count = 0;
    for (const Bench& bench : collection.benches()) count += is_balanced(bench, prefs);
    return count;
}

/// Seating of one bench: ends first, then the middle. The lowest-labeled
/// diner takes the end on the side of their preference.
inline std::array<int, 3> ordered_bench(const Bench& bench, const PreferenceOrder& prefs) {
    if (bench.c > prefs.size()) throw std::out_of_range("bench label out of range");
    if (prefs.sign(bench.a) > 0) return {bench.a, bench.c, bench.b};
    return {bench.b, bench.c, bench.a};
}

/// The un-rotated bench seating list: balanced benches first, then
/// unbalanced, each group sorted by the ordered bench's first diner, then
/// the spares in increasing order.
inline std::vector<int> bench_seating_list(const BenchCollection& collection,
                                           const PreferenceOrder& prefs) {
    if (!collection.covers(prefs.size()))
        throw std::invalid_argument("bench collection does not cover all diners");
    std::vector<std::array<int, 3>> balanced, unbalanced;
    for (const Bench& bench : collection.benches())
        (is_balanced(bench, prefs) ? balanced : unbalanced).push_back(ordered_bench(bench, prefs));
    auto by_first = [](const std::array<int, 3>& lhs, const std::array<int, 3>& rhs) {
        return lhs[0] < rhs[0];
    };
    std::sort(balanced.begin(), balanced.end(), by_first);
    std::sort(unbalanced.begin(), unbalanced.end(), by_first);

    std::vector<int> list;
    list.reserve(static_cast<size_t>(prefs.size()));
    for (const auto& group : {balanced, unbalanced})
        for (const auto& triple : group) list.insert(list.end(), triple.begin(), triple.end());
    list.insert(list.end(), collection.spares().begin(), collection.spares().end());
    return list;
}

/// Bench seating arrangement, rotated so Diner 1 sits in Seat 1. Its
/// napkinless count is at least balance_number(collection, prefs).
inline SeatingArrangement bench_seating_order(const BenchCollection& collection,
                                              const PreferenceOrder& prefs) {
    return {rotate_to_diner_one(bench_seating_list(collection, prefs)), prefs};
}

/// Signed display with " | " separating bench blocks: seats 3j-2..3j form
/// bench j, trailing seats the remainder block. The rotation is how far
/// the displayed arrangement was cycled from the block-aligned seating.
inline std::string bench_display_string(const SeatingArrangement& arrangement, int rotation) {
    const std::vector<int> display = signed_display(arrangement);
    const int n = arrangement.size();
    const int q = n / 3;
    auto block_of = [q](int raw_seat) { return raw_seat < 3 * q ? raw_seat / 3 : q; };
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (i)
            out += block_of((rotation + i - 1) % n) == block_of((rotation + i) % n) ? "," : " | ";
        out += std::to_string(display[static_cast<size_t>(i)]);
    }
    return out;
}

enum class TrapStep : std::uint8_t {
    PosLeftEnd,        // 1a
    PosFillPrimed,     // 1b
    PosForcedRight,    // 1c
    NegRightEnd,       // 2a
    NegFillPrimed,     // 2b
    NegForcedLeft,     // 2c
};

inline std::string_view step_label(TrapStep step) {
    switch (step) {
        case TrapStep::PosLeftEnd: return "1a";
        case TrapStep::PosFillPrimed: return "1b";
        case TrapStep::PosForcedRight: return "1c";
        case TrapStep::NegRightEnd: return "2a";
        case TrapStep::NegFillPrimed: return "2b";
        case TrapStep::NegForcedLeft: return "2c";
    }
    return "?";
}

inline bool is_forced_step(TrapStep step) {
    return step == TrapStep::PosForcedRight || step == TrapStep::NegForcedLeft;
}

struct TraceEntry {
    int diner = 0;
    TrapStep step = TrapStep::PosLeftEnd;
    int seat = 0;  // pre-rotation seat index
    int x = 0;     // negatives among diners 1..this one
    int y = 0;     // positives among diners 1..this one
};

struct AlgorithmTrace {
    std::vector<TraceEntry> per_diner;
    std::vector<int> raw_order;  // pre-rotation seat-to-diner list
    int rotation = 0;            // left rotation applied to anchor Diner 1

    int forced_step_count() const {
        int count = 0;
        for (const TraceEntry& entry : per_diner) count += is_forced_step(entry.step);
        return count;
    }

    std::vector<TraceEntry> forced_steps() const {
        std::vector<TraceEntry> forced;
        for (const TraceEntry& entry : per_diner)
            if (is_forced_step(entry.step)) forced.push_back(entry);
        return forced;
    }
};

struct ClairvoyantResult {
    SeatingArrangement arrangement;
    AlgorithmTrace trace;
};

/// Online trap-setting strategy. Processes the preferences one diner at a
/// time and returns the rotated arrangement plus the per-diner step trace.
inline ClairvoyantResult clairvoyant_seating(const PreferenceOrder& prefs) {
    const int n = prefs.size();
    const int q = prefs.bench_count();
    const int r = prefs.remainder();

    // Per-bench occupancy; bench j (1-based) owns seats 3j-2, 3j-1, 3j.
    std::vector<std::array<bool, 3>> taken(static_cast<size_t>(q), {false, false, false});
    constexpr int kLeft = 0, kCenter = 1, kRight = 2;
    int remainder_used = 0;

    auto lowest_bench_missing = [&](int slot) {
        for (int j = 0; j < q; ++j)
            if (!taken[static_cast<size_t>(j)][static_cast<size_t>(slot)]) return j;
        return q;  // none
    };
    auto lowest_primed_bench = [&] {
        for (int j = 0; j < q; ++j) {
            const auto& bench = taken[static_cast<size_t>(j)];
            if (bench[kLeft] && bench[kRight] && !bench[kCenter]) return j;
        }
        return q;  // none; caller falls through to the remainder pseudo-bench
    };

    AlgorithmTrace trace;
    trace.per_diner.reserve(static_cast<size_t>(n));
    trace.raw_order.assign(static_cast<size_t>(n), 0);

    int x = 0, y = 0;
    for (int diner = 1; diner <= n; ++diner) {
        const bool positive = prefs.sign(diner) > 0;
        (positive ? y : x) += 1;

        const int end_slot = positive ? kLeft : kRight;
        const int forced_slot = positive ? kRight : kLeft;
        TrapStep step;
        int seat = 0;
        if (int bench = lowest_bench_missing(end_slot); bench < q) {
            step = positive ? TrapStep::PosLeftEnd : TrapStep::NegRightEnd;
            taken[static_cast<size_t>(bench)][static_cast<size_t>(end_slot)] = true;
            seat = 3 * bench + 1 + end_slot;
        } else if (int primed = lowest_primed_bench(); primed < q) {
            step = positive ? TrapStep::PosFillPrimed : TrapStep::NegFillPrimed;
            taken[static_cast<size_t>(primed)][kCenter] = true;
            seat = 3 * primed + 2;
        } else if (remainder_used < r) {
            // The remainder pseudo-bench, numbered q+1, is primed while any
            // of its seats are free; fill them left to right.
            step = positive ? TrapStep::PosFillPrimed : TrapStep::NegFillPrimed;
            seat = 3 * q + ++remainder_used;
        } else {
            step = positive ? TrapStep::PosForcedRight : TrapStep::NegForcedLeft;
            const int forced = lowest_bench_missing(forced_slot);
            if (forced >= q) throw std::logic_error("trap setting found no seat");
            taken[static_cast<size_t>(forced)][static_cast<size_t>(forced_slot)] = true;
            seat = 3 * forced + 1 + forced_slot;
        }
        trace.raw_order[static_cast<size_t>(seat) - 1] = diner;
        trace.per_diner.push_back({diner, step, seat, x, y});
    }

    SeatingOrder order = rotate_to_diner_one(trace.raw_order);
    trace.rotation = static_cast<int>(
        std::find(trace.raw_order.begin(), trace.raw_order.end(), 1) - trace.raw_order.begin());
    return {{std::move(order), prefs}, std::move(trace)};
}

/// Largest achievable napkinless count: min{q, floor((n-h)/2)} with h the
/// symmetric drift of the preference order.
inline int max_napkinless_count(const PreferenceOrder& prefs) {
    const int h = symmetric_drift(prefs);
    return std::min(prefs.bench_count(), (prefs.size() - h) / 2);
}

/// Number of unbalanced benches the preference order forces on the
/// trap-setting strategy; equals the count of forced (1c)/(2c) steps.
inline int predicted_unbalanced_benches(const PreferenceOrder& prefs) {
    if (prefs.size() < 3) throw std::invalid_argument("prediction needs n >= 3");
    const int h = symmetric_drift(prefs);
    const int slack = prefs.bench_count() + prefs.remainder();
    if (h <= slack) return 0;
    return (h - slack + 1) / 2;
}

}  // namespace napkin
