#pragma once

// Core model of the circular-table napkin game: a queue of diners with
// revealed left/right napkin preferences, a seating order assigning diners
// to seats, and the deterministic claim process that leaves each diner
// happy, frustrated, or napkinless.
//
// Conventions (used consistently across the library):
//   * Diners are labeled 1..n by arrival order; seats 1..n increase to the
//     right around the table.
//   * Napkin i lies between Seat i and Seat i+1 (napkin n between Seat n
//     and Seat 1). The right napkin of Seat i is napkin i; the left napkin
//     is napkin i-1, wrapping to napkin n for Seat 1.
//   * A preference of +1 means the diner reaches right first, -1 left.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace napkin {

using Sign = std::int8_t;  // +1 or -1

/// The queue of diner napkin preferences, one sign per diner.
class PreferenceOrder {
public:
    explicit PreferenceOrder(std::vector<Sign> entries) : entries_(std::move(entries)) {
        if (entries_.size() < 2)
            throw std::invalid_argument("preference order needs at least 2 diners");
        for (Sign s : entries_)
            if (s != 1 && s != -1)
                throw std::invalid_argument("preference entries must be +1 or -1");
    }

    /// Parse "+-+" style text; 'R'/'r' mean +1 and 'L'/'l' mean -1.
    static PreferenceOrder parse(std::string_view text) {
        std::vector<Sign> entries;
        entries.reserve(text.size());
        for (size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == '+' || c == 'R' || c == 'r') {
                entries.push_back(1);
            } else if (c == '-' || c == 'L' || c == 'l') {
                entries.push_back(-1);
            } else {
                throw std::invalid_argument("invalid preference character '" +
                                            std::string(1, c) + "' at position " +
                                            std::to_string(i + 1));
            }
        }
        return PreferenceOrder(std::move(entries));
    }

    int size() const { return static_cast<int>(entries_.size()); }

    /// Sign of the given diner (1-based label).
    Sign sign(int diner) const {
        if (diner < 1 || diner > size())
            throw std::out_of_range("diner label out of range");
        return entries_[static_cast<size_t>(diner) - 1];
    }

    int bench_count() const { return size() / 3; }           // q
    int remainder() const { return size() - 3 * bench_count(); }  // r

    PreferenceOrder negated() const {
        std::vector<Sign> flipped(entries_.size());
        std::transform(entries_.begin(), entries_.end(), flipped.begin(),
                       [](Sign s) { return static_cast<Sign>(-s); });
        return PreferenceOrder(std::move(flipped));
    }

    std::string to_string() const {
        std::string out;
        out.reserve(entries_.size());
        for (Sign s : entries_) out.push_back(s > 0 ? '+' : '-');
        return out;
    }

    const std::vector<Sign>& entries() const { return entries_; }

    bool operator==(const PreferenceOrder& other) const = default;

private:
    std::vector<Sign> entries_;
};

/// Seat-to-diner assignment: seats()[i-1] is the diner in Seat i.
/// Any permutation of {1..n} is a valid assignment; anchored() reports
/// whether Diner 1 sits in Seat 1 (the canonical representative of the
/// rotation class).
class SeatingOrder {
public:
    explicit SeatingOrder(std::vector<int> seat_to_diner)
        : seat_to_diner_(std::move(seat_to_diner)) {
        const int n = static_cast<int>(seat_to_diner_.size());
        if (n < 2) throw std::invalid_argument("seating order needs at least 2 seats");
        std::vector<bool> seen(static_cast<size_t>(n), false);
        for (int diner : seat_to_diner_) {
            if (diner < 1 || diner > n)
                throw std::invalid_argument("seating order entry " + std::to_string(diner) +
                                            " is not a diner label in 1.." + std::to_string(n));
            if (seen[static_cast<size_t>(diner) - 1])
                throw std::invalid_argument("seating order repeats diner " + std::to_string(diner));
            seen[static_cast<size_t>(diner) - 1] = true;
        }
    }

    /// Parse comma-separated 1-based diner labels.
    static SeatingOrder parse(std::string_view csv);

    static SeatingOrder sequential(int n) {
        std::vector<int> seats(static_cast<size_t>(n));
        std::iota(seats.begin(), seats.end(), 1);
        return SeatingOrder(std::move(seats));
    }

    int size() const { return static_cast<int>(seat_to_diner_.size()); }

    int diner_at(int seat) const {
        if (seat < 1 || seat > size()) throw std::out_of_range("seat index out of range");
        return seat_to_diner_[static_cast<size_t>(seat) - 1];
    }

    int seat_of(int diner) const {
        if (diner < 1 || diner > size()) throw std::out_of_range("diner label out of range");
        for (int seat = 1; seat <= size(); ++seat)
            if (seat_to_diner_[static_cast<size_t>(seat) - 1] == diner) return seat;
        throw std::logic_error("seating order lost a diner");  // unreachable
    }

    bool anchored() const { return seat_to_diner_.front() == 1; }

    const std::vector<int>& seats() const { return seat_to_diner_; }

    std::string to_string() const {
        std::string out;
        for (size_t i = 0; i < seat_to_diner_.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(seat_to_diner_[i]);
        }
        return out;
    }

    bool operator==(const SeatingOrder& other) const = default;

private:
    std::vector<int> seat_to_diner_;
};

/// Cyclic rotation of a seat-to-diner list placing Diner 1 in Seat 1.
inline SeatingOrder rotate_to_diner_one(const std::vector<int>& list) {
    SeatingOrder check(list);  // validates the permutation
    auto it = std::find(list.begin(), list.end(), 1);
    std::vector<int> rotated;
    rotated.reserve(list.size());
    rotated.insert(rotated.end(), it, list.end());
    rotated.insert(rotated.end(), list.begin(), it);
    return SeatingOrder(std::move(rotated));
}

struct SeatingArrangement {
    SeatingOrder order;
    PreferenceOrder prefs;

    SeatingArrangement(SeatingOrder order_, PreferenceOrder prefs_)
        : order(std::move(order_)), prefs(std::move(prefs_)) {
        if (order.size() != prefs.size())
            throw std::invalid_argument("seating order and preference order lengths differ");
    }

    int size() const { return order.size(); }

    bool operator==(const SeatingArrangement& other) const = default;
};

enum class NapkinTaken : std::uint8_t { Left, Right, None };
enum class DinerStatus : std::uint8_t { Happy, Frustrated, Napkinless };

inline std::string_view status_name(DinerStatus s) {
    switch (s) {
        case DinerStatus::Happy: return "happy";
        case DinerStatus::Frustrated: return "frustrated";
        case DinerStatus::Napkinless: return "napkinless";
    }
    return "?";
}

inline std::string_view napkin_name(NapkinTaken t) {
    switch (t) {
        case NapkinTaken::Left: return "left";
        case NapkinTaken::Right: return "right";
        case NapkinTaken::None: return "none";
    }
    return "?";
}

struct SeatOutcome {
    int diner = 0;
    Sign preference = 0;
    NapkinTaken napkin = NapkinTaken::None;
    DinerStatus status = DinerStatus::Napkinless;
};

struct DiningOutcome {
    std::vector<SeatOutcome> per_seat;   // index 0 holds Seat 1
    std::vector<bool> napkin_claimed;    // index 0 holds napkin 1
    std::vector<int> seat_of_diner;      // index 0 holds Diner 1

    int size() const { return static_cast<int>(per_seat.size()); }

    const SeatOutcome& at_seat(int seat) const {
        return per_seat.at(static_cast<size_t>(seat) - 1);
    }

    int seat_of(int diner) const { return seat_of_diner.at(static_cast<size_t>(diner) - 1); }

    DinerStatus status_of(int diner) const { return at_seat(seat_of(diner)).status; }

    int napkinless_count() const {
        int count = 0;
        for (const auto& s : per_seat) count += s.status == DinerStatus::Napkinless;
        return count;
    }

    std::vector<int> diners_with(DinerStatus status) const {
        std::vector<int> diners;
        for (const auto& s : per_seat)
            if (s.status == status) diners.push_back(s.diner);
        std::sort(diners.begin(), diners.end());
        return diners;
    }

    std::vector<int> napkinless_diners() const { return diners_with(DinerStatus::Napkinless); }
    std::vector<int> frustrated_diners() const { return diners_with(DinerStatus::Frustrated); }

    std::vector<int> napkinless_seats() const {
        std::vector<int> seats;
        for (int seat = 1; seat <= size(); ++seat)
            if (at_seat(seat).status == DinerStatus::Napkinless) seats.push_back(seat);
        return seats;
    }

    int unclaimed_napkin_count() const {
        return static_cast<int>(std::count(napkin_claimed.begin(), napkin_claimed.end(), false));
    }
};

/// Run the claim process: diners arrive in label order, each takes their
/// preferred adjacent napkin if it is free, otherwise the other adjacent
/// napkin if free, otherwise nothing.
inline DiningOutcome simulate_dining(const SeatingArrangement& arrangement) {
    const int n = arrangement.size();
    DiningOutcome outcome;
    outcome.per_seat.resize(static_cast<size_t>(n));
    outcome.napkin_claimed.assign(static_cast<size_t>(n), false);
    outcome.seat_of_diner.resize(static_cast<size_t>(n));

    for (int seat = 1; seat <= n; ++seat) {
        const int diner = arrangement.order.diner_at(seat);
        outcome.seat_of_diner[static_cast<size_t>(diner) - 1] = seat;
    }

    for (int diner = 1; diner <= n; ++diner) {
        const int seat = outcome.seat_of_diner[static_cast<size_t>(diner) - 1];
        const Sign pref = arrangement.prefs.sign(diner);
        const int right_napkin = seat;
        const int left_napkin = seat == 1 ? n : seat - 1;
        const int preferred = pref > 0 ? right_napkin : left_napkin;
        const int other = pref > 0 ? left_napkin : right_napkin;

        SeatOutcome& slot = outcome.per_seat[static_cast<size_t>(seat) - 1];
        slot.diner = diner;
        slot.preference = pref;
        if (!outcome.napkin_claimed[static_cast<size_t>(preferred) - 1]) {
            outcome.napkin_claimed[static_cast<size_t>(preferred) - 1] = true;
            slot.napkin = pref > 0 ? NapkinTaken::Right : NapkinTaken::Left;
            slot.status = DinerStatus::Happy;
        } else if (!outcome.napkin_claimed[static_cast<size_t>(other) - 1]) {
            outcome.napkin_claimed[static_cast<size_t>(other) - 1] = true;
            slot.napkin = pref > 0 ? NapkinTaken::Left : NapkinTaken::Right;
            slot.status = DinerStatus::Frustrated;
        } else {
            slot.napkin = NapkinTaken::None;
            slot.status = DinerStatus::Napkinless;
        }
    }
    return outcome;
}

inline int napkinless_count(const SeatingArrangement& arrangement) {
    return simulate_dining(arrangement).napkinless_count();
}

/// A seating order with no napkinless diners: seat everyone sequentially
/// in the direction of Diner 1's preference.
inline SeatingOrder zero_napkinless_order(const PreferenceOrder& prefs) {
    const int n = prefs.size();
    std::vector<int> seats(static_cast<size_t>(n));
    if (prefs.sign(1) > 0) {
        std::iota(seats.begin(), seats.end(), 1);
    } else {
        seats[0] = 1;
        for (int i = 2; i <= n; ++i) seats[static_cast<size_t>(i) - 1] = n + 2 - i;
    }
    return SeatingOrder(std::move(seats));
}

/// Signed display vector: entry i is diner w_i carrying the sign of that
/// diner's preference.
inline std::vector<int> signed_display(const SeatingArrangement& arrangement) {
    std::vector<int> display;
    display.reserve(static_cast<size_t>(arrangement.size()));
    for (int seat = 1; seat <= arrangement.size(); ++seat) {
        const int diner = arrangement.order.diner_at(seat);
        display.push_back(arrangement.prefs.sign(diner) * diner);
    }
    return display;
}

/// Inverse of signed_display.
inline SeatingArrangement parse_signed_display(const std::vector<int>& display) {
    const int n = static_cast<int>(display.size());
    std::vector<int> seats;
    std::vector<Sign> signs(static_cast<size_t>(n), 0);
    seats.reserve(display.size());
    for (int entry : display) {
        if (entry == 0) throw std::invalid_argument("signed display entry must be nonzero");
        const int diner = entry < 0 ? -entry : entry;
        if (diner > n) throw std::invalid_argument("signed display entry out of range");
        seats.push_back(diner);
        signs[static_cast<size_t>(diner) - 1] = entry < 0 ? Sign{-1} : Sign{1};
    }
    return {SeatingOrder(std::move(seats)), PreferenceOrder(std::move(signs))};
}

inline std::string signed_display_string(const SeatingArrangement& arrangement) {
    std::string out;
    for (int value : signed_display(arrangement)) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(value);
    }
    return out;
}

namespace detail {

inline std::vector<int> parse_int_csv(std::string_view csv, std::string_view what) {
    std::vector<int> values;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string token(csv.substr(pos, comma - pos));
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != token.size() || token.empty())
            throw std::invalid_argument(std::string(what) + ": invalid token '" + token + "'");
        values.push_back(value);
        pos = comma + 1;
        if (comma == csv.size()) break;
    }
    return values;
}

}  // namespace detail

inline SeatingOrder SeatingOrder::parse(std::string_view csv) {
    return SeatingOrder(detail::parse_int_csv(csv, "seating order"));
}

}  // namespace napkin
