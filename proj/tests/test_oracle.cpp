#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "napkin/oracle.hpp"

#include <numeric>
#include <random>

using namespace napkin;

namespace {

PreferenceOrder prefs_from_mask(int n, unsigned mask) {
    std::vector<Sign> signs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) signs[static_cast<size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
    return PreferenceOrder(std::move(signs));
}

}  // namespace

TEST_CASE("budget validation") {
    OracleBudget bad;
    bad.max_seating_n = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    CHECK_THROWS_AS(max_napkinless_seating_oracle(prefs_from_mask(10, 0)), BudgetError);
    CHECK_THROWS_AS(max_napkinless_bench_oracle(prefs_from_mask(13, 0)), BudgetError);
    CHECK_THROWS_AS(napkinless_distribution_oracle(21, DistributionBackend::FormulaNu),
                    BudgetError);
    CHECK_THROWS_AS(napkinless_distribution_oracle(10, DistributionBackend::SeatingOracle),
                    BudgetError);
}

TEST_CASE("seating search oracle") {
    CHECK(max_napkinless_seating_oracle(PreferenceOrder::parse("+--++-+-")) == 2);
    CHECK(max_napkinless_seating_oracle(PreferenceOrder::parse("++++++++")) == 0);
    CHECK(max_napkinless_seating_oracle(PreferenceOrder::parse("+-+")) == 1);
}

TEST_CASE("bench search oracle") {
    CHECK(max_napkinless_bench_oracle(PreferenceOrder::parse("++++++++")) == 0);
    CHECK(max_napkinless_bench_oracle(PreferenceOrder::parse("+-++-+")) == 2);

    OracleBudget wide;
    wide.max_bench_n = 14;
    CHECK(max_napkinless_bench_oracle(PreferenceOrder::parse("++-+--+++++++-"), wide) == 3);
}

TEST_CASE("bench oracle matches the formula beyond the seating budget") {
    std::mt19937 rng(5150);
    for (int n : {10, 11, 12})
        for (int trial = 0; trial < 40; ++trial) {
            const PreferenceOrder prefs = prefs_from_mask(n, rng());
            CHECK(max_napkinless_bench_oracle(prefs) == max_napkinless_count(prefs));
        }
}

TEST_CASE("three-way agreement on every preference order") {
    for (int n = 2; n <= 7; ++n)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            const PreferenceOrder prefs = prefs_from_mask(n, mask);
            const int by_seating = max_napkinless_seating_oracle(prefs);
            const int by_bench = max_napkinless_bench_oracle(prefs);
            const int by_formula = max_napkinless_count(prefs);
            CHECK(by_seating == by_bench);
            CHECK(by_seating == by_formula);
            CHECK(by_seating >= 0);
            CHECK(by_seating <= n / 3);
        }
}

TEST_CASE("minimal napkinless blocks in the eight-diner example") {
    const SeatingArrangement arrangement{SeatingOrder::parse("1,5,2,8,4,6,7,3"),
                                         PreferenceOrder::parse("+--++-+-")};
    const DiningOutcome outcome = simulate_dining(arrangement);

    const MinimalBlock five = minimal_napkinless_block(outcome, 5);
    CHECK(five.left_happy == 1);
    CHECK(five.diner == 5);
    CHECK(five.right_happy == 2);

    const MinimalBlock seven = minimal_napkinless_block(outcome, 7);
    CHECK(seven.left_happy == 4);
    CHECK(seven.right_happy == 3);

    CHECK_THROWS_AS(minimal_napkinless_block(outcome, 6), std::invalid_argument);
    CHECK_THROWS_AS(minimal_napkinless_block(outcome, 1), std::invalid_argument);
}

TEST_CASE("minimal napkinless block with a frustrated run on both sides") {
    // Seats 2..7 hold diners 2,3,8,9,7,5: diner 9 is napkinless, diners 2
    // and 5 are the nearest happy diners, and 3, 8, 7 sit frustrated
    // between them.
    const SeatingArrangement arrangement{SeatingOrder::parse("1,2,3,8,9,7,5,4,6"),
                                         PreferenceOrder::parse("++-+-++-+")};
    const DiningOutcome outcome = simulate_dining(arrangement);
    REQUIRE(outcome.napkinless_diners() == std::vector<int>{9});
    CHECK(outcome.status_of(3) == DinerStatus::Frustrated);
    CHECK(outcome.status_of(8) == DinerStatus::Frustrated);
    CHECK(outcome.status_of(7) == DinerStatus::Frustrated);

    const MinimalBlock block = minimal_napkinless_block(outcome, 9);
    CHECK(block.left_happy == 2);
    CHECK(block.diner == 9);
    CHECK(block.right_happy == 5);
}

TEST_CASE("blocks always exist and arrive before their napkinless diner") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> seats(static_cast<size_t>(n));
        std::iota(seats.begin(), seats.end(), 1);
        do {
            const SeatingOrder order(seats);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                const DiningOutcome outcome =
                    simulate_dining({order, prefs_from_mask(n, mask)});
                for (int diner : outcome.napkinless_diners()) {
                    const MinimalBlock block = minimal_napkinless_block(outcome, diner);
                    CHECK(block.left_happy < diner);
                    CHECK(block.right_happy < diner);
                    CHECK(block.left_happy != block.right_happy);
                }
            }
        } while (std::next_permutation(seats.begin() + 1, seats.end()));
    }
}

TEST_CASE("canonicalized arrangements put napkinless diners at seats 2,5,8,...") {
    SUBCASE("three diners") {
        const SeatingArrangement canon =
            canonicalize_max_arrangement(PreferenceOrder::parse("+-+"));
        CHECK(simulate_dining(canon).napkinless_seats() == std::vector<int>{2});
    }
    SUBCASE("six diners") {
        const SeatingArrangement canon =
            canonicalize_max_arrangement(PreferenceOrder::parse("+-++-+"));
        CHECK(simulate_dining(canon).napkinless_seats() == std::vector<int>{2, 5});
    }
    SUBCASE("all positive: nothing to trap") {
        const SeatingArrangement canon =
            canonicalize_max_arrangement(PreferenceOrder::parse("++++++"));
        CHECK(simulate_dining(canon).napkinless_count() == 0);
    }
    SUBCASE("exhaustive over small tables") {
        for (int n = 2; n <= 7; ++n)
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                const PreferenceOrder prefs = prefs_from_mask(n, mask);
                const int k = max_napkinless_count(prefs);
                const DiningOutcome outcome =
                    simulate_dining(canonicalize_max_arrangement(prefs));
                std::vector<int> expected_seats;
                for (int i = 1; i <= k; ++i) expected_seats.push_back(3 * i - 1);
                CHECK(outcome.napkinless_count() == k);
                CHECK(outcome.napkinless_seats() == expected_seats);
            }
    }
}

TEST_CASE("distribution oracle histograms") {
    CHECK(napkinless_distribution_oracle(3, DistributionBackend::FormulaNu) ==
          std::vector<std::uint64_t>{4, 4});
    CHECK(napkinless_distribution_oracle(3, DistributionBackend::SeatingOracle) ==
          std::vector<std::uint64_t>{4, 4});

    const auto at14 = napkinless_distribution_oracle(14, DistributionBackend::FormulaNu);
    REQUIRE(at14.size() == 5);
    CHECK(at14[4] == 14504);
    CHECK(at14 == std::vector<std::uint64_t>{4, 56, 364, 1456, 14504});

    for (int n = 2; n <= 14; ++n) {
        const auto histogram = napkinless_distribution_oracle(n, DistributionBackend::FormulaNu);
        const std::uint64_t total =
            std::accumulate(histogram.begin(), histogram.end(), std::uint64_t{0});
        CHECK(total == std::uint64_t{1} << n);
    }

    // the two backends agree where both are affordable
    for (int n = 2; n <= 7; ++n)
        CHECK(napkinless_distribution_oracle(n, DistributionBackend::FormulaNu) ==
              napkinless_distribution_oracle(n, DistributionBackend::SeatingOracle));
}
