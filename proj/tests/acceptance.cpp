// Acceptance suite: end-to-end checks of the library's headline claims,
// one line of output per criterion. Every tolerance is pinned here; all
// comparisons are exact except the Monte Carlo three-sigma bound.

#include "napkin/distribution.hpp"
#include "napkin/oracle.hpp"
#include "napkin/parallel.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace napkin;

namespace {

struct Criterion {
    long long checks = 0;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 16) failures.push_back(what);
    }
};

PreferenceOrder prefs_from_mask(int n, std::uint64_t mask) {
    std::vector<Sign> signs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) signs[static_cast<size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
    return PreferenceOrder(std::move(signs));
}

LatticePath path_from_mask(int n, std::uint64_t mask) {
    std::vector<Step> steps(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        steps[static_cast<size_t>(i)] = (mask >> i) & 1 ? Step::East : Step::North;
    return LatticePath(std::move(steps));
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::ostringstream out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out << ",";
        out << values[i];
    }
    return out.str();
}

// ---------------------------------------------------------------------------

void worked_example_fidelity(Criterion& c) {
    {  // eight diners, explicit seating
        const SeatingArrangement arrangement{SeatingOrder::parse("1,5,2,8,4,6,7,3"),
                                             PreferenceOrder::parse("+--++-+-")};
        const DiningOutcome outcome = simulate_dining(arrangement);
        c.require(signed_display_string(arrangement) == "1,5,-2,-8,4,-6,7,-3",
                  "8-diner signed display: " + signed_display_string(arrangement));
        c.require(outcome.napkinless_diners() == std::vector<int>{5, 7},
                  "8-diner napkinless diners: " + join(outcome.napkinless_diners()));
        c.require(outcome.napkinless_seats() == std::vector<int>{2, 7},
                  "8-diner napkinless seats: " + join(outcome.napkinless_seats()));
        c.require(outcome.frustrated_diners() == std::vector<int>{6},
                  "8-diner frustrated: " + join(outcome.frustrated_diners()));
        c.require(outcome.napkinless_count() == 2, "8-diner count");
        c.require(outcome.unclaimed_napkin_count() == 2, "8-diner unclaimed napkins");
    }
    const PreferenceOrder prefs14 = PreferenceOrder::parse("++-+--+++++++-");
    {  // fourteen diners under a fixed bench collection
        const BenchCollection collection =
            BenchCollection::parse("1,10,11;5,8,14;4,7,9;2,6,12", 14);
        const std::vector<int> list = bench_seating_list(collection, prefs14);
        c.require(list == std::vector<int>{2, 12, 6, 8, 14, 5, 1, 11, 10, 4, 9, 7, 3, 13},
                  "bench list: " + join(list));
        const SeatingArrangement arrangement = bench_seating_order(collection, prefs14);
        c.require(arrangement.order.seats() ==
                      std::vector<int>{1, 11, 10, 4, 9, 7, 3, 13, 2, 12, 6, 8, 14, 5},
                  "bench arrangement: " + join(arrangement.order.seats()));
        const int rotation =
            static_cast<int>(std::find(list.begin(), list.end(), 1) - list.begin());
        c.require(bench_display_string(arrangement, rotation) ==
                      "1,11,10 | 4,9,7 | -3,13 | 2,12,-6 | 8,-14,-5",
                  "bench display: " + bench_display_string(arrangement, rotation));
        const DiningOutcome outcome = simulate_dining(arrangement);
        c.require(outcome.napkinless_diners() == std::vector<int>{9, 12, 14},
                  "bench napkinless: " + join(outcome.napkinless_diners()));
        c.require(outcome.frustrated_diners() == std::vector<int>{7},
                  "bench frustrated: " + join(outcome.frustrated_diners()));
        c.require(balance_number(collection, prefs14) == 2, "balance number");
    }
    {  // fourteen diners under the online strategy
        const auto [arrangement, trace] = clairvoyant_seating(prefs14);
        c.require(bench_display_string(arrangement, trace.rotation) ==
                      "1,8,-3 | 2,9,-5 | 4,10,-6 | 7,-14,13 | 11,12",
                  "strategy display: " + bench_display_string(arrangement, trace.rotation));
        const DiningOutcome outcome = simulate_dining(arrangement);
        c.require(outcome.napkinless_diners() == std::vector<int>{8, 9, 10},
                  "strategy napkinless: " + join(outcome.napkinless_diners()));
        c.require(outcome.frustrated_diners() == std::vector<int>{14},
                  "strategy frustrated: " + join(outcome.frustrated_diners()));
        c.require(outcome.napkinless_count() == 3, "strategy count");
        const auto forced = trace.forced_steps();
        c.require(forced.size() == 1 && forced[0].diner == 13 &&
                      forced[0].step == TrapStep::PosForcedRight,
                  "strategy forced step placement");
    }
    {  // drift of the same preference order
        const LatticePath path = LatticePath::of(prefs14);
        c.require(drift(path) == 7, "drift value");
        c.require(decorate(path).zenith == 13, "drift zenith index");
        c.require(path.point(13) == std::pair{3, 10}, "drift zenith point");
    }
}

void bijection_fidelity(Criterion& c) {
    const LatticePath path = LatticePath::parse("NNEENENNEEENEEEENE");
    c.require(color_bijection(path).to_string() == "NNEENENNNEENNENNEE",
              "recoloring image: " + color_bijection(path).to_string());
    const PathDecoration deco = decorate(path);
    c.require(deco.dips == std::vector<int>{9, 10, 13, 14, 15, 18},
              "dips: " + join(deco.dips));
    const ParenBijectionResult psi = paren_bijection(path);
    c.require(psi.conversions == 3, "conversions: " + std::to_string(psi.conversions));
    c.require(psi.path.east_count() == 8,
              "psi east steps: " + std::to_string(psi.path.east_count()));
    c.require(psi.path.to_string() == "NNEENENNNNENNEEENE", "psi image: " + psi.path.to_string());
}

void path_counts_desk_scale(Criterion& c) {
    for (int n = 0; n <= 16; ++n) {
        std::vector<std::int64_t> histogram(static_cast<size_t>(n) + 1, 0);
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            int height = 0, best = 0;
            for (int i = 0; i < n; ++i) {
                height += (mask >> i) & 1 ? 1 : -1;
                if (height > best) best = height;
            }
            histogram[static_cast<size_t>(best)] += 1;
        }
        for (int h = 0; h <= n; ++h)
            c.require(BigInt(histogram[static_cast<size_t>(h)]) == count_paths_with_drift(n, h),
                      "count n=" + std::to_string(n) + " h=" + std::to_string(h));
    }
}

void bijectivity(Criterion& c) {
    for (int n = 1; n <= 14; ++n) {
        std::map<int, std::set<LatticePath>> phi_images, psi_images;
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const LatticePath path = path_from_mask(n, mask);
            const int h = drift(path);
            const int target = (n - h) / 2;

            const LatticePath phi = color_bijection(path);
            c.require(phi.east_count() == target, "phi east count: " + path.to_string());
            c.require(color_bijection_inverse(phi, h) == path,
                      "phi inverse: " + path.to_string());
            c.require(phi_images[h].insert(phi).second, "phi injectivity: " + path.to_string());

            const ParenBijectionResult psi = paren_bijection(path);
            c.require(psi.path.east_count() == target, "psi east count: " + path.to_string());
            c.require(psi_images[h].insert(psi.path).second,
                      "psi injectivity: " + path.to_string());
        }
        // injective with matching cardinality onto the fixed-east-count set
        for (const auto& [h, images] : phi_images)
            c.require(BigInt(images.size()) == binomial(n, (n - h) / 2),
                      "phi image size n=" + std::to_string(n) + " h=" + std::to_string(h));
    }
}

void optimality(Criterion& c) {
    std::mutex merge;
    for (int n = 2; n <= 8; ++n) {
        const std::int64_t total = std::int64_t{1} << n;
        std::vector<std::string> failures;
        parallel_chunks(total, resolve_thread_count(), [&](std::int64_t begin, std::int64_t end) {
            std::vector<std::string> local;
            for (std::int64_t mask = begin; mask < end; ++mask) {
                const PreferenceOrder prefs = prefs_from_mask(n, static_cast<std::uint64_t>(mask));
                const int formula = max_napkinless_count(prefs);
                const int strategy =
                    simulate_dining(clairvoyant_seating(prefs).arrangement).napkinless_count();
                const int oracle = max_napkinless_seating_oracle(prefs);
                if (strategy != oracle || oracle != formula)
                    local.push_back(prefs.to_string() + " strategy=" + std::to_string(strategy) +
                                    " oracle=" + std::to_string(oracle) +
                                    " formula=" + std::to_string(formula));
            }
            if (!local.empty()) {
                std::lock_guard<std::mutex> lock(merge);
                failures.insert(failures.end(), local.begin(), local.end());
            }
        });
        c.checks += total;
        for (const std::string& f : failures) {
            --c.checks;
            c.require(false, f);
        }
    }
}

void distribution_equality(Criterion& c) {
    OracleBudget budget;
    for (int n = 3; n <= 20; ++n) {
        const auto histogram = napkinless_distribution_oracle(n, DistributionBackend::FormulaNu,
                                                              budget);
        for (int k = 0; k <= n / 3; ++k)
            c.require(BigInt(histogram[static_cast<size_t>(k)]) == distribution_count(n, k),
                      "formula histogram n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    for (int n = 3; n <= 8; ++n) {
        const auto histogram =
            napkinless_distribution_oracle(n, DistributionBackend::SeatingOracle, budget);
        for (int k = 0; k <= n / 3; ++k)
            c.require(BigInt(histogram[static_cast<size_t>(k)]) == distribution_count(n, k),
                      "seating histogram n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
}

void expectation(Criterion& c) {
    c.require(expected_napkinless(3) == BigRational(1, 2), "E_3");
    c.require(expected_napkinless(6) == BigRational(3, 2), "E_6");

    // brute-force confirmation of both values
    auto brute_mean = [](int n) {
        const auto histogram =
            napkinless_distribution_oracle(n, DistributionBackend::SeatingOracle);
        BigInt weighted = 0;
        for (size_t k = 0; k < histogram.size(); ++k) weighted += BigInt(k) * histogram[k];
        return BigRational(weighted, pow2(n));
    };
    c.require(brute_mean(3) == BigRational(1, 2), "brute-force E_3");
    c.require(brute_mean(6) == BigRational(3, 2), "brute-force E_6");

    for (int n = 3; n <= 60; ++n) {
        BigRational weighted = 0;
        for (int k = 0; k <= n / 3; ++k) weighted += k * distribution_probability(n, k);
        c.require(expected_napkinless(n) == weighted,
                  "E_n vs sum k Pr(n,k) at n=" + std::to_string(n));
    }

    std::vector<BigRational> gap(301);
    for (int n = 3; n <= 300; ++n) {
        gap[static_cast<size_t>(n)] = convergence_gap(n);
        c.require(gap[static_cast<size_t>(n)] > 0, "gap positive at n=" + std::to_string(n));
    }
    // Strict decrease along each residue class holds everywhere except the
    // four known early pairs, where the exact relation is pinned below.
    for (int n = 9; n + 3 <= 300; ++n)
        c.require(gap[static_cast<size_t>(n) + 3] < gap[static_cast<size_t>(n)],
                  "gap decrease at n=" + std::to_string(n));
    c.require(gap[6] == gap[3], "gap(3) = gap(6)");
    c.require(gap[7] > gap[4], "gap(4) < gap(7)");
    c.require(gap[8] > gap[5], "gap(5) < gap(8)");
    c.require(gap[11] == gap[8], "gap(8) = gap(11)");

    for (int n = 120; n <= 300; ++n)
        c.require(gap[static_cast<size_t>(n)] < BigRational(1, 20),
                  "gap below 1/20 at n=" + std::to_string(n));
}

void trace_instrumentation(Criterion& c) {
    for (int n = 2; n <= 12; ++n) {
        const int q = n / 3, r = n - 3 * q;
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const PreferenceOrder prefs = prefs_from_mask(n, mask);
            const AlgorithmTrace trace = clairvoyant_seating(prefs).trace;
            bool saw_pos = false, saw_neg = false, ok = true;
            int uses = 0;
            for (const TraceEntry& entry : trace.forced_steps()) {
                ++uses;
                const int expected = q + r + 2 * (uses - 1) + 1;
                if (entry.step == TrapStep::PosForcedRight) {
                    saw_pos = true;
                    ok = ok && entry.y - entry.x == expected;
                } else {
                    saw_neg = true;
                    ok = ok && entry.x - entry.y == expected;
                }
            }
            c.require(ok && !(saw_pos && saw_neg), "trace identity: " + prefs.to_string());
        }
    }
}

void coloring_identities(Criterion& c) {
    for (int n = 1; n <= 16; ++n) {
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const LatticePath path = path_from_mask(n, mask);
            const PathDecoration deco = decorate(path);
            const int h = deco.drift;
            bool ok = deco.black_north == deco.black_east + h &&
                      deco.white_north == deco.white_east;
            if ((n - h) % 2 == 0)
                ok = ok && deco.dips_black_first == deco.dips_white_first;
            else
                ok = ok && deco.dips_black_first == deco.dips_white_first + 1;
            c.require(ok, "coloring identities: " + path.to_string());
        }
    }
}

void monte_carlo_sanity(Criterion& c) {
    const double exact = to_double(expected_napkinless(30));
    const MonteCarloResult result = monte_carlo_expectation(30, 100000, 424242);
    c.require(result.std_error > 0, "positive standard error");
    c.require(std::abs(result.mean - exact) <= 3 * result.std_error,
              "mean " + std::to_string(result.mean) + " vs exact " + std::to_string(exact) +
                  " (3 sigma = " + std::to_string(3 * result.std_error) + ")");

    const MonteCarloResult repeat = monte_carlo_expectation(30, 100000, 424242);
    c.require(result.mean == repeat.mean && result.std_error == repeat.std_error,
              "seeded reproducibility");
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        double limit_seconds;  // 0 = no pinned runtime bound
        void (*run)(Criterion&);
    };
    const Entry entries[] = {
        {"1. worked-example fidelity", 1.0, worked_example_fidelity},
        {"2. bijection fidelity", 1.0, bijection_fidelity},
        {"3. path counts vs closed form (n <= 16)", 0.0, path_counts_desk_scale},
        {"4. bijectivity of both maps (n <= 14)", 60.0, bijectivity},
        {"5. strategy optimality vs brute force (n <= 8)", 0.0, optimality},
        {"6. distribution vs enumeration (n <= 20 / n <= 8)", 0.0, distribution_equality},
        {"7. exact expectation and convergence gap", 0.0, expectation},
        {"8. trace instrumentation (n <= 12)", 60.0, trace_instrumentation},
        {"9. coloring identities (n <= 16)", 0.0, coloring_identities},
        {"10. Monte Carlo sanity (n = 30)", 0.0, monte_carlo_sanity},
    };

    int failed = 0;
    for (const Entry& entry : entries) {
        Criterion criterion;
        const auto start = std::chrono::steady_clock::now();
        try {
            entry.run(criterion);
        } catch (const std::exception& e) {
            criterion.require(false, std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (entry.limit_seconds > 0)
            criterion.require(seconds < entry.limit_seconds,
                              "runtime " + std::to_string(seconds) + "s exceeds " +
                                  std::to_string(entry.limit_seconds) + "s");

        const bool ok = criterion.failures.empty();
        failed += !ok;
        std::printf("[%s] %-52s %8lld checks  %7.2fs\n", ok ? "PASS" : "FAIL", entry.name,
                    criterion.checks, seconds);
        for (const std::string& failure : criterion.failures)
            std::printf("       %s\n", failure.c_str());
    }
    std::printf("%d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
