// Command-line front end for the napkin library: dining simulation, the
// clairvoyant trap-setting strategy, brute-force verification sweeps,
// exact distribution tables, and lattice-path tools.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.

#include "napkin/distribution.hpp"
#include "napkin/json_io.hpp"
#include "napkin/oracle.hpp"
#include "napkin/parallel.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace napkin;

// ---------------------------------------------------------------------------
// seat

struct SeatOptions {
    std::string sigma;
    std::string order;
    std::string strategy;
    std::string benches;
    bool json = false;
};

std::string join_labels(const std::vector<int>& labels) {
    if (labels.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(labels[i]);
    }
    return out;
}

void print_outcome_plain(const std::string& arrangement_line, const DiningOutcome& outcome) {
    std::cout << "arrangement: " << arrangement_line << "\n";
    std::cout << "seat diner pref napkin status\n";
    for (int seat = 1; seat <= outcome.size(); ++seat) {
        const SeatOutcome& s = outcome.at_seat(seat);
        std::printf("%-4d %-5d %-4c %-6s %s\n", seat, s.diner, s.preference > 0 ? '+' : '-',
                    std::string(napkin_name(s.napkin)).c_str(),
                    std::string(status_name(s.status)).c_str());
    }
    std::cout << "napkinless: " << join_labels(outcome.napkinless_diners()) << "\n";
    std::cout << "frustrated: " << join_labels(outcome.frustrated_diners()) << "\n";
    std::cout << "nu: " << outcome.napkinless_count() << "\n";
}

int run_seat(const SeatOptions& opts) {
    const PreferenceOrder prefs = PreferenceOrder::parse(opts.sigma);

    SeatingArrangement arrangement{SeatingOrder::sequential(prefs.size()), prefs};
    std::string arrangement_line;
    Json trace_json;
    if (!opts.order.empty()) {
        arrangement = SeatingArrangement{SeatingOrder::parse(opts.order), prefs};
        arrangement_line = signed_display_string(arrangement);
    } else if (!opts.benches.empty()) {
        const BenchCollection collection = BenchCollection::parse(opts.benches, prefs.size());
        arrangement = bench_seating_order(collection, prefs);
        const std::vector<int> list = bench_seating_list(collection, prefs);
        const int rotation = static_cast<int>(
            std::find(list.begin(), list.end(), 1) - list.begin());
        arrangement_line = bench_display_string(arrangement, rotation);
    } else if (opts.strategy == "sequential") {
        arrangement = SeatingArrangement{zero_napkinless_order(prefs), prefs};
        arrangement_line = signed_display_string(arrangement);
    } else if (opts.strategy == "clairvoyant") {
        ClairvoyantResult result = clairvoyant_seating(prefs);
        arrangement = result.arrangement;
        arrangement_line = bench_display_string(arrangement, result.trace.rotation);
        trace_json = to_json(result.trace);
    } else {
        throw CLI::ValidationError("seat",
                                   "pass exactly one of --order, --benches, or --strategy "
                                   "{clairvoyant, sequential}");
    }

    const DiningOutcome outcome = simulate_dining(arrangement);
    if (opts.json) {
        Json doc{{"sigma", prefs.to_string()},
                 {"order", arrangement.order.seats()},
                 {"signed_display", signed_display(arrangement)},
                 {"arrangement", arrangement_line},
                 {"outcome", to_json(outcome)}};
        if (!trace_json.is_null()) doc["trace"] = trace_json;
        std::cout << doc.dump(2) << "\n";
    } else {
        print_outcome_plain(arrangement_line, outcome);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// nu

int run_nu(const std::string& sigma, bool json) {
    const PreferenceOrder prefs = PreferenceOrder::parse(sigma);
    const int h = symmetric_drift(prefs);
    const int nu = max_napkinless_count(prefs);
    Json doc{{"n", prefs.size()},
             {"q", prefs.bench_count()},
             {"r", prefs.remainder()},
             {"drift", h},
             {"nu_max", nu}};
    if (prefs.size() >= 3) doc["unbalanced_benches"] = predicted_unbalanced_benches(prefs);
    if (json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& [key, value] : doc.items())
            std::cout << key << ": " << value.dump() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// oracle

int run_oracle(const std::string& sigma, const std::string& backend, const OracleBudget& budget,
               bool json) {
    const PreferenceOrder prefs = PreferenceOrder::parse(sigma);
    Json doc{{"n", prefs.size()}, {"sigma", prefs.to_string()}};
    int seating = -1, bench = -1;
    if (backend == "seating" || backend == "both") {
        seating = max_napkinless_seating_oracle(prefs, budget);
        doc["seating_oracle"] = seating;
    }
    if (backend == "bench" || backend == "both") {
        bench = max_napkinless_bench_oracle(prefs, budget);
        doc["bench_oracle"] = bench;
    }
    doc["formula"] = max_napkinless_count(prefs);

    bool mismatch = false;
    for (int value : {seating, bench})
        if (value >= 0 && value != doc["formula"].get<int>()) mismatch = true;
    doc["ok"] = !mismatch;

    if (json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& [key, value] : doc.items())
            std::cout << key << ": " << value.dump() << "\n";
    }
    return mismatch ? 1 : 0;
}

// ---------------------------------------------------------------------------
// dist / expect / mc

int run_dist(int n, bool csv) {
    const DistributionTable table = distribution_table(n);
    if (csv) {
        std::cout << "k,count,probability\n";
        for (size_t k = 0; k < table.counts.size(); ++k)
            std::cout << k << "," << table.counts[k].str() << ","
                      << to_fixed_decimal(table.probabilities[k], 15) << "\n";
    } else {
        std::cout << to_json(table).dump(2) << "\n";
    }
    return 0;
}

int run_expect(int n_min, int n_max, const std::string& csv_path) {
    const auto rows = expectation_table(n_min, n_max);
    std::ofstream file;
    if (!csv_path.empty()) {
        file.open(csv_path);
        if (!file) throw std::runtime_error("cannot open " + csv_path + " for writing");
    }
    std::ostream& out = csv_path.empty() ? std::cout : file;
    out << "n,expected,proportion\n";
    for (const ExpectationRow& row : rows)
        out << row.n << "," << row.expectation_text << "," << row.proportion_text << "\n";
    return 0;
}

int run_mc(int n, std::int64_t samples, std::uint64_t seed, int threads) {
    const MonteCarloResult result = monte_carlo_expectation(n, samples, seed, threads);
    std::cout << to_json(result).dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// paths

struct PathsOptions {
    std::vector<int> count;      // n h
    std::vector<int> enumerate;  // n h
    std::string phi;
    std::string psi;
    std::string decorate;
    bool json = false;
};

int run_paths(const PathsOptions& opts) {
    const int actions = !opts.count.empty() + !opts.enumerate.empty() + !opts.phi.empty() +
                        !opts.psi.empty() + !opts.decorate.empty();
    if (actions != 1)
        throw CLI::ValidationError(
            "paths", "pass exactly one of --count, --enumerate, --phi, --psi, --decorate");

    if (!opts.count.empty()) {
        const BigInt value = count_paths_with_drift(opts.count[0], opts.count[1]);
        if (opts.json) {
            std::cout << Json{{"n", opts.count[0]}, {"h", opts.count[1]}, {"count", value.str()}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << value.str() << "\n";
        }
    } else if (!opts.enumerate.empty()) {
        for (const LatticePath& path :
             enumerate_paths_with_drift(opts.enumerate[0], opts.enumerate[1]))
            std::cout << path.to_string() << "\n";
    } else if (!opts.phi.empty()) {
        const LatticePath path = LatticePath::parse(opts.phi);
        const LatticePath image = color_bijection(path);
        if (opts.json) {
            std::cout << Json{{"input", path.to_string()},
                              {"drift", drift(path)},
                              {"phi", image.to_string()}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << image.to_string() << "\n";
        }
    } else if (!opts.psi.empty()) {
        const LatticePath path = LatticePath::parse(opts.psi);
        const ParenBijectionResult result = paren_bijection(path);
        if (opts.json) {
            std::cout << Json{{"input", path.to_string()},
                              {"drift", drift(path)},
                              {"psi", result.path.to_string()},
                              {"conversions", result.conversions}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << result.path.to_string() << "\n";
        }
    } else {
        std::cout << to_json(decorate(LatticePath::parse(opts.decorate))).dump(2) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyCheck {
    std::string name;
    int n_min = 0;
    int n_max = 0;
    std::int64_t cases = 0;
    std::vector<std::string> mismatches;
};

PreferenceOrder prefs_from_mask(int n, std::uint64_t mask) {
    std::vector<Sign> signs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) signs[static_cast<size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
    return PreferenceOrder(std::move(signs));
}

// Three-way agreement between both brute-force oracles, the closed form,
// and the trap-setting strategy, over every preference order.
VerifyCheck verify_numax_agreement(int max_n, const OracleBudget& budget, int threads) {
    VerifyCheck check{"numax_agreement", 2, max_n, 0, {}};
    std::mutex merge;
    for (int n = 2; n <= max_n; ++n) {
        const std::int64_t total = std::int64_t{1} << n;
        check.cases += total;
        parallel_chunks(total, threads, [&](std::int64_t begin, std::int64_t end) {
            std::vector<std::string> local;
            for (std::int64_t mask = begin; mask < end; ++mask) {
                const PreferenceOrder prefs = prefs_from_mask(n, static_cast<std::uint64_t>(mask));
                const int formula = max_napkinless_count(prefs);
                const int seating = max_napkinless_seating_oracle(prefs, budget);
                const int bench = max_napkinless_bench_oracle(prefs, budget);
                const int strategy =
                    simulate_dining(clairvoyant_seating(prefs).arrangement).napkinless_count();
                if (seating != formula || bench != formula || strategy != formula)
                    local.push_back(prefs.to_string());
            }
            if (!local.empty()) {
                std::lock_guard<std::mutex> lock(merge);
                check.mismatches.insert(check.mismatches.end(), local.begin(), local.end());
            }
        });
    }
    std::sort(check.mismatches.begin(), check.mismatches.end());
    return check;
}

VerifyCheck verify_path_counts(int max_n) {
    VerifyCheck check{"path_counts", 0, max_n, 0, {}};
    for (int n = 0; n <= max_n; ++n) {
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
        for (int h = 0; h <= n; ++h) {
            check.cases += 1;
            if (BigInt(histogram[static_cast<size_t>(h)]) != count_paths_with_drift(n, h))
                check.mismatches.push_back("n=" + std::to_string(n) + ",h=" + std::to_string(h));
        }
    }
    return check;
}

VerifyCheck verify_bijections(int max_n) {
    VerifyCheck check{"bijections", 1, max_n, 0, {}};
    for (int n = 1; n <= max_n; ++n) {
        std::map<int, std::set<LatticePath>> phi_images, psi_images;
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<Step> steps(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                steps[static_cast<size_t>(i)] = (mask >> i) & 1 ? Step::East : Step::North;
            const LatticePath path(std::move(steps));
            const int h = drift(path);
            const int target = (n - h) / 2;
            check.cases += 1;

            const LatticePath phi = color_bijection(path);
            if (phi.east_count() != target || color_bijection_inverse(phi, h) != path ||
                !phi_images[h].insert(phi).second)
                check.mismatches.push_back("phi:" + path.to_string());

            const ParenBijectionResult psi = paren_bijection(path);
            if (psi.path.east_count() != target || !psi_images[h].insert(psi.path).second)
                check.mismatches.push_back("psi:" + path.to_string());
        }
        for (const auto& [h, images] : phi_images)
            if (BigInt(images.size()) != binomial(n, (n - h) / 2))
                check.mismatches.push_back("phi-image:n=" + std::to_string(n) +
                                           ",h=" + std::to_string(h));
    }
    return check;
}

VerifyCheck verify_distribution(int max_n, const OracleBudget& budget) {
    VerifyCheck check{"distribution", 3, max_n, 0, {}};
    for (int n = 3; n <= max_n; ++n) {
        const auto formula_hist = napkinless_distribution_oracle(
            n, DistributionBackend::FormulaNu, budget);
        const auto seating_hist = napkinless_distribution_oracle(
            n, DistributionBackend::SeatingOracle, budget);
        for (int k = 0; k <= n / 3; ++k) {
            check.cases += 1;
            const BigInt expected = distribution_count(n, k);
            if (BigInt(formula_hist[static_cast<size_t>(k)]) != expected ||
                BigInt(seating_hist[static_cast<size_t>(k)]) != expected)
                check.mismatches.push_back("n=" + std::to_string(n) + ",k=" + std::to_string(k));
        }
    }
    return check;
}

VerifyCheck verify_trace_identity(int max_n) {
    VerifyCheck check{"trace_identity", 2, max_n, 0, {}};
    for (int n = 2; n <= max_n; ++n) {
        const int q = n / 3, r = n - 3 * q;
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const PreferenceOrder prefs = prefs_from_mask(n, mask);
            const AlgorithmTrace trace = clairvoyant_seating(prefs).trace;
            check.cases += 1;
            bool saw_pos = false, saw_neg = false;
            int uses = 0;
            bool bad = false;
            for (const TraceEntry& entry : trace.forced_steps()) {
                ++uses;
                const int expected = q + r + 2 * (uses - 1) + 1;
                if (entry.step == TrapStep::PosForcedRight) {
                    saw_pos = true;
                    bad = bad || entry.y - entry.x != expected;
                } else {
                    saw_neg = true;
                    bad = bad || entry.x - entry.y != expected;
                }
            }
            if (bad || (saw_pos && saw_neg)) check.mismatches.push_back(prefs.to_string());
        }
    }
    return check;
}

int run_verify(int max_n, const OracleBudget& budget, int threads) {
    if (max_n < 2) throw CLI::ValidationError("verify", "--max-n must be at least 2");
    budget.require_seating(max_n);
    budget.require_bench(max_n);
    budget.require_sigma(max_n);

    std::vector<VerifyCheck> checks;
    checks.push_back(verify_numax_agreement(max_n, budget, threads));
    checks.push_back(verify_path_counts(max_n));
    checks.push_back(verify_bijections(max_n));
    checks.push_back(verify_distribution(max_n, budget));
    checks.push_back(verify_trace_identity(max_n));

    bool ok = true;
    Json report{{"max_n", max_n}, {"checks", Json::array()}};
    for (const VerifyCheck& check : checks) {
        ok = ok && check.mismatches.empty();
        report["checks"].push_back({{"name", check.name},
                                    {"n_min", check.n_min},
                                    {"n_max", check.n_max},
                                    {"cases", check.cases},
                                    {"agreements",
                                     check.cases - static_cast<std::int64_t>(
                                                       check.mismatches.size())},
                                    {"mismatches", check.mismatches}});
    }
    report["ok"] = ok;
    std::cout << report.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circular-table napkin game: simulation, clairvoyant trap setting, "
                 "exact distributions, and lattice-path tools"};
    app.require_subcommand(1);
    int exit_code = 0;

    // seat
    SeatOptions seat_opts;
    CLI::App* seat = app.add_subcommand("seat", "Simulate a seating arrangement");
    seat->add_option("--sigma", seat_opts.sigma, "preference string, e.g. +--++-+-")->required();
    auto* order_opt = seat->add_option("--order", seat_opts.order, "seat-to-diner labels, CSV");
    auto* strategy_opt =
        seat->add_option("--strategy", seat_opts.strategy, "clairvoyant or sequential")
            ->check(CLI::IsMember({"clairvoyant", "sequential"}));
    auto* benches_opt = seat->add_option("--benches", seat_opts.benches,
                                         "bench collection, e.g. 1,10,11;5,8,14;4,7,9;2,6,12");
    order_opt->excludes(strategy_opt)->excludes(benches_opt);
    strategy_opt->excludes(benches_opt);
    seat->add_flag("--json", seat_opts.json, "emit JSON instead of plain text");
    seat->callback([&] { exit_code = run_seat(seat_opts); });

    // nu
    std::string nu_sigma;
    bool nu_json = false;
    CLI::App* nu = app.add_subcommand("nu", "Maximum napkinless count from the closed form");
    nu->add_option("--sigma", nu_sigma, "preference string")->required();
    nu->add_flag("--json", nu_json, "emit JSON");
    nu->callback([&] { exit_code = run_nu(nu_sigma, nu_json); });

    // oracle
    std::string oracle_sigma, oracle_backend = "both";
    OracleBudget oracle_budget;
    bool oracle_json = false;
    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force maximum napkinless count");
    oracle->add_option("--sigma", oracle_sigma, "preference string")->required();
    oracle->add_option("--backend", oracle_backend, "seating, bench, or both")
        ->check(CLI::IsMember({"seating", "bench", "both"}));
    oracle->add_option("--max-seating-n", oracle_budget.max_seating_n, "seating search cap");
    oracle->add_option("--max-bench-n", oracle_budget.max_bench_n, "bench search cap");
    oracle->add_flag("--json", oracle_json, "emit JSON");
    oracle->callback(
        [&] { exit_code = run_oracle(oracle_sigma, oracle_backend, oracle_budget, oracle_json); });

    // dist
    int dist_n = 0;
    bool dist_csv = false, dist_json = false;
    CLI::App* dist = app.add_subcommand("dist", "Exact distribution of the napkinless maximum");
    dist->add_option("--n", dist_n, "table size")->required()->check(CLI::Range(3, 100000));
    dist->add_flag("--csv", dist_csv, "emit CSV");
    dist->add_flag("--json", dist_json, "emit JSON (default)");
    dist->callback([&] { exit_code = run_dist(dist_n, dist_csv && !dist_json); });

    // expect
    int expect_min = 3, expect_max = 3;
    std::string expect_csv;
    CLI::App* expect = app.add_subcommand("expect", "Expected napkinless counts as CSV");
    expect->add_option("--n-min", expect_min, "first table size")->required();
    expect->add_option("--n-max", expect_max, "last table size")->required();
    expect->add_option("--csv", expect_csv, "output file (default stdout)");
    expect->callback([&] { exit_code = run_expect(expect_min, expect_max, expect_csv); });

    // mc
    int mc_n = 0, mc_threads = 0;
    std::int64_t mc_samples = 0;
    std::uint64_t mc_seed = 0;
    CLI::App* mc = app.add_subcommand("mc", "Seeded Monte Carlo expectation estimate");
    mc->add_option("--n", mc_n, "table size")->required();
    mc->add_option("--samples", mc_samples, "sample count")->required();
    mc->add_option("--seed", mc_seed, "PRNG seed")->required();
    mc->add_option("--threads", mc_threads, "worker threads (default NAPKIN_THREADS or hardware)");
    mc->callback([&] { exit_code = run_mc(mc_n, mc_samples, mc_seed, mc_threads); });

    // paths
    PathsOptions paths_opts;
    CLI::App* paths = app.add_subcommand("paths", "Lattice-path drift tools");
    paths->add_option("--count", paths_opts.count, "count paths: n h")->expected(2);
    paths->add_option("--enumerate", paths_opts.enumerate, "list paths: n h")->expected(2);
    paths->add_option("--phi", paths_opts.phi, "recoloring bijection of a path");
    paths->add_option("--psi", paths_opts.psi, "parenthesization bijection of a path");
    paths->add_option("--decorate", paths_opts.decorate, "zenith, dips, and colors as JSON");
    paths->add_flag("--json", paths_opts.json, "emit JSON");
    paths->callback([&] { exit_code = run_paths(paths_opts); });

    // verify
    int verify_max_n = 7, verify_threads = 0;
    OracleBudget verify_budget;
    CLI::App* verify = app.add_subcommand("verify", "Cross-validate formulas against oracles");
    verify->add_option("--max-n", verify_max_n, "largest table size to sweep")->required();
    verify->add_option("--max-seating-n", verify_budget.max_seating_n, "seating search cap");
    verify->add_option("--max-bench-n", verify_budget.max_bench_n, "bench search cap");
    verify->add_option("--max-sigma-n", verify_budget.max_sigma_n, "preference sweep cap");
    verify->add_option("--threads", verify_threads,
                       "worker threads (default NAPKIN_THREADS or hardware)");
    verify->callback([&] {
        exit_code = run_verify(verify_max_n, verify_budget, resolve_thread_count(verify_threads));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
