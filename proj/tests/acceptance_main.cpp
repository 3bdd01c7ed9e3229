// Acceptance suite: one pass/fail line per criterion. Exit code is the
// number of failed criteria.

#include "scoreseq/bench.hpp"
#include "scoreseq/bounds.hpp"
#include "scoreseq/fast_search.hpp"
#include "scoreseq/instances.hpp"
#include "scoreseq/modular.hpp"
#include "scoreseq/net.hpp"
#include "scoreseq/oracle.hpp"
#include "scoreseq/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace scoreseq;

namespace {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw check_failure(message);
    }
}

std::set<std::vector<Count>> as_set(const std::vector<ExponentSet>& solutions) {
    std::set<std::vector<Count>> out;
    for (const auto& e : solutions) {
        out.insert(e.values());
    }
    return out;
}

// Every strictly increasing score set over {0..15} with 1..4 elements.
std::vector<ScoreSet> acceptance_grid() {
    std::vector<ScoreSet> grid;
    for (std::uint32_t mask = 1; mask < (1u << 16); ++mask) {
        if (__builtin_popcount(mask) > 4) {
            continue;
        }
        std::vector<Score> values;
        for (Score v = 0; v <= 15; ++v) {
            if (mask & (1u << v)) {
                values.push_back(v);
            }
        }
        grid.emplace_back(std::move(values));
    }
    return grid;
}

// The 21 known reconstructions of {2,4,7,14}.
const std::set<std::vector<Count>> kKnownEnumeration = {
    {2, 1, 10, 3}, {1, 2, 10, 4}, {3, 1, 8, 5},  {1, 1, 11, 5}, {2, 4, 5, 7},
    {1, 2, 9, 7},  {3, 1, 7, 8},  {2, 5, 3, 9},  {2, 1, 8, 9},  {1, 5, 4, 10},
    {3, 4, 2, 11}, {1, 3, 6, 11}, {3, 2, 4, 12}, {1, 3, 5, 13}, {3, 2, 3, 14},
    {2, 1, 5, 15}, {1, 5, 1, 16}, {1, 2, 4, 17}, {3, 1, 2, 18}, {1, 1, 4, 19},
    {1, 2, 1, 22},
};

void criterion_1_known_enumeration(std::ostream& detail) {
    auto result = enumerate_all(ScoreSet{{2, 4, 7, 14}});
    require(!result.truncated, "enumeration unexpectedly truncated");
    auto got = as_set(result.solutions);
    require(got.size() == result.solutions.size(), "duplicate solutions emitted");
    require(got == kKnownEnumeration,
            "enumeration differs from the 21 known reconstructions");
    detail << "21/21 reconstructions match";
}

// Number of positive integer n-tuples with sum <= s (loose work estimate).
double composition_estimate(double s, std::size_t n) {
    double c = 1.0;
    for (std::size_t i = 1; i <= n; ++i) {
        c *= (s - static_cast<double>(n) + static_cast<double>(i)) /
             static_cast<double>(i);
    }
    return c;
}

std::vector<ScoreSet> seeded_random_sets(std::size_t count) {
    std::vector<ScoreSet> sets;
    for (std::uint64_t seed = 1; sets.size() < count; ++seed) {
        std::size_t n = 2 + static_cast<std::size_t>(seed % 5);
        Score alpha_max = 6 + static_cast<Score>((seed * 7) % 20);
        auto values = sample_score_set(n, alpha_max, 5'000 + seed);
        double space = 1.0;
        for (Score a : values) {
            space *= static_cast<double>(2 * a + 1);
        }
        if (space > 1e8) {
            continue;  // outside the oracle guard
        }
        if (composition_estimate(2.0 * static_cast<double>(values.back()) + 1.0,
                                 n) > 8e5) {
            continue;  // within the guard but needlessly slow
        }
        sets.emplace_back(std::move(values));
    }
    return sets;
}

void criterion_2_oracle_equivalence(std::ostream& detail) {
    std::size_t checked = 0;
    for (const auto& d : acceptance_grid()) {
        auto expected = as_set(brute_force_all(d).solutions);
        auto got = as_set(enumerate_all(d).solutions);
        require(expected == got,
                "enumeration/oracle mismatch on " + format_int_list(d.values()));
        ++checked;
    }
    const std::size_t grid_size = checked;
    for (const auto& d : seeded_random_sets(200)) {
        auto expected = as_set(brute_force_all(d).solutions);
        auto got = as_set(enumerate_all(d).solutions);
        require(expected == got,
                "enumeration/oracle mismatch on " + format_int_list(d.values()));
        ++checked;
    }
    detail << grid_size << " grid sets + " << (checked - grid_size)
           << " random sets agree with the oracle";
}

void criterion_3_medium_instances(std::ostream& detail) {
    for (const auto& instance : reference_medium_instances()) {
        ScoreSet d{instance.scores};
        require(landau_check_grouped(d, ExponentSet{instance.exponents}),
                "bundled reconstruction fails verification for " +
                    format_int_list(instance.scores));
        auto e = reconstruct_one(d);
        require(e.has_value(),
                "no reconstruction found for " + format_int_list(instance.scores));
        require(landau_check_grouped(d, *e),
                "reconstruction fails verification for " +
                    format_int_list(instance.scores));
    }
    detail << reference_medium_instances().size()
           << "/7 bundled medium instances verified and reconstructed";
}

void criterion_4_large_instances(std::ostream& detail) {
    double worst = 0.0;
    for (const auto& instance : reference_large_instances()) {
        ScoreSet d{instance.scores};
        require(landau_check_grouped(d, ExponentSet{instance.exponents}),
                "bundled reconstruction fails verification for " +
                    format_int_list(instance.scores));
        FastSearchStats stats;
        const auto start = std::chrono::steady_clock::now();
        auto e = reconstruct_fast(d, {}, &stats);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        worst = std::max(worst, elapsed);
        require(e.has_value(), "fast search found nothing for " +
                                   format_int_list(instance.scores));
        require(landau_check_grouped(d, *e),
                "fast reconstruction fails verification");
        require(elapsed < 5.0, "fast search took " + std::to_string(elapsed) +
                                   " s (budget 5 s) on " +
                                   format_int_list(instance.scores));
        require(stats.nodes_visited < 10'000'000,
                "fast search visited " + std::to_string(stats.nodes_visited) +
                    " nodes (budget 1e7)");
    }
    detail << reference_large_instances().size()
           << "/9 bundled large instances reconstructed; worst case " << worst
           << " s";
}

void criterion_5_unique_solution(std::ostream& detail) {
    ScoreSet d{{0, 1, 3, 5}};
    const std::vector<Count> expected{1, 1, 3, 1};
    auto oracle = brute_force_all(d);
    require(oracle.solutions.size() == 1 &&
                oracle.solutions[0].values() == expected,
            "oracle does not certify the unique solution");
    auto dp = reconstruct_one(d);
    require(dp.has_value() && dp->values() == expected,
            "dynamic program missed the unique solution");
    auto fast = reconstruct_fast(d);
    require(fast.has_value() && fast->values() == expected,
            "fast search missed the unique solution");
    detail << "both algorithms return {1,1,3,1}";
}

void criterion_6_subset_scan(std::ostream& detail) {
    auto report = reid_scan(10);
    require(report.subsets_checked == 2047,
            "expected 2047 subsets, saw " +
                std::to_string(report.subsets_checked));
    require(report.all_ok(), std::to_string(report.failures.size()) +
                                 " subsets failed to reconstruct");
    detail << "2047/2047 subsets reconstructible";
}

void criterion_7_complexity_envelope(std::ostream& detail) {
    // Paper-shaped grid scan: doubling the maximum score must scale the
    // build time like the fourth power, within a factor of two each side.
    auto timed_dense = [](Score scale) {
        const ScoreSet d = max_sweep_instance(scale);
        std::vector<double> times;
        for (int rep = 0; rep < 3; ++rep) {
            NetBuildOptions options;
            options.mode = NetMode::FirstOnly;
            options.dense_scan = true;
            const auto start = std::chrono::steady_clock::now();
            Net net = build_net(d, options);
            (void)net;
            times.push_back(std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count());
        }
        std::sort(times.begin(), times.end());
        return times[1];
    };
    const double base = timed_dense(8);    // alpha_max 56
    const double doubled = timed_dense(16);  // alpha_max 112
    const double factor = doubled / base;
    require(factor >= 8.0 && factor <= 32.0,
            "doubling alpha_max scaled time by " + std::to_string(factor) +
                ", outside [8, 32] (base " + std::to_string(base) + " s)");

    // State counts per layer stay within the admissible-state ceiling.
    for (Score scale : {4, 8, 16}) {
        const ScoreSet d = max_sweep_instance(scale);
        NetBuildOptions options;
        options.mode = NetMode::FirstOnly;
        options.use_lookahead = false;  // keep every reachable state
        Net net = build_net(d, options);
        for (std::size_t k = 1; k <= d.size(); ++k) {
            require(std::uint64_t{net.stats.layer_states[k]} <=
                        layer_state_cap(d.alpha(k)),
                    "layer " + std::to_string(k) + " state count exceeds cap");
        }
        require(std::uint64_t(net.stats.entries_inserted) <=
                    loop_iteration_bound(d),
                "entry insertions exceed the loop iteration bound");
    }
    std::ostringstream factor_text;
    factor_text.precision(1);
    factor_text << std::fixed << factor;
    detail << "time factor " << factor_text.str()
           << " in [8,32]; all layer states within caps";
}

void criterion_8_invariant_suites(std::ostream& detail) {
    std::size_t solutions_checked = 0;
    std::size_t prefixes_checked = 0;
    for (const auto& d : acceptance_grid()) {
        const std::size_t n = d.size();
        auto oracle = brute_force_all(d);

        std::set<std::vector<Count>> valid_prefixes;
        for (const auto& e : oracle.solutions) {
            for (std::size_t k = 1; k <= n; ++k) {
                valid_prefixes.insert(std::vector<Count>(
                    e.values().begin(), e.values().begin() + k));
            }
        }

        std::optional<ModularContext> ctx;
        if (n >= 2) {
            ctx = build_context(d);
        }

        for (const auto& e : oracle.solutions) {
            ++solutions_checked;
            // Bound soundness and exact closing equality.
            PrefixState st{0, 0};
            for (std::size_t k = 1; k <= n; ++k) {
                Count x = e.values()[k - 1];
                require(x <= upper_bound_xk(d.alpha(k), st).upper,
                        "solution exceeds the layer bound");
                if (k == n) {
                    require(exact_xn(d.alpha(n), st) == x,
                            "closing multiplicity is not exact");
                }
                st.players += x;
                st.score_sum += x * d.alpha(k);
            }
            // Closing-equality witness exists.
            require(check_f_witness(d, e).has_value(), "no witness for " +
                        format_int_list(d.values()));
            // Accumulated residue lands in the attainable set.
            if (ctx) {
                Count sum = 0;
                for (std::size_t i = 1; i < n; ++i) {
                    sum += ctx->g(i) * e.values()[i - 1];
                }
                Count residue = sum % ctx->modulus;
                bool member = false;
                for (Count s : ctx->sol) {
                    member = member || s == residue;
                }
                require(member, "residue not attainable for " +
                                    format_int_list(d.values()));
            }
        }

        // Pruning safety: a false potential() on any bound-feasible prefix
        // means no valid sequence starts with that prefix.
        if (n >= 3) {
            std::vector<Count> prefix;
            std::function<void(std::size_t, PrefixState, Count)> walk =
                [&](std::size_t k, PrefixState st, Count gsum) {
                    if (k > n - 2) {
                        return;
                    }
                    const Count upper = upper_bound_xk(d.alpha(k), st).upper;
                    for (Count x = 1; x <= upper; ++x) {
                        prefix.push_back(x);
                        ++prefixes_checked;
                        const Count next_gsum =
                            (gsum + ctx->g(k) * x) % ctx->modulus;
                        const bool promising =
                            potential(shift_sol(*ctx, next_gsum), ctx->m(k + 1));
                        if (!promising) {
                            require(valid_prefixes.count(prefix) == 0,
                                    "potential() pruned a completable prefix of " +
                                        format_int_list(d.values()));
                        }
                        walk(k + 1,
                             {st.players + x, st.score_sum + x * d.alpha(k)},
                             next_gsum);
                        prefix.pop_back();
                    }
                };
            walk(1, {0, 0}, 0);
        }
    }
    detail << solutions_checked << " oracle solutions and " << prefixes_checked
           << " prefixes satisfy the invariant suites";
}

struct Criterion {
    int id;
    std::string name;
    std::function<void(std::ostream&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "known enumeration of {2,4,7,14}", criterion_1_known_enumeration},
        {2, "oracle equivalence on the small grid", criterion_2_oracle_equivalence},
        {3, "medium bundled instances", criterion_3_medium_instances},
        {4, "large bundled instances under 5 s", criterion_4_large_instances},
        {5, "unique solution of {0,1,3,5}", criterion_5_unique_solution},
        {6, "all subsets of {0..10} reconstructible", criterion_6_subset_scan},
        {7, "fourth-power time envelope and state caps", criterion_7_complexity_envelope},
        {8, "invariant suites on the small grid", criterion_8_invariant_suites},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::ostringstream detail;
        std::string error;
        try {
            criterion.run(detail);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (error.empty()) {
            std::cout << "[PASS] criterion " << criterion.id << ": "
                      << criterion.name << " — " << detail.str() << " ("
                      << elapsed << " s)\n";
        } else {
            ++failures;
            std::cout << "[FAIL] criterion " << criterion.id << ": "
                      << criterion.name << " — " << error << " (" << elapsed
                      << " s)\n";
        }
    }
    return failures;
}
