#include "scoreseq/oracle.hpp"

#include "scoreseq/fast_search.hpp"
#include "scoreseq/net.hpp"

#include <thread>

namespace scoreseq {

namespace {

struct BruteForcer {
    const ScoreSet& scores;
    OracleReport& report;
    std::vector<Count> xs;

    void descend(std::size_t layer, Count players) {
        ++report.nodes_visited;
        const std::size_t n = scores.size();
        if (layer > n) {
            if (landau_check_grouped(scores, xs)) {
                report.solutions.emplace_back(xs);
            }
            return;
        }
        const Score alpha = scores.alpha(layer);
        for (Count x = 1; x <= 2 * alpha + 1; ++x) {
            if (players + x > 2 * alpha + 1) {
                break;  // player-count cap: no valid sequence exceeds it
            }
            xs[layer - 1] = x;
            descend(layer + 1, players + x);
        }
    }
};

}  // namespace

OracleReport brute_force_all(const ScoreSet& scores) {
    double space = 1.0;
    for (Score a : scores.values()) {
        space *= static_cast<double>(2 * a + 1);
    }
    if (space > 1e8) {
        throw resource_error("oracle search space exceeds 10^8");
    }
    OracleReport report{scores, {}, 0};
    BruteForcer search{scores, report, std::vector<Count>(scores.size())};
    search.descend(1, 0);
    // Ascending depth-first assignment emits in lexicographic order already.
    return report;
}

ReidScanReport reid_scan(Score max_score, ReidEngine engine, unsigned workers,
                         Score guard) {
    if (max_score < 0) {
        throw input_error("max_score must be nonnegative");
    }
    if (max_score > guard || guard > 30) {
        throw input_error("reid scan of {0.." + std::to_string(max_score) +
                          "} exceeds the guard (" + std::to_string(guard) + ")");
    }
    const std::uint64_t subsets = (std::uint64_t{1} << (max_score + 1)) - 1;
    std::vector<ScoreSet> failed_sets;

    auto subset_scores = [&](std::uint64_t mask) {
        std::vector<Score> values;
        for (Score v = 0; v <= max_score; ++v) {
            if (mask & (std::uint64_t{1} << v)) {
                values.push_back(v);
            }
        }
        return ScoreSet{std::move(values)};
    };
    auto solvable = [&](const ScoreSet& d) {
        if (engine == ReidEngine::Fast) {
            return reconstruct_fast(d).has_value();
        }
        return reconstruct_one(d).has_value();
    };

    if (workers <= 1) {
        for (std::uint64_t mask = 1; mask <= subsets; ++mask) {
            ScoreSet d = subset_scores(mask);
            if (!solvable(d)) {
                failed_sets.push_back(std::move(d));
            }
        }
    } else {
        std::vector<std::uint8_t> ok(subsets + 1, 1);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t mask = 1 + w; mask <= subsets; mask += workers) {
                    ok[mask] = solvable(subset_scores(mask)) ? 1 : 0;
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
        for (std::uint64_t mask = 1; mask <= subsets; ++mask) {
            if (!ok[mask]) {
                failed_sets.push_back(subset_scores(mask));
            }
        }
    }

    return ReidScanReport{static_cast<std::int64_t>(subsets), std::move(failed_sets)};
}

}  // namespace scoreseq
