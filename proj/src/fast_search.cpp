#include "scoreseq/fast_search.hpp"

#include "scoreseq/bounds.hpp"

#include <cassert>

namespace scoreseq {

std::optional<std::pair<Count, Count>> end_phase(const ModularContext& ctx,
                                                 Count f_index,
                                                 PrefixState state,
                                                 const ScoreSet& scores) {
    const std::size_t n = scores.size();
    const Score alpha_n = scores.alpha(n);
    const Score alpha_n1 = scores.alpha(n - 1);
    const Count second_bound = upper_bound_xk(alpha_n1, state).upper;
    // Fixed-part weighted sum over the prefix: sum_{j<=n-2} (alpha_n - alpha_j) x_j.
    const Count prefix_weight = state.players * alpha_n - state.score_sum;

    for (Count f = f_index; 2 * f <= 2 * alpha_n + 1; f += ctx.modulus) {
        const Count num = (2 * alpha_n + 1 - 2 * f) * f - prefix_weight;
        if (num < ctx.modulus) {
            continue;  // next-to-last multiplicity would be < 1
        }
        assert(num % ctx.modulus == 0);  // guaranteed when shifted[f_index] == 0
        if (num % ctx.modulus != 0) {
            continue;
        }
        const Count second = num / ctx.modulus;
        if (second > second_bound) {
            continue;
        }
        const PrefixState extended{state.players + second,
                                   state.score_sum + second * alpha_n1};
        if (auto last = exact_xn(alpha_n, extended)) {
            return std::make_pair(second, *last);
        }
    }
    return std::nullopt;
}

namespace {

struct Searcher {
    const ScoreSet& scores;
    const ModularContext& ctx;
    const FastSearchOptions& options;
    FastSearchStats& stats;
    std::size_t n;
    std::vector<Count> xs;
#ifndef NDEBUG
    Count dbg_weighted_sum = 0;  // sum (alpha_n - alpha_j) x_j over assigned layers
#endif

    void charge(std::int64_t amount = 1) {
        stats.nodes_visited += amount;
        if (stats.nodes_visited > options.node_budget) {
            throw resource_error("search node budget exceeded (" +
                                 std::to_string(options.node_budget) + ")");
        }
    }

    // gsum carries sum g_j x_j over assigned layers, reduced mod M.
    bool search(std::size_t layer, PrefixState state, Count gsum) {
        charge();
        if (layer >= n - 1) {
            assert(dbg_weighted_sum == state.players * scores.alpha(n) - state.score_sum);
            std::vector<Count> shifted = shift_sol(ctx, gsum);
            for (Count i = 0; i < ctx.modulus; ++i) {
                if (shifted[static_cast<std::size_t>(i)] != 0) {
                    continue;
                }
                ++stats.end_calls;
                if (auto tail = end_phase(ctx, i, state, scores)) {
                    xs[n - 2] = tail->first;
                    xs[n - 1] = tail->second;
                    return true;
                }
            }
            return false;
        }

        const Score alpha = scores.alpha(layer);
        const Count upper = upper_bound_xk(alpha, state).upper;
        std::vector<Count> shifted;
        for (Count x = 1; x <= upper; ++x) {
            charge();
            if (options.use_lookahead &&
                !lookahead_feasible(layer, x, state, scores)) {
                continue;
            }
            const Count next_gsum = (gsum + ctx.g(layer) * x) % ctx.modulus;
            if (options.use_potential) {
                shift_sol_into(ctx, next_gsum, shifted);
                if (!potential(shifted, ctx.m(layer + 1))) {
                    continue;
                }
            }
            xs[layer - 1] = x;
#ifndef NDEBUG
            const Count contribution = (scores.alpha(n) - alpha) * x;
            dbg_weighted_sum += contribution;
#endif
            const bool found = search(
                layer + 1,
                {state.players + x, state.score_sum + x * alpha}, next_gsum);
#ifndef NDEBUG
            if (!found) {
                dbg_weighted_sum -= contribution;
            }
#endif
            if (found) {
                return true;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<ExponentSet> reconstruct_fast(const ScoreSet& scores,
                                            const FastSearchOptions& options,
                                            FastSearchStats* stats) {
    const std::size_t n = scores.size();
    FastSearchStats local;
    FastSearchStats& st = stats != nullptr ? *stats : local;
    st = {};

    if (n == 1) {
        // One distinct score alpha forces exactly 2*alpha + 1 players.
        return ExponentSet{{2 * scores.alpha(1) + 1}};
    }

    const ModularContext ctx = build_context(scores);
    Searcher searcher{scores, ctx, options, st, n, std::vector<Count>(n)};
    if (!searcher.search(1, {0, 0}, 0)) {
        return std::nullopt;
    }
    ExponentSet result{std::move(searcher.xs)};
    assert(landau_check_grouped(scores, result));
    return result;
}

}  // namespace scoreseq
