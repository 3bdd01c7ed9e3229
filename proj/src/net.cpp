#include "scoreseq/net.hpp"

#include <cassert>
#include <limits>

namespace scoreseq {

namespace {

using u128 = unsigned __int128;

std::uint64_t clamp_u64(u128 v) {
    if (v > u128{std::numeric_limits<std::uint64_t>::max()}) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(v);
}

struct Inserter {
    Net& net;
    const NetBuildOptions& options;

    void operator()(std::size_t layer, PrefixState to, NetEntry entry) {
        auto& cell = net.layers[layer][to];
        if (net.mode == NetMode::FirstOnly && !cell.empty()) {
            return;  // one predecessor per state is enough to reconstruct
        }
        cell.push_back(entry);
        if (++net.stats.entries_inserted > options.max_entries) {
            throw resource_error("net entry budget exceeded (" +
                                 std::to_string(options.max_entries) + ")");
        }
    }
};

// Paper-shaped scan: candidate multiplicity outer, full capped (p, q) grid
// inner, occupancy via a flat index. Cost is the full grid product per layer
// regardless of how sparse the reachable states are.
void scan_layer_dense(const ScoreSet& scores, std::size_t layer, Net& net,
                      const NetBuildOptions& options, Inserter& insert) {
    const Score alpha = scores.alpha(layer);
    const Score alpha_prev = scores.alpha(layer - 1);
    const Count p_max = 2 * alpha_prev + 1;
    const Count q_max = (2 * alpha_prev + 1) * alpha_prev;
    const u128 cells = u128(p_max + 1) * u128(q_max + 1);
    if (cells > 200'000'000) {
        throw resource_error("dense scan grid too large; use the sparse scan");
    }

    std::vector<const NetLayer::mapped_type*> occupied(
        static_cast<std::size_t>(cells), nullptr);
    for (const auto& [state, entries] : net.layers[layer - 1]) {
        assert(state.players <= p_max && state.score_sum <= q_max);
        occupied[static_cast<std::size_t>(state.players * (q_max + 1) +
                                          state.score_sum)] = &entries;
    }

    const bool lookahead = options.lookahead_enabled();
    for (Count x = 1; x <= 2 * alpha + 1; ++x) {
        std::size_t idx = 0;
        for (Count p = 0; p <= p_max; ++p) {
            for (Count q = 0; q <= q_max; ++q, ++idx) {
                ++net.stats.insert_attempts;
                if (occupied[idx] == nullptr) {
                    continue;
                }
                PrefixState state{p, q};
                if (x > upper_bound_xk(alpha, state).upper) {
                    continue;
                }
                if (lookahead && !lookahead_feasible(layer, x, state, scores)) {
                    continue;
                }
                const PrefixState to{p + x, q + x * alpha};
                assert(caps_ok(alpha, to));
                insert(layer, to, {state, x});
            }
        }
    }
}

// Sparse scan: only occupied predecessor states, bound computed once per
// state, multiplicities ascending.
void scan_layer_sparse(const ScoreSet& scores, std::size_t layer, Net& net,
                       const NetBuildOptions& options, Inserter& insert) {
    const Score alpha = scores.alpha(layer);
    const bool lookahead = options.lookahead_enabled();
    for (const auto& [state, entries] : net.layers[layer - 1]) {
        const Count upper = upper_bound_xk(alpha, state).upper;
        for (Count x = 1; x <= upper; ++x) {
            ++net.stats.insert_attempts;
            if (lookahead && !lookahead_feasible(layer, x, state, scores)) {
                continue;
            }
            const PrefixState to{state.players + x, state.score_sum + x * alpha};
            // Reachable states satisfy the caps and the side condition by
            // construction; these are load-bearing for the layer sizing.
            assert(caps_ok(alpha, to));
            assert(to.score_sum - to.players * (to.players - 1) / 2 >= 0);
            insert(layer, to, {state, x});
        }
    }
}

}  // namespace

Net build_net(const ScoreSet& scores, const NetBuildOptions& options) {
    const std::size_t n = scores.size();
    Net net;
    net.mode = options.mode;
    net.layers.resize(n + 1);
    net.layers[0][{0, 0}] = {NetEntry{{0, 0}, 0}};
    Inserter insert{net, options};

    for (std::size_t layer = 1; layer < n; ++layer) {
        if (options.dense_scan) {
            scan_layer_dense(scores, layer, net, options, insert);
        } else {
            scan_layer_sparse(scores, layer, net, options, insert);
        }
    }

    // Final layer: keep only states whose closing multiplicity is exact.
    // For n == 1 this runs directly off the (0,0) seed.
    const Score alpha_n = scores.alpha(n);
    for (const auto& [state, entries] : net.layers[n - 1]) {
        ++net.stats.insert_attempts;
        if (auto x = exact_xn(alpha_n, state)) {
            const PrefixState to{state.players + *x, state.score_sum + *x * alpha_n};
            assert(caps_ok(alpha_n, to));
            assert(to.score_sum == to.players * (to.players - 1) / 2);
            insert(n, to, {state, *x});
        }
    }

    net.stats.layer_states.reserve(n + 1);
    for (const auto& layer : net.layers) {
        net.stats.layer_states.push_back(layer.size());
    }
    assert(std::uint64_t(net.stats.entries_inserted) <= loop_iteration_bound(scores));
    return net;
}

std::optional<ExponentSet> reconstruct_one(const ScoreSet& scores) {
    NetBuildOptions options;
    options.mode = NetMode::FirstOnly;
    return reconstruct_one(scores, options);
}

std::optional<ExponentSet> reconstruct_one(const ScoreSet& scores,
                                           const NetBuildOptions& options,
                                           NetStats* stats) {
    NetBuildOptions opts = options;
    opts.mode = NetMode::FirstOnly;
    Net net = build_net(scores, opts);
    if (stats != nullptr) {
        *stats = net.stats;
    }
    if (!net.solvable()) {
        return std::nullopt;
    }
    const std::size_t n = scores.size();
    std::vector<Count> xs(n);
    PrefixState key = net.layers[n].begin()->first;
    for (std::size_t layer = n; layer >= 1; --layer) {
        const auto& cell = net.layers[layer].at(key);
        assert(cell.size() == 1);
        xs[layer - 1] = cell.front().count;
        key = cell.front().prev;
    }
    assert((key == PrefixState{0, 0}));
    ExponentSet result{std::move(xs)};
    assert(landau_check_grouped(scores, result));
    return result;
}

namespace {

struct Enumerator {
    const Net& net;
    std::optional<std::size_t> limit;
    EnumerationResult out;
    std::vector<Count> xs;

    // Returns false once the limit is hit and unwinding should stop.
    bool chain(std::size_t layer, PrefixState key) {
        if (layer == 0) {
            assert((key == PrefixState{0, 0}));
            if (limit && out.solutions.size() == *limit) {
                out.truncated = true;
                return false;
            }
            out.solutions.emplace_back(xs);
            return true;
        }
        for (const NetEntry& entry : net.layers[layer].at(key)) {
            xs[layer - 1] = entry.count;
            if (!chain(layer - 1, entry.prev)) {
                return false;
            }
        }
        return true;
    }
};

}  // namespace

EnumerationResult enumerate_net(const Net& net, const ScoreSet& scores,
                                std::optional<std::size_t> limit) {
    if (net.mode != NetMode::EnumerateAll) {
        throw input_error("enumeration requires a net built in EnumerateAll mode");
    }
    const std::size_t n = scores.size();
    Enumerator e{net, limit, {}, std::vector<Count>(n)};
    for (const auto& [key, entries] : net.layers[n]) {
        if (!e.chain(n, key)) {
            break;
        }
    }
    return std::move(e.out);
}

EnumerationResult enumerate_all(const ScoreSet& scores,
                                std::optional<std::size_t> limit,
                                const NetBuildOptions& options) {
    NetBuildOptions opts = options;
    opts.mode = NetMode::EnumerateAll;
    return enumerate_net(build_net(scores, opts), scores, limit);
}

std::uint64_t layer_state_cap(Score alpha_k) {
    const u128 p_values = 2 * u128(alpha_k) + 2;
    const u128 q_values = u128(alpha_k) * (2 * u128(alpha_k) + 1) + 1;
    return clamp_u64(p_values * q_values);
}

std::uint64_t loop_iteration_bound(const ScoreSet& scores) {
    const std::size_t n = scores.size();
    u128 total = 0;
    for (std::size_t layer = 1; layer < n; ++layer) {
        const u128 x_values = 2 * u128(scores.alpha(layer)) + 1;
        const u128 p_values = 2 * u128(scores.alpha(layer - 1)) + 2;
        const u128 q_values =
            (2 * u128(scores.alpha(layer - 1)) + 1) * u128(scores.alpha(layer - 1)) + 1;
        total += x_values * p_values * q_values;
    }
    const u128 p_values = 2 * u128(scores.alpha(n - 1)) + 2;
    const u128 q_values =
        (2 * u128(scores.alpha(n - 1)) + 1) * u128(scores.alpha(n - 1)) + 1;
    total += p_values * q_values;
    return clamp_u64(total);
}

}  // namespace scoreseq
