// Layered dynamic program over prefix states. Layer k maps each reachable
// (players, score_sum) pair to the predecessor records that produced it;
// the final layer is nonempty exactly when a valid exponent set exists.
// Back-chaining yields one reconstruction or enumerates all of them.
#pragma once

#include "scoreseq/bounds.hpp"
#include "scoreseq/core.hpp"

#include <map>

namespace scoreseq {

enum class NetMode {
    FirstOnly,     // keep one predecessor per state: enough to reconstruct
    EnumerateAll,  // keep every predecessor record: enough to enumerate
};

struct NetEntry {
    PrefixState prev;  // state in the previous layer this entry extends
    Count count = 0;   // multiplicity chosen at this layer
    bool operator==(const NetEntry&) const = default;
};

using NetLayer = std::map<PrefixState, std::vector<NetEntry>>;

struct NetBuildOptions {
    NetMode mode = NetMode::EnumerateAll;
    // Iterate the full capped (x, p, q) grid per layer instead of only the
    // occupied states. Same net, paper-shaped cost; for benchmarking.
    bool dense_scan = false;
    // Prune candidate multiplicities with the minimal-fill lookahead.
    // Defaults per mode: on for FirstOnly, off for EnumerateAll (where it
    // must not change the result set and is only a speed knob).
    std::optional<bool> use_lookahead;
    std::int64_t max_entries = 20'000'000;

    bool lookahead_enabled() const {
        return use_lookahead.value_or(mode == NetMode::FirstOnly);
    }
};

struct NetStats {
    std::int64_t entries_inserted = 0;
    std::int64_t insert_attempts = 0;  // candidate (state, x) pairs examined
    std::vector<std::size_t> layer_states;  // distinct keys per layer, index 0..n
};

struct Net {
    NetMode mode = NetMode::EnumerateAll;
    std::vector<NetLayer> layers;  // index 0..n; layer 0 holds the (0,0) seed
    NetStats stats;

    bool solvable() const { return !layers.back().empty(); }
};

struct EnumerationResult {
    std::vector<ExponentSet> solutions;
    bool truncated = false;
};

// Build the net bottom-up: layers 1..n-1 extend every occupied predecessor
// state by each multiplicity within its quadratic bound; layer n keeps only
// states whose closing multiplicity is exact. Throws resource_error when
// max_entries is exceeded.
Net build_net(const ScoreSet& scores, const NetBuildOptions& options = {});

// Back-chain from the lexicographically smallest final state of a
// FirstOnly net. Empty exactly when no valid exponent set exists.
std::optional<ExponentSet> reconstruct_one(const ScoreSet& scores);
std::optional<ExponentSet> reconstruct_one(const ScoreSet& scores,
                                           const NetBuildOptions& options,
                                           NetStats* stats = nullptr);

// Depth-first back-chaining from every final state of an EnumerateAll net,
// states in sorted order and entries in insertion order. Deterministic,
// duplicate-free; truncates at `limit` when given.
EnumerationResult enumerate_net(const Net& net, const ScoreSet& scores,
                                std::optional<std::size_t> limit = std::nullopt);
EnumerationResult enumerate_all(const ScoreSet& scores,
                                std::optional<std::size_t> limit = std::nullopt,
                                const NetBuildOptions& options = {});

// Exact per-layer admissible-state ceiling (2a+2)(a(2a+1)+1) for layer score a.
std::uint64_t layer_state_cap(Score alpha_k);

// Exact iteration ceiling of the capped grid scan; insertions never exceed it.
std::uint64_t loop_iteration_bound(const ScoreSet& scores);

}  // namespace scoreseq
