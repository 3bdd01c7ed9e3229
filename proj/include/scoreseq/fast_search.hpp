// Recursive reconstruction for large score sets: depth-first search over
// the first n-2 multiplicities, descending only where the shifted residue
// list says a closing residue is still reachable, finished by a closed-form
// solve for the last two multiplicities.
#pragma once

#include "scoreseq/core.hpp"
#include "scoreseq/modular.hpp"

#include <utility>

namespace scoreseq {

struct FastSearchOptions {
    bool use_potential = true;   // residue-divisibility prune (speed only)
    bool use_lookahead = true;   // minimal-fill prune (speed only)
    // Candidate evaluations allowed before giving up with resource_error;
    // the search has no proven worst-case bound.
    std::int64_t node_budget = 10'000'000;
};

struct FastSearchStats {
    std::int64_t nodes_visited = 0;  // recursion entries + candidates examined
    std::int64_t end_calls = 0;
};

// Closing solve: starting from the residue family f == f_index (mod M),
// scan f upward, derive the next-to-last multiplicity from the closing
// equality, and accept when the last multiplicity is exact. `state` is the
// prefix through layer n-2 ((0,0) when n == 2). Empty when the family
// yields nothing.
std::optional<std::pair<Count, Count>> end_phase(const ModularContext& ctx,
                                                 Count f_index,
                                                 PrefixState state,
                                                 const ScoreSet& scores);

// First reconstruction in deterministic order (ascending multiplicity,
// ascending residue index, ascending f). Empty exactly when no valid
// exponent set exists. n == 1 is answered in closed form (x = 2*alpha + 1).
std::optional<ExponentSet> reconstruct_fast(const ScoreSet& scores,
                                            const FastSearchOptions& options = {},
                                            FastSearchStats* stats = nullptr);

}  // namespace scoreseq
