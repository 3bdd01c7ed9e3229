// Feasibility calculus shared by both reconstruction algorithms: the
// quadratic upper bound on the next multiplicity, the exact final-layer
// solve, the per-layer (p, q) caps, and the minimal-fill lookahead test.
#pragma once

#include "scoreseq/core.hpp"

namespace scoreseq {

struct BoundResult {
    // Largest integer x with x^2 - (2(alpha-p)+1)x - 2(q - p(p-1)/2) <= 0,
    // or 0 when no x >= 1 qualifies.
    Count upper = 0;
    // Discriminant (2(alpha-p)+1)^2 + 8(q - p(p-1)/2), clamped to uint64;
    // never clamps for states reachable from an actual prefix.
    std::uint64_t delta = 0;
    // True when the real-valued bound is attained: upper solves the
    // quadratic exactly (delta is a perfect square with even h + sqrt).
    bool exact = false;
};

// Upper bound on x at a layer with score alpha_k from prefix state `state`.
// A state with q - p(p-1)/2 < 0 (or a negative discriminant) is infeasible,
// not an error: callers probe speculative states.
BoundResult upper_bound_xk(Score alpha_k, PrefixState state);

// Final-layer multiplicity: defined only when the bound is attained by an
// integer >= 1, i.e. the closing equality of the validity criterion holds.
std::optional<Count> exact_xn(Score alpha_n, PrefixState state);

// Per-layer reachability caps: p <= 2*alpha_k + 1, q <= alpha_k*(2*alpha_k + 1).
bool caps_ok(Score alpha_k, PrefixState state);

// Minimal-fill lookahead: assign x_k = candidate, then walk the remaining
// layers with every later multiplicity fixed to 1, failing as soon as some
// layer admits no multiplicity >= 1. A false result proves the prefix has
// no valid completion; true is necessary but not sufficient.
// `k` is 1-based; `state` is the prefix through layer k-1.
bool lookahead_feasible(std::size_t k, Count x_k, PrefixState state,
                        const ScoreSet& scores);

}  // namespace scoreseq
