#include "scoreseq/bounds.hpp"

#include <cassert>
#include <limits>

namespace scoreseq {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// Floor square root for 128-bit operands; seeds from the 64-bit isqrt.
u128 isqrt128(u128 x) {
    if (x <= std::numeric_limits<std::uint64_t>::max()) {
        return isqrt(static_cast<std::uint64_t>(x));
    }
    u128 r = u128{isqrt(static_cast<std::uint64_t>(x >> 64))} << 32;
    // Newton steps converge fast from this seed; finish with exact correction.
    for (int i = 0; i < 4; ++i) {
        r = (r + x / r) / 2;
    }
    while (r * r > x) {
        --r;
    }
    while ((r + 1) * (r + 1) <= x) {
        ++r;
    }
    return r;
}

// Quadratic x^2 - h*x - 2c evaluated exactly.
i128 quadratic(i128 h, i128 c, i128 x) { return x * x - h * x - 2 * c; }

std::uint64_t clamp_u64(i128 v) {
    if (v < 0) {
        return 0;
    }
    if (v > i128{std::numeric_limits<std::uint64_t>::max()}) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(v);
}

}  // namespace

BoundResult upper_bound_xk(Score alpha_k, PrefixState state) {
    const i128 h = 2 * (i128{alpha_k} - state.players) + 1;
    const i128 c = i128{state.score_sum} - i128{state.players} * (state.players - 1) / 2;
    const i128 delta = h * h + 8 * c;
    BoundResult r;
    r.delta = clamp_u64(delta);
    if (c < 0 || delta < 0) {
        return r;  // state violates the side condition: infeasible
    }
    const i128 root = static_cast<i128>(isqrt128(static_cast<u128>(delta)));
    i128 cand = (h + root) / 2;  // h + root >= 0 because root >= |h| when c >= 0
    // Never trust rounding alone: settle the bound by direct evaluation.
    while (quadratic(h, c, cand + 1) <= 0) {
        ++cand;
    }
    while (cand >= 1 && quadratic(h, c, cand) > 0) {
        --cand;
    }
    if (cand < 1) {
        return r;
    }
    r.upper = static_cast<Count>(cand);
    r.exact = quadratic(h, c, cand) == 0;
    return r;
}

std::optional<Count> exact_xn(Score alpha_n, PrefixState state) {
    const i128 h = 2 * (i128{alpha_n} - state.players) + 1;
    const i128 c = i128{state.score_sum} - i128{state.players} * (state.players - 1) / 2;
    if (c < 0) {
        return std::nullopt;
    }
    const u128 delta = static_cast<u128>(h * h + 8 * c);
    const u128 root = isqrt128(delta);
    if (root * root != delta) {
        return std::nullopt;
    }
    // h is odd, so delta and its root are odd and h + root is even.
    assert((delta & 1) == 1 && (root & 1) == 1);
    const i128 x = (h + static_cast<i128>(root)) / 2;
    if (x < 1) {
        return std::nullopt;
    }
    return static_cast<Count>(x);
}

bool caps_ok(Score alpha_k, PrefixState state) {
    return state.players <= 2 * alpha_k + 1 &&
           state.score_sum <= alpha_k * (2 * alpha_k + 1);
}

bool lookahead_feasible(std::size_t k, Count x_k, PrefixState state,
                        const ScoreSet& scores) {
    const std::size_t n = scores.size();
    PrefixState probe{state.players + x_k,
                      state.score_sum + x_k * scores.alpha(k)};
    for (std::size_t i = k + 1; i <= n; ++i) {
        if (upper_bound_xk(scores.alpha(i), probe).upper < 1) {
            return false;
        }
        // Commit the minimal multiplicity for layer i and move on.
        probe.players += 1;
        probe.score_sum += scores.alpha(i);
    }
    return true;
}

}  // namespace scoreseq
