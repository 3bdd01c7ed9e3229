// Residue-class machinery behind the fast search: the attainable
// right-hand-side residues modulo M = alpha_n - alpha_{n-1}, per-score
// residues, and the gcd suffix chain generated by the still-unassigned
// multiplicities. Supplies the O(M) completability test and the
// closing-equality witness scan.
#pragma once

#include "scoreseq/core.hpp"

namespace scoreseq {

struct ModularContext {
    Count modulus = 0;         // M = alpha_n - alpha_{n-1}, >= 1
    std::vector<Count> sol;    // sol[i] = ((2*alpha_n + 1 - 2i) * i) mod M, i in [0, M)
    std::vector<Count> grp;    // grp[i-1] = (alpha_n - alpha_i) mod M, i in [1, n-1]
    std::vector<Count> mingen; // mingen[i-1] = gcd(grp[i-1], ..., grp[n-2], M)

    // 1-based accessors matching the layer indexing.
    Count g(std::size_t i) const { return grp[i - 1]; }
    Count m(std::size_t i) const { return mingen[i - 1]; }
};

// Requires n >= 2 (the modulus is the gap between the top two scores).
ModularContext build_context(const ScoreSet& scores);

// Shift every attainable residue by an accumulated sum of g_i * x_i,
// keeping canonical nonnegative representatives and index positions
// (index i still identifies the f == i (mod M) family).
std::vector<Count> shift_sol(const ModularContext& ctx, Count sum);
void shift_sol_into(const ModularContext& ctx, Count sum, std::vector<Count>& out);

// True when some shifted residue is divisible by m: the necessary condition
// for the remaining multiplicities to reach a closing residue. The m == 0
// branch mirrors the defining recurrence but is unreachable (M >= 1 forces
// every mingen value >= 1).
bool potential(const std::vector<Count>& shifted, Count m);

// Witness for the closing equality: the f <= (2*alpha_n + 1)/2 with
// (2*alpha_n + 1 - 2f) * f == sum_{i<n} (alpha_n - alpha_i) * x_i, found by
// direct scan. Every valid pair has one; n == 1 is vacuous with f = 0.
std::optional<Count> check_f_witness(const ScoreSet& scores,
                                     const ExponentSet& exponents);

}  // namespace scoreseq
