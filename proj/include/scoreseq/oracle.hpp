// Brute-force ground truth for small score sets, plus the desk-scale
// all-subsets reconstructibility scan. Shares no feasibility code with the
// reconstruction algorithms: enumeration is capped raw search filtered by
// the grouped validity check alone.
#pragma once

#include "scoreseq/core.hpp"

#include <cstddef>
#include <functional>

namespace scoreseq {

struct OracleReport {
    ScoreSet score_set;
    std::vector<ExponentSet> solutions;  // lexicographically sorted, duplicate-free
    std::int64_t nodes_visited = 0;
};

// Exhaustive search over x_i in [1, 2*alpha_i + 1], pruning only prefixes
// whose player count exceeds 2*alpha_k + 1, keeping sequences that pass
// landau_check_grouped. Rejects inputs whose raw space prod(2*alpha_i + 1)
// exceeds 10^8.
OracleReport brute_force_all(const ScoreSet& scores);

enum class ReidEngine { Dp, Fast };

struct ReidScanReport {
    std::int64_t subsets_checked = 0;
    std::vector<ScoreSet> failures;  // expected empty
    bool all_ok() const { return failures.empty(); }
};

// Runs a reconstruction over every nonempty subset of {0..max_score} and
// reports any subset for which no exponent set was found. Work may fan out
// across `workers` threads; the report is merged in subset order.
// Universes beyond `guard` are rejected (2^(max+1)-1 subsets add up fast);
// raise it deliberately when a bigger sweep is wanted.
ReidScanReport reid_scan(Score max_score, ReidEngine engine = ReidEngine::Dp,
                         unsigned workers = 1, Score guard = 12);

}  // namespace scoreseq
