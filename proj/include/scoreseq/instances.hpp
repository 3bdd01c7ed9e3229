// Bundled score sets with one known-valid reconstruction each. The medium
// group is sized for the dynamic program, the large group for the recursive
// search; both double as regression fixtures and benchmark inputs.
#pragma once

#include "scoreseq/core.hpp"

namespace scoreseq {

struct ReferenceInstance {
    std::vector<Score> scores;
    std::vector<Count> exponents;  // known-valid reconstruction for `scores`
};

const std::vector<ReferenceInstance>& reference_medium_instances();
const std::vector<ReferenceInstance>& reference_large_instances();

}  // namespace scoreseq
