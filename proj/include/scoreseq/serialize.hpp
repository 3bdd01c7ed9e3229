// JSON result shapes for the command-line surface, kept here so tests can
// round-trip them without spawning processes.
#pragma once

#include "scoreseq/core.hpp"

#include <string>

#include <json.hpp>

namespace scoreseq {

struct ReconstructPayload {
    std::vector<Score> scores;
    std::vector<Count> exponents;
    Count players = 0;
    std::string algorithm;
    double elapsed_s = 0.0;

    bool operator==(const ReconstructPayload&) const = default;
};

nlohmann::json to_json(const ReconstructPayload& payload);
ReconstructPayload reconstruct_payload_from_json(const nlohmann::json& j);

nlohmann::json enumeration_json(const std::vector<Score>& scores,
                                const std::vector<std::vector<Count>>& solutions,
                                bool truncated);

// Comma-separated integer list; the CLI's only scalar input format.
std::vector<std::int64_t> parse_int_list(const std::string& text);
std::string format_int_list(const std::vector<std::int64_t>& values);

// n distinct values sampled uniformly from [0, alpha_max], ascending.
// Deterministic for a fixed seed across platforms.
std::vector<Score> sample_score_set(std::size_t n, Score alpha_max,
                                    std::uint64_t seed);

}  // namespace scoreseq
