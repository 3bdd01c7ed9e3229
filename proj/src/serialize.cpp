#include "scoreseq/serialize.hpp"

#include <random>
#include <set>
#include <sstream>

namespace scoreseq {

nlohmann::json to_json(const ReconstructPayload& payload) {
    return nlohmann::json{{"scores", payload.scores},
                          {"exponents", payload.exponents},
                          {"players", payload.players},
                          {"algorithm", payload.algorithm},
                          {"elapsed_s", payload.elapsed_s}};
}

ReconstructPayload reconstruct_payload_from_json(const nlohmann::json& j) {
    ReconstructPayload payload;
    payload.scores = j.at("scores").get<std::vector<Score>>();
    payload.exponents = j.at("exponents").get<std::vector<Count>>();
    payload.players = j.at("players").get<Count>();
    payload.algorithm = j.at("algorithm").get<std::string>();
    payload.elapsed_s = j.at("elapsed_s").get<double>();
    return payload;
}

nlohmann::json enumeration_json(const std::vector<Score>& scores,
                                const std::vector<std::vector<Count>>& solutions,
                                bool truncated) {
    return nlohmann::json{{"scores", scores},
                          {"solutions", solutions},
                          {"count", solutions.size()},
                          {"truncated", truncated}};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw input_error("not an integer: '" + token + "'");
        }
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
            ++used;
        }
        if (used != token.size()) {
            throw input_error("not an integer: '" + token + "'");
        }
        values.push_back(value);
    }
    if (values.empty()) {
        throw input_error("expected a comma-separated integer list");
    }
    return values;
}

std::string format_int_list(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(values[i]);
    }
    return out;
}

namespace {

// Unbiased [0, bound) without distribution classes, whose output is
// implementation-defined; this pins the byte-for-byte sample per seed.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v = rng();
    while (v >= limit) {
        v = rng();
    }
    return v % bound;
}

}  // namespace

std::vector<Score> sample_score_set(std::size_t n, Score alpha_max,
                                    std::uint64_t seed) {
    if (alpha_max < 0 || alpha_max > kMaxScore) {
        throw input_error("alpha_max out of range");
    }
    const std::uint64_t range = static_cast<std::uint64_t>(alpha_max) + 1;
    if (n == 0 || n > range) {
        throw input_error("cannot sample " + std::to_string(n) +
                          " distinct scores from [0, " +
                          std::to_string(alpha_max) + "]");
    }
    std::mt19937_64 rng(seed);
    // Floyd's distinct sampler: n draws, no rejection on collisions.
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = range - n; j < range; ++j) {
        std::uint64_t t = bounded(rng, j + 1);
        if (!chosen.insert(t).second) {
            chosen.insert(j);
        }
    }
    return {chosen.begin(), chosen.end()};
}

}  // namespace scoreseq
