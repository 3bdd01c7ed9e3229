#include "scoreseq/core.hpp"

#include <cmath>
#include <numeric>

namespace scoreseq {

ScoreSet::ScoreSet(std::vector<Score> scores) : scores_(std::move(scores)) {
    if (scores_.empty()) {
        throw input_error("score set must be nonempty");
    }
    if (scores_.front() < 0) {
        throw input_error("scores must be nonnegative");
    }
    for (std::size_t i = 1; i < scores_.size(); ++i) {
        if (scores_[i] <= scores_[i - 1]) {
            throw input_error("scores must be strictly increasing");
        }
    }
    if (scores_.back() > kMaxScore) {
        throw input_error("score " + std::to_string(scores_.back()) +
                          " exceeds the supported range (2^30)");
    }
}

ExponentSet::ExponentSet(std::vector<Count> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) {
        throw input_error("exponent set must be nonempty");
    }
    for (Count x : exponents_) {
        if (x < 1) {
            throw input_error("exponents must be positive");
        }
    }
}

Count ExponentSet::players() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), Count{0});
}

ScoreSequence ScoreSequence::verified(ScoreSet scores, ExponentSet exponents) {
    if (!landau_check_grouped(scores, exponents)) {
        throw input_error("scores and exponents do not form a valid score sequence");
    }
    return ScoreSequence(std::move(scores), std::move(exponents));
}

std::vector<Score> expand(const ScoreSet& scores, const ExponentSet& exponents) {
    if (scores.size() != exponents.size()) {
        throw input_error("score set and exponent set lengths differ");
    }
    Count total = exponents.players();
    if (total > 100'000'000) {
        throw input_error("expanded sequence would exceed 10^8 entries");
    }
    std::vector<Score> seq;
    seq.reserve(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < scores.size(); ++i) {
        seq.insert(seq.end(), static_cast<std::size_t>(exponents.values()[i]),
                   scores.values()[i]);
    }
    return seq;
}

bool landau_check(std::span<const Score> seq) {
    if (seq.empty()) {
        throw input_error("sequence must be nonempty");
    }
    Count sum = 0;
    for (std::size_t k = 1; k <= seq.size(); ++k) {
        Score s = seq[k - 1];
        if (s < 0) {
            throw input_error("sequence entries must be nonnegative");
        }
        if (k > 1 && s < seq[k - 2]) {
            throw input_error("sequence must be nondecreasing");
        }
        sum += s;
        Count needed = static_cast<Count>(k) * (static_cast<Count>(k) - 1) / 2;
        if (sum < needed) {
            return false;
        }
    }
    Count m = static_cast<Count>(seq.size());
    return sum == m * (m - 1) / 2;
}

GroupedCheck landau_check_grouped_detail(const ScoreSet& scores,
                                         const ExponentSet& exponents) {
    if (scores.size() != exponents.size()) {
        throw input_error("score set and exponent set lengths differ");
    }
    Count players = 0;
    Count total = 0;
    for (std::size_t k = 1; k <= scores.size(); ++k) {
        players += exponents.values()[k - 1];
        total += scores.values()[k - 1] * exponents.values()[k - 1];
        if (total < players * (players - 1) / 2) {
            return {false, k, false};
        }
    }
    if (total != players * (players - 1) / 2) {
        return {false, scores.size(), true};
    }
    return {true, 0, false};
}

bool landau_check_grouped(const ScoreSet& scores, const ExponentSet& exponents) {
    return landau_check_grouped_detail(scores, exponents).valid;
}

bool landau_check_grouped(const ScoreSet& scores, std::span<const Count> exponents) {
    if (scores.size() != exponents.size()) {
        throw input_error("score set and exponent set lengths differ");
    }
    Count players = 0;
    Count total = 0;
    for (std::size_t k = 0; k < scores.size(); ++k) {
        players += exponents[k];
        total += scores.values()[k] * exponents[k];
        if (total < players * (players - 1) / 2) {
            return false;
        }
    }
    return total == players * (players - 1) / 2;
}

std::uint64_t isqrt(std::uint64_t x) {
    if (x == 0) {
        return 0;
    }
    // Double sqrt as a seed, then exact integer correction.
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r > x / r) {
        --r;
    }
    while ((r + 1) <= x / (r + 1)) {
        ++r;
    }
    return r;
}

bool is_perfect_square(std::uint64_t x) {
    std::uint64_t r = isqrt(x);
    return r * r == x;
}

}  // namespace scoreseq
