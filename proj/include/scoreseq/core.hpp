// Domain types for tournament score-set reconstruction: score sets,
// exponent (multiplicity) sets, prefix states, and the two Landau
// validity checks that every other module treats as ground truth.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace scoreseq {

using Score = std::int64_t;
using Count = std::int64_t;

// Largest accepted score value. Keeps every prefix total and every
// discriminant computed from in-range states within 64/128-bit reach.
inline constexpr Score kMaxScore = Score{1} << 30;

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Configurable work/memory budget exceeded. Distinct from input_error and
// from "no solution exists": callers can retry with a bigger budget.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strictly increasing nonnegative scores (the distinct out-degrees).
class ScoreSet {
public:
    explicit ScoreSet(std::vector<Score> scores);

    const std::vector<Score>& values() const { return scores_; }
    std::size_t size() const { return scores_.size(); }
    Score max() const { return scores_.back(); }

    // 1-based layer accessor with alpha(0) == 0, matching the DP layering.
    Score alpha(std::size_t layer) const { return layer == 0 ? 0 : scores_[layer - 1]; }

    bool operator==(const ScoreSet&) const = default;

private:
    std::vector<Score> scores_;
};

// Positive multiplicities; pairs with a ScoreSet of the same length.
class ExponentSet {
public:
    explicit ExponentSet(std::vector<Count> exponents);

    const std::vector<Count>& values() const { return exponents_; }
    std::size_t size() const { return exponents_.size(); }
    Count players() const;  // sum of multiplicities

    bool operator==(const ExponentSet&) const = default;

private:
    std::vector<Count> exponents_;
};

// Accumulated prefix over the first k distinct scores:
// players = sum x_i, score_sum = sum alpha_i * x_i.
struct PrefixState {
    Count players = 0;
    Count score_sum = 0;

    auto operator<=>(const PrefixState&) const = default;
};

// Detail result for the grouped check; violation_k is 1-based, 0 when valid.
struct GroupedCheck {
    bool valid = false;
    std::size_t violation_k = 0;
    bool total_mismatch = false;  // prefix inequalities held but the final total is off
};

// A (scores, exponents) pair whose validity has been checked, not assumed.
class ScoreSequence {
public:
    static ScoreSequence verified(ScoreSet scores, ExponentSet exponents);

    const ScoreSet& scores() const { return scores_; }
    const ExponentSet& exponents() const { return exponents_; }

private:
    ScoreSequence(ScoreSet s, ExponentSet e)
        : scores_(std::move(s)), exponents_(std::move(e)) {}
    ScoreSet scores_;
    ExponentSet exponents_;
};

// Flatten (scores, exponents) into the nondecreasing per-player sequence.
// Guarded against absurd expansions (sum of multiplicities > 10^8).
std::vector<Score> expand(const ScoreSet& scores, const ExponentSet& exponents);

// Classic prefix-sum validity check on a nondecreasing sequence:
// every prefix of size k sums to at least k(k-1)/2, with equality overall.
bool landau_check(std::span<const Score> seq);

// Same criterion evaluated on the grouped (scores, exponents) form;
// agrees with landau_check(expand(...)) on all inputs. The span overload
// assumes positive entries and exists for allocation-free inner loops.
bool landau_check_grouped(const ScoreSet& scores, const ExponentSet& exponents);
bool landau_check_grouped(const ScoreSet& scores, std::span<const Count> exponents);
GroupedCheck landau_check_grouped_detail(const ScoreSet& scores,
                                         const ExponentSet& exponents);

// Exact integer floor square root; no floating point on the result path.
std::uint64_t isqrt(std::uint64_t x);
bool is_perfect_square(std::uint64_t x);

}  // namespace scoreseq
