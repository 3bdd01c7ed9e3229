#include "scoreseq/modular.hpp"

#include <numeric>

namespace scoreseq {

namespace {

Count mod_nonneg(Count value, Count m) {
    Count r = value % m;
    return r < 0 ? r + m : r;
}

}  // namespace

ModularContext build_context(const ScoreSet& scores) {
    const std::size_t n = scores.size();
    if (n < 2) {
        throw input_error("modular context requires at least two scores");
    }
    const Score alpha_n = scores.alpha(n);
    ModularContext ctx;
    ctx.modulus = alpha_n - scores.alpha(n - 1);

    ctx.sol.reserve(static_cast<std::size_t>(ctx.modulus));
    for (Count i = 0; i < ctx.modulus; ++i) {
        ctx.sol.push_back(mod_nonneg((2 * alpha_n + 1 - 2 * i) * i, ctx.modulus));
    }

    ctx.grp.reserve(n - 1);
    for (std::size_t i = 1; i <= n - 1; ++i) {
        ctx.grp.push_back(mod_nonneg(alpha_n - scores.alpha(i), ctx.modulus));
    }

    // Suffix gcd chain with the modulus as the seed.
    ctx.mingen.assign(n - 1, 0);
    Count acc = ctx.modulus;
    for (std::size_t i = n - 1; i >= 1; --i) {
        acc = std::gcd(ctx.grp[i - 1], acc);
        ctx.mingen[i - 1] = acc;
    }
    return ctx;
}

void shift_sol_into(const ModularContext& ctx, Count sum, std::vector<Count>& out) {
    out.resize(ctx.sol.size());
    for (std::size_t i = 0; i < ctx.sol.size(); ++i) {
        out[i] = mod_nonneg(ctx.sol[i] - sum, ctx.modulus);
    }
}

std::vector<Count> shift_sol(const ModularContext& ctx, Count sum) {
    std::vector<Count> out;
    shift_sol_into(ctx, sum, out);
    return out;
}

bool potential(const std::vector<Count>& shifted, Count m) {
    for (Count s : shifted) {
        if (m == 0 ? s == 0 : s % m == 0) {
            return true;
        }
    }
    return false;
}

std::optional<Count> check_f_witness(const ScoreSet& scores,
                                     const ExponentSet& exponents) {
    const std::size_t n = scores.size();
    if (n != exponents.size()) {
        throw input_error("score set and exponent set lengths differ");
    }
    const Score alpha_n = scores.alpha(n);
    Count target = 0;
    for (std::size_t i = 1; i < n; ++i) {
        target += (alpha_n - scores.alpha(i)) * exponents.values()[i - 1];
    }
    // n == 1 has the empty sum 0, witnessed by f = 0.
    for (Count f = 0; 2 * f <= 2 * alpha_n + 1; ++f) {
        if ((2 * alpha_n + 1 - 2 * f) * f == target) {
            return f;
        }
    }
    return std::nullopt;
}

}  // namespace scoreseq
