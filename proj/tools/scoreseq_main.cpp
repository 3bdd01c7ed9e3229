// Command-line surface: verify, reconstruct, enumerate, oracle, reid-scan,
// bench, gen. Exit codes: 0 found/valid, 1 not-found/invalid, 2 usage or
// parse error, 3 resource budget exceeded.

#include "scoreseq/bench.hpp"
#include "scoreseq/core.hpp"
#include "scoreseq/fast_search.hpp"
#include "scoreseq/instances.hpp"
#include "scoreseq/net.hpp"
#include "scoreseq/oracle.hpp"
#include "scoreseq/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

using scoreseq::Count;
using scoreseq::Score;

scoreseq::ScoreSet parse_scores(const std::string& text) {
    return scoreseq::ScoreSet{scoreseq::parse_int_list(text)};
}

scoreseq::ExponentSet parse_exponents(const std::string& text) {
    return scoreseq::ExponentSet{scoreseq::parse_int_list(text)};
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

int cmd_verify(const std::string& scores_text, const std::string& exponents_text) {
    const auto scores = parse_scores(scores_text);
    const auto exponents = parse_exponents(exponents_text);
    const auto check = scoreseq::landau_check_grouped_detail(scores, exponents);
    if (check.valid) {
        std::cout << "valid\n";
        return kExitFound;
    }
    if (check.total_mismatch) {
        std::cout << "invalid: total score differs from players*(players-1)/2\n";
    } else {
        std::cout << "invalid at k=" << check.violation_k << "\n";
    }
    return kExitNotFound;
}

std::optional<scoreseq::ExponentSet> reconstruct_with(const scoreseq::ScoreSet& scores,
                                                      const std::string& algo) {
    if (algo == "fast") {
        return scoreseq::reconstruct_fast(scores);
    }
    return scoreseq::reconstruct_one(scores);
}

int emit_reconstruction(const scoreseq::ScoreSet& scores, const std::string& algo,
                        const std::string& format) {
    Timer timer;
    const auto result = reconstruct_with(scores, algo);
    const double elapsed = timer.seconds();
    if (!result) {
        if (format == "json") {
            std::cout << nlohmann::json{{"scores", scores.values()},
                                        {"algorithm", algo},
                                        {"found", false},
                                        {"elapsed_s", elapsed}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "no valid exponent set exists\n";
        }
        return kExitNotFound;
    }
    // Belt and braces: nothing is emitted without re-verification.
    const auto sequence = scoreseq::ScoreSequence::verified(scores, *result);
    if (format == "json") {
        scoreseq::ReconstructPayload payload{scores.values(), result->values(),
                                             result->players(), algo, elapsed};
        std::cout << scoreseq::to_json(payload).dump() << "\n";
    } else {
        std::cout << scoreseq::format_int_list(sequence.exponents().values()) << "\n";
    }
    return kExitFound;
}

int cmd_reconstruct(const std::string& scores_text, const std::string& algo,
                    const std::string& format, const std::string& batch_path) {
    if (batch_path.empty()) {
        return emit_reconstruction(parse_scores(scores_text), algo, format);
    }
    std::ifstream file;
    std::istream* in = &std::cin;
    if (batch_path != "-") {
        file.open(batch_path);
        if (!file) {
            std::cerr << "cannot open " << batch_path << "\n";
            return kExitUsage;
        }
        in = &file;
    }
    int worst = kExitFound;
    std::string line;
    while (std::getline(*in, line)) {
        if (line.empty()) {
            continue;
        }
        worst = std::max(worst, emit_reconstruction(parse_scores(line), algo, format));
    }
    return worst;
}

int cmd_enumerate(const std::string& scores_text, std::int64_t limit,
                  const std::string& format) {
    const auto scores = parse_scores(scores_text);
    std::optional<std::size_t> cap;
    if (limit >= 0) {
        cap = static_cast<std::size_t>(limit);
    }
    const auto result = scoreseq::enumerate_all(scores, cap);
    std::vector<std::vector<Count>> rows;
    rows.reserve(result.solutions.size());
    for (const auto& e : result.solutions) {
        rows.push_back(e.values());
    }
    if (format == "json") {
        std::cout << scoreseq::enumeration_json(scores.values(), rows,
                                                result.truncated)
                         .dump()
                  << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << scoreseq::format_int_list(row) << "\n";
        }
        std::cout << "count: " << rows.size() << "\n";
        if (result.truncated) {
            std::cout << "truncated: true\n";
        }
    }
    return rows.empty() ? kExitNotFound : kExitFound;
}

int cmd_oracle(const std::string& scores_text) {
    const auto report = scoreseq::brute_force_all(parse_scores(scores_text));
    for (const auto& e : report.solutions) {
        std::cout << scoreseq::format_int_list(e.values()) << "\n";
    }
    std::cout << "count: " << report.solutions.size()
              << " nodes: " << report.nodes_visited << "\n";
    return report.solutions.empty() ? kExitNotFound : kExitFound;
}

unsigned capped_workers(unsigned requested) {
    // SCORESEQ_WORKERS, when set, caps every fan-out in this process.
    if (const char* cap_text = std::getenv("SCORESEQ_WORKERS")) {
        try {
            const unsigned cap = static_cast<unsigned>(std::stoul(cap_text));
            if (cap >= 1) {
                return std::min(requested, cap);
            }
        } catch (const std::exception&) {
        }
    }
    return requested;
}

int cmd_reid_scan(Score max_score, const std::string& engine, unsigned workers,
                  Score guard) {
    const auto report = scoreseq::reid_scan(
        max_score,
        engine == "fast" ? scoreseq::ReidEngine::Fast : scoreseq::ReidEngine::Dp,
        capped_workers(workers), guard);
    const auto solved = report.subsets_checked -
                        static_cast<std::int64_t>(report.failures.size());
    std::cout << solved << "/" << report.subsets_checked << " ok\n";
    for (const auto& d : report.failures) {
        std::cout << "failed: " << scoreseq::format_int_list(d.values()) << "\n";
    }
    return report.all_ok() ? kExitFound : kExitNotFound;
}

int cmd_bench(const std::string& suite, const std::string& out_path, int reps) {
    const auto records = scoreseq::run_suite(suite, reps);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitUsage;
        }
        out = &file;
    }
    scoreseq::write_csv_header(*out);
    for (const auto& record : records) {
        scoreseq::write_csv_row(*out, record);
    }
    return kExitFound;
}

int cmd_gen(std::size_t n, Score alpha_max, std::uint64_t seed) {
    const auto values = scoreseq::sample_score_set(n, alpha_max, seed);
    std::cout << scoreseq::format_int_list(values) << "\n";
    return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tournament score-sequence reconstruction from score sets"};
    app.require_subcommand(1);

    std::string scores_text;
    std::string exponents_text;
    std::string algo = "dp";
    std::string format = "plain";
    std::string batch_path;
    std::string engine = "dp";
    std::string suite = "tables";
    std::string out_path;
    std::int64_t limit = -1;
    int reps = 3;
    Score max_score = 10;
    Score scan_guard = 12;
    unsigned workers = 1;
    std::size_t gen_n = 7;
    Score gen_alpha_max = 26;
    std::uint64_t gen_seed = 1;

    auto* verify = app.add_subcommand("verify", "check a (scores, exponents) pair");
    verify->add_option("scores,--scores", scores_text,
                       "comma-separated distinct scores");
    verify->add_option("exponents,--exponents", exponents_text,
                       "comma-separated multiplicities");

    auto* reconstruct =
        app.add_subcommand("reconstruct", "find one exponent set for a score set");
    reconstruct->add_option("scores,--scores", scores_text,
                            "comma-separated distinct scores");
    reconstruct->add_option("--algo", algo, "dp|fast")
        ->check(CLI::IsMember({"dp", "fast"}));
    reconstruct->add_option("--format", format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));
    reconstruct->add_option("--batch", batch_path,
                            "file with one score set per line ('-' for stdin)");

    auto* enumerate =
        app.add_subcommand("enumerate", "list every exponent set for a score set");
    enumerate->add_option("scores,--scores", scores_text,
                          "comma-separated distinct scores");
    enumerate->add_option("--limit", limit, "stop after this many solutions");
    enumerate->add_option("--format", format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));

    auto* oracle =
        app.add_subcommand("oracle", "brute-force all exponent sets (small inputs)");
    oracle->add_option("scores,--scores", scores_text,
                       "comma-separated distinct scores");

    auto* reid = app.add_subcommand(
        "reid-scan", "reconstruct every nonempty subset of {0..max}");
    reid->add_option("--max", max_score, "largest score in the universe");
    reid->add_option("--engine", engine, "dp|fast")
        ->check(CLI::IsMember({"dp", "fast"}));
    reid->add_option("--workers", workers, "worker threads");
    reid->add_option("--guard", scan_guard,
                     "largest universe the scan will accept");

    auto* bench = app.add_subcommand("bench", "timed reconstruction suites (CSV)");
    bench->add_option("--suite", suite, "max-sweep|size-sweep|tables")
        ->check(CLI::IsMember({"max-sweep", "size-sweep", "tables"}));
    bench->add_option("--out", out_path, "CSV output path ('-' or empty for stdout)");
    bench->add_option("--reps", reps, "repetitions per timing (median)");

    auto* gen = app.add_subcommand("gen", "sample a random score set");
    gen->add_option("--n", gen_n, "number of distinct scores");
    gen->add_option("--alpha-max", gen_alpha_max, "largest allowed score");
    gen->add_option("--seed", gen_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (scores_text.empty() || exponents_text.empty()) {
                std::cerr << "verify needs scores and exponents\n";
                return kExitUsage;
            }
            return cmd_verify(scores_text, exponents_text);
        }
        if (reconstruct->parsed()) {
            if (scores_text.empty() && batch_path.empty()) {
                std::cerr << "reconstruct needs a score set or --batch\n";
                return kExitUsage;
            }
            return cmd_reconstruct(scores_text, algo, format, batch_path);
        }
        if (enumerate->parsed()) {
            if (scores_text.empty()) {
                std::cerr << "enumerate needs a score set\n";
                return kExitUsage;
            }
            return cmd_enumerate(scores_text, limit, format);
        }
        if (oracle->parsed()) {
            if (scores_text.empty()) {
                std::cerr << "oracle needs a score set\n";
                return kExitUsage;
            }
            return cmd_oracle(scores_text);
        }
        if (reid->parsed()) {
            return cmd_reid_scan(max_score, engine, workers, scan_guard);
        }
        if (bench->parsed()) {
            return cmd_bench(suite, out_path, reps);
        }
        if (gen->parsed()) {
            return cmd_gen(gen_n, gen_alpha_max, gen_seed);
        }
    } catch (const scoreseq::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const scoreseq::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
