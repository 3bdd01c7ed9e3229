#include "scoreseq/bench.hpp"

#include "scoreseq/fast_search.hpp"
#include "scoreseq/instances.hpp"
#include "scoreseq/net.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

namespace scoreseq {

namespace {

struct OneRun {
    std::optional<ExponentSet> result;
    std::int64_t work = 0;
    double elapsed_s = 0.0;
    bool resource_exhausted = false;
};

OneRun run_once(const ScoreSet& scores, BenchAlgo algo) {
    OneRun run;
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (algo) {
        case BenchAlgo::Dp:
        case BenchAlgo::DpDense: {
            NetStats stats;
            NetBuildOptions options;
            options.dense_scan = algo == BenchAlgo::DpDense;
            run.result = reconstruct_one(scores, options, &stats);
            run.work = stats.entries_inserted;
            break;
        }
        case BenchAlgo::Fast: {
            FastSearchStats stats;
            run.result = reconstruct_fast(scores, {}, &stats);
            run.work = stats.nodes_visited;
            break;
        }
        }
    } catch (const resource_error&) {
        run.resource_exhausted = true;
    }
    const auto stop = std::chrono::steady_clock::now();
    run.elapsed_s = std::chrono::duration<double>(stop - start).count();
    return run;
}

}  // namespace

std::string to_string(BenchAlgo algo) {
    switch (algo) {
    case BenchAlgo::Dp:
        return "dp";
    case BenchAlgo::DpDense:
        return "dp-dense";
    case BenchAlgo::Fast:
        return "fast";
    }
    return "unknown";
}

RunRecord time_reconstruction(const std::string& suite, const ScoreSet& scores,
                              BenchAlgo algo, int reps) {
    reps = std::max(reps, 1);
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(reps));
    OneRun last;
    for (int i = 0; i < reps; ++i) {
        last = run_once(scores, algo);
        times.push_back(last.elapsed_s);
    }
    std::sort(times.begin(), times.end());

    RunRecord record;
    record.suite = suite;
    record.scores = scores.values();
    record.algo = to_string(algo);
    record.elapsed_s = times[times.size() / 2];
    record.states_or_nodes = last.work;
    if (last.resource_exhausted) {
        record.outcome = "error";
    } else if (last.result.has_value()) {
        record.outcome = "found";
        if (!landau_check_grouped(scores, *last.result)) {
            record.outcome = "error";
        } else {
            record.exponents = last.result->values();
        }
    } else {
        record.outcome = "not-found";
    }
    return record;
}

ScoreSet max_sweep_instance(Score scale) {
    std::vector<Score> values;
    for (Score i = 1; i <= 7; ++i) {
        values.push_back(i * scale);
    }
    return ScoreSet{std::move(values)};
}

ScoreSet size_sweep_instance(std::size_t n) {
    std::vector<Score> values;
    for (std::size_t i = 1; i <= n; ++i) {
        values.push_back(static_cast<Score>(28 * i / n));
    }
    return ScoreSet{std::move(values)};
}

std::vector<RunRecord> run_suite(const std::string& suite, int reps) {
    std::vector<RunRecord> records;
    if (suite == "max-sweep") {
        for (Score scale : {4, 8, 16}) {
            const ScoreSet d = max_sweep_instance(scale);
            for (BenchAlgo algo : {BenchAlgo::Dp, BenchAlgo::DpDense, BenchAlgo::Fast}) {
                records.push_back(time_reconstruction(suite, d, algo, reps));
            }
        }
    } else if (suite == "size-sweep") {
        for (std::size_t n : {1u, 2u, 3u, 5u, 7u, 9u, 11u, 14u}) {
            const ScoreSet d = size_sweep_instance(n);
            for (BenchAlgo algo : {BenchAlgo::Dp, BenchAlgo::DpDense, BenchAlgo::Fast}) {
                records.push_back(time_reconstruction(suite, d, algo, reps));
            }
        }
    } else if (suite == "tables") {
        for (const auto& instance : reference_medium_instances()) {
            const ScoreSet d{instance.scores};
            records.push_back(time_reconstruction(suite, d, BenchAlgo::Dp, reps));
            records.push_back(time_reconstruction(suite, d, BenchAlgo::Fast, reps));
        }
        for (const auto& instance : reference_large_instances()) {
            const ScoreSet d{instance.scores};
            records.push_back(time_reconstruction(suite, d, BenchAlgo::Fast, reps));
        }
    } else {
        throw input_error("unknown bench suite: " + suite);
    }
    return records;
}

void write_csv_header(std::ostream& out) {
    out << "suite,n,alpha_max,algo,elapsed_s,states_or_nodes,found\n";
}

void write_csv_row(std::ostream& out, const RunRecord& record) {
    out << record.suite << ',' << record.scores.size() << ','
        << record.scores.back() << ',' << record.algo << ',' << record.elapsed_s
        << ',' << record.states_or_nodes << ','
        << (record.found() ? "true" : "false") << '\n';
}

}  // namespace scoreseq
