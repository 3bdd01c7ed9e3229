// Wall-clock benchmark harness: timed reconstruction runs over fixed
// instance families, emitted as CSV rows.
#pragma once

#include "scoreseq/core.hpp"

#include <iosfwd>
#include <string>

namespace scoreseq {

enum class BenchAlgo { Dp, DpDense, Fast };

std::string to_string(BenchAlgo algo);

struct RunRecord {
    std::string suite;
    std::vector<Score> scores;
    std::string algo;
    std::string outcome;  // found | not-found | error
    std::optional<std::vector<Count>> exponents;
    double elapsed_s = 0.0;
    std::int64_t states_or_nodes = 0;

    bool found() const { return outcome == "found"; }
};

// Median-of-`reps` timing of one reconstruction; found results are
// re-verified before being recorded.
RunRecord time_reconstruction(const std::string& suite, const ScoreSet& scores,
                              BenchAlgo algo, int reps = 3);

// Scaled 7-element family {s, 2s, ..., 7s} for the max-element sweep.
ScoreSet max_sweep_instance(Score scale);
// n values spread over [0, 28] for the set-size sweep.
ScoreSet size_sweep_instance(std::size_t n);

// suite is one of: max-sweep, size-sweep, tables.
std::vector<RunRecord> run_suite(const std::string& suite, int reps = 3);

// CSV schema: suite,n,alpha_max,algo,elapsed_s,states_or_nodes,found
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const RunRecord& record);

}  // namespace scoreseq
