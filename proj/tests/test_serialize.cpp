#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scoreseq/bench.hpp"
#include "scoreseq/serialize.hpp"

#include <sstream>

using namespace scoreseq;

TEST_CASE("reconstruction payload round-trips through JSON") {
    ReconstructPayload payload{{0, 1, 3, 5}, {1, 1, 3, 1}, 6, "fast", 0.0125};
    auto j = to_json(payload);
    CHECK(j.at("players") == 6);
    auto back = reconstruct_payload_from_json(
        nlohmann::json::parse(j.dump()));
    CHECK(back == payload);
}

TEST_CASE("enumeration JSON carries count and truncation") {
    auto j = enumeration_json({2, 4, 7, 14}, {{2, 1, 10, 3}, {1, 2, 10, 4}}, true);
    auto parsed = nlohmann::json::parse(j.dump());
    CHECK(parsed.at("count") == 2);
    CHECK(parsed.at("truncated") == true);
    CHECK(parsed.at("solutions").size() == 2);
    CHECK(parsed == j);
}

TEST_CASE("integer list parsing") {
    CHECK(parse_int_list("2,4,7,14") == (std::vector<std::int64_t>{2, 4, 7, 14}));
    CHECK(parse_int_list("0") == std::vector<std::int64_t>{0});
    CHECK(parse_int_list("-3, 5") == (std::vector<std::int64_t>{-3, 5}));
    CHECK_THROWS_AS(parse_int_list("1,x,3"), input_error);
    CHECK_THROWS_AS(parse_int_list(""), input_error);
    CHECK_THROWS_AS(parse_int_list("1.5"), input_error);
    CHECK(format_int_list({1, 1, 3, 1}) == "1,1,3,1");
}

TEST_CASE("score-set sampling is deterministic and in range") {
    auto a = sample_score_set(7, 26, 1);
    auto b = sample_score_set(7, 26, 1);
    CHECK(a == b);
    CHECK(a.size() == 7);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(a.front() >= 0);
    CHECK(a.back() <= 26);
    for (std::size_t i = 1; i < a.size(); ++i) {
        CHECK(a[i] > a[i - 1]);
    }

    auto c = sample_score_set(7, 26, 2);
    CHECK(a != c);

    // Frozen at implementation time; a change here is a compatibility break.
    CHECK(a == (std::vector<Score>{0, 2, 3, 6, 9, 12, 20}));

    auto full = sample_score_set(5, 4, 9);
    CHECK(full == (std::vector<Score>{0, 1, 2, 3, 4}));

    CHECK_THROWS_AS(sample_score_set(5, 3, 1), input_error);
    CHECK_THROWS_AS(sample_score_set(0, 3, 1), input_error);
}

TEST_CASE("csv rows follow the fixed schema") {
    RunRecord record;
    record.suite = "tables";
    record.scores = {2, 4, 7, 14};
    record.algo = "dp";
    record.outcome = "found";
    record.elapsed_s = 0.25;
    record.states_or_nodes = 99;
    std::ostringstream out;
    write_csv_header(out);
    write_csv_row(out, record);
    CHECK(out.str() ==
          "suite,n,alpha_max,algo,elapsed_s,states_or_nodes,found\n"
          "tables,4,14,dp,0.25,99,true\n");
}

TEST_CASE("timed reconstruction records a verified result") {
    auto record = time_reconstruction("adhoc", ScoreSet{{0, 1, 3, 5}},
                                      BenchAlgo::Fast, 1);
    CHECK(record.outcome == "found");
    REQUIRE(record.exponents.has_value());
    CHECK(*record.exponents == (std::vector<Count>{1, 1, 3, 1}));
    CHECK(record.elapsed_s >= 0.0);

    auto dense = time_reconstruction("adhoc", ScoreSet{{2, 4, 7, 14}},
                                     BenchAlgo::DpDense, 1);
    CHECK(dense.outcome == "found");
    CHECK(dense.states_or_nodes > 0);
}

TEST_CASE("sweep instances have the advertised shape") {
    auto m = max_sweep_instance(4);
    CHECK(m.values() == (std::vector<Score>{4, 8, 12, 16, 20, 24, 28}));
    auto s = size_sweep_instance(1);
    CHECK(s.values() == std::vector<Score>{28});
    auto s14 = size_sweep_instance(14);
    CHECK(s14.size() == 14);
    CHECK(s14.max() == 28);
}
