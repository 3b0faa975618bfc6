#include <sstream>

#include <gtest/gtest.h>

#include "distrecon/experiment.hpp"

namespace distrecon {
namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::bad_config;
}

ExperimentConfig ring_config() {
  ExperimentConfig c;
  c.family = Family::ring;
  c.n_list = {16};
  c.s_policy = SPolicy::fixed(4);
  c.trials = 2;
  c.base_seed = 7;
  return c;
}

std::string without_wall_clock(const std::vector<ExperimentRecord>& records) {
  auto copy = records;
  for (auto& r : copy) r.wall_ms = 0.0;
  std::ostringstream out;
  write_experiment_csv(out, copy);
  return out.str();
}

TEST(Experiment, RingSweep) {
  const auto records = run_experiment(ring_config());
  ASSERT_EQ(records.size(), 2u);
  for (std::size_t t = 0; t < 2; ++t) {
    const auto& r = records[t];
    EXPECT_TRUE(r.correct) << r.error;
    EXPECT_EQ(r.trial, t);
    EXPECT_EQ(r.seed, derive_trial_seed(7, t));
    EXPECT_EQ(r.n, 16u);
    EXPECT_EQ(r.s, 4u);
    EXPECT_EQ(r.rounds, 2u);
    EXPECT_EQ(r.queries_total, r.queries_stage1 + r.queries_stage2);
    EXPECT_EQ(r.queries_stage2, r.candidate_count);
    EXPECT_EQ(r.policy, "fixed");
    EXPECT_TRUE(r.error.empty());
  }
}

TEST(Experiment, DeterministicApartFromWallClock) {
  EXPECT_EQ(without_wall_clock(run_experiment(ring_config())), without_wall_clock(run_experiment(ring_config())));
}

TEST(Experiment, ThreadsDoNotChangeRecords) {
  ExperimentConfig c;
  c.n_list = {32, 64};
  c.trials = 3;
  c.base_seed = 11;
  c.algorithm = Algorithm::simple_modified;
  const auto serial = run_experiment(c);
  c.threads = 3;
  EXPECT_EQ(without_wall_clock(serial), without_wall_clock(run_experiment(c)));
}

TEST(Experiment, SmallCubicSimpleModified) {
  // Every cubic graph on six vertices has 9 edges; the candidate set at termination equals E.
  ExperimentConfig c;
  c.n_list = {6};
  c.delta = 3;
  c.algorithm = Algorithm::simple_modified;
  c.trials = 5;
  for (const auto& r : run_experiment(c)) {
    EXPECT_TRUE(r.correct) << r.error;
    EXPECT_EQ(r.candidate_count, 9u);
    EXPECT_EQ(r.excess, 0u);
    EXPECT_EQ(r.rounds, r.iterations);
  }
}

TEST(Experiment, OtherModels) {
  ExperimentConfig c;
  c.n_list = {32};
  c.algorithm = Algorithm::simple_modified;
  c.model = Model::all_distances;
  c.trials = 2;
  for (const auto& r : run_experiment(c)) {
    EXPECT_TRUE(r.correct) << r.error;
    EXPECT_EQ(r.all_distances_queries, r.iterations * r.s);
    EXPECT_EQ(r.model, "all-distances");
  }
  c.model = Model::betweenness;
  c.n_list = {16};
  for (const auto& r : run_experiment(c)) {
    EXPECT_TRUE(r.correct) << r.error;
    EXPECT_EQ(r.betweenness_queries, r.iterations * r.s * 15 * 14);
  }
}

TEST(Experiment, BinaryTreeSizes) {
  ExperimentConfig c;
  c.family = Family::binary_tree;
  c.n_list = {15, 16};
  const auto records = run_experiment(c);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_TRUE(records[0].correct);
  EXPECT_EQ(records[0].delta, 3u);
  EXPECT_FALSE(records[1].correct);
  EXPECT_NE(records[1].error.find("BadConfig"), std::string::npos);
}

TEST(Experiment, TrialErrorsAreRecordedPerRow) {
  ExperimentConfig c;
  c.n_list = {7};  // odd degree sum
  c.trials = 2;
  const auto records = run_experiment(c);
  ASSERT_EQ(records.size(), 2u);
  for (const auto& r : records) {
    EXPECT_FALSE(r.correct);
    EXPECT_NE(r.error.find("OddDegreeSum"), std::string::npos);
  }
}

TEST(Experiment, FailedTrialsKeepTheirCost) {
  // Antipodal pairs of C6 have only two distinguishers, so one iteration often falls short.
  ExperimentConfig c;
  c.family = Family::ring;
  c.n_list = {6};
  c.algorithm = Algorithm::simple_modified;
  c.max_iters = 1;
  c.trials = 20;
  std::size_t failed = 0;
  for (const auto& r : run_experiment(c)) {
    if (r.correct) continue;
    ++failed;
    EXPECT_NE(r.error.find("MaxItersExceeded"), std::string::npos);
    EXPECT_EQ(r.iterations, 1u);
    EXPECT_EQ(r.rounds, 1u);
    EXPECT_EQ(r.s, 6u);
    EXPECT_EQ(r.queries_total, 6u * 6u - 6u);
  }
  EXPECT_GT(failed, 0u);
}

TEST(Experiment, Validation) {
  auto c = ring_config();
  c.trials = 0;
  EXPECT_EQ(code_of([&] { run_experiment(c); }), Errc::bad_config);
  c = ring_config();
  c.n_list.clear();
  EXPECT_EQ(code_of([&] { run_experiment(c); }), Errc::bad_config);
  c = ring_config();
  c.model = Model::betweenness;
  EXPECT_EQ(code_of([&] { run_experiment(c); }), Errc::bad_config);
  c = ring_config();
  c.s_policy = SPolicy::loglog_eps(0.0);
  EXPECT_EQ(code_of([&] { run_experiment(c); }), Errc::bad_policy);
  EXPECT_EQ(code_of([] { parse_model("oracle"); }), Errc::bad_config);
  EXPECT_EQ(code_of([] { parse_algorithm("fast"); }), Errc::bad_config);
}

TEST(ExperimentCsv, RoundTripByColumnName) {
  auto records = run_experiment(ring_config());
  records[1].error = "Odd, \"quoted\" text";
  std::stringstream buf;
  write_experiment_csv(buf, records);
  const auto text = buf.str();
  EXPECT_EQ(text.rfind("# schema=distrecon-experiment/1", 0), 0u);

  const auto back = read_experiment_csv(buf);
  ASSERT_EQ(back.size(), records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].seed, records[i].seed);
    EXPECT_EQ(back[i].queries_total, records[i].queries_total);
    EXPECT_EQ(back[i].candidate_count, records[i].candidate_count);
    EXPECT_EQ(back[i].correct, records[i].correct);
    EXPECT_EQ(back[i].error, records[i].error);
    EXPECT_NEAR(back[i].wall_ms, records[i].wall_ms, 1e-3);
  }
}

TEST(ExperimentCsv, ColumnOrderDoesNotMatter) {
  std::ostringstream header;
  auto cols = experiment_columns();
  std::reverse(cols.begin(), cols.end());
  std::string row;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    header << (i ? "," : "") << cols[i];
    std::string v = "1";
    if (cols[i] == "correct") v = "true";
    if (cols[i] == "error") v = "";
    if (cols[i] == "family") v = "ring";
    row += (i ? "," : "") + v;
  }
  std::istringstream in("# schema=distrecon-experiment/1 log_base=2\n" + header.str() + "\n" + row + "\n");
  const auto records = read_experiment_csv(in);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].family, "ring");
  EXPECT_EQ(records[0].queries_total, 1u);
  EXPECT_TRUE(records[0].correct);
}

TEST(ExperimentCsv, Errors) {
  std::istringstream no_schema("family,n\nring,3\n");
  EXPECT_EQ(code_of([&] { read_experiment_csv(no_schema); }), Errc::parse_error);
  std::istringstream ragged("# schema=distrecon-experiment/1\nfamily,n\nring\n");
  EXPECT_EQ(code_of([&] { read_experiment_csv(ragged); }), Errc::parse_error);
  std::istringstream missing("# schema=distrecon-experiment/1\nfamily,n\nring,3\n");
  EXPECT_EQ(code_of([&] { read_experiment_csv(missing); }), Errc::parse_error);
}

}  // namespace
}  // namespace distrecon
