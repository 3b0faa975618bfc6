// experiment.hpp - parameter sweeps over generated instances and the CSV
// format their records are written in.

#ifndef DISTRECON_EXPERIMENT_HPP
#define DISTRECON_EXPERIMENT_HPP

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "distrecon/error.hpp"
#include "distrecon/generators.hpp"
#include "distrecon/graph.hpp"
#include "distrecon/oracle.hpp"
#include "distrecon/reconstruct.hpp"
#include "distrecon/rng.hpp"

namespace distrecon {

enum class Model { distance, all_distances, betweenness };
enum class Algorithm { simple, simple_modified };

inline std::string model_name(Model m) {
  switch (m) {
    case Model::distance: return "distance";
    case Model::all_distances: return "all-distances";
    case Model::betweenness: return "betweenness";
  }
  return "unknown";
}

inline Model parse_model(const std::string& s) {
  if (s == "distance") return Model::distance;
  if (s == "all-distances") return Model::all_distances;
  if (s == "betweenness") return Model::betweenness;
  throw Error(Errc::bad_config, "unknown query model '" + s + "'");
}

inline std::string algorithm_name(Algorithm a) {
  return a == Algorithm::simple ? "simple" : "simple-modified";
}

inline Algorithm parse_algorithm(const std::string& s) {
  if (s == "simple") return Algorithm::simple;
  if (s == "simple-modified") return Algorithm::simple_modified;
  throw Error(Errc::bad_config, "unknown algorithm '" + s + "'");
}

struct ExperimentConfig {
  Family family = Family::random_regular;
  std::size_t delta = 3;                   // random-regular only
  std::filesystem::path graph_path;        // file only
  std::vector<std::size_t> n_list;         // binary-tree sizes must be 2^(d+1) - 1
  SPolicy s_policy = SPolicy::log2_squared();
  Model model = Model::distance;
  Algorithm algorithm = Algorithm::simple;
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  bool strict_count = false;
  bool dedup = false;
  std::size_t max_attempts = default_max_attempts;
  std::size_t max_iters = 50;
  std::size_t threads = 1;
};

inline void validate(const ExperimentConfig& c) {
  if (c.trials < 1) throw Error(Errc::bad_config, "trials must be >= 1");
  if (c.family != Family::file && c.n_list.empty()) throw Error(Errc::bad_config, "empty n list");
  if (c.algorithm == Algorithm::simple && c.model != Model::distance) {
    throw Error(Errc::bad_config, "simple runs in the distance model only");
  }
  compute_s(c.s_policy, 1);  // rejects bad policies up front
}

struct ExperimentRecord {
  std::string family;
  std::size_t n = 0;
  std::size_t delta = 0;
  std::size_t s = 0;
  std::string policy;
  std::string model;
  std::string algorithm;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t queries_stage1 = 0;
  std::uint64_t queries_stage2 = 0;
  std::uint64_t queries_total = 0;
  std::uint64_t all_distances_queries = 0;
  std::uint64_t betweenness_queries = 0;
  std::size_t candidate_count = 0;
  std::size_t excess = 0;
  std::size_t iterations = 0;
  std::size_t rounds = 0;
  bool correct = false;
  double wall_ms = 0.0;
  std::string error;  // empty unless the trial failed
};

inline constexpr const char* experiment_schema = "distrecon-experiment/1";

inline const std::vector<std::string>& experiment_columns() {
  static const std::vector<std::string> columns = {
      "family", "n", "delta", "s", "policy", "model", "algorithm", "trial", "seed",
      "queries_stage1", "queries_stage2", "queries_total", "all_distances_queries",
      "betweenness_queries", "candidate_count", "excess", "iterations", "rounds", "correct",
      "wall_ms", "error"};
  return columns;
}

namespace detail {

inline Graph build_instance(const ExperimentConfig& c, std::size_t n, SplitMix64& rng) {
  switch (c.family) {
    case Family::random_regular: return random_regular(n, c.delta, rng, c.max_attempts);
    case Family::ring: return ring(n);
    case Family::binary_tree: {
      std::size_t depth = 0;
      while (((std::size_t{1} << (depth + 1)) - 1) < n) ++depth;
      if (((std::size_t{1} << (depth + 1)) - 1) != n) {
        throw Error(Errc::bad_config, "binary-tree size " + std::to_string(n) + " is not 2^(d+1)-1");
      }
      return complete_binary_tree(depth);
    }
    case Family::file: return load_edge_list(c.graph_path);
  }
  throw Error(Errc::bad_config, "unknown family");
}

inline ExperimentRecord run_trial(const ExperimentConfig& c, std::size_t n, std::size_t trial) {
  ExperimentRecord rec;
  rec.family = family_name(c.family);
  rec.n = n;
  rec.delta = c.family == Family::random_regular ? c.delta : 0;
  rec.model = model_name(c.model);
  rec.algorithm = algorithm_name(c.algorithm);
  rec.policy = c.algorithm == Algorithm::simple ? policy_name(c.s_policy) : policy_name(SPolicy::log2_squared());
  rec.trial = trial;
  rec.seed = derive_trial_seed(c.base_seed, trial);

  const auto start = std::chrono::steady_clock::now();
  std::optional<Graph> graph;
  std::optional<OracleSession> oracle;
  try {
    SplitMix64 rng(rec.seed);
    graph.emplace(build_instance(c, n, rng));
    const Graph& g = *graph;
    rec.n = g.vertex_count();
    if (c.family != Family::random_regular) rec.delta = g.regular_degree() ? g.regular_degree() : g.max_degree();

    oracle.emplace(g, c.dedup ? CountMode::memoize : CountMode::count_duplicates);
    auto& session = *oracle;
    const ReconstructOptions opts{c.strict_count, c.max_iters};
    ReconstructionResult result;
    if (c.algorithm == Algorithm::simple) {
      result = simple(session, c.s_policy, rng, opts);
    } else {
      const std::size_t delta = g.regular_degree();
      if (delta == 0) throw Error(Errc::bad_config, "simple-modified needs a regular graph");
      switch (c.model) {
        case Model::distance: result = simple_modified(session, delta, rng, opts); break;
        case Model::all_distances: result = reconstruct_all_distances(session, delta, rng, opts); break;
        case Model::betweenness: result = reconstruct_betweenness(session, delta, rng, opts); break;
      }
    }
    rec.s = result.s_used;
    rec.queries_stage1 = result.stage1_queries;
    rec.queries_stage2 = result.stage2_queries;
    rec.queries_total = result.ledger.total();
    rec.all_distances_queries = result.ledger.all_distances;
    rec.betweenness_queries = result.ledger.betweenness;
    rec.candidate_count = result.candidates.size();
    rec.excess = result.excess.empty() ? 0 : result.excess.back();
    rec.iterations = result.iterations;
    rec.rounds = result.ledger.rounds.size();
    rec.correct = result.edges == g.edges();
  } catch (const Error& e) {
    rec.error = e.what();
    rec.correct = false;
    if (oracle) {
      // Keep the cost of a failed run visible; every iteration is one round.
      const auto& spent = oracle->ledger();
      rec.queries_total = spent.total();
      rec.all_distances_queries = spent.all_distances;
      rec.betweenness_queries = spent.betweenness;
      rec.rounds = spent.rounds.size();
      if (c.algorithm == Algorithm::simple_modified) {
        rec.iterations = rec.rounds;
        rec.s = compute_s(SPolicy::log2_squared(), rec.n);
      }
    }
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace detail

/// One record per (n, trial), in that order. Trials may run on several
/// threads; each owns its generator, session and record.
inline std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  validate(config);
  std::vector<std::size_t> sizes = config.n_list;
  if (config.family == Family::file && sizes.empty()) sizes.push_back(0);

  struct Job {
    std::size_t n;
    std::size_t trial;
  };
  std::vector<Job> jobs;
  for (std::size_t n : sizes) {
    for (std::size_t t = 0; t < config.trials; ++t) jobs.push_back({n, t});
  }
  std::vector<ExperimentRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      records[i] = detail::run_trial(config, jobs[i].n, jobs[i].trial);
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return records;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  return fields;
}

}  // namespace detail

/// Writes the schema line, the header and one row per record. All logarithms
/// behind s and the thresholds are base 2, recorded in the schema line.
inline void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "# schema=" << experiment_schema << " log_base=2\n";
  const auto& cols = experiment_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : records) {
    std::ostringstream wall;
    wall.setf(std::ios::fixed);
    wall.precision(3);
    wall << r.wall_ms;
    out << r.family << ',' << r.n << ',' << r.delta << ',' << r.s << ',' << r.policy << ',' << r.model << ','
        << r.algorithm << ',' << r.trial << ',' << r.seed << ',' << r.queries_stage1 << ',' << r.queries_stage2
        << ',' << r.queries_total << ',' << r.all_distances_queries << ',' << r.betweenness_queries << ','
        << r.candidate_count << ',' << r.excess << ',' << r.iterations << ',' << r.rounds << ','
        << (r.correct ? "true" : "false") << ',' << wall.str() << ',' << detail::csv_field(r.error) << '\n';
  }
}

/// Reads records back by column name. Columns may appear in any order.
inline std::vector<ExperimentRecord> read_experiment_csv(std::istream& in) {
  std::string line;
  std::vector<std::string> header;
  std::vector<ExperimentRecord> records;
  bool schema_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.find(std::string("schema=") + experiment_schema) != std::string::npos) schema_seen = true;
      continue;
    }
    if (header.empty()) {
      if (!schema_seen) throw Error(Errc::parse_error, "missing schema line");
      header = detail::split_csv_line(line);
      continue;
    }
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != header.size()) throw Error(Errc::parse_error, "row width differs from header");
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = fields[i];
    auto get = [&](const std::string& col) -> const std::string& {
      auto it = row.find(col);
      if (it == row.end()) throw Error(Errc::parse_error, "missing column " + col);
      return it->second;
    };
    auto num = [&](const std::string& col) { return std::stoull(get(col)); };
    ExperimentRecord r;
    r.family = get("family");
    r.n = num("n");
    r.delta = num("delta");
    r.s = num("s");
    r.policy = get("policy");
    r.model = get("model");
    r.algorithm = get("algorithm");
    r.trial = num("trial");
    r.seed = num("seed");
    r.queries_stage1 = num("queries_stage1");
    r.queries_stage2 = num("queries_stage2");
    r.queries_total = num("queries_total");
    r.all_distances_queries = num("all_distances_queries");
    r.betweenness_queries = num("betweenness_queries");
    r.candidate_count = num("candidate_count");
    r.excess = num("excess");
    r.iterations = num("iterations");
    r.rounds = num("rounds");
    r.correct = get("correct") == "true";
    r.wall_ms = std::stod(get("wall_ms"));
    r.error = get("error");
    records.push_back(std::move(r));
  }
  if (header.empty()) throw Error(Errc::parse_error, "missing header row");
  return records;
}

}  // namespace distrecon

#endif  // DISTRECON_EXPERIMENT_HPP
