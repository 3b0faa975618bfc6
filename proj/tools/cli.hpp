// cli.hpp - the distrecon command line: generate, reconstruct, experiment,
// analyze and metricdim.

#ifndef DISTRECON_TOOLS_CLI_HPP
#define DISTRECON_TOOLS_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "distrecon/distrecon.hpp"

namespace distrecon::cli {

namespace detail {

struct PolicyFlags {
  std::string name = "log2sq";
  double epsilon = 1.0;
  std::uint64_t value = 1;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--s-policy", name, "log2sq | two-thirds | loglog-eps | fixed")->capture_default_str();
    cmd.add_option("--epsilon", epsilon, "epsilon for loglog-eps")->capture_default_str();
    cmd.add_option("--s", value, "sample size for the fixed policy")->capture_default_str();
  }

  SPolicy policy() const { return parse_policy(name, epsilon, value); }
};

struct InstanceFlags {
  std::string graph;
  std::string family = "random-regular";
  std::size_t n = 0;
  std::size_t delta = 3;
  std::size_t depth = 0;
  std::uint64_t seed = 0;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--graph", graph, "edge-list file (overrides --family)");
    cmd.add_option("--family", family, "random-regular | ring | binary-tree")->capture_default_str();
    cmd.add_option("--n", n, "vertex count");
    cmd.add_option("--delta", delta, "degree for random-regular")->capture_default_str();
    cmd.add_option("--depth", depth, "depth for binary-tree");
    cmd.add_option("--seed", seed, "seed")->capture_default_str();
  }

  Graph load() const {
    if (!graph.empty()) return load_edge_list(graph);
    GenSpec spec;
    spec.family = parse_family(family);
    spec.n = n;
    spec.delta = delta;
    spec.depth = depth;
    spec.seed = seed;
    return generate(spec);
  }
};

template <class F>
void with_output(const std::string& path, std::ostream& stdout_stream, F&& write) {
  if (path.empty() || path == "-") {
    write(stdout_stream);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(Errc::parse_error, "cannot write " + path);
  write(file);
}

}  // namespace detail

/// Runs the command line; returns the process exit status. Usage errors
/// exit with 2, failures reported by the library with 1.
inline int dispatch(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  CLI::App app{"Reconstruct hidden graphs from simulated distance oracles", "distrecon"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a generated graph as an edge list");
  GenSpec gen_spec;
  std::string gen_family = "random-regular";
  std::string gen_out;
  gen->add_option("--family", gen_family, "random-regular | ring | binary-tree")->capture_default_str();
  gen->add_option("--n", gen_spec.n, "vertex count");
  gen->add_option("--delta", gen_spec.delta, "degree for random-regular")->capture_default_str();
  gen->add_option("--depth", gen_spec.depth, "depth for binary-tree");
  gen->add_option("--seed", gen_spec.seed, "seed")->capture_default_str();
  gen->add_option("--max-attempts", gen_spec.max_attempts, "rejection-sampling budget")->capture_default_str();
  gen->add_option("--out", gen_out, "output path, '-' for stdout")->required();

  // reconstruct
  auto* rec = app.add_subcommand("reconstruct", "reconstruct one hidden graph");
  std::string rec_graph;
  std::string rec_algorithm = "simple";
  std::string rec_model = "distance";
  detail::PolicyFlags rec_policy;
  std::size_t rec_delta = 0;
  std::uint64_t rec_seed = 0;
  bool rec_strict = false;
  bool rec_dedup = false;
  std::size_t rec_max_iters = 50;
  std::string rec_out;
  rec->add_option("--graph", rec_graph, "hidden graph edge-list file")->required();
  rec->add_option("--algorithm", rec_algorithm, "simple | simple-modified")->capture_default_str();
  rec->add_option("--model", rec_model, "distance | all-distances | betweenness")->capture_default_str();
  rec_policy.add_to(*rec);
  rec->add_option("--delta", rec_delta, "degree for simple-modified (0: the graph's)");
  rec->add_option("--seed", rec_seed, "sampling seed")->capture_default_str();
  rec->add_flag("--strict-count", rec_strict, "charge stage-1 self pairs as queries");
  rec->add_flag("--dedup", rec_dedup, "memoize repeated oracle queries");
  rec->add_option("--max-iters", rec_max_iters, "iteration cap for simple-modified")->capture_default_str();
  rec->add_option("--out", rec_out, "write the reconstructed edge list here");

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a sweep and write CSV records");
  ExperimentConfig exp_config;
  std::string exp_family = "random-regular";
  std::string exp_graph;
  std::string exp_model = "distance";
  std::string exp_algorithm = "simple";
  detail::PolicyFlags exp_policy;
  std::string exp_out;
  exp->add_option("--family", exp_family, "random-regular | ring | binary-tree | file")->capture_default_str();
  exp->add_option("--graph", exp_graph, "edge-list file for the file family");
  exp->add_option("--n", exp_config.n_list, "sizes (binary-tree sizes are 2^(d+1)-1)")->delimiter(',');
  exp->add_option("--delta", exp_config.delta, "degree for random-regular")->capture_default_str();
  exp_policy.add_to(*exp);
  exp->add_option("--model", exp_model, "distance | all-distances | betweenness")->capture_default_str();
  exp->add_option("--algorithm", exp_algorithm, "simple | simple-modified")->capture_default_str();
  exp->add_option("--trials", exp_config.trials, "trials per size")->capture_default_str();
  exp->add_option("--seed", exp_config.base_seed, "base seed")->capture_default_str();
  exp->add_flag("--strict-count", exp_config.strict_count, "charge stage-1 self pairs as queries");
  exp->add_flag("--dedup", exp_config.dedup, "memoize repeated oracle queries");
  exp->add_option("--max-iters", exp_config.max_iters, "iteration cap for simple-modified")->capture_default_str();
  exp->add_option("--threads", exp_config.threads, "worker threads")->capture_default_str();
  exp->add_option("--out", exp_out, "CSV path, '-' for stdout")->required();

  // analyze
  auto* ana = app.add_subcommand("analyze", "structural probe or bad-pair report as CSV");
  detail::InstanceFlags ana_instance;
  std::string ana_mode = "probe";
  std::size_t ana_budget = 200;
  std::uint64_t ana_probe_seed = 0;
  detail::PolicyFlags ana_policy;
  std::string ana_out;
  ana_instance.add_to(*ana);
  ana->add_option("--mode", ana_mode, "probe | bad-pairs")->capture_default_str();
  ana->add_option("--budget", ana_budget, "pairs probed")->capture_default_str();
  ana->add_option("--probe-seed", ana_probe_seed, "seed for pair sampling")->capture_default_str();
  ana_policy.add_to(*ana);
  ana->add_option("--out", ana_out, "CSV path (default stdout)");

  // metricdim
  auto* md = app.add_subcommand("metricdim", "exact metric dimension or random resolving-set trials");
  detail::InstanceFlags md_instance;
  bool md_exact = false;
  detail::PolicyFlags md_policy;
  std::size_t md_trials = 100;
  std::uint64_t md_trial_seed = 0;
  md_instance.add_to(*md);
  md->add_flag("--exact", md_exact, "exhaustive minimum resolving set size (n <= 16)");
  md_policy.add_to(*md);
  md->add_option("--trials", md_trials, "random sample trials")->capture_default_str();
  md->add_option("--trial-seed", md_trial_seed, "seed for sample draws")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      gen_spec.family = parse_family(gen_family);
      if (gen_spec.family == Family::file) throw Error(Errc::bad_config, "generate cannot use the file family");
      const Graph g = generate(gen_spec);
      detail::with_output(gen_out, out, [&](std::ostream& o) { write_edge_list(o, g); });
      err << "wrote " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    } else if (*rec) {
      const Graph g = load_edge_list(rec_graph);
      const auto algorithm = parse_algorithm(rec_algorithm);
      const auto model = parse_model(rec_model);
      if (algorithm == Algorithm::simple && model != Model::distance) {
        throw Error(Errc::bad_config, "simple runs in the distance model only");
      }
      OracleSession session(g, rec_dedup ? CountMode::memoize : CountMode::count_duplicates);
      SplitMix64 rng(rec_seed);
      const ReconstructOptions opts{rec_strict, rec_max_iters};
      ReconstructionResult result;
      if (algorithm == Algorithm::simple) {
        result = simple(session, rec_policy.policy(), rng, opts);
      } else {
        const std::size_t delta = rec_delta ? rec_delta : g.regular_degree();
        if (delta == 0) throw Error(Errc::bad_config, "graph is not regular; pass --delta");
        switch (model) {
          case Model::distance: result = simple_modified(session, delta, rng, opts); break;
          case Model::all_distances: result = reconstruct_all_distances(session, delta, rng, opts); break;
          case Model::betweenness: result = reconstruct_betweenness(session, delta, rng, opts); break;
        }
      }
      const bool correct = result.edges == g.edges();
      out << "edges=" << result.edges.size() << " queries=" << result.ledger.total()
          << " distance=" << result.ledger.distance << " all_distances=" << result.ledger.all_distances
          << " betweenness=" << result.ledger.betweenness << " s=" << result.s_used
          << " candidates=" << result.candidates.size() << " iterations=" << result.iterations
          << " rounds=" << result.ledger.rounds.size() << " correct=" << (correct ? "true" : "false") << '\n';
      if (!rec_out.empty()) {
        std::vector<VertexPair> edges(result.edges.begin(), result.edges.end());
        const Graph rebuilt = Graph::build(g.vertex_count(), edges, Connectivity::optional);
        detail::with_output(rec_out, out, [&](std::ostream& o) { write_edge_list(o, rebuilt); });
      }
      return correct ? 0 : 1;
    } else if (*exp) {
      exp_config.family = parse_family(exp_family);
      exp_config.graph_path = exp_graph;
      exp_config.model = parse_model(exp_model);
      exp_config.algorithm = parse_algorithm(exp_algorithm);
      exp_config.s_policy = exp_policy.policy();
      const auto records = run_experiment(exp_config);
      detail::with_output(exp_out, out, [&](std::ostream& o) { write_experiment_csv(o, records); });
      std::size_t failed = 0;
      for (const auto& r : records) failed += !r.correct;
      err << records.size() << " records, " << failed << " not correct\n";
    } else if (*ana) {
      const Graph g = ana_instance.load();
      if (ana_mode == "probe") {
        SplitMix64 rng(ana_probe_seed);
        const auto report = structural_probe(g, ana_budget, rng);
        detail::with_output(ana_out, out, [&](std::ostream& o) {
          o << "n,delta,sampled_pairs,min_distinguishers,threshold,fraction_below\n";
          o << report.n << ',' << report.delta << ',' << report.sampled_pairs << ',' << report.min_distinguishers
            << ',' << std::setprecision(10) << report.threshold << ',' << report.fraction_below << '\n';
        });
      } else if (ana_mode == "bad-pairs") {
        const std::size_t s = compute_s(ana_policy.policy(), g.vertex_count());
        const DistanceMatrix dist(g);
        const auto bad = bad_pairs(g, s, dist);
        std::size_t widest = 0;
        for (Vertex a = 0; a < g.vertex_count(); ++a) {
          widest = std::max(widest, bad_neighborhood(g, a, s, dist).size());
        }
        detail::with_output(ana_out, out, [&](std::ostream& o) {
          o << "n,delta,s,threshold,bad_pairs,max_bad_neighborhood,bad_neighborhood_bound\n";
          o << g.vertex_count() << ',' << g.max_degree() << ',' << s << ',' << std::setprecision(10)
            << bad_pair_threshold(g.vertex_count(), s) << ',' << bad.size() << ',' << widest << ','
            << bad_neighborhood_bound(g.vertex_count(), g.max_degree(), s) << '\n';
        });
      } else {
        throw Error(Errc::bad_config, "unknown analyze mode '" + ana_mode + "'");
      }
    } else if (*md) {
      const Graph g = md_instance.load();
      if (md_exact) {
        out << metric_dimension_exact(g) << '\n';
      } else {
        const std::size_t s = compute_s(md_policy.policy(), g.vertex_count());
        SplitMix64 rng(md_trial_seed);
        std::size_t resolving = 0;
        for (std::size_t t = 0; t < md_trials; ++t) resolving += resolving_sample_trial(g, s, rng);
        out << "s=" << s << " trials=" << md_trials << " resolving=" << resolving
            << " fraction=" << static_cast<double>(resolving) / static_cast<double>(md_trials) << '\n';
      }
    }
  } catch (const distrecon::Error& e) {
    err << "distrecon: " << e.what() << '\n';
    return e.code() == Errc::bad_config || e.code() == Errc::bad_policy ? 2 : 1;
  } catch (const std::exception& e) {
    err << "distrecon: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace distrecon::cli

#endif  // DISTRECON_TOOLS_CLI_HPP
