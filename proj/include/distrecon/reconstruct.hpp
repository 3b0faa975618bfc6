// reconstruct.hpp - sampling-based graph reconstruction against an oracle.
//
// Every algorithm here sees the hidden graph only through the oracle
// concepts of oracle.hpp.
//
//   simple()                     sample s vertices, learn their distances to
//                                every vertex (round 1), keep the pairs no
//                                sampled vertex separates by more than one
//                                hop, then test each kept pair (round 2).
//   simple_modified()            repeat round 1 with fresh samples until the
//                                kept set has exactly delta*n/2 pairs; that
//                                set is the edge set of a delta-regular graph.
//   reconstruct_all_distances()  simple_modified() with one all-distances
//                                query per sampled vertex.
//   reconstruct_betweenness()    the same, every all-distances query being
//                                simulated with betweenness queries.

#ifndef DISTRECON_RECONSTRUCT_HPP
#define DISTRECON_RECONSTRUCT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "distrecon/error.hpp"
#include "distrecon/graph.hpp"
#include "distrecon/oracle.hpp"
#include "distrecon/rng.hpp"

namespace distrecon {

struct SPolicy {
  enum class Kind { log2_squared, two_thirds, loglog_eps, fixed };

  Kind kind = Kind::log2_squared;
  double epsilon = 1.0;     // loglog_eps only
  std::uint64_t value = 1;  // fixed only

  static SPolicy log2_squared() { return {Kind::log2_squared, 1.0, 1}; }
  static SPolicy two_thirds() { return {Kind::two_thirds, 1.0, 1}; }
  static SPolicy loglog_eps(double epsilon) { return {Kind::loglog_eps, epsilon, 1}; }
  static SPolicy fixed(std::uint64_t value) { return {Kind::fixed, 1.0, value}; }
};

inline std::string policy_name(const SPolicy& p) {
  switch (p.kind) {
    case SPolicy::Kind::log2_squared: return "log2sq";
    case SPolicy::Kind::two_thirds: return "two-thirds";
    case SPolicy::Kind::loglog_eps: return "loglog-eps";
    case SPolicy::Kind::fixed: return "fixed";
  }
  return "unknown";
}

inline SPolicy parse_policy(const std::string& name, double epsilon = 1.0, std::uint64_t value = 1) {
  if (name == "log2sq" || name == "log2-squared") return SPolicy::log2_squared();
  if (name == "two-thirds") return SPolicy::two_thirds();
  if (name == "loglog-eps") return SPolicy::loglog_eps(epsilon);
  if (name == "fixed") return SPolicy::fixed(value);
  throw Error(Errc::bad_policy, "unknown s-policy '" + name + "'");
}

/// Sample size for n vertices, clamped to [1, n]. All logarithms are base 2.
inline std::size_t compute_s(const SPolicy& policy, std::size_t n) {
  if (n == 0) throw Error(Errc::contract_violation, "compute_s with n = 0");
  double raw = 0.0;
  switch (policy.kind) {
    case SPolicy::Kind::log2_squared: {
      const double lg = std::log2(static_cast<double>(n));
      raw = std::ceil(lg * lg);
      break;
    }
    case SPolicy::Kind::two_thirds: {
      // Smallest integer s with s^3 >= n^2, computed exactly.
      const auto target = static_cast<unsigned __int128>(n) * n;
      auto s = static_cast<std::uint64_t>(std::llround(std::cbrt(static_cast<long double>(n) * n)));
      auto cube = [](std::uint64_t x) { return static_cast<unsigned __int128>(x) * x * x; };
      while (cube(s) < target) ++s;
      while (s > 0 && cube(s - 1) >= target) --s;
      raw = static_cast<double>(s);
      break;
    }
    case SPolicy::Kind::loglog_eps: {
      if (!(policy.epsilon > 0.0)) throw Error(Errc::bad_policy, "loglog-eps needs epsilon > 0");
      const double lg = std::log2(static_cast<double>(n));
      const double lglg = lg > 1.0 ? std::log2(lg) : 0.0;
      raw = std::ceil(lg * std::pow(lglg, 2.0 + policy.epsilon));
      break;
    }
    case SPolicy::Kind::fixed: {
      if (policy.value < 1) throw Error(Errc::bad_policy, "fixed s must be >= 1");
      raw = static_cast<double>(policy.value);
      break;
    }
  }
  return static_cast<std::size_t>(std::clamp(raw, 1.0, static_cast<double>(n)));
}

/// s vertices drawn uniformly and independently (repeats allowed).
inline std::vector<Vertex> draw_sample(std::size_t n, std::size_t s, SplitMix64& rng) {
  std::vector<Vertex> sample(s);
  for (auto& u : sample) u = static_cast<Vertex>(rng.below(n));
  return sample;
}

namespace detail {

// Enumerates pairs {a,b} with |row[a] - row[b]| <= 1 in every row without
// touching all n^2/2 pairs: vertices are bucketed by their value in one row
// at a time and only buckets whose values differ by at most one are joined.
class CandidateJoin {
 public:
  CandidateJoin(std::vector<const std::vector<Distance>*> rows, std::vector<VertexPair>& out)
      : rows_(std::move(rows)), out_(out) {}

  void run(std::size_t n) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    self_join(std::move(all), 0);
  }

 private:
  static constexpr std::size_t brute_force_pairs = 64;

  bool close_from(Vertex a, Vertex b, std::size_t depth) const {
    for (std::size_t i = depth; i < rows_.size(); ++i) {
      const auto& r = *rows_[i];
      const Distance x = r[a];
      const Distance y = r[b];
      if ((x > y ? x - y : y - x) > 1) return false;
    }
    return true;
  }

  void emit(Vertex a, Vertex b) { out_.push_back(VertexPair::canonical(a, b)); }

  // Splits group into runs of equal value in row `depth`.
  std::vector<std::vector<Vertex>> runs_of(std::vector<Vertex> group, std::size_t depth,
                                           std::vector<Distance>& values) const {
    const auto& r = *rows_[depth];
    std::sort(group.begin(), group.end(), [&](Vertex x, Vertex y) { return r[x] < r[y] || (r[x] == r[y] && x < y); });
    std::vector<std::vector<Vertex>> runs;
    values.clear();
    for (Vertex v : group) {
      if (values.empty() || values.back() != r[v]) {
        values.push_back(r[v]);
        runs.emplace_back();
      }
      runs.back().push_back(v);
    }
    return runs;
  }

  void self_join(std::vector<Vertex> group, std::size_t depth) {
    const std::size_t size = group.size();
    if (size < 2) return;
    if (depth == rows_.size() || size * (size - 1) / 2 <= brute_force_pairs) {
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
          if (close_from(group[i], group[j], depth)) emit(group[i], group[j]);
        }
      }
      return;
    }
    std::vector<Distance> values;
    auto runs = runs_of(std::move(group), depth, values);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (i + 1 < runs.size() && values[i + 1] == values[i] + 1) {
        cross_join(runs[i], runs[i + 1], depth + 1);
      }
      self_join(std::move(runs[i]), depth + 1);
    }
  }

  void cross_join(std::vector<Vertex> left, std::vector<Vertex> right, std::size_t depth) {
    if (left.empty() || right.empty()) return;
    if (depth == rows_.size() || left.size() * right.size() <= brute_force_pairs) {
      for (Vertex a : left) {
        for (Vertex b : right) {
          if (close_from(a, b, depth)) emit(a, b);
        }
      }
      return;
    }
    std::vector<Distance> lv;
    std::vector<Distance> rv;
    auto lruns = runs_of(std::move(left), depth, lv);
    auto rruns = runs_of(std::move(right), depth, rv);
    std::size_t lo = 0;
    for (std::size_t i = 0; i < lruns.size(); ++i) {
      while (lo < rruns.size() && rv[lo] + 1 < lv[i]) ++lo;
      for (std::size_t j = lo; j < rruns.size() && rv[j] <= lv[i] + 1; ++j) {
        cross_join(lruns[i], rruns[j], depth + 1);
      }
    }
  }

  std::vector<const std::vector<Distance>*> rows_;
  std::vector<VertexPair>& out_;
};

}  // namespace detail

/// Pairs {a,b} with |d(u,a) - d(u,b)| <= 1 for every sampled u, given the
/// sampled vertices' distance vectors. No oracle access.
inline PairSet candidate_set(std::span<const DistanceVector> stage1, std::size_t n) {
  std::vector<const std::vector<Distance>*> rows;
  std::vector<Vertex> sources;
  for (const auto& dv : stage1) {
    if (dv.size() != n) throw Error(Errc::contract_violation, "distance vector of the wrong length");
    if (std::find(sources.begin(), sources.end(), dv.source) != sources.end()) continue;
    sources.push_back(dv.source);
    rows.push_back(&dv.dist);
  }
  std::vector<VertexPair> out;
  detail::CandidateJoin(std::move(rows), out).run(n);
  return PairSet(std::move(out));
}

struct ReconstructionResult {
  PairSet edges;
  PairSet candidates;                         // candidate set of the last iteration
  std::vector<std::size_t> candidate_counts;  // per iteration
  std::vector<std::size_t> excess;            // per iteration, candidates outside the returned edges
  std::size_t iterations = 0;
  std::size_t s_used = 0;
  std::vector<Vertex> sample;  // last iteration's sample
  std::uint64_t stage1_queries = 0;
  std::uint64_t stage2_queries = 0;
  QueryLedger ledger;

  std::size_t candidate_count() const { return candidates.size(); }
};

struct ReconstructOptions {
  /// Charge the skipped self pairs of stage 1 so the distance count is
  /// exactly n*s + |candidates|.
  bool strict_count = false;
  std::size_t max_iters = 50;
};

namespace detail {

// Stage 1 through distance queries; the self pair is filled in locally.
template <DistanceOracle O>
std::vector<DistanceVector> distance_stage(O& oracle, std::span<const Vertex> sample, bool strict) {
  const std::size_t n = oracle.vertex_count();
  std::vector<DistanceVector> rows;
  rows.reserve(sample.size());
  for (Vertex u : sample) {
    DistanceVector dv{u, std::vector<Distance>(n, 0)};
    for (Vertex v = 0; v < n; ++v) {
      if (v != u) dv.dist[v] = oracle.distance(u, v);
    }
    rows.push_back(std::move(dv));
  }
  if (strict) oracle.charge_uncounted_distance(sample.size());
  return rows;
}

template <AllDistancesOracle O>
std::vector<DistanceVector> all_distances_stage(O& oracle, std::span<const Vertex> sample) {
  std::vector<DistanceVector> rows;
  rows.reserve(sample.size());
  for (Vertex u : sample) rows.push_back(oracle.all_distances(u));
  return rows;
}

template <class Stage>
ReconstructionResult repeat_until_regular(std::size_t n, std::size_t delta, SplitMix64& rng,
                                          std::size_t max_iters, Stage&& stage) {
  ReconstructionResult result;
  result.s_used = compute_s(SPolicy::log2_squared(), n);
  const std::size_t target = delta * n / 2;
  const bool reachable = (delta * n) % 2 == 0;
  for (std::size_t iter = 1; iter <= max_iters; ++iter) {
    result.sample = draw_sample(n, result.s_used, rng);
    const auto rows = stage(std::span<const Vertex>(result.sample));
    result.candidates = candidate_set(rows, n);
    result.candidate_counts.push_back(result.candidates.size());
    result.iterations = iter;
    if (reachable && result.candidates.size() == target) {
      result.edges = result.candidates;
      for (auto c : result.candidate_counts) result.excess.push_back(c - target);
      return result;
    }
  }
  throw Error(Errc::max_iters_exceeded, "candidate set never reached delta*n/2 = " + std::to_string(target) +
                                            " pairs in " + std::to_string(max_iters) + " iterations");
}

}  // namespace detail

template <DistanceOracle O>
ReconstructionResult simple(O& oracle, const SPolicy& policy, SplitMix64& rng, ReconstructOptions opts = {}) {
  const std::size_t n = oracle.vertex_count();
  ReconstructionResult result;
  result.s_used = compute_s(policy, n);
  result.sample = draw_sample(n, result.s_used, rng);

  const auto before = oracle.ledger().distance;
  oracle.begin_round();
  const auto rows = detail::distance_stage(oracle, result.sample, opts.strict_count);
  result.candidates = candidate_set(rows, n);
  const auto after_stage1 = oracle.ledger().distance;

  oracle.begin_round();
  std::vector<VertexPair> edges;
  for (const auto& p : result.candidates) {
    if (oracle.distance(p.first, p.second) == 1) edges.push_back(p);
  }
  result.edges = PairSet(std::move(edges));

  result.iterations = 1;
  result.candidate_counts = {result.candidates.size()};
  result.excess = {result.candidates.size() - result.edges.size()};
  result.stage1_queries = after_stage1 - before;
  result.stage2_queries = oracle.ledger().distance - after_stage1;
  result.ledger = oracle.ledger();
  return result;
}

/// Requires a delta-regular hidden graph; otherwise the termination test may
/// never fire and MaxItersExceeded is raised.
template <DistanceOracle O>
ReconstructionResult simple_modified(O& oracle, std::size_t delta, SplitMix64& rng, ReconstructOptions opts = {}) {
  const auto before = oracle.ledger().total();
  auto result = detail::repeat_until_regular(oracle.vertex_count(), delta, rng, opts.max_iters,
                                             [&](std::span<const Vertex> sample) {
                                               oracle.begin_round();
                                               return detail::distance_stage(oracle, sample, opts.strict_count);
                                             });
  result.stage1_queries = oracle.ledger().total() - before;
  result.ledger = oracle.ledger();
  return result;
}

template <AllDistancesOracle O>
ReconstructionResult reconstruct_all_distances(O& oracle, std::size_t delta, SplitMix64& rng,
                                               ReconstructOptions opts = {}) {
  const auto before = oracle.ledger().total();
  auto result = detail::repeat_until_regular(oracle.vertex_count(), delta, rng, opts.max_iters,
                                             [&](std::span<const Vertex> sample) {
                                               oracle.begin_round();
                                               return detail::all_distances_stage(oracle, sample);
                                             });
  result.ledger = oracle.ledger();
  result.stage1_queries = result.ledger.total() - before;
  return result;
}

/// Each simulated all-distances query costs (n-1)(n-2) betweenness queries.
template <BetweennessOracle O>
ReconstructionResult reconstruct_betweenness(O& oracle, std::size_t delta, SplitMix64& rng,
                                             ReconstructOptions opts = {}) {
  BetweennessAsAllDistances<O> simulated(oracle);
  return reconstruct_all_distances(simulated, delta, rng, opts);
}

}  // namespace distrecon

#endif  // DISTRECON_RECONSTRUCT_HPP
