// analysis.hpp - instruments over a known graph: distinguisher sets, bad
// pairs, resolving sets and metric dimension, and the structural probe.

#ifndef DISTRECON_ANALYSIS_HPP
#define DISTRECON_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "distrecon/error.hpp"
#include "distrecon/graph.hpp"
#include "distrecon/reconstruct.hpp"
#include "distrecon/rng.hpp"

namespace distrecon {

namespace detail {

inline std::size_t count_distinguishers(std::span<const Distance> from_a, std::span<const Distance> from_b) {
  std::size_t count = 0;
  for (std::size_t u = 0; u < from_a.size(); ++u) {
    const Distance x = from_a[u];
    const Distance y = from_b[u];
    count += (x > y ? x - y : y - x) > 1;
  }
  return count;
}

inline double log2_of(std::size_t n) { return std::log2(static_cast<double>(n)); }

}  // namespace detail

/// D(a,b): vertices u with |d(u,a) - d(u,b)| > 1.
inline std::vector<Vertex> distinguishers(const Graph& g, Vertex a, Vertex b) {
  if (a == b || a >= g.vertex_count() || b >= g.vertex_count()) {
    throw Error(Errc::contract_violation, "distinguishers of {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  const auto da = bfs_distances(g, a);
  const auto db = bfs_distances(g, b);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const Distance x = da[u];
    const Distance y = db[u];
    if ((x > y ? x - y : y - x) > 1) out.push_back(u);
  }
  return out;
}

/// Threshold 3 n log2(n) / s separating bad pairs from well-distinguished ones.
inline double bad_pair_threshold(std::size_t n, std::size_t s) {
  return 3.0 * static_cast<double>(n) * detail::log2_of(n) / static_cast<double>(s);
}

/// Pairs at distance >= 2 with at most 3 n log2(n) / s distinguishers.
inline PairSet bad_pairs(const Graph& g, std::size_t s, const DistanceMatrix& dist) {
  if (s < 1) throw Error(Errc::contract_violation, "bad_pairs needs s >= 1");
  const std::size_t n = g.vertex_count();
  const double threshold = bad_pair_threshold(n, s);
  std::vector<VertexPair> out;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (dist(a, b) < 2) continue;
      if (static_cast<double>(detail::count_distinguishers(dist.row(a), dist.row(b))) <= threshold) {
        out.push_back({a, b});
      }
    }
  }
  return PairSet(std::move(out));
}

inline PairSet bad_pairs(const Graph& g, std::size_t s) { return bad_pairs(g, s, DistanceMatrix(g)); }

/// B(a) = { b : {a,b} is a bad pair }.
inline std::vector<Vertex> bad_neighborhood(const Graph& g, Vertex a, std::size_t s, const DistanceMatrix& dist) {
  if (s < 1) throw Error(Errc::contract_violation, "bad_neighborhood needs s >= 1");
  if (a >= g.vertex_count()) throw Error(Errc::contract_violation, "vertex " + std::to_string(a));
  const std::size_t n = g.vertex_count();
  const double threshold = bad_pair_threshold(n, s);
  std::vector<Vertex> out;
  for (Vertex b = 0; b < n; ++b) {
    if (b == a || dist(a, b) < 2) continue;
    if (static_cast<double>(detail::count_distinguishers(dist.row(a), dist.row(b))) <= threshold) {
      out.push_back(b);
    }
  }
  return out;
}

inline std::vector<Vertex> bad_neighborhood(const Graph& g, Vertex a, std::size_t s) {
  return bad_neighborhood(g, a, s, DistanceMatrix(g));
}

/// Upper bound 9 delta^3 n^2 log2(n)^2 / s^2 on |B(a)| for max degree delta.
inline double bad_neighborhood_bound(std::size_t n, std::size_t delta, std::size_t s) {
  const double lg = detail::log2_of(n);
  const double d = static_cast<double>(delta);
  const double nn = static_cast<double>(n);
  const double ss = static_cast<double>(s);
  return 9.0 * d * d * d * nn * nn * lg * lg / (ss * ss);
}

namespace detail {

// Distinct signatures over the rows of `landmarks` (landmark-major).
inline bool signatures_distinct(std::span<const std::span<const Distance>> landmarks, std::size_t n) {
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  auto less = [&](Vertex x, Vertex y) {
    for (const auto& r : landmarks) {
      if (r[x] != r[y]) return r[x] < r[y];
    }
    return false;
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 1; i < n; ++i) {
    if (!less(order[i - 1], order[i])) return false;
  }
  return true;
}

}  // namespace detail

/// True iff the distance vectors to `subset` are pairwise distinct.
inline bool is_resolving_set(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> support(subset.begin(), subset.end());
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<DistanceVector> rows;
  rows.reserve(support.size());
  for (Vertex u : support) rows.push_back(bfs_distances(g, u));
  std::vector<std::span<const Distance>> views;
  for (const auto& r : rows) views.emplace_back(r.dist);
  return detail::signatures_distinct(views, g.vertex_count());
}

inline constexpr std::size_t metric_dimension_guard = 16;

/// Smallest resolving set size by exhaustive search over subsets of
/// increasing size. Refuses graphs with more than `max_vertices` vertices.
inline std::size_t metric_dimension_exact(const Graph& g, std::size_t max_vertices = metric_dimension_guard) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices) {
    throw Error(Errc::too_large, "exhaustive metric dimension refused for n = " + std::to_string(n) +
                                     " (guard " + std::to_string(max_vertices) + ")");
  }
  const DistanceMatrix dist(g);
  std::vector<std::span<const Distance>> views;
  for (std::size_t k = 0; k <= n; ++k) {
    // Lexicographic walk over k-subsets.
    std::vector<Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
    for (;;) {
      views.clear();
      for (Vertex u : pick) views.push_back(dist.row(u));
      if (detail::signatures_distinct(views, n)) return k;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n;  // unreachable: the full vertex set always resolves
}

/// Draws s vertices uniformly with replacement and tests their support.
inline bool resolving_sample_trial(const Graph& g, std::size_t s, SplitMix64& rng) {
  if (s < 1) throw Error(Errc::contract_violation, "resolving_sample_trial needs s >= 1");
  const auto sample = draw_sample(g.vertex_count(), s, rng);
  return is_resolving_set(g, sample);
}

struct StructuralReport {
  std::size_t n = 0;
  std::size_t delta = 0;  // maximum degree
  std::size_t sampled_pairs = 0;
  std::size_t min_distinguishers = 0;
  double threshold = 0.0;  // 3 n / log2 n
  double fraction_below = 0.0;
  std::vector<std::size_t> distinguisher_counts;  // |D(v,w)| per probed pair
};

/// Probes |D(v,w)| on non-adjacent pairs against 3 n / log2 n. Enumerates
/// every non-adjacent pair when there are at most `pair_budget` of them,
/// otherwise draws `pair_budget` uniform non-adjacent pairs (with replacement).
inline StructuralReport structural_probe(const Graph& g, std::size_t pair_budget, SplitMix64& rng) {
  if (pair_budget < 1) throw Error(Errc::contract_violation, "structural_probe needs pair_budget >= 1");
  const std::size_t n = g.vertex_count();
  const std::size_t all_pairs = n * (n - 1) / 2;
  const std::size_t non_adjacent = all_pairs - g.edge_count();
  if (non_adjacent == 0) throw Error(Errc::no_non_adjacent_pairs, "every pair of vertices is adjacent");

  StructuralReport report;
  report.n = n;
  report.delta = g.max_degree();
  report.threshold = 3.0 * static_cast<double>(n) / detail::log2_of(n);

  auto probe = [&](Vertex a, Vertex b) {
    const auto da = bfs_distances(g, a);
    const auto db = bfs_distances(g, b);
    report.distinguisher_counts.push_back(detail::count_distinguishers(da.dist, db.dist));
  };

  if (non_adjacent <= pair_budget) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (!g.has_edge(a, b)) probe(a, b);
      }
    }
  } else {
    while (report.distinguisher_counts.size() < pair_budget) {
      const auto a = static_cast<Vertex>(rng.below(n));
      const auto b = static_cast<Vertex>(rng.below(n));
      if (a == b || g.has_edge(a, b)) continue;
      probe(a, b);
    }
  }

  const auto& counts = report.distinguisher_counts;
  report.sampled_pairs = counts.size();
  report.min_distinguishers = *std::min_element(counts.begin(), counts.end());
  const auto below = std::count_if(counts.begin(), counts.end(),
                                   [&](std::size_t c) { return static_cast<double>(c) <= report.threshold; });
  report.fraction_below = static_cast<double>(below) / static_cast<double>(counts.size());
  return report;
}

}  // namespace distrecon

#endif  // DISTRECON_ANALYSIS_HPP
