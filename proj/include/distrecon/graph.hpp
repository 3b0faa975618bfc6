// graph.hpp - immutable simple graphs, configuration-model multigraphs,
// vertex-pair sets and BFS distances.

#ifndef DISTRECON_GRAPH_HPP
#define DISTRECON_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "distrecon/error.hpp"

namespace distrecon {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  /// Unordered pair stored as (min, max).
  static constexpr VertexPair canonical(Vertex a, Vertex b) noexcept {
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
  }

  friend constexpr bool operator==(const VertexPair&, const VertexPair&) = default;
  friend constexpr auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Sorted set of canonical unordered pairs {a,b}, a != b.
class PairSet {
 public:
  PairSet() = default;

  /// Canonicalizes, sorts and drops repeats. Throws on {a,a}.
  explicit PairSet(std::vector<VertexPair> pairs) : pairs_(std::move(pairs)) {
    for (auto& p : pairs_) {
      if (p.first == p.second) {
        throw Error(Errc::self_loop, "pair {" + std::to_string(p.first) + "," +
                                         std::to_string(p.first) + "} in a pair set");
      }
      p = VertexPair::canonical(p.first, p.second);
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  }

  PairSet(std::initializer_list<VertexPair> pairs) : PairSet(std::vector<VertexPair>(pairs)) {}

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }
  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }

  bool contains(Vertex a, Vertex b) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), VertexPair::canonical(a, b));
  }

  /// True when every pair of *this is also in other.
  bool subset_of(const PairSet& other) const {
    return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
  }

  /// |*this \ other|
  std::size_t count_not_in(const PairSet& other) const {
    std::size_t missing = 0;
    auto it = other.pairs_.begin();
    for (const auto& p : pairs_) {
      it = std::lower_bound(it, other.pairs_.end(), p);
      if (it == other.pairs_.end() || *it != p) ++missing;
    }
    return missing;
  }

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::vector<VertexPair> pairs_;
};

enum class Connectivity { required, optional };

class Graph {
 public:
  /// Builds a simple undirected graph on vertices 0..n-1. Repeated edges are
  /// an error rather than being merged.
  static Graph build(std::size_t n, std::span<const VertexPair> edges,
                     Connectivity connectivity = Connectivity::required) {
    if (n == 0) throw Error(Errc::too_small, "graph needs at least one vertex");
    std::vector<std::vector<Vertex>> adjacency(n);
    for (const auto& e : edges) {
      if (e.first >= n || e.second >= n) {
        throw Error(Errc::vertex_out_of_range, "edge {" + std::to_string(e.first) + "," +
                                                   std::to_string(e.second) + "} with n=" +
                                                   std::to_string(n));
      }
      if (e.first == e.second) {
        throw Error(Errc::self_loop, "loop at vertex " + std::to_string(e.first));
      }
      adjacency[e.first].push_back(e.second);
      adjacency[e.second].push_back(e.first);
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto& nb = adjacency[v];
      std::sort(nb.begin(), nb.end());
      auto dup = std::adjacent_find(nb.begin(), nb.end());
      if (dup != nb.end()) {
        throw Error(Errc::duplicate_edge,
                    "edge {" + std::to_string(v) + "," + std::to_string(*dup) + "} listed twice");
      }
    }
    Graph g(std::move(adjacency));
    if (connectivity == Connectivity::required && !g.connected()) {
      throw Error(Errc::not_connected, "graph on " + std::to_string(n) + " vertices is not connected");
    }
    return g;
  }

  static Graph build(std::size_t n, std::initializer_list<VertexPair> edges,
                     Connectivity connectivity = Connectivity::required) {
    return build(n, std::span<const VertexPair>(edges.begin(), edges.size()), connectivity);
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }

  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& nb : adjacency_) d = std::max(d, nb.size());
    return d;
  }

  /// Degree shared by every vertex, or 0 when the graph is not regular.
  std::size_t regular_degree() const noexcept {
    const std::size_t d = adjacency_.front().size();
    for (const auto& nb : adjacency_) {
      if (nb.size() != d) return 0;
    }
    return d;
  }

  bool has_edge(Vertex a, Vertex b) const {
    const auto& nb = adjacency_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  PairSet edges() const {
    std::vector<VertexPair> out;
    out.reserve(edge_count_);
    for (Vertex a = 0; a < adjacency_.size(); ++a) {
      for (Vertex b : adjacency_[a]) {
        if (a < b) out.push_back({a, b});
      }
    }
    return PairSet(std::move(out));
  }

  bool connected() const;

  friend bool operator==(const Graph& x, const Graph& y) { return x.adjacency_ == y.adjacency_; }

 private:
  explicit Graph(std::vector<std::vector<Vertex>> adjacency) : adjacency_(std::move(adjacency)) {
    std::size_t ends = 0;
    for (const auto& nb : adjacency_) ends += nb.size();
    edge_count_ = ends / 2;
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Configuration-model output: each pair of matched points projected onto
/// its two owning vertices. Loops and repeated pairs are kept.
struct Multigraph {
  std::size_t n = 0;
  std::size_t delta = 0;
  std::vector<VertexPair> pairs;

  bool has_loop() const {
    return std::any_of(pairs.begin(), pairs.end(), [](const VertexPair& p) { return p.first == p.second; });
  }

  bool is_simple() const {
    if (has_loop()) return false;
    std::vector<VertexPair> sorted;
    sorted.reserve(pairs.size());
    for (const auto& p : pairs) sorted.push_back(VertexPair::canonical(p.first, p.second));
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  /// Endpoints incident to v, a loop counting twice.
  std::size_t degree(Vertex v) const {
    std::size_t d = 0;
    for (const auto& p : pairs) d += (p.first == v) + (p.second == v);
    return d;
  }
};

/// Hop counts from one source. Unreachable vertices hold the value n.
struct DistanceVector {
  Vertex source = 0;
  std::vector<Distance> dist;

  Distance operator[](Vertex v) const { return dist[v]; }
  std::size_t size() const noexcept { return dist.size(); }

  friend bool operator==(const DistanceVector&, const DistanceVector&) = default;
};

namespace detail {

template <class Neighbors>
std::vector<Distance> bfs(std::size_t n, Vertex source, Neighbors&& neighbors) {
  const auto unreachable = static_cast<Distance>(n);
  std::vector<Distance> dist(n, unreachable);
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : neighbors(v)) {
      if (dist[w] == unreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace detail

inline DistanceVector bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.vertex_count()) {
    throw Error(Errc::vertex_out_of_range, "bfs source " + std::to_string(source));
  }
  return {source, detail::bfs(g.vertex_count(), source, [&g](Vertex v) { return g.neighbors(v); })};
}

inline bool Graph::connected() const {
  const auto dist = detail::bfs(vertex_count(), 0, [this](Vertex v) { return neighbors(v); });
  const auto unreachable = static_cast<Distance>(vertex_count());
  return std::none_of(dist.begin(), dist.end(), [&](Distance d) { return d == unreachable; });
}

inline bool is_connected(const Graph& g) { return g.connected(); }

inline bool is_connected(const Multigraph& m) {
  if (m.n == 0) return false;
  std::vector<std::vector<Vertex>> adjacency(m.n);
  for (const auto& p : m.pairs) {
    adjacency[p.first].push_back(p.second);
    adjacency[p.second].push_back(p.first);
  }
  const auto dist = detail::bfs(m.n, 0, [&](Vertex v) -> const std::vector<Vertex>& { return adjacency[v]; });
  return std::none_of(dist.begin(), dist.end(), [&](Distance d) { return d == m.n; });
}

/// All-pairs hop counts, row-major; entry (a, b) at a * n + b.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g) : n_(g.vertex_count()), d_(n_ * n_) {
    for (Vertex s = 0; s < n_; ++s) {
      const auto row = bfs_distances(g, s);
      std::copy(row.dist.begin(), row.dist.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
  }

  std::size_t size() const noexcept { return n_; }
  Distance operator()(Vertex a, Vertex b) const { return d_[a * n_ + b]; }
  std::span<const Distance> row(Vertex a) const { return {d_.data() + a * n_, n_}; }

 private:
  std::size_t n_;
  std::vector<Distance> d_;
};

}  // namespace distrecon

#endif  // DISTRECON_GRAPH_HPP
