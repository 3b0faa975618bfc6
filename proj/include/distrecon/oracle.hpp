// oracle.hpp - query oracles over a hidden graph.
//
// An OracleSession answers distance, all-distances and betweenness queries
// about a graph the caller cannot otherwise inspect, and keeps the ledger of
// how many queries of each kind were issued and in which round.

#ifndef DISTRECON_ORACLE_HPP
#define DISTRECON_ORACLE_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "distrecon/error.hpp"
#include "distrecon/graph.hpp"

namespace distrecon {

enum class QueryKind { distance, all_distances, betweenness };

/// Frozen snapshot of a session's counters.
struct QueryLedger {
  std::uint64_t distance = 0;
  std::uint64_t all_distances = 0;
  std::uint64_t betweenness = 0;
  std::vector<std::uint64_t> rounds;  // queries attributed to each round

  std::uint64_t total() const noexcept { return distance + all_distances + betweenness; }

  std::uint64_t count(QueryKind kind) const noexcept {
    switch (kind) {
      case QueryKind::distance: return distance;
      case QueryKind::all_distances: return all_distances;
      case QueryKind::betweenness: return betweenness;
    }
    return 0;
  }

  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;
};

enum class CountMode {
  count_duplicates,  // every call is charged
  memoize,           // a repeated query is answered for free
};

template <class O>
concept DistanceOracle = requires(O& o, Vertex a, Vertex b, std::uint64_t k) {
  { o.vertex_count() } -> std::convertible_to<std::size_t>;
  { o.distance(a, b) } -> std::convertible_to<Distance>;
  { o.begin_round() } -> std::convertible_to<std::size_t>;
  { o.ledger() } -> std::convertible_to<QueryLedger>;
  o.charge_uncounted_distance(k);
};

template <class O>
concept AllDistancesOracle = requires(O& o, Vertex u) {
  { o.vertex_count() } -> std::convertible_to<std::size_t>;
  { o.all_distances(u) } -> std::convertible_to<DistanceVector>;
  { o.begin_round() } -> std::convertible_to<std::size_t>;
  { o.ledger() } -> std::convertible_to<QueryLedger>;
};

template <class O>
concept BetweennessOracle = requires(O& o, Vertex u, Vertex v, Vertex w) {
  { o.vertex_count() } -> std::convertible_to<std::size_t>;
  { o.betweenness(u, v, w) } -> std::convertible_to<bool>;
  { o.begin_round() } -> std::convertible_to<std::size_t>;
  { o.ledger() } -> std::convertible_to<QueryLedger>;
};

class OracleSession {
 public:
  /// The session keeps a reference; `hidden` must outlive it.
  explicit OracleSession(const Graph& hidden, CountMode mode = CountMode::count_duplicates)
      : hidden_(&hidden), mode_(mode), rows_(hidden.vertex_count()) {}

  /// n is public: algorithms are handed the vertex set, never the edges.
  std::size_t vertex_count() const noexcept { return hidden_->vertex_count(); }
  CountMode mode() const noexcept { return mode_; }

  Distance distance(Vertex a, Vertex b) {
    check_vertex(a, "distance");
    check_vertex(b, "distance");
    if (a == b) throw Error(Errc::contract_violation, "self distance query (" + std::to_string(a) + ")");
    const auto key = pair_key(a, b);
    if (mode_ == CountMode::count_duplicates || seen_.insert(key).second) {
      charge(ledger_.distance, 1);
    }
    return lookup(a, b);
  }

  DistanceVector all_distances(Vertex u) {
    check_vertex(u, "all-distances");
    const std::uint64_t key = (std::uint64_t{1} << 62) | u;
    if (mode_ == CountMode::count_duplicates || seen_.insert(key).second) {
      charge(ledger_.all_distances, 1);
    }
    return {u, row(u)};
  }

  /// True iff w lies on some shortest u-v path.
  bool betweenness(Vertex u, Vertex v, Vertex w) {
    check_vertex(u, "betweenness");
    check_vertex(v, "betweenness");
    check_vertex(w, "betweenness");
    if (u == v) throw Error(Errc::contract_violation, "betweenness query with u == v");
    const std::uint64_t n = vertex_count();
    const auto p = VertexPair::canonical(u, v);
    const std::uint64_t key = (std::uint64_t{2} << 62) | ((p.first * n + p.second) * n + w);
    if (mode_ == CountMode::count_duplicates || seen_.insert(key).second) {
      charge(ledger_.betweenness, 1);
    }
    const Distance uw = row(u)[w];
    const Distance uv = rows_[u][v];
    return uw + row(v)[w] == uv;
  }

  /// Opens a new round; later queries are attributed to it.
  std::size_t begin_round() {
    ledger_.rounds.push_back(0);
    return ledger_.rounds.size() - 1;
  }

  /// Charges k distance queries that were answered without asking the
  /// oracle (stage-1 self pairs under strict accounting).
  void charge_uncounted_distance(std::uint64_t k) { charge(ledger_.distance, k); }

  const QueryLedger& ledger() const noexcept { return ledger_; }
  QueryLedger close() const { return ledger_; }

 private:
  void check_vertex(Vertex v, const char* what) const {
    if (v >= vertex_count()) {
      throw Error(Errc::contract_violation,
                  std::string(what) + " query names vertex " + std::to_string(v) + " outside 0.." +
                      std::to_string(vertex_count() - 1));
    }
  }

  std::uint64_t pair_key(Vertex a, Vertex b) const {
    const auto p = VertexPair::canonical(a, b);
    return std::uint64_t{p.first} * vertex_count() + p.second;
  }

  void charge(std::uint64_t& counter, std::uint64_t k) {
    if (ledger_.rounds.empty()) ledger_.rounds.push_back(0);
    counter += k;
    ledger_.rounds.back() += k;
  }

  Distance lookup(Vertex a, Vertex b) {
    if (!rows_[b].empty()) return rows_[b][a];
    return row(a)[b];
  }

  // BFS rows are cached; the cache is dropped wholesale past the budget.
  const std::vector<Distance>& row(Vertex v) {
    auto& r = rows_[v];
    if (r.empty()) {
      const std::size_t n = vertex_count();
      if ((cached_rows_ + 1) * n > row_budget_entries) {
        for (auto& other : rows_) std::vector<Distance>().swap(other);
        cached_rows_ = 0;
      }
      r = bfs_distances(*hidden_, v).dist;
      ++cached_rows_;
    }
    return r;
  }

  static constexpr std::size_t row_budget_entries = std::size_t{1} << 25;

  const Graph* hidden_;
  CountMode mode_;
  QueryLedger ledger_;
  std::unordered_set<std::uint64_t> seen_;
  std::vector<std::vector<Distance>> rows_;
  std::size_t cached_rows_ = 0;
};

static_assert(DistanceOracle<OracleSession>);
static_assert(AllDistancesOracle<OracleSession>);
static_assert(BetweennessOracle<OracleSession>);

/// Distances from u recovered from betweenness answers alone.
///
/// For each v != u the strict intermediates I(v) = {w : w between u and v}
/// are collected with (n-1)(n-2) queries in total. Then d(u,v) = 1 when I(v)
/// is empty and 1 + max_{w in I(v)} d(u,w) otherwise; intermediates are
/// strictly closer to u, so processing v by increasing |I(v)| is a valid
/// order (I(w) is a proper subset of I(v) for every w in I(v)).
template <BetweennessOracle O>
DistanceVector betweenness_all_distances(O& oracle, Vertex u) {
  const std::size_t n = oracle.vertex_count();
  if (u >= n) throw Error(Errc::contract_violation, "betweenness source " + std::to_string(u));
  std::vector<std::vector<Vertex>> between(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v == u) continue;
    for (Vertex w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (oracle.betweenness(u, v, w)) between[v].push_back(w);
    }
  }
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v != u) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex x, Vertex y) { return between[x].size() < between[y].size(); });
  DistanceVector out{u, std::vector<Distance>(n, 0)};
  for (Vertex v : order) {
    Distance deepest = 0;
    for (Vertex w : between[v]) deepest = std::max(deepest, out.dist[w]);
    out.dist[v] = deepest + 1;
  }
  return out;
}

/// Adapts a betweenness oracle so it offers all-distances queries, each one
/// simulated by betweenness_all_distances.
template <BetweennessOracle O>
class BetweennessAsAllDistances {
 public:
  explicit BetweennessAsAllDistances(O& inner) : inner_(&inner) {}

  std::size_t vertex_count() const { return inner_->vertex_count(); }
  DistanceVector all_distances(Vertex u) { return betweenness_all_distances(*inner_, u); }
  std::size_t begin_round() { return inner_->begin_round(); }
  QueryLedger ledger() const { return inner_->ledger(); }

 private:
  O* inner_;
};

}  // namespace distrecon

#endif  // DISTRECON_ORACLE_HPP
