// generators.hpp - graph families: configuration-model random regular
// graphs, rings, complete binary trees, and edge-list files.

#ifndef DISTRECON_GENERATORS_HPP
#define DISTRECON_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "distrecon/error.hpp"
#include "distrecon/graph.hpp"
#include "distrecon/rng.hpp"

namespace distrecon {

enum class Family { random_regular, ring, binary_tree, file };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::random_regular: return "random-regular";
    case Family::ring: return "ring";
    case Family::binary_tree: return "binary-tree";
    case Family::file: return "file";
  }
  return "unknown";
}

inline Family parse_family(const std::string& name) {
  if (name == "random-regular") return Family::random_regular;
  if (name == "ring") return Family::ring;
  if (name == "binary-tree") return Family::binary_tree;
  if (name == "file") return Family::file;
  throw Error(Errc::bad_config, "unknown graph family '" + name + "'");
}

inline constexpr std::size_t default_max_attempts = 10000;

struct GenSpec {
  Family family = Family::random_regular;
  std::size_t n = 0;
  std::size_t delta = 3;
  std::size_t depth = 0;
  std::filesystem::path path;
  std::uint64_t seed = 0;
  std::size_t max_attempts = default_max_attempts;
};

/// Uniform perfect matching of the delta*n points (point p belongs to vertex
/// p / delta). The lowest unmatched point is paired with a uniformly chosen
/// point among the other unmatched ones.
inline Multigraph configuration_multigraph(std::size_t n, std::size_t delta, SplitMix64& rng) {
  if (delta == 0) throw Error(Errc::too_small, "degree must be at least 1");
  if ((n * delta) % 2 != 0) {
    throw Error(Errc::odd_degree_sum,
                "n*delta = " + std::to_string(n * delta) + " is odd; no such graph exists");
  }
  const std::size_t points = n * delta;
  // pool holds the unmatched points; where[p] is p's slot in pool.
  std::vector<std::uint32_t> pool(points);
  std::vector<std::uint32_t> where(points);
  std::vector<bool> matched(points, false);
  for (std::uint32_t p = 0; p < points; ++p) pool[p] = where[p] = p;

  auto take = [&](std::uint32_t p) {
    const std::uint32_t last = pool.back();
    pool[where[p]] = last;
    where[last] = where[p];
    pool.pop_back();
    matched[p] = true;
  };

  Multigraph m{n, delta, {}};
  m.pairs.reserve(points / 2);
  std::size_t lowest = 0;
  while (!pool.empty()) {
    while (matched[lowest]) ++lowest;
    const auto first = static_cast<std::uint32_t>(lowest);
    take(first);
    const std::uint32_t partner = pool[rng.below(pool.size())];
    take(partner);
    m.pairs.push_back({static_cast<Vertex>(first / delta), static_cast<Vertex>(partner / delta)});
  }
  return m;
}

struct RegularSample {
  Graph graph;
  std::size_t attempts;  // configurations drawn, the accepted one included
};

/// Rejection sampling over configuration_multigraph until the multigraph is
/// simple and connected; uniform over labeled connected delta-regular graphs.
inline RegularSample random_regular_sample(std::size_t n, std::size_t delta, SplitMix64& rng,
                                           std::size_t max_attempts = default_max_attempts) {
  if (delta < 2) throw Error(Errc::too_small, "random regular graphs need delta >= 2");
  if ((n * delta) % 2 != 0) {
    throw Error(Errc::odd_degree_sum,
                "n*delta = " + std::to_string(n * delta) + " is odd; no such graph exists");
  }
  if (delta >= n) {
    throw Error(Errc::degree_too_large,
                "delta = " + std::to_string(delta) + " needs more than n = " + std::to_string(n) + " vertices");
  }
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    auto m = configuration_multigraph(n, delta, rng);
    if (!m.is_simple() || !is_connected(m)) continue;
    return {Graph::build(n, m.pairs), attempt};
  }
  throw Error(Errc::attempts_exhausted, "no simple connected " + std::to_string(delta) +
                                           "-regular graph on " + std::to_string(n) + " vertices after " +
                                           std::to_string(max_attempts) + " attempts");
}

inline Graph random_regular(std::size_t n, std::size_t delta, SplitMix64& rng,
                            std::size_t max_attempts = default_max_attempts) {
  return random_regular_sample(n, delta, rng, max_attempts).graph;
}

inline Graph ring(std::size_t n) {
  if (n < 3) throw Error(Errc::too_small, "ring needs n >= 3, got " + std::to_string(n));
  std::vector<VertexPair> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  }
  return Graph::build(n, edges);
}

/// Level-order complete binary tree: root 0, children of i are 2i+1 and 2i+2.
inline Graph complete_binary_tree(std::size_t depth) {
  if (depth > 24) throw Error(Errc::too_large, "tree depth " + std::to_string(depth));
  const std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<VertexPair> edges;
  edges.reserve(n - 1);
  for (std::size_t child = 1; child < n; ++child) {
    edges.push_back({static_cast<Vertex>((child - 1) / 2), static_cast<Vertex>(child)});
  }
  return Graph::build(n, edges);
}

// Edge-list text format: "n m" header, then m lines "u v"; '#' lines ignored.

inline Graph parse_edge_list(std::istream& in, Connectivity connectivity = Connectivity::required) {
  std::string line;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<VertexPair> edges;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    if (!(fields >> a >> b)) fail("expected two integers");
    std::string extra;
    if (fields >> extra) fail("trailing field '" + extra + "'");
    if (a < 0 || b < 0) fail("negative value");
    if (!header) {
      header.emplace(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      continue;
    }
    if (edges.size() == header->second) fail("more edge lines than the header's m = " + std::to_string(header->second));
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!header) throw Error(Errc::parse_error, "missing 'n m' header");
  if (edges.size() != header->second) {
    throw Error(Errc::parse_error, "header promises " + std::to_string(header->second) + " edges, found " +
                                       std::to_string(edges.size()));
  }
  return Graph::build(header->first, edges, connectivity);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

inline Graph load_edge_list(const std::filesystem::path& path,
                            Connectivity connectivity = Connectivity::required) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
  return parse_edge_list(in, connectivity);
}

inline void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path.string());
  write_edge_list(out, g);
}

inline Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::random_regular: {
      SplitMix64 rng(spec.seed);
      return random_regular(spec.n, spec.delta, rng, spec.max_attempts);
    }
    case Family::ring: return ring(spec.n);
    case Family::binary_tree: return complete_binary_tree(spec.depth);
    case Family::file: return load_edge_list(spec.path);
  }
  throw Error(Errc::bad_config, "unknown family");
}

}  // namespace distrecon

#endif  // DISTRECON_GENERATORS_HPP
