#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace margpoly {

struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with a sorted edge list.
///
/// The edge order is canonical (lexicographic) and fixes the order of the
/// edge coordinates q_e in every polytope built from the graph.
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalizes; throws on self-loops, duplicates or bad endpoints.
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(int a, int b) const;
  /// Index of edge {a,b} in the canonical order, or -1.
  int edge_index(int a, int b) const;
  std::vector<int> neighbors(int v) const;
  std::vector<int> degrees() const;
  bool is_forest() const;
  bool is_connected() const;

  auto operator<=>(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite_graph(int m, int n);

/// Same vertex set minus edge e; throws not-found if e is absent.
Graph remove_edge(const Graph& g, Edge e);

/// Glues g2 onto g1. `identification` maps a subset of g2's vertices to g1's
/// vertices; identified vertices must induce the same subgraph in both.
/// g1 keeps its labels; the remaining g2 vertices follow in increasing order.
Graph glue(const Graph& g1, const Graph& g2, const std::map<int, int>& identification);

/// Edge-complement on the same vertex set.
Graph complement(const Graph& g);

/// Exact treewidth by dynamic programming over vertex subsets (n <= 12).
int treewidth(const Graph& g);

/// Brute-force isomorphism test over all permutations (n <= 8).
bool isomorphic(const Graph& a, const Graph& b);

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

std::string to_string(const Graph& g);

}  // namespace margpoly
