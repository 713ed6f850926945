#include "margpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "margpoly/error.hpp"

namespace margpoly {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "negative vertex count");
  for (auto& e : edges) {
    if (e.u == e.v) throw Error(ErrorKind::InvalidParameter, "self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorKind::InvalidParameter,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorKind::InvalidParameter, "duplicate edge");
  }
  edges_ = std::move(edges);
}

bool Graph::has_edge(int a, int b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
  if (it == edges_.end() || *it != Edge{a, b}) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool Graph::is_forest() const {
  DisjointSets sets(n_);
  for (const auto& e : edges_) {
    if (!sets.unite(e.u, e.v)) return false;
  }
  return true;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  DisjointSets sets(n_);
  int components = n_;
  for (const auto& e : edges_) {
    if (sets.unite(e.u, e.v)) --components;
  }
  return components == 1;
}

Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidParameter, "complete bipartite graph needs m, n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.push_back({i, m + j});
  return Graph(m + n, std::move(edges));
}

Graph remove_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw Error(ErrorKind::NotFound, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
  }
  if (e.u > e.v) std::swap(e.u, e.v);
  std::vector<Edge> edges;
  for (const auto& f : g.edges())
    if (f != e) edges.push_back(f);
  return Graph(g.num_vertices(), std::move(edges));
}

Graph glue(const Graph& g1, const Graph& g2, const std::map<int, int>& identification) {
  std::vector<int> image_used(g1.num_vertices(), 0);
  for (const auto& [from, to] : identification) {
    if (from < 0 || from >= g2.num_vertices() || to < 0 || to >= g1.num_vertices()) {
      throw Error(ErrorKind::InvalidGluing, "identified vertex out of range");
    }
    if (image_used[to]++) throw Error(ErrorKind::InvalidGluing, "identification is not injective");
  }
  for (auto a = identification.begin(); a != identification.end(); ++a) {
    for (auto b = std::next(a); b != identification.end(); ++b) {
      if (g2.has_edge(a->first, b->first) != g1.has_edge(a->second, b->second)) {
        throw Error(ErrorKind::InvalidGluing, "identified vertices induce different subgraphs");
      }
    }
  }
  std::vector<int> relabel(g2.num_vertices());
  int next = g1.num_vertices();
  for (int v = 0; v < g2.num_vertices(); ++v) {
    auto it = identification.find(v);
    relabel[v] = it != identification.end() ? it->second : next++;
  }
  std::vector<Edge> edges = g1.edges();
  for (const auto& e : g2.edges()) {
    Edge mapped{std::min(relabel[e.u], relabel[e.v]), std::max(relabel[e.u], relabel[e.v])};
    if (std::find(edges.begin(), edges.end(), mapped) == edges.end()) edges.push_back(mapped);
  }
  return Graph(next, std::move(edges));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int i = 0; i < g.num_vertices(); ++i)
    for (int j = i + 1; j < g.num_vertices(); ++j)
      if (!g.has_edge(i, j)) edges.push_back({i, j});
  return Graph(g.num_vertices(), std::move(edges));
}

int treewidth(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 12) throw Error(ErrorKind::UnsupportedSize, "exact treewidth supports n <= 12");
  if (n == 0) return 0;
  std::vector<unsigned> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  // |Q(S, v)|: vertices outside S + v reachable from v through S.
  auto q_size = [&](unsigned s, int v) {
    unsigned visited = 1u << v;
    unsigned frontier = 1u << v;
    unsigned reached = 0;
    while (frontier) {
      unsigned next = 0;
      for (unsigned f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= ~visited;
      visited |= next;
      reached |= next & ~s;
      frontier = next & s;
    }
    return std::popcount(reached);
  };
  const unsigned full = (1u << n) - 1;
  std::vector<int> tw(full + 1, n);
  tw[0] = -1;
  for (unsigned s = 1; s <= full; ++s) {
    int best = n;
    for (unsigned bits = s; bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      const unsigned rest = s & ~(1u << v);
      best = std::min(best, std::max(tw[rest], q_size(rest, v)));
    }
    tw[s] = best;
  }
  return std::max(tw[full], 0);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const int n = a.num_vertices();
  if (n > 8) throw Error(ErrorKind::UnsupportedSize, "brute-force isomorphism supports n <= 8");
  auto deg_a = a.degrees();
  auto deg_b = b.degrees();
  auto sorted_a = deg_a;
  auto sorted_b = deg_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = deg_a[v] == deg_b[perm[v]];
    for (const auto& e : a.edges()) {
      if (!ok) break;
      ok = b.has_edge(perm[e.u], perm[e.v]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "edge must be a pair");
      const int u = e[0].get<int>();
      const int v = e[1].get<int>();
      if (u >= v) throw Error(ErrorKind::Parse, "edge endpoints must satisfy i < j");
      edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("graph JSON: ") + ex.what());
  }
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.num_vertices() << " edges={";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    out << (i ? "," : "") << "(" << g.edges()[i].u << "," << g.edges()[i].v << ")";
  }
  out << "}";
  return out.str();
}

}  // namespace margpoly
