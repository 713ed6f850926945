#pragma once

#include <optional>
#include <string>
#include <vector>

#include "margpoly/graph.hpp"
#include "margpoly/rational.hpp"

namespace margpoly {

struct NamedGraph {
  std::string name;
  Graph graph;
  int table = 0;
  std::optional<int> expected_treewidth;
  std::optional<Rational> expected_tau;
  std::optional<Rational> expected_rho0;
  std::optional<Rational> expected_rho_half;
  /// The printed name does not pin down the edge list; the stored edges were
  /// chosen to match the expected parameters.
  bool name_ambiguous = false;
  /// Exact volumes in 9 or more edge dimensions; gated behind an explicit opt-in.
  bool slow = false;
  std::string note;
};

/// Entries of the parameter tables, in table order.
const std::vector<NamedGraph>& catalog();

/// Catalog lookup; throws not-found.
const NamedGraph& named(const std::string& name);

/// Catalog name or a pattern: K<n>, C<n>, path<n>, tree:path<n>, K<m>,<n>.
Graph resolve_graph(const std::string& name);

}  // namespace margpoly
