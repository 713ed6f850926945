#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "margpoly/graph.hpp"
#include "margpoly/linear_system.hpp"
#include "margpoly/rational.hpp"

namespace margpoly {

enum class Family { Box, OddCycle, MNegative, InclusionExclusion };

const char* to_string(Family f);

/// Family parameters; which fields are set depends on the family.
struct InequalityMeta {
  std::vector<int> cycle;           // odd-cycle: vertex sequence
  std::vector<Edge> odd_edges;      // odd-cycle: the odd subset M
  std::vector<int> negative_edges;  // m-negative: cycle positions i with gamma_i = -1
  std::vector<int> events;          // inclusion-exclusion: I
  std::vector<int> complemented;    // inclusion-exclusion: T, a subset of I
  bool lower_bound = false;         // inclusion-exclusion: P(union) >= 0 form
};

/// a . (p, q) <= c over the coordinates of a graph on `num_vertices` vertices.
struct TaggedInequality {
  Row row;
  Family family = Family::Box;
  int num_vertices = 0;
  InequalityMeta meta;
};

/// Transportation rows q >= 0, q <= p_i, q <= p_j, p_i + p_j - q <= 1 per edge.
std::vector<TaggedInequality> box_inequalities(const Graph& g);

/// Simple cycles, each as a vertex sequence starting at its smallest vertex,
/// one orientation per cycle.
std::vector<std::vector<int>> simple_cycles(const Graph& g);

std::vector<TaggedInequality> odd_cycle_inequalities(const Graph& g);

/// Cycle inequalities over cycle_graph(n) coordinates, edges (i, i+1 mod n).
std::vector<TaggedInequality> m_negative_inequalities(int n);

/// Pairwise-truncated union bounds over complete_graph(n) coordinates;
/// duplicate and vacuous rows are omitted.
std::vector<TaggedInequality> inclusion_exclusion_inequalities(int n);

struct ActivationThreshold {
  enum class Kind { TIndependent, NeverActive, Active };
  Kind kind = Kind::TIndependent;
  Rational t;
  bool beyond_half = false;
};

/// Symmetric-slice value of t at which the row starts to cut the scaled slice.
ActivationThreshold activation_threshold(const Row& row, int num_vertices);
ActivationThreshold activation_threshold(const TaggedInequality& ineq);

std::string to_string(const ActivationThreshold& a);

/// Families (possibly several) whose generated rows match each inequality of
/// `system` up to positive scaling. Inclusion-exclusion rows are matched only
/// when they use edges of g.
std::vector<std::vector<Family>> identify_families(const Graph& g, const LinearSystem& system);

nlohmann::json to_json(const TaggedInequality& ineq, const std::vector<std::string>& names);

}  // namespace margpoly
