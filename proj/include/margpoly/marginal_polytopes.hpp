#pragma once

#include <string>
#include <vector>

#include "margpoly/graph.hpp"
#include "margpoly/linear_system.hpp"
#include "margpoly/rational.hpp"

namespace margpoly {

/// Coordinate names: p0..p{n-1}, then q{i}_{j} in canonical edge order.
std::vector<std::string> coordinate_names(const Graph& g);
std::vector<std::string> edge_names(const Graph& g);

/// Vertex marginals p_i = t for every vertex.
RationalVector symmetric_marginals(const Graph& g, const Rational& t);

/// The 2^n deterministic points (f, f_i f_j); vertex 0 is the most significant bit.
PointList cor_vertices(const Graph& g);

/// Facets of the correlation polytope (cached per graph).
LinearSystem cor_hrep(const Graph& g);

/// Transportation inequalities plus 0 <= p_i <= 1.
LinearSystem tra_hrep(const Graph& g);

/// Correlation slice at fixed vertex marginals, over the edge coordinates, irredundant.
LinearSystem l_slice(const Graph& g, const RationalVector& p);

/// Transportation slice: the box of per-edge intervals [max(0, p_i+p_j-1), min(p_i, p_j)].
LinearSystem n_slice(const Graph& g, const RationalVector& p);

/// Lower and upper ends of the transportation intervals.
std::pair<RationalVector, RationalVector> n_slice_box(const Graph& g, const RationalVector& p);

/// Correlation slice with the substitution q = lo + (hi - lo) x, where [lo, hi]
/// is the transportation box, so the transportation slice becomes [0,1]^E.
/// Rows are not reduced. Throws degenerate when some interval is a point.
LinearSystem unit_box_l_slice(const Graph& g, const RationalVector& p);

struct ScaledSlices {
  LinearSystem l;
  LinearSystem n;
};

/// Symmetric slices at t in (0, 1/2] with q = t x.
ScaledSlices scaled_slices(const Graph& g, const Rational& t);

enum class Compatibility { Compatible, Incompatible, NotNonSignaling };

const char* to_string(Compatibility c);

/// Exact LP over the 2^n deterministic assignments.
Compatibility compatibility(const Graph& g, const RationalVector& p, const RationalVector& q);
bool is_compatible(const Graph& g, const RationalVector& p, const RationalVector& q);

/// Throws invalid-marginal unless p has length n with entries in [0,1].
void check_marginals(const Graph& g, const RationalVector& p);

}  // namespace margpoly
