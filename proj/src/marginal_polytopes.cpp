#include "margpoly/marginal_polytopes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "margpoly/double_description.hpp"
#include "margpoly/error.hpp"
#include "margpoly/lp.hpp"
#include "margpoly/redundancy.hpp"

namespace margpoly {

namespace {

constexpr int kMaxCompatibilityVertices = 20;
constexpr std::size_t kMaxHrepDimension = 16;

// Moves the vertex block of each row to the right-hand side.
LinearSystem substitute(const Graph& g, const LinearSystem& full, const RationalVector& p) {
  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  const std::size_t m = g.num_edges();
  LinearSystem out(m, edge_names(g));
  for (const auto& row : full.inequalities) {
    Rational c = row.c;
    for (std::size_t i = 0; i < n; ++i) c -= row.a[i] * p[i];
    RationalVector a(row.a.begin() + static_cast<std::ptrdiff_t>(n), row.a.end());
    if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) {
      if (c < 0) out.infeasible = true;
      continue;
    }
    out.add_inequality(std::move(a), std::move(c));
  }
  return out;
}

}  // namespace

std::vector<std::string> edge_names(const Graph& g) {
  std::vector<std::string> names;
  for (const auto& e : g.edges()) names.push_back("q" + std::to_string(e.u) + "_" + std::to_string(e.v));
  return names;
}

std::vector<std::string> coordinate_names(const Graph& g) {
  std::vector<std::string> names;
  for (int i = 0; i < g.num_vertices(); ++i) names.push_back("p" + std::to_string(i));
  for (auto& q : edge_names(g)) names.push_back(std::move(q));
  return names;
}

RationalVector symmetric_marginals(const Graph& g, const Rational& t) {
  return RationalVector(static_cast<std::size_t>(g.num_vertices()), t);
}

void check_marginals(const Graph& g, const RationalVector& p) {
  if (p.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw Error(ErrorKind::InvalidMarginal, "expected one marginal per vertex");
  }
  for (const auto& x : p) {
    if (x < 0 || x > 1) throw Error(ErrorKind::InvalidMarginal, "marginal " + to_string(x) + " outside [0,1]");
  }
}

PointList cor_vertices(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kMaxCompatibilityVertices) throw Error(ErrorKind::UnsupportedSize, "too many vertices for 2^n enumeration");
  const std::size_t d = static_cast<std::size_t>(n) + g.num_edges();
  PointList out(d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto bit = [&](int i) { return static_cast<int>((mask >> (n - 1 - i)) & 1); };
    RationalVector u(d);
    for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] = bit(i);
    std::size_t k = static_cast<std::size_t>(n);
    for (const auto& e : g.edges()) u[k++] = bit(e.u) * bit(e.v);
    out.points.push_back(std::move(u));
  }
  return out;
}

LinearSystem cor_hrep(const Graph& g) {
  static std::shared_mutex mutex;
  static std::map<Graph, LinearSystem> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(g); it != cache.end()) return it->second;
  }
  const std::size_t d = static_cast<std::size_t>(g.num_vertices()) + g.num_edges();
  if (d > kMaxHrepDimension) throw Error(ErrorKind::UnsupportedSize, "correlation polytope too large for exact facet enumeration");
  LinearSystem h = vrep_to_hrep(cor_vertices(g), coordinate_names(g));
  std::sort(h.inequalities.begin(), h.inequalities.end(),
            [](const Row& a, const Row& b) { return normalize(a) < normalize(b); });
  std::unique_lock lock(mutex);
  return cache.emplace(g, std::move(h)).first->second;
}

LinearSystem tra_hrep(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  const std::size_t d = n + g.num_edges();
  LinearSystem h(d, coordinate_names(g));
  std::size_t k = n;
  for (const auto& e : g.edges()) {
    const std::size_t i = static_cast<std::size_t>(e.u);
    const std::size_t j = static_cast<std::size_t>(e.v);
    RationalVector a(d);
    a[k] = -1;
    h.add_inequality(a, 0);
    a[k] = 1;
    a[i] = -1;
    h.add_inequality(a, 0);
    a[i] = 0;
    a[j] = -1;
    h.add_inequality(a, 0);
    a[k] = -1;
    a[i] = 1;
    a[j] = 1;
    h.add_inequality(a, 1);
    ++k;
  }
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector a(d);
    a[i] = -1;
    h.add_inequality(a, 0);
    a[i] = 1;
    h.add_inequality(a, 1);
  }
  return h;
}

LinearSystem l_slice(const Graph& g, const RationalVector& p) {
  check_marginals(g, p);
  return remove_redundant(substitute(g, cor_hrep(g), p));
}

std::pair<RationalVector, RationalVector> n_slice_box(const Graph& g, const RationalVector& p) {
  check_marginals(g, p);
  RationalVector lo;
  RationalVector hi;
  for (const auto& e : g.edges()) {
    const Rational& a = p[static_cast<std::size_t>(e.u)];
    const Rational& b = p[static_cast<std::size_t>(e.v)];
    lo.push_back(std::max(Rational(0), a + b - 1));
    hi.push_back(std::min(a, b));
  }
  return {lo, hi};
}

LinearSystem n_slice(const Graph& g, const RationalVector& p) {
  auto [lo, hi] = n_slice_box(g, p);
  LinearSystem box = box_system(lo, hi);
  box.names = edge_names(g);
  return box;
}

LinearSystem unit_box_l_slice(const Graph& g, const RationalVector& p) {
  auto [lo, hi] = n_slice_box(g, p);
  for (std::size_t e = 0; e < lo.size(); ++e) {
    if (lo[e] == hi[e]) throw Error(ErrorKind::Degenerate, "transportation interval of an edge is a single point");
  }
  LinearSystem raw = substitute(g, cor_hrep(g), p);
  LinearSystem out(raw.dim, raw.names);
  out.infeasible = raw.infeasible;
  for (auto& row : raw.inequalities) {
    Rational c = row.c;
    for (std::size_t e = 0; e < lo.size(); ++e) {
      c -= row.a[e] * lo[e];
      row.a[e] *= hi[e] - lo[e];
    }
    out.add_inequality(std::move(row.a), std::move(c));
  }
  return out;
}

ScaledSlices scaled_slices(const Graph& g, const Rational& t) {
  if (t <= 0 || t > Rational(1, 2)) {
    throw Error(ErrorKind::UseSymmetry, "scaled slices need t in (0, 1/2]; use 1 - t for t > 1/2");
  }
  const RationalVector p = symmetric_marginals(g, t);
  LinearSystem l = l_slice(g, p);
  for (auto& row : l.inequalities) {
    for (auto& x : row.a) x *= t;
  }
  LinearSystem n = box_system(RationalVector(g.num_edges(), 0), RationalVector(g.num_edges(), 1));
  n.names = l.names;
  return {std::move(l), std::move(n)};
}

const char* to_string(Compatibility c) {
  switch (c) {
    case Compatibility::Compatible: return "compatible";
    case Compatibility::Incompatible: return "incompatible";
    case Compatibility::NotNonSignaling: return "not-even-non-signaling";
  }
  return "unknown";
}

Compatibility compatibility(const Graph& g, const RationalVector& p, const RationalVector& q) {
  const int n = g.num_vertices();
  if (n > kMaxCompatibilityVertices) throw Error(ErrorKind::UnsupportedSize, "too many vertices for the compatibility LP");
  check_marginals(g, p);
  if (q.size() != g.num_edges()) throw Error(ErrorKind::Invalid, "expected one joint value per edge");
  auto [lo, hi] = n_slice_box(g, p);
  for (std::size_t e = 0; e < q.size(); ++e) {
    if (q[e] < lo[e] || q[e] > hi[e]) return Compatibility::NotNonSignaling;
  }
  const PointList u = cor_vertices(g);
  const std::size_t d = u.dim;
  std::vector<RationalVector> A(d + 1, RationalVector(u.size()));
  RationalVector b(d + 1);
  for (std::size_t k = 0; k < u.size(); ++k) {
    A[0][k] = 1;
    for (std::size_t j = 0; j < d; ++j) A[j + 1][k] = u.points[k][j];
  }
  b[0] = 1;
  for (std::size_t i = 0; i < p.size(); ++i) b[i + 1] = p[i];
  for (std::size_t e = 0; e < q.size(); ++e) b[p.size() + e + 1] = q[e];
  const LpResult r = solve_standard_form(A, b, RationalVector(u.size()));
  return r.status == LpStatus::Optimal ? Compatibility::Compatible : Compatibility::Incompatible;
}

bool is_compatible(const Graph& g, const RationalVector& p, const RationalVector& q) {
  return compatibility(g, p, q) == Compatibility::Compatible;
}

}  // namespace margpoly
