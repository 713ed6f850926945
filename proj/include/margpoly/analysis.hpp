#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "margpoly/graph.hpp"
#include "margpoly/rational.hpp"

namespace margpoly {

struct RatioResult {
  Rational ratio;  // 0 when degenerate
  bool degenerate = false;
  /// False when the correlation slice is lower-dimensional (ratio is then 0).
  bool full_dimensional = true;
};

/// vol(L slice) / vol(N slice) at vertex marginals p, exact.
RatioResult ratio_at(const Graph& g, const RationalVector& p);

/// Ratio at p_i = t for all i; t > 1/2 is evaluated at 1 - t.
RatioResult symmetric_ratio(const Graph& g, const Rational& t);

struct CurvePoint {
  Rational t;
  Rational ratio;
  bool degenerate = false;
};

/// k/60 for k = 1..59.
std::vector<Rational> default_grid();

/// Exact curve; each t and 1 - t share one evaluation. `threads` <= 0 means 1.
std::vector<CurvePoint> ratio_curve(const Graph& g, const std::vector<Rational>& grid, int threads = 1);

struct Breakpoint {
  Rational t;
  std::vector<std::size_t> rows;  // indices into cor_hrep(g).inequalities
  /// Whether the ratio drops just past t; unset for thresholds above tau.
  std::optional<bool> cuts;
};

struct FallOff {
  Rational tau;
  std::vector<Breakpoint> breakpoints;  // activation thresholds <= 1/2, ascending
  /// Exact checks: ratio(tau/2) == ratio(3 tau/4) == ratio(tau), and
  /// ratio(tau + 1/100) < ratio(tau) whenever tau < 1/2.
  bool validated = false;
  std::map<Rational, Rational> samples;
};

/// Fall-off value: the smallest activation threshold of a correlation facet past which the
/// ratio actually decreases (thresholds whose facets stay redundant are skipped), or 1/2.
Rational fall_off(const Graph& g);
FallOff fall_off_analysis(const Graph& g, bool validate = true);

struct RatioReport {
  std::string graph_id;
  Rational tau;
  Rational rho0;
  Rational rho_half;
  std::vector<CurvePoint> curve;
  std::vector<Breakpoint> breakpoints;
  bool validated = false;
  /// Sampled t < tau all give rho0.
  bool constant_below_tau = true;
};

RatioReport report(const Graph& g, const std::string& graph_id, const std::vector<Rational>& grid = {},
                   int threads = 1);

enum class McOracle { HRep, Lp };

struct McEstimate {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double estimate = 0;
  double standard_error = 0;
  std::uint64_t seed = 0;
  McOracle oracle = McOracle::HRep;
};

/// Uniform samples from the transportation box, exact membership in the
/// correlation slice. Deterministic in (seed, samples) for any thread count.
/// Throws degenerate when the box has an empty edge interval.
McEstimate monte_carlo_ratio(const Graph& g, const RationalVector& p, std::uint64_t samples, std::uint64_t seed,
                             int threads = 1, McOracle oracle = McOracle::HRep);

/// The k-th uniform in [0,1) of the stream for (seed, index), as an exact dyadic.
Rational dyadic_uniform(std::uint64_t seed, std::uint64_t index);

struct ConjectureCheck {
  Rational tau;
  int treewidth = 0;
  Rational conjectured_tau;
  bool holds = false;
};

ConjectureCheck check_conjecture(const Graph& g);

struct GlueReport {
  Graph glued;
  Rational t;
  Rational ratio_g1;
  Rational ratio_g2;
  Rational ratio_glued;
  bool product_law = false;
  std::optional<bool> tree_invariance;  // set when g2 is a forest
  std::optional<bool> tau_law;          // set when fall-off values were computed
  Rational tau_g1;
  Rational tau_g2;
  Rational tau_glued;
};

/// Glues g2's vertex v2 onto g1's vertex v1 and checks the gluing laws at t.
GlueReport check_glue_laws(const Graph& g1, const Graph& g2, int v1, int v2, const Rational& t,
                           bool check_tau = false);

/// Same, for an arbitrary identification; anything other than a single vertex throws unsupported.
GlueReport check_glue_laws(const Graph& g1, const Graph& g2, const std::map<int, int>& identification,
                           const Rational& t, bool check_tau = false);

nlohmann::json to_json(const RatioReport& r);
nlohmann::json to_json(const McEstimate& m);
nlohmann::json to_json(const ConjectureCheck& c);
nlohmann::json to_json(const GlueReport& g);

}  // namespace margpoly
