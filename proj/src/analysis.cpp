#include "margpoly/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "margpoly/error.hpp"
#include "margpoly/inequality_catalog.hpp"
#include "margpoly/marginal_polytopes.hpp"
#include "margpoly/volume.hpp"

namespace margpoly {

namespace {

const Rational kHalf(1, 2);

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_bits(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
}

// Rows of the unit-box slice scaled to integers: a . k <= c * 2^53 for x = k / 2^53.
struct IntegerRows {
  std::vector<std::vector<std::int64_t>> small_a;
  std::vector<__int128> small_c;
  std::vector<IntegerVector> big_a;
  std::vector<Integer> big_c;
  bool fast = true;
};

constexpr int kDyadicBits = 53;

IntegerRows integer_rows(const LinearSystem& l) {
  IntegerRows out;
  const Integer limit_a = Integer(1) << 40;
  const Integer limit_c = Integer(1) << 60;
  for (const auto& row : l.inequalities) {
    RationalVector all = row.a;
    all.push_back(row.c);
    IntegerVector ints = primitive_integer(all);
    bool small = abs(ints.back()) < limit_c && ints.size() < 1024;
    Integer c = ints.back() << kDyadicBits;
    ints.pop_back();
    for (const auto& x : ints) small = small && abs(x) < limit_a;
    if (small && out.fast) {
      std::vector<std::int64_t> a;
      for (const auto& x : ints) a.push_back(x.convert_to<std::int64_t>());
      out.small_a.push_back(std::move(a));
      const Integer mag = abs(c);
      const Integer hi = mag >> 64;
      const Integer lo = mag - (hi << 64);
      __int128 v = (static_cast<__int128>(hi.convert_to<std::uint64_t>()) << 64) +
                   static_cast<__int128>(lo.convert_to<std::uint64_t>());
      out.small_c.push_back(c < 0 ? -v : v);
    } else {
      out.fast = false;
    }
    out.big_a.push_back(std::move(ints));
    out.big_c.push_back(std::move(c));
  }
  return out;
}

bool contains_dyadic(const IntegerRows& rows, const std::vector<std::uint64_t>& k) {
  if (rows.fast) {
    for (std::size_t r = 0; r < rows.small_a.size(); ++r) {
      __int128 s = 0;
      const auto& a = rows.small_a[r];
      for (std::size_t j = 0; j < a.size(); ++j) s += static_cast<__int128>(a[j]) * static_cast<__int128>(k[j]);
      if (s > rows.small_c[r]) return false;
    }
    return true;
  }
  for (std::size_t r = 0; r < rows.big_a.size(); ++r) {
    Integer s = 0;
    for (std::size_t j = 0; j < k.size(); ++j) s += rows.big_a[r][j] * Integer(k[j]);
    if (s > rows.big_c[r]) return false;
  }
  return true;
}

}  // namespace

RatioResult ratio_at(const Graph& g, const RationalVector& p) {
  check_marginals(g, p);
  RatioResult out;
  if (g.num_edges() == 0) {
    out.ratio = 1;
    return out;
  }
  auto [lo, hi] = n_slice_box(g, p);
  for (std::size_t e = 0; e < lo.size(); ++e) {
    if (lo[e] == hi[e]) {
      out.degenerate = true;
      out.full_dimensional = false;
      return out;
    }
  }
  const VolumeResult v = volume(unit_box_l_slice(g, p));
  out.ratio = v.volume;
  out.full_dimensional = v.full_dimensional;
  return out;
}

RatioResult symmetric_ratio(const Graph& g, const Rational& t) {
  if (t < 0 || t > 1) throw Error(ErrorKind::InvalidMarginal, "t outside [0,1]");
  const Rational s = t > kHalf ? Rational(1 - t) : t;
  return ratio_at(g, symmetric_marginals(g, s));
}

std::vector<Rational> default_grid() {
  std::vector<Rational> grid;
  for (int k = 1; k < 60; ++k) grid.emplace_back(k, 60);
  return grid;
}

std::vector<CurvePoint> ratio_curve(const Graph& g, const std::vector<Rational>& grid, int threads) {
  std::vector<Rational> folded;
  for (const auto& t : grid) {
    if (t <= 0 || t >= 1) throw Error(ErrorKind::InvalidParameter, "grid points must lie in (0,1)");
    folded.push_back(t > kHalf ? Rational(1 - t) : t);
  }
  std::vector<Rational> unique = folded;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  std::vector<RatioResult> values(unique.size());
  parallel_for(unique.size(), threads, [&](std::size_t i) { values[i] = symmetric_ratio(g, unique[i]); });
  std::vector<CurvePoint> curve;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto idx = static_cast<std::size_t>(std::lower_bound(unique.begin(), unique.end(), folded[i]) - unique.begin());
    curve.push_back({grid[i], values[idx].ratio, values[idx].degenerate});
  }
  return curve;
}

FallOff fall_off_analysis(const Graph& g, bool validate) {
  FallOff out;
  const LinearSystem h = cor_hrep(g);
  std::map<Rational, std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < h.inequalities.size(); ++r) {
    const Row& row = h.inequalities[r];
    if (row.c < 0) throw Error(ErrorKind::Invalid, "correlation facet with negative constant");
    const ActivationThreshold a = activation_threshold(row, g.num_vertices());
    if (a.kind == ActivationThreshold::Kind::Active && !a.beyond_half) groups[a.t].push_back(r);
  }
  for (auto& [t, rows] : groups) out.breakpoints.push_back({t, rows, std::nullopt});

  auto eval = [&](const Rational& t) {
    auto it = out.samples.find(t);
    if (it != out.samples.end()) return it->second;
    const Rational r = symmetric_ratio(g, t).ratio;
    out.samples[t] = r;
    return r;
  };
  out.tau = kHalf;
  for (std::size_t i = 0; i < out.breakpoints.size(); ++i) {
    Breakpoint& b = out.breakpoints[i];
    if (b.t <= 0) throw Error(ErrorKind::Invalid, "fall-off value is not positive");
    if (b.t == kHalf) {
      b.cuts = true;
      break;
    }
    const Rational next = i + 1 < out.breakpoints.size() ? out.breakpoints[i + 1].t : kHalf;
    b.cuts = eval((b.t + next) / 2) < eval(b.t);
    if (*b.cuts) {
      out.tau = b.t;
      break;
    }
  }
  if (!validate) return out;

  const Rational base = eval(out.tau);
  bool ok = eval(out.tau / 2) == base && eval(out.tau * 3 / 4) == base;
  if (out.tau < kHalf) ok = ok && eval(out.tau + Rational(1, 100)) < base;
  out.validated = ok;
  return out;
}

Rational fall_off(const Graph& g) { return fall_off_analysis(g, false).tau; }

RatioReport report(const Graph& g, const std::string& graph_id, const std::vector<Rational>& grid, int threads) {
  RatioReport r;
  r.graph_id = graph_id;
  FallOff f = fall_off_analysis(g, true);
  r.tau = f.tau;
  r.breakpoints = f.breakpoints;
  r.validated = f.validated;
  r.rho0 = f.samples.at(f.tau / 2);
  r.rho_half = f.samples.count(kHalf) ? f.samples.at(kHalf) : symmetric_ratio(g, kHalf).ratio;
  if (!grid.empty()) {
    r.curve = ratio_curve(g, grid, threads);
    for (const auto& pt : r.curve) {
      const Rational folded = pt.t > kHalf ? Rational(1 - pt.t) : pt.t;
      if (folded < r.tau && pt.ratio != r.rho0) r.constant_below_tau = false;
    }
  }
  return r;
}

Rational dyadic_uniform(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t k = stream_bits(seed, index) >> (64 - kDyadicBits);
  return Rational(Integer(k), Integer(1) << kDyadicBits);
}

McEstimate monte_carlo_ratio(const Graph& g, const RationalVector& p, std::uint64_t samples, std::uint64_t seed,
                             int threads, McOracle oracle) {
  if (samples == 0) throw Error(ErrorKind::InvalidParameter, "need at least one sample");
  check_marginals(g, p);
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.oracle = oracle;
  const std::size_t m = g.num_edges();
  auto [lo, hi] = n_slice_box(g, p);
  for (std::size_t e = 0; e < m; ++e) {
    if (lo[e] == hi[e]) throw Error(ErrorKind::Degenerate, "transportation box has a zero-width edge interval");
  }

  IntegerRows rows;
  if (oracle == McOracle::HRep && m > 0) rows = integer_rows(unit_box_l_slice(g, p));

  const std::size_t workers = static_cast<std::size_t>(std::max(threads, 1));
  std::vector<std::uint64_t> hits(workers, 0);
  parallel_for(workers, static_cast<int>(workers), [&](std::size_t w) {
    std::vector<std::uint64_t> k(m);
    RationalVector q(m);
    for (std::uint64_t s = w; s < samples; s += workers) {
      for (std::size_t e = 0; e < m; ++e) k[e] = stream_bits(seed, s * m + e) >> (64 - kDyadicBits);
      bool in = false;
      if (m == 0) {
        in = true;
      } else if (oracle == McOracle::HRep) {
        in = contains_dyadic(rows, k);
      } else {
        for (std::size_t e = 0; e < m; ++e) {
          q[e] = lo[e] + (hi[e] - lo[e]) * Rational(Integer(k[e]), Integer(1) << kDyadicBits);
        }
        in = is_compatible(g, p, q);
      }
      hits[w] += in;
    }
  });
  for (auto h : hits) est.hits += h;
  est.estimate = static_cast<double>(est.hits) / static_cast<double>(samples);
  est.standard_error = std::sqrt(est.estimate * (1 - est.estimate) / static_cast<double>(samples));
  return est;
}

ConjectureCheck check_conjecture(const Graph& g) {
  ConjectureCheck c;
  c.tau = fall_off(g);
  c.treewidth = treewidth(g);
  c.conjectured_tau = Rational(1, c.treewidth + 1);
  c.holds = c.tau == c.conjectured_tau;
  return c;
}

GlueReport check_glue_laws(const Graph& g1, const Graph& g2, int v1, int v2, const Rational& t, bool check_tau) {
  GlueReport r;
  r.glued = glue(g1, g2, {{v2, v1}});
  r.t = t;
  r.ratio_g1 = symmetric_ratio(g1, t).ratio;
  r.ratio_g2 = symmetric_ratio(g2, t).ratio;
  r.ratio_glued = symmetric_ratio(r.glued, t).ratio;
  r.product_law = r.ratio_glued == r.ratio_g1 * r.ratio_g2;
  if (g2.is_forest()) r.tree_invariance = r.ratio_glued == r.ratio_g1;
  if (check_tau) {
    r.tau_g1 = fall_off(g1);
    r.tau_g2 = fall_off(g2);
    r.tau_glued = fall_off(r.glued);
    r.tau_law = r.tau_glued == std::min(r.tau_g1, r.tau_g2);
  }
  return r;
}

GlueReport check_glue_laws(const Graph& g1, const Graph& g2, const std::map<int, int>& identification,
                           const Rational& t, bool check_tau) {
  if (identification.size() != 1) throw Error(ErrorKind::Unsupported, "gluing laws are checked for single-vertex gluing only");
  const auto& [v2, v1] = *identification.begin();
  return check_glue_laws(g1, g2, v1, v2, t, check_tau);
}

namespace {

nlohmann::json curve_json(const std::vector<CurvePoint>& curve) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& pt : curve) {
    nlohmann::json j = {{"t", to_string(pt.t)}, {"ratio", to_string(pt.ratio)}};
    if (pt.degenerate) j["degenerate"] = true;
    out.push_back(j);
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const RatioReport& r) {
  nlohmann::json bps = nlohmann::json::array();
  for (const auto& b : r.breakpoints) {
    nlohmann::json j = {{"t", to_string(b.t)}, {"facets", b.rows}};
    if (b.cuts) j["cuts"] = *b.cuts;
    bps.push_back(j);
  }
  return {{"graph", r.graph_id},
          {"tau", to_string(r.tau)},
          {"rho0", to_string(r.rho0)},
          {"rho_half", to_string(r.rho_half)},
          {"validated", r.validated},
          {"constant_below_tau", r.constant_below_tau},
          {"breakpoints", bps},
          {"curve", curve_json(r.curve)}};
}

nlohmann::json to_json(const McEstimate& m) {
  return {{"hits", m.hits},
          {"samples", m.samples},
          {"estimate", m.estimate},
          {"stderr", m.standard_error},
          {"seed", m.seed},
          {"oracle", m.oracle == McOracle::HRep ? "hrep" : "lp"}};
}

nlohmann::json to_json(const ConjectureCheck& c) {
  return {{"tau", to_string(c.tau)},
          {"treewidth", c.treewidth},
          {"conjectured_tau", to_string(c.conjectured_tau)},
          {"verdict", c.holds ? "holds" : "fails"}};
}

nlohmann::json to_json(const GlueReport& g) {
  nlohmann::json j = {{"glued", to_json(g.glued)},
                      {"t", to_string(g.t)},
                      {"ratio_g1", to_string(g.ratio_g1)},
                      {"ratio_g2", to_string(g.ratio_g2)},
                      {"ratio_glued", to_string(g.ratio_glued)},
                      {"product_law", g.product_law}};
  if (g.tree_invariance) j["tree_invariance"] = *g.tree_invariance;
  if (g.tau_law) {
    j["tau_law"] = *g.tau_law;
    j["tau_g1"] = to_string(g.tau_g1);
    j["tau_g2"] = to_string(g.tau_g2);
    j["tau_glued"] = to_string(g.tau_glued);
  }
  return j;
}

}  // namespace margpoly
