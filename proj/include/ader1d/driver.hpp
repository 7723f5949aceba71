#ifndef ADER1D_DRIVER_HPP
#define ADER1D_DRIVER_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ader1d/schemes.hpp"
#include "ader1d/testcases.hpp"

namespace ader1d {

// Final state of a single simulation, erased to the 3-component layout
// (advection fills component 0 only). Primitive variables are included for
// the Euler model, conservative otherwise.
struct RunOutput {
  Grid grid;
  std::vector<std::array<double, 3>> averages;
  std::vector<std::array<double, 3>> primitives;
  double time = 0.0;
  long steps = 0;
  double cpu_seconds = 0.0;  // stepping loop only
};

struct Diagnostics {
  double total_variation = 0.0;
  double min_value = 0.0;
  double max_value = 0.0;
};

inline Diagnostics field_diagnostics(const RunOutput& out, int component = 0) {
  Diagnostics d;
  d.min_value = d.max_value = out.averages.empty() ? 0.0 : out.averages[0][component];
  for (std::size_t i = 0; i < out.averages.size(); ++i) {
    const double v = out.averages[i][component];
    d.min_value = std::min(d.min_value, v);
    d.max_value = std::max(d.max_value, v);
    if (i + 1 < out.averages.size())
      d.total_variation += std::abs(out.averages[i + 1][component] - v);
  }
  return d;
}

namespace detail {

template <int N>
std::function<std::array<double, N>(double)> narrow_ic(const TestCase& tc) {
  return [&tc](double x) {
    const auto v = tc.ic(x);
    std::array<double, N> out{};
    for (int c = 0; c < N; ++c) out[c] = v[c];
    return out;
  };
}

template <class Model>
RunOutput run_typed(const Model& model, const TestCase& tc, const SchemeConfig& cfg, int mesh,
                    double t_end) {
  constexpr int N = Model::num_vars;
  cfg.validate();
  const Grid grid = build_grid(tc.x_min, tc.x_max, mesh, tc.boundary);
  const int m = cfg.degree();
  const PredictorOperator pred_op(m);
  const double t_tol = 1e-12 * std::max(1.0, std::abs(t_end));

  RunOutput out;
  out.grid = grid;

  const auto clock_start = std::chrono::steady_clock::now();
  long steps = 0;
  double final_time = 0.0;

  if (cfg.scheme == SchemeType::dg) {
    DgField<N> dg;
    dg.grid = grid;
    {
      // modal projection of the initial condition, split at IC breaks
      const QuadratureRule rule = gauss_legendre(std::min(10, std::max(m + 2, 6)));
      dg.polys.resize(grid.num_cells);
      const auto ic = narrow_ic<N>(tc);
      for (int i = 0; i < grid.num_cells; ++i) {
        CellPoly<N>& p = dg.polys[i];
        p.degree = m;
        p.cell = i;
        p.dx = grid.dx;
        const double a = grid.cell_left(i), b = a + grid.dx;
        std::vector<double> edges{a};
        for (double s : tc.ic_breaks)
          if (s > a && s < b) edges.push_back(s);
        std::sort(edges.begin() + 1, edges.end());
        edges.push_back(b);
        for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
          for (int g = 0; g < rule.size(); ++g) {
            const double x = edges[e] + rule.nodes[g] * (edges[e + 1] - edges[e]);
            const double xi = (x - a) / grid.dx;
            const auto v = ic(x);
            const double frac = rule.weights[g] * (edges[e + 1] - edges[e]) / grid.dx;
            for (int k = 0; k <= m; ++k) {
              const double w = frac * legendre::basis_value(k, xi) * (2 * k + 1);
              for (int c = 0; c < N; ++c) p.coeff[k][c] += w * v[c];
            }
          }
        }
      }
    }
    DgField<N> next;
    while (t_end - dg.time > t_tol) {
      const FieldState<N> means = dg_cell_averages(dg);
      const double dt = timestep(cfg, model, means, t_end);
      dg_step(cfg, model, pred_op, dg, dt, next);
      std::swap(dg, next);
      ++steps;
    }
    const FieldState<N> means = dg_cell_averages(dg);
    out.averages.assign(grid.num_cells, {});
    for (int i = 0; i < grid.num_cells; ++i)
      for (int c = 0; c < N; ++c) out.averages[i][c] = means.averages[i][c];
    final_time = dg.time;
  } else {
    FieldState<N> state;
    state.grid = grid;
    state.averages = cell_averages_split<N>(grid, narrow_ic<N>(tc), m + 1, tc.ic_breaks);
    InterfaceLedger<N> ledger;
    FieldState<N> next;
    InterfaceLedger<N> ledger_next;

    ReconMethod method = ReconMethod::grprec;
    if (cfg.scheme == SchemeType::fv_grprec_nl) method = ReconMethod::grprec_nl;
    if (cfg.scheme == SchemeType::fv_weno_dk) method = ReconMethod::weno_dk;

    while (t_end - state.time > t_tol) {
      const double dt = timestep(cfg, model, state, t_end);
      if (state.step == 0 && method != ReconMethod::weno_dk) {
        const bool central = cfg.bootstrap == BootstrapMethod::central_linear;
        fv_step(cfg, ReconMethod::weno_dk, model, pred_op, state, nullptr, dt, next,
                ledger_next, central);
      } else {
        const InterfaceLedger<N>* lp = (state.step == 0) ? nullptr : &ledger;
        fv_step(cfg, method, model, pred_op, state, lp, dt, next, ledger_next);
      }
      std::swap(state, next);
      std::swap(ledger, ledger_next);
      ++steps;
    }
    out.averages.assign(grid.num_cells, {});
    for (int i = 0; i < grid.num_cells; ++i)
      for (int c = 0; c < N; ++c) out.averages[i][c] = state.averages[i][c];
    final_time = state.time;
  }

  out.cpu_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start).count();
  out.steps = steps;
  out.time = steps == 0 ? 0.0 : final_time;

  out.primitives.assign(grid.num_cells, {});
  if constexpr (N == 3) {
    const EulerModel euler(tc.gamma);
    for (int i = 0; i < grid.num_cells; ++i) {
      const EulerModel::State q{out.averages[i][0], out.averages[i][1], out.averages[i][2]};
      const auto w = euler.prim(q);
      out.primitives[i] = {w[0], w[1], w[2]};
    }
  } else {
    out.primitives = out.averages;
  }
  return out;
}

}  // namespace detail

// Single deterministic simulation of a registered test case.
inline RunOutput run_case(const TestCase& tc, const SchemeConfig& cfg, int mesh,
                          double t_end = -1.0) {
  const double t = t_end < 0.0 ? tc.t_end : t_end;
  if (tc.model == ModelKind::euler)
    return detail::run_typed(EulerModel(tc.gamma), tc, cfg, mesh, t);
  return detail::run_typed(AdvectionModel(tc.lambda), tc, cfg, mesh, t);
}

// Exact cell averages at time t (10-point Gauss-Legendre per cell, split at
// advected IC breaks for the advection model).
inline std::vector<std::array<double, 3>> exact_cell_averages(const TestCase& tc,
                                                              const Grid& grid, double t,
                                                              int quad_order = 10) {
  if (!tc.has_exact()) throw ConfigError("test case '" + tc.name + "' has no exact solution");
  std::vector<double> breaks;
  if (tc.model == ModelKind::advection)
    for (double s : tc.ic_breaks)
      breaks.push_back(testcases::wrap_periodic(s + tc.lambda * t, tc.x_min, tc.x_max));
  auto f = [&](double x) { return tc.exact(x, t); };
  return cell_averages_split<3>(grid, f, quad_order, breaks);
}

struct ConvergenceRow {
  int mesh = 0;
  double dx = 0.0;
  Norms norms;               // component 0 (scalar / density)
  double ord_linf = std::numeric_limits<double>::quiet_NaN();
  double ord_l1 = std::numeric_limits<double>::quiet_NaN();
  double ord_l2 = std::numeric_limits<double>::quiet_NaN();
  double cpu_seconds = 0.0;
  long steps = 0;
};

struct ConvergenceReport {
  std::string test;
  std::string scheme;
  int order = 0;
  std::vector<ConvergenceRow> rows;
};

inline double empirical_order(double coarse_err, double fine_err) {
  return std::log2(coarse_err / fine_err);
}

// Mesh-refinement study against the exact solution; orders are log2 ratios
// of successive errors and are defined from the second mesh onward.
inline ConvergenceReport convergence_study(const TestCase& tc, const SchemeConfig& cfg,
                                           const std::vector<int>& meshes,
                                           double t_end = -1.0) {
  if (meshes.size() < 2) throw ConfigError("convergence_study: need at least 2 meshes");
  if (!tc.has_exact()) throw ConfigError("convergence_study: no exact solution for " + tc.name);
  ConvergenceReport report;
  report.test = tc.name;
  report.scheme = scheme_name(cfg.scheme);
  report.order = cfg.order;
  const double t = t_end < 0.0 ? tc.t_end : t_end;

  for (int mesh : meshes) {
    if (mesh < 4) throw ConfigError("convergence_study: meshes must have at least 4 cells");
    const RunOutput out = run_case(tc, cfg, mesh, t);
    const auto exact = exact_cell_averages(tc, out.grid, t);
    ConvergenceRow row;
    row.mesh = mesh;
    row.dx = out.grid.dx;
    row.cpu_seconds = out.cpu_seconds;
    row.steps = out.steps;
    Norms n;
    for (int i = 0; i < out.grid.num_cells; ++i) {
      const double e = std::abs(out.averages[i][0] - exact[i][0]);
      n.linf = std::max(n.linf, e);
      n.l1 += e * out.grid.dx;
      n.l2 += e * e * out.grid.dx;
    }
    n.l2 = std::sqrt(n.l2);
    row.norms = n;
    if (!report.rows.empty()) {
      const Norms& prev = report.rows.back().norms;
      row.ord_linf = empirical_order(prev.linf, n.linf);
      row.ord_l1 = empirical_order(prev.l1, n.l1);
      row.ord_l2 = empirical_order(prev.l2, n.l2);
    }
    report.rows.push_back(row);
  }
  return report;
}

struct EfficiencyRow {
  std::string scheme;
  int order = 0;
  int mesh = 0;
  double l1_error = 0.0;
  double cpu_seconds = 0.0;  // median of the repetitions
};

struct EfficiencyExtrapolation {
  std::string scheme;
  int order = 0;
  double target_error = 1e-16;
  double cpu_at_target = 0.0;
  double exponent = 0.0;  // slope of log(cpu) vs log(err)
};

struct EfficiencyReport {
  std::string test;
  std::vector<EfficiencyRow> rows;
  std::vector<EfficiencyExtrapolation> extrapolations;
};

// Least-squares fit log(cpu) = a + b log(err); returns {b, cpu at target}.
inline EfficiencyExtrapolation power_law_fit(const std::vector<double>& errors,
                                             const std::vector<double>& cpus,
                                             double target_error = 1e-16) {
  if (errors.size() < 2 || errors.size() != cpus.size())
    throw ConfigError("power_law_fit: need at least 2 (error, cpu) samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(errors.size());
  for (std::size_t i = 0; i < errors.size(); ++i) {
    const double x = std::log(errors[i]);
    const double y = std::log(cpus[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double a = (sy - b * sx) / n;
  EfficiencyExtrapolation fit;
  fit.target_error = target_error;
  fit.exponent = b;
  fit.cpu_at_target = std::exp(a + b * std::log(target_error));
  return fit;
}

// Error-versus-cost table over (scheme, order, mesh) combinations; CPU is the
// median of `repeats` timed runs, and each (scheme, order) series is
// extrapolated to the target error by the log-log fit.
inline EfficiencyReport efficiency_study(const TestCase& tc,
                                         const std::vector<SchemeConfig>& configs,
                                         const std::vector<int>& meshes, double t_end = -1.0,
                                         int repeats = 3, double target_error = 1e-16) {
  if (meshes.size() < 2)
    throw ConfigError("efficiency_study: need at least 2 meshes for extrapolation");
  EfficiencyReport report;
  report.test = tc.name;
  const double t = t_end < 0.0 ? tc.t_end : t_end;
  for (const SchemeConfig& cfg : configs) {
    std::vector<double> errs, cpus;
    for (int mesh : meshes) {
      std::vector<double> times;
      double l1 = 0.0;
      for (int rep = 0; rep < repeats; ++rep) {
        const RunOutput out = run_case(tc, cfg, mesh, t);
        times.push_back(out.cpu_seconds);
        if (rep == 0) {
          const auto exact = exact_cell_averages(tc, out.grid, t);
          l1 = 0.0;
          for (int i = 0; i < out.grid.num_cells; ++i)
            l1 += std::abs(out.averages[i][0] - exact[i][0]) * out.grid.dx;
        }
      }
      std::sort(times.begin(), times.end());
      EfficiencyRow row;
      row.scheme = scheme_name(cfg.scheme);
      row.order = cfg.order;
      row.mesh = mesh;
      row.l1_error = l1;
      row.cpu_seconds = times[times.size() / 2];
      report.rows.push_back(row);
      errs.push_back(l1);
      cpus.push_back(row.cpu_seconds);
    }
    EfficiencyExtrapolation fit = power_law_fit(errs, cpus, target_error);
    fit.scheme = scheme_name(cfg.scheme);
    fit.order = cfg.order;
    report.extrapolations.push_back(fit);
  }
  return report;
}

struct ProfilePoint {
  double x = 0.0;
  std::array<double, 3> numerical{};  // primitive (rho, u, p) for Euler
  std::array<double, 3> exact{};
};

struct RiemannProfile {
  std::string test;
  std::string scheme;
  int order = 0;
  int mesh = 0;
  std::vector<ProfilePoint> points;
  double density_l1 = 0.0;  // L1 distance of density cell averages vs exact
  double min_density = 0.0;
};

// Shock-tube profiles against the exact Riemann solution.
inline std::vector<RiemannProfile> riemann_profiles(const TestCase& tc,
                                                    const std::vector<SchemeConfig>& configs,
                                                    int mesh) {
  if (tc.model != ModelKind::euler)
    throw ConfigError("riemann_profiles: '" + tc.name + "' is not an Euler Riemann problem");
  std::vector<RiemannProfile> profiles;
  const EulerModel euler(tc.gamma);
  for (const SchemeConfig& cfg : configs) {
    const RunOutput out = run_case(tc, cfg, mesh);
    const auto exact = exact_cell_averages(tc, out.grid, tc.t_end);
    RiemannProfile prof;
    prof.test = tc.name;
    prof.scheme = scheme_name(cfg.scheme);
    prof.order = cfg.order;
    prof.mesh = mesh;
    prof.min_density = out.averages[0][0];
    for (int i = 0; i < out.grid.num_cells; ++i) {
      ProfilePoint pt;
      pt.x = out.grid.cell_center(i);
      pt.numerical = out.primitives[i];
      const EulerModel::State qe{exact[i][0], exact[i][1], exact[i][2]};
      const auto we = euler.prim(qe);
      pt.exact = {we[0], we[1], we[2]};
      prof.points.push_back(pt);
      prof.density_l1 += std::abs(out.averages[i][0] - exact[i][0]) * out.grid.dx;
      prof.min_density = std::min(prof.min_density, out.averages[i][0]);
    }
    profiles.push_back(std::move(prof));
  }
  return profiles;
}

}  // namespace ader1d

#endif
