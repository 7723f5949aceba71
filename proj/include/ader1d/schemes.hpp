#ifndef ADER1D_SCHEMES_HPP
#define ADER1D_SCHEMES_HPP

#include <array>
#include <string>
#include <vector>

#include "ader1d/errors.hpp"
#include "ader1d/grid.hpp"
#include "ader1d/models.hpp"
#include "ader1d/predictor.hpp"
#include "ader1d/reconstruction.hpp"
#include "ader1d/riemann.hpp"

namespace ader1d {

enum class SchemeType { fv_grprec, fv_grprec_nl, fv_weno_dk, dg };
enum class BootstrapMethod { weno_dk, central_linear };

inline bool is_fv(SchemeType s) { return s != SchemeType::dg; }

inline std::string scheme_name(SchemeType s) {
  switch (s) {
    case SchemeType::fv_grprec: return "FV+GRPrec";
    case SchemeType::fv_grprec_nl: return "FV+GRPrecNL";
    case SchemeType::fv_weno_dk: return "FV+WENO-DK";
    case SchemeType::dg: return "DG";
  }
  return "?";
}

// Scheme selection per the method table: all FV schemes have Courant
// stability limit 1, DG has 1/(2m+1).
struct SchemeConfig {
  SchemeType scheme = SchemeType::fv_grprec;
  int order = 3;  // m+1, 2..5
  double cfl = 0.9;
  BootstrapMethod bootstrap = BootstrapMethod::weno_dk;

  int degree() const { return order - 1; }

  void validate() const {
    if (order < 2 || order > 5) throw ConfigError("scheme order must be in 2..5");
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must be in (0,1]");
  }
};

// dt from the Courant condition, clipped to land exactly on t_end.
template <class Model>
double timestep(const SchemeConfig& cfg, const Model& model,
                const FieldState<Model::num_vars>& state, double t_end) {
  const double s_max = max_wavespeed(model, state);
  if (s_max <= 0.0) throw NumericalError("timestep: zero maximum wave speed");
  double dt = cfg.cfl * state.grid.dx / s_max;
  if (cfg.scheme == SchemeType::dg) dt /= 2 * cfg.degree() + 1;
  const double remaining = t_end - state.time;
  if (dt > remaining) dt = remaining;
  return dt;
}

namespace detail {

// Bootstrap alternative: componentwise linear polynomial with the centered
// slope, padded to degree m.
template <class Model>
std::vector<CellPoly<Model::num_vars>> central_linear_field(
    int m, const FieldState<Model::num_vars>& state) {
  constexpr int N = Model::num_vars;
  const Grid& grid = state.grid;
  std::vector<CellPoly<N>> polys(grid.num_cells);
  for (int i = 0; i < grid.num_cells; ++i) {
    CellPoly<N>& p = polys[i];
    p.degree = m;
    p.cell = i;
    p.dx = grid.dx;
    const auto& qm = state.averages[grid.neighbor(i, -1)];
    const auto& qp = state.averages[grid.neighbor(i, +1)];
    for (int c = 0; c < N; ++c) {
      p.coeff[0][c] = state.averages[i][c];
      p.coeff[1][c] = 0.25 * (qp[c] - qm[c]);
    }
  }
  return polys;
}

// Boundary traces of each cell predictor as polynomials in tau:
// tl[i][l] = trace coefficients at xi=0, tr[i][l] at xi=1.
template <int N>
struct FaceTraces {
  std::vector<std::array<std::array<double, N>, 5>> left, right;
};

template <int N>
FaceTraces<N> face_traces(const std::vector<SpaceTimePoly<N>>& predictors, int m) {
  FaceTraces<N> tr;
  const int M = static_cast<int>(predictors.size());
  tr.left.assign(M, {});
  tr.right.assign(M, {});
  for (int i = 0; i < M; ++i)
    for (int l = 0; l <= m; ++l)
      for (int k = 0; k <= m; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;  // B_k(0) = (-1)^k
        for (int c = 0; c < N; ++c) {
          tr.left[i][l][c] += sign * predictors[i].coeff[k][l][c];
          tr.right[i][l][c] += predictors[i].coeff[k][l][c];
        }
      }
  return tr;
}

template <int N>
std::array<double, N> eval_trace(const std::array<std::array<double, N>, 5>& tau_poly, int m,
                                 double tau) {
  std::array<double, N> v{};
  for (int l = 0; l <= m; ++l) {
    const double b = legendre::basis_value(l, tau);
    for (int c = 0; c < N; ++c) v[c] += tau_poly[l][c] * b;
  }
  return v;
}

}  // namespace detail

// Time-integrated numerical fluxes (normalized by dt) and end-of-step
// Godunov states per interface. Entry j refers to interface x_{j-1/2},
// j = 0..M; under periodic boundaries entries 0 and M are bit-identical.
template <class Model>
struct InterfaceData {
  std::vector<std::array<double, Model::num_vars>> flux;    // size M+1
  std::vector<std::array<double, Model::num_vars>> ledger;  // size M+1
};

template <class Model>
InterfaceData<Model> interface_quadrature(
    const Model& model, const Grid& grid,
    const std::vector<SpaceTimePoly<Model::num_vars>>& predictors,
    const std::vector<std::array<double, Model::num_vars>>& cell_means,
    const QuadratureRule& time_rule, int m) {
  constexpr int N = Model::num_vars;
  const int M = grid.num_cells;
  const detail::FaceTraces<N> traces = detail::face_traces(predictors, m);

  InterfaceData<Model> out;
  out.flux.assign(M + 1, {});
  out.ledger.assign(M + 1, {});

  const bool periodic = grid.boundary == Boundary::periodic;
  const int j_begin = periodic ? 0 : 1;
  const int j_end = periodic ? M - 1 : M - 1;

  // Riemann data at one integration point. Unlimited reconstructions can
  // leave a cell-edge trace outside the admissible set near strong
  // expansions; the Godunov-consistent degenerate datum for such a node is
  // the cell average (which every accepted step guarantees admissible).
  auto rp_datum = [&](const std::array<std::array<double, N>, 5>& tau_poly, int cell,
                      double tau) {
    auto q = detail::eval_trace<N>(tau_poly, m, tau);
    if (!model.admissible(q)) q = cell_means[cell];
    return q;
  };

  auto solve_interface = [&](int left_cell, int right_cell, int j) {
    std::array<double, N> flux{};
    for (int g = 0; g < time_rule.size(); ++g) {
      const auto qL = rp_datum(traces.right[left_cell], left_cell, time_rule.nodes[g]);
      const auto qR = rp_datum(traces.left[right_cell], right_cell, time_rule.nodes[g]);
      std::array<double, N> q_star;
      try {
        q_star = godunov_state(model, qL, qR);
      } catch (const NumericalError& e) {
        throw NumericalError("interface " + std::to_string(j) + ": " + e.what());
      }
      const auto f = model.flux(q_star);
      for (int c = 0; c < N; ++c) flux[c] += time_rule.weights[g] * f[c];
    }
    out.flux[j] = flux;
    const auto qL1 = rp_datum(traces.right[left_cell], left_cell, 1.0);
    const auto qR1 = rp_datum(traces.left[right_cell], right_cell, 1.0);
    try {
      out.ledger[j] = godunov_state(model, qL1, qR1);
    } catch (const NumericalError& e) {
      throw NumericalError("interface " + std::to_string(j) + ": " + e.what());
    }
  };

  for (int j = j_begin; j <= j_end; ++j) {
    const int right_cell = j;
    const int left_cell = (j == 0) ? M - 1 : j - 1;
    solve_interface(left_cell, right_cell, j);
  }

  if (periodic) {
    out.flux[M] = out.flux[0];
    out.ledger[M] = out.ledger[0];
  } else {
    // transmissive: equal-state Riemann problems at the domain faces
    for (int g = 0; g < time_rule.size(); ++g) {
      const auto q0 = rp_datum(traces.left[0], 0, time_rule.nodes[g]);
      const auto qM = rp_datum(traces.right[M - 1], M - 1, time_rule.nodes[g]);
      const auto f0 = model.flux(q0);
      const auto fM = model.flux(qM);
      for (int c = 0; c < N; ++c) {
        out.flux[0][c] += time_rule.weights[g] * f0[c];
        out.flux[M][c] += time_rule.weights[g] * fM[c];
      }
    }
    out.ledger[0] = rp_datum(traces.left[0], 0, 1.0);
    out.ledger[M] = rp_datum(traces.right[M - 1], M - 1, 1.0);
  }
  return out;
}

// One fully discrete finite-volume step:
// reconstruct -> predict -> interface quadrature -> conservative update.
// `method` is the reconstruction actually used this step (the bootstrap step
// substitutes an average-only method); the returned ledger feeds the next one.
template <class Model>
void fv_step(const SchemeConfig& cfg, ReconMethod method, const Model& model,
             const PredictorOperator& pred_op, const FieldState<Model::num_vars>& state,
             const InterfaceLedger<Model::num_vars>* ledger, double dt,
             FieldState<Model::num_vars>& out, InterfaceLedger<Model::num_vars>& ledger_out,
             bool central_linear_bootstrap = false) {
  constexpr int N = Model::num_vars;
  const int m = cfg.degree();
  const Grid& grid = state.grid;
  const int M = grid.num_cells;

  std::vector<CellPoly<N>> polys =
      central_linear_bootstrap ? detail::central_linear_field<Model>(m, state)
                               : reconstruct_field(method, m, model, state, ledger);

  std::vector<SpaceTimePoly<N>> predictors(M);
  for (int i = 0; i < M; ++i) predictors[i] = pred_op.evolve(model, polys[i], dt, grid.dx);

  const InterfaceData<Model> iface =
      interface_quadrature(model, grid, predictors, state.averages, pred_op.nodes(), m);

  out.grid = grid;
  out.averages.resize(M);
  out.time = state.time + dt;
  out.step = state.step + 1;

  const double dt_dx = dt / grid.dx;
  const bool with_source = model.has_source();
  std::array<std::array<std::array<double, N>, 5>, 5> nodal{};
  for (int i = 0; i < M; ++i) {
    std::array<double, N> q = state.averages[i];
    for (int c = 0; c < N; ++c)
      q[c] -= dt_dx * (iface.flux[i + 1][c] - iface.flux[i][c]);
    if (with_source) {
      // space-time Gauss quadrature of the source over the predictor
      pred_op.template nodal_values<N>(predictors[i], nodal);
      const auto& rule = pred_op.nodes();
      std::array<double, N> src{};
      for (int g = 0; g < rule.size(); ++g)
        for (int h = 0; h < rule.size(); ++h) {
          const auto s = model.source(nodal[g][h]);
          const double w = rule.weights[g] * rule.weights[h];
          for (int c = 0; c < N; ++c) src[c] += w * s[c];
        }
      for (int c = 0; c < N; ++c) q[c] += dt * src[c];
    }
    if (!model.admissible(q))
      throw NumericalError("fv_step: inadmissible update in cell " + std::to_string(i) +
                           " at t=" + std::to_string(state.time) +
                           "; consider reducing the Courant number");
    out.averages[i] = q;
  }

  ledger_out.states = iface.ledger;
  ledger_out.valid_from_step = state.step;
  ledger_out.dt_prev = dt;
}

// Modal DG field (no reconstruction; the cell polynomial is the evolved
// quantity).
template <int N>
struct DgField {
  Grid grid;
  std::vector<CellPoly<N>> polys;
  double time = 0.0;
  long step = 0;
};

template <int N>
FieldState<N> dg_cell_averages(const DgField<N>& dg) {
  FieldState<N> state;
  state.grid = dg.grid;
  state.time = dg.time;
  state.step = dg.step;
  state.averages.resize(dg.polys.size());
  for (std::size_t i = 0; i < dg.polys.size(); ++i) state.averages[i] = dg.polys[i].coeff[0];
  return state;
}

// L2 projection of pointwise initial data onto the modal basis per cell.
template <int N>
DgField<N> dg_init(const Grid& grid, int m,
                   const std::function<std::array<double, N>(double)>& ic, int quad_order) {
  const QuadratureRule rule = gauss_legendre(quad_order);
  DgField<N> dg;
  dg.grid = grid;
  dg.polys.resize(grid.num_cells);
  for (int i = 0; i < grid.num_cells; ++i) {
    CellPoly<N>& p = dg.polys[i];
    p.degree = m;
    p.cell = i;
    p.dx = grid.dx;
    for (int g = 0; g < rule.size(); ++g) {
      const double xi = rule.nodes[g];
      const auto v = ic(grid.cell_left(i) + xi * grid.dx);
      for (int k = 0; k <= m; ++k) {
        const double w = rule.weights[g] * legendre::basis_value(k, xi) * (2 * k + 1);
        for (int c = 0; c < N; ++c) p.coeff[k][c] += w * v[c];
      }
    }
  }
  return dg;
}

// One fully discrete DG step sharing the space-time predictor: per-cell
// evolution of the cell's own polynomial, then the weak update with interface
// fluxes from classical Riemann problems and a volume flux integral.
template <class Model>
void dg_step(const SchemeConfig& cfg, const Model& model, const PredictorOperator& pred_op,
             const DgField<Model::num_vars>& dg, double dt, DgField<Model::num_vars>& out) {
  constexpr int N = Model::num_vars;
  const int m = cfg.degree();
  const Grid& grid = dg.grid;
  const int M = grid.num_cells;

  std::vector<SpaceTimePoly<N>> predictors(M);
  for (int i = 0; i < M; ++i) predictors[i] = pred_op.evolve(model, dg.polys[i], dt, grid.dx);

  std::vector<std::array<double, N>> means(M);
  for (int i = 0; i < M; ++i) means[i] = dg.polys[i].coeff[0];
  const InterfaceData<Model> iface =
      interface_quadrature(model, grid, predictors, means, pred_op.nodes(), m);

  out.grid = grid;
  out.polys.resize(M);
  out.time = dg.time + dt;
  out.step = dg.step + 1;

  const auto& rule = pred_op.nodes();
  const double dt_dx = dt / grid.dx;
  const bool with_source = model.has_source();

  std::array<std::array<double, 5>, 5> basis{}, dbasis{};
  for (int g = 0; g < rule.size(); ++g)
    for (int k = 0; k <= m; ++k) {
      basis[g][k] = legendre::basis_value(k, rule.nodes[g]);
      dbasis[g][k] = legendre::basis_derivative(k, 1, rule.nodes[g]);
    }

  std::array<std::array<std::array<double, N>, 5>, 5> nodal{};
  for (int i = 0; i < M; ++i) {
    CellPoly<N>& p = out.polys[i];
    p.degree = m;
    p.cell = i;
    p.dx = grid.dx;

    pred_op.template nodal_values<N>(predictors[i], nodal);
    std::array<std::array<double, N>, 5> volume{}, source{};
    for (int g = 0; g < rule.size(); ++g)
      for (int h = 0; h < rule.size(); ++h) {
        const double w = rule.weights[g] * rule.weights[h];
        const auto f = model.flux(nodal[g][h]);
        for (int k = 0; k <= m; ++k)
          for (int c = 0; c < N; ++c) volume[k][c] += w * dbasis[g][k] * f[c];
        if (with_source) {
          const auto s = model.source(nodal[g][h]);
          for (int k = 0; k <= m; ++k)
            for (int c = 0; c < N; ++c) source[k][c] += w * basis[g][k] * s[c];
        }
      }

    for (int k = 0; k <= m; ++k) {
      const double bk1 = 1.0;                            // B_k(1)
      const double bk0 = (k % 2 == 0) ? 1.0 : -1.0;      // B_k(0)
      for (int c = 0; c < N; ++c) {
        double v = dg.polys[i].coeff[k][c];
        v += (2 * k + 1) *
             (-dt_dx * (bk1 * iface.flux[i + 1][c] - bk0 * iface.flux[i][c]) +
              dt_dx * volume[k][c] + dt * source[k][c]);
        p.coeff[k][c] = v;
      }
    }
    if (!model.admissible(p.coeff[0]))
      throw NumericalError("dg_step: inadmissible update in cell " + std::to_string(i) +
                           " at t=" + std::to_string(dg.time) +
                           "; consider reducing the Courant number");
  }
}

}  // namespace ader1d

#endif
