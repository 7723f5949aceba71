#ifndef ADER1D_RECONSTRUCTION_HPP
#define ADER1D_RECONSTRUCTION_HPP

#include <array>
#include <cmath>
#include <vector>

#include "ader1d/grid.hpp"
#include "ader1d/linalg.hpp"
#include "ader1d/models.hpp"
#include "ader1d/polynomial.hpp"
#include "ader1d/quadrature.hpp"

namespace ader1d {

enum class ReconMethod { grprec, grprec_nl, weno_dk };

namespace recon {

// Data vector layout shared by all knot-based operators:
//   [0..2]  cell averages q_{i-1}, q_i, q_{i+1}
//   [3..6]  interface knots at x_{i-3/2}, x_{i-1/2}, x_{i+1/2}, x_{i+3/2}
inline constexpr int kKnotData = 7;
inline constexpr int kIdxAvg = 0;   // avg block start (offset by cell shift +1)
inline constexpr int kIdxKnot = 3;  // knot block start (offset by interface shift +1)

// Data vector for the average-only comparison operator: q_{i-4} .. q_{i+4}.
inline constexpr int kWenoData = 9;
inline constexpr int kWenoCenter = 4;

namespace detail {

struct Condition {
  enum class Kind { cell_mean, point_value } kind;
  // cell_mean: mean over reference cell [shift, shift+1]; rhs = average of
  //   cell i+shift. point_value: value at reference xi = shift+...; for
  //   interfaces, xi = 0 or 1 plus integer offsets.
  double where;    // cell left edge (cell_mean) or xi (point_value)
  int data_index;  // column of the data vector supplying the rhs
};

inline void fill_row(const Condition& cond, int m, double* row) {
  for (int k = 0; k <= m; ++k)
    row[k] = cond.kind == Condition::Kind::cell_mean
                 ? legendre::basis_integral(k, cond.where, cond.where + 1.0)
                 : legendre::basis_value(k, cond.where);
}

// Exact square system: coefficients = A^{-1} S data.
inline SmallMatrix exact_operator(int m, const std::vector<Condition>& conds, int ndata) {
  SmallMatrix a(m + 1, m + 1);
  for (int r = 0; r <= m; ++r) fill_row(conds[r], m, &a(r, 0));
  const SmallMatrix ainv = invert_dense(a);
  SmallMatrix w(m + 1, ndata);
  for (int r = 0; r <= m; ++r)
    for (int q = 0; q <= m; ++q) w(r, conds[q].data_index) += ainv(r, q);
  return w;
}

// Constrained least squares via the KKT system of
//   min sum_r (A_r c - b_r)^2  s.t.  C c = d,
// i.e. [2A^T A, C^T; C, 0] [c; mu] = [2A^T b; d]. Composed with the data
// selectors this again collapses to one matrix: coefficients = W data.
inline SmallMatrix kkt_operator(int m, const std::vector<Condition>& ls_conds,
                                const Condition& constraint, int ndata) {
  const int n = m + 1;
  const int nls = static_cast<int>(ls_conds.size());
  SmallMatrix a(nls, n);
  for (int r = 0; r < nls; ++r) fill_row(ls_conds[r], m, &a(r, 0));
  std::vector<double> crow(n);
  fill_row(constraint, m, crow.data());

  SmallMatrix kkt(n + 1, n + 1);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int r = 0; r < nls; ++r) s += a(r, j) * a(r, k);
      kkt(j, k) = 2.0 * s;
    }
  for (int j = 0; j < n; ++j) {
    kkt(j, n) = crow[j];
    kkt(n, j) = crow[j];
  }
  const SmallMatrix inv = invert_dense(kkt);

  // rhs = [2A^T; e_constraint] in data coordinates
  SmallMatrix rhs(n + 1, ndata);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < nls; ++r) rhs(j, ls_conds[r].data_index) += 2.0 * a(r, j);
  rhs(n, constraint.data_index) += 1.0;

  SmallMatrix w(n, ndata);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < ndata; ++c) {
      double s = 0.0;
      for (int q = 0; q <= n; ++q) s += inv(r, q) * rhs(q, c);
      w(r, c) = s;
    }
  return w;
}

inline Condition mean_of(int cell_shift) {
  return {Condition::Kind::cell_mean, static_cast<double>(cell_shift),
          kIdxAvg + 1 + cell_shift};
}
inline Condition knot_at(int iface_shift) {
  // iface_shift: -1 -> x_{i-3/2}, 0 -> x_{i-1/2}, 1 -> x_{i+1/2}, 2 -> x_{i+3/2}
  return {Condition::Kind::point_value, static_cast<double>(iface_shift),
          kIdxKnot + 1 + iface_shift};
}

inline SmallMatrix build_grprec_central(int m) {
  switch (m) {
    case 1:
      return kkt_operator(m, {knot_at(0), knot_at(1)}, mean_of(0), kKnotData);
    case 2:
      return exact_operator(m, {mean_of(0), knot_at(0), knot_at(1)}, kKnotData);
    case 3:
      return kkt_operator(m, {mean_of(1), mean_of(-1), knot_at(0), knot_at(1)}, mean_of(0),
                          kKnotData);
    case 4:
      return exact_operator(
          m, {knot_at(0), knot_at(1), mean_of(-1), mean_of(0), mean_of(1)}, kKnotData);
    default:
      throw std::invalid_argument("grprec: degree must be 1..4");
  }
}

inline SmallMatrix build_grprec_side(int m, bool left) {
  switch (m) {
    case 1:
      return exact_operator(m, {mean_of(0), left ? knot_at(0) : knot_at(1)}, kKnotData);
    case 2:
      // the left polynomial leans on cells {i-1, i} and the right knot;
      // the right polynomial on cells {i, i+1} and the left knot
      return left ? exact_operator(m, {mean_of(-1), mean_of(0), knot_at(1)}, kKnotData)
                  : exact_operator(m, {mean_of(0), mean_of(1), knot_at(0)}, kKnotData);
    case 3:
      return exact_operator(
          m, {mean_of(-1), mean_of(0), mean_of(1), left ? knot_at(0) : knot_at(1)}, kKnotData);
    case 4:
      return left ? exact_operator(
                        m, {mean_of(-1), mean_of(0), mean_of(1), knot_at(0), knot_at(-1)},
                        kKnotData)
                  : exact_operator(
                        m, {mean_of(-1), mean_of(0), mean_of(1), knot_at(1), knot_at(2)},
                        kKnotData);
    default:
      throw std::invalid_argument("grprec_nl: degree must be 1..4");
  }
}

inline SmallMatrix build_weno_stencil(int m, int left_cell) {
  std::vector<Condition> conds;
  for (int j = 0; j <= m; ++j) {
    const int shift = left_cell + j;
    conds.push_back({Condition::Kind::cell_mean, static_cast<double>(shift),
                     kWenoCenter + shift});
  }
  return exact_operator(m, conds, kWenoData);
}

// OI quadratic form: OI = dx * c^T Q c with
// Q_jk = sum_{l=1}^m int_0^1 B_j^(l) B_k^(l) dxi.
inline SmallMatrix build_oi_matrix(int m) {
  const QuadratureRule rule = gauss_legendre(5);
  SmallMatrix q(m + 1, m + 1);
  for (int l = 1; l <= m; ++l)
    for (int j = 0; j <= m; ++j)
      for (int k = 0; k <= m; ++k) {
        double s = 0.0;
        for (int g = 0; g < rule.size(); ++g)
          s += rule.weights[g] * legendre::basis_derivative(j, l, rule.nodes[g]) *
               legendre::basis_derivative(k, l, rule.nodes[g]);
        q(j, k) += s;
      }
  return q;
}

struct Tables {
  std::array<SmallMatrix, 5> central, side_left, side_right;
  std::array<SmallMatrix, 5> weno_left, weno_central, weno_right;
  std::array<SmallMatrix, 5> oi;
  Tables() {
    for (int m = 1; m <= 4; ++m) {
      central[m] = build_grprec_central(m);
      side_left[m] = build_grprec_side(m, true);
      side_right[m] = build_grprec_side(m, false);
      weno_left[m] = build_weno_stencil(m, -m);
      weno_right[m] = build_weno_stencil(m, 0);
      // central stencil {i-ceil(m/2) .. i+floor(m/2)}
      weno_central[m] = build_weno_stencil(m, -((m + 1) / 2));
      oi[m] = build_oi_matrix(m);
    }
  }
};

inline const Tables& tables() {
  static const Tables t;
  return t;
}

inline void apply(const SmallMatrix& w, const double* data, double* coeffs) {
  for (int r = 0; r < w.rows(); ++r) {
    double s = 0.0;
    for (int c = 0; c < w.cols(); ++c) s += w(r, c) * data[c];
    coeffs[r] = s;
  }
}

}  // namespace detail

// Nonlinear weight parameters of the convex combination.
struct NonlinearWeights {
  static constexpr double lambda_side = 1.0;
  static constexpr double lambda_central = 1e9;
  static constexpr int r = 4;
  static constexpr double epsilon = 1e-14;

  std::array<double, 3> beta{};  // (L, C, R), normalized

  static NonlinearWeights from_indicators(double oi_l, double oi_c, double oi_r) {
    NonlinearWeights w;
    const auto omega = [](double lambda, double oi) {
      const double d = epsilon + oi;
      const double d2 = d * d;
      return lambda / (d2 * d2);
    };
    const double wl = omega(lambda_side, oi_l);
    const double wc = omega(lambda_central, oi_c);
    const double wr = omega(lambda_side, oi_r);
    const double sum = wl + wc + wr;
    w.beta = {wl / sum, wc / sum, wr / sum};
    return w;
  }
};

// Oscillation indicator of a scalar polynomial:
//   OI = sum_{l=1}^m int_cell (d^l p/dx^l)^2 dx^{2l} dx,
// which in reference coordinates collapses to dx * c^T Q c.
inline double oscillation_indicator(const ScalarPoly& p) {
  const SmallMatrix& q = detail::tables().oi[p.degree];
  double s = 0.0;
  for (int j = 0; j <= p.degree; ++j)
    for (int k = 0; k <= p.degree; ++k) s += p.coeff[j][0] * q(j, k) * p.coeff[k][0];
  return p.dx * s;
}

inline double oscillation_indicator_coeffs(int m, const double* c, double dx) {
  const SmallMatrix& q = detail::tables().oi[m];
  double s = 0.0;
  for (int j = 0; j <= m; ++j)
    for (int k = 0; k <= m; ++k) s += c[j] * q(j, k) * c[k];
  return dx * s;
}

// Central (linear) GRPrec polynomial of degree m from neighbouring averages
// and previous-level interface knots.
inline ScalarPoly grprec(int m, const std::array<double, 3>& averages, double knot_left,
                         double knot_right, double dx = 1.0, int cell = 0) {
  std::array<double, kKnotData> data{averages[0], averages[1], averages[2],
                                     0.0, knot_left, knot_right, 0.0};
  std::array<double, 5> c{};
  detail::apply(detail::tables().central[m], data.data(), c.data());
  return make_scalar_poly(m, c, dx, cell);
}

// WENO-style nonlinear variant: convex combination of the central polynomial
// with one-sided companions, weighted by oscillation indicators.
inline ScalarPoly grprec_nl(int m, const std::array<double, 4>& averages,
                            const std::array<double, 4>& knots, double dx = 1.0,
                            int cell = 0) {
  std::array<double, kKnotData> data{averages[0], averages[1], averages[2],
                                     knots[0],    knots[1],    knots[2],   knots[3]};
  std::array<double, 5> cl{}, cc{}, cr{};
  const auto& t = detail::tables();
  detail::apply(t.side_left[m], data.data(), cl.data());
  detail::apply(t.central[m], data.data(), cc.data());
  detail::apply(t.side_right[m], data.data(), cr.data());
  const NonlinearWeights w = NonlinearWeights::from_indicators(
      oscillation_indicator_coeffs(m, cl.data(), dx),
      oscillation_indicator_coeffs(m, cc.data(), dx),
      oscillation_indicator_coeffs(m, cr.data(), dx));
  std::array<double, 5> c{};
  for (int k = 0; k <= m; ++k)
    c[k] = w.beta[0] * cl[k] + w.beta[1] * cc[k] + w.beta[2] * cr[k];
  return make_scalar_poly(m, c, dx, cell);
}

// Comparison reconstruction from cell averages only: one-sided and central
// stencils of m+1 cells each, combined with the same weights machinery.
inline ScalarPoly weno_dk(int m, const std::array<double, kWenoData>& averages,
                          double dx = 1.0, int cell = 0) {
  std::array<double, 5> cl{}, cc{}, cr{};
  const auto& t = detail::tables();
  detail::apply(t.weno_left[m], averages.data(), cl.data());
  detail::apply(t.weno_central[m], averages.data(), cc.data());
  detail::apply(t.weno_right[m], averages.data(), cr.data());
  const NonlinearWeights w = NonlinearWeights::from_indicators(
      oscillation_indicator_coeffs(m, cl.data(), dx),
      oscillation_indicator_coeffs(m, cc.data(), dx),
      oscillation_indicator_coeffs(m, cr.data(), dx));
  std::array<double, 5> c{};
  for (int k = 0; k <= m; ++k)
    c[k] = w.beta[0] * cl[k] + w.beta[1] * cc[k] + w.beta[2] * cr[k];
  return make_scalar_poly(m, c, dx, cell);
}

}  // namespace recon

// Per-cell reconstruction of a full field, in characteristic variables for
// systems (eigenbasis frozen at the owning cell's average). The ledger is
// required for the knot-based methods and must be fresh for state.step.
template <class Model>
std::vector<CellPoly<Model::num_vars>> reconstruct_field(
    ReconMethod method, int m, const Model& model, const FieldState<Model::num_vars>& state,
    const InterfaceLedger<Model::num_vars>* ledger) {
  constexpr int N = Model::num_vars;
  const Grid& grid = state.grid;
  const int M = grid.num_cells;

  if (method != ReconMethod::weno_dk) {
    if (ledger == nullptr) throw std::logic_error("reconstruct_field: knot method needs a ledger");
    ledger->check_fresh(state.step);
  }

  std::vector<CellPoly<N>> polys(M);

  typename Model::Matrix right{}, left{};
  for (int i = 0; i < M; ++i) {
    CellPoly<N>& poly = polys[i];
    poly.degree = m;
    poly.cell = i;
    poly.dx = grid.dx;

    const bool project = N > 1;
    if (project) model.eigen_basis(state.averages[i], right, left);

    if (method == ReconMethod::weno_dk) {
      std::array<std::array<double, N>, recon::kWenoData> data{};
      for (int s = -m; s <= m; ++s) {
        const auto& q = state.averages[grid.neighbor(i, s)];
        data[recon::kWenoCenter + s] =
            project ? char_project<Model>(left, q) : q;
      }
      for (int c = 0; c < N; ++c) {
        std::array<double, recon::kWenoData> comp{};
        for (int d = 0; d < recon::kWenoData; ++d) comp[d] = data[d][c];
        const ScalarPoly sp = recon::weno_dk(m, comp, grid.dx, i);
        for (int k = 0; k <= m; ++k) poly.coeff[k][c] = sp.coeff[k][0];
      }
    } else {
      std::array<std::array<double, N>, 4> avgs{};
      for (int s = -1; s <= 2; ++s) {
        const auto& q = state.averages[grid.neighbor(i, s)];
        avgs[s + 1] = project ? char_project<Model>(left, q) : q;
      }
      std::array<std::array<double, N>, 4> knots{};
      for (int s = -1; s <= 2; ++s) {
        const auto& q = ledger->states[grid.neighbor_interface(i, s)];
        knots[s + 1] = project ? char_project<Model>(left, q) : q;
      }
      for (int c = 0; c < N; ++c) {
        ScalarPoly sp;
        if (method == ReconMethod::grprec) {
          sp = recon::grprec(m, {avgs[0][c], avgs[1][c], avgs[2][c]}, knots[1][c], knots[2][c],
                             grid.dx, i);
        } else {
          sp = recon::grprec_nl(m, {avgs[0][c], avgs[1][c], avgs[2][c], avgs[3][c]},
                                {knots[0][c], knots[1][c], knots[2][c], knots[3][c]}, grid.dx,
                                i);
        }
        for (int k = 0; k <= m; ++k) poly.coeff[k][c] = sp.coeff[k][0];
      }
    }

    if (project) {
      for (int k = 0; k <= m; ++k) {
        std::array<double, N> w{};
        for (int c = 0; c < N; ++c) w[c] = poly.coeff[k][c];
        const auto v = char_unproject<Model>(right, w);
        for (int c = 0; c < N; ++c) poly.coeff[k][c] = v[c];
      }
    }
  }
  return polys;
}

}  // namespace ader1d

#endif
