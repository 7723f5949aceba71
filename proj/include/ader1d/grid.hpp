#ifndef ADER1D_GRID_HPP
#define ADER1D_GRID_HPP

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "ader1d/errors.hpp"
#include "ader1d/quadrature.hpp"

namespace ader1d {

enum class Boundary { periodic, transmissive };

// Uniform 1D grid; cell i is [x_{i-1/2}, x_{i+1/2}] with
// x_{i+1/2} = x_min + (i+1)*dx, tiling [x_min, x_max] exactly.
struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  int num_cells = 0;
  double dx = 0.0;
  Boundary boundary = Boundary::periodic;

  double interface(int i) const { return x_min + (i + 1) * dx; }
  double cell_left(int i) const { return x_min + i * dx; }
  double cell_center(int i) const { return x_min + (i + 0.5) * dx; }

  // Cell index shifted by `off` from cell i under the grid's boundary rule.
  int neighbor(int i, int off) const {
    int j = i + off;
    if (boundary == Boundary::periodic) {
      j %= num_cells;
      if (j < 0) j += num_cells;
    } else {
      j = std::max(0, std::min(num_cells - 1, j));
    }
    return j;
  }

  // Interface index (0..M) shifted from interface i under the boundary rule.
  int neighbor_interface(int i, int off) const {
    int j = i + off;
    if (boundary == Boundary::periodic) {
      // interfaces 0 and M are identified
      j %= num_cells;
      if (j < 0) j += num_cells;
    } else {
      j = std::max(0, std::min(num_cells, j));
    }
    return j;
  }
};

inline Grid build_grid(double x_min, double x_max, int num_cells, Boundary boundary) {
  if (!(x_max > x_min)) throw ConfigError("build_grid: x_max must exceed x_min");
  if (num_cells < 4)
    throw ConfigError("build_grid: need at least 4 cells (smallest stencil spans i-2..i+1)");
  Grid g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.num_cells = num_cells;
  g.dx = (x_max - x_min) / num_cells;
  g.boundary = boundary;
  return g;
}

// Cell-average field of an N-component state at one time level.
template <int N>
struct FieldState {
  Grid grid;
  std::vector<std::array<double, N>> averages;  // size M
  double time = 0.0;
  long step = 0;

  bool all_finite() const {
    for (const auto& q : averages)
      for (double v : q)
        if (!std::isfinite(v)) return false;
    return true;
  }
};

// Godunov interface states q^{n-1}_{i+1/2}(dt^{n-1}) saved at the end of a
// step; the reconstruction input carried across time levels. Entry j holds
// the state at interface x_{j-1/2}, j = 0..M, so cell i sees entries i and
// i+1, and entries 0 and M coincide under periodic boundaries.
template <int N>
struct InterfaceLedger {
  std::vector<std::array<double, N>> states;  // size M+1
  long valid_from_step = -1;
  double dt_prev = 0.0;

  // Consumable by the step that advances state index n = valid_from_step+1.
  void check_fresh(long consuming_step) const {
    if (consuming_step != valid_from_step + 1)
      throw std::logic_error("InterfaceLedger: stale ledger (valid_from_step=" +
                             std::to_string(valid_from_step) + ", consuming step=" +
                             std::to_string(consuming_step) + ")");
  }
};

// Cell averages of a pointwise initial condition via per-cell Gauss-Legendre
// quadrature. quad_order is the point count.
template <int N>
FieldState<N> init_averages(const Grid& grid, const std::function<std::array<double, N>(double)>& ic,
                            int quad_order) {
  const QuadratureRule rule = gauss_legendre(quad_order);
  FieldState<N> state;
  state.grid = grid;
  state.averages.resize(grid.num_cells);
  for (int i = 0; i < grid.num_cells; ++i) {
    std::array<double, N> avg{};
    for (int g = 0; g < rule.size(); ++g) {
      const double x = grid.cell_left(i) + rule.nodes[g] * grid.dx;
      const std::array<double, N> v = ic(x);
      for (int c = 0; c < N; ++c) avg[c] += rule.weights[g] * v[c];
    }
    for (int c = 0; c < N; ++c) {
      if (!std::isfinite(avg[c]))
        throw NumericalError("init_averages: non-finite initial data in cell " + std::to_string(i));
    }
    state.averages[i] = avg;
  }
  return state;
}

struct Norms {
  double linf = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

// Discrete norms of the cell-average error, per component:
//   L1 = sum |e_i| dx,  L2 = sqrt(sum e_i^2 dx),  Linf = max |e_i|.
template <int N>
std::array<Norms, N> error_norms(const FieldState<N>& numerical,
                                 const std::vector<std::array<double, N>>& exact_averages,
                                 double dx) {
  if (numerical.averages.size() != exact_averages.size())
    throw std::invalid_argument("error_norms: shape mismatch");
  std::array<Norms, N> norms{};
  for (std::size_t i = 0; i < exact_averages.size(); ++i) {
    for (int c = 0; c < N; ++c) {
      const double e = std::abs(numerical.averages[i][c] - exact_averages[i][c]);
      norms[c].linf = std::max(norms[c].linf, e);
      norms[c].l1 += e * dx;
      norms[c].l2 += e * e * dx;
    }
  }
  for (int c = 0; c < N; ++c) norms[c].l2 = std::sqrt(norms[c].l2);
  return norms;
}

// Total integral of each component; constant in time under periodic
// boundaries and zero source.
template <int N>
std::array<double, N> total_mass(const FieldState<N>& state) {
  std::array<double, N> total{};
  for (const auto& q : state.averages)
    for (int c = 0; c < N; ++c) total[c] += q[c] * state.grid.dx;
  return total;
}

}  // namespace ader1d

#endif
