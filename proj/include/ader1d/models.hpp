#ifndef ADER1D_MODELS_HPP
#define ADER1D_MODELS_HPP

#include <array>
#include <cmath>
#include <string>

#include "ader1d/errors.hpp"
#include "ader1d/grid.hpp"

namespace ader1d {

// A PDE model supplies: num_vars, flux, source (+ has_source), eigenvalues,
// right/left eigenvector matrices at a reference state, and an admissibility
// predicate. Algorithms are templated over the model type.

struct AdvectionModel {
  static constexpr int num_vars = 1;
  using State = std::array<double, 1>;
  using Matrix = std::array<std::array<double, 1>, 1>;

  double lambda = 1.0;
  double source_coeff = 0.0;  // S(q) = source_coeff * q

  explicit AdvectionModel(double lam = 1.0, double src = 0.0)
      : lambda(lam), source_coeff(src) {
    if (!std::isfinite(lam)) throw ConfigError("advection model: lambda must be finite");
  }

  State flux(const State& q) const { return {lambda * q[0]}; }
  State source(const State& q) const { return {source_coeff * q[0]}; }
  bool has_source() const { return source_coeff != 0.0; }
  bool admissible(const State& q) const { return std::isfinite(q[0]); }
  double max_abs_eigenvalue(const State&) const { return std::abs(lambda); }
  void eigenvalues(const State&, std::array<double, 1>& lam) const { lam[0] = lambda; }
  void eigen_basis(const State&, Matrix& right, Matrix& left) const {
    right[0][0] = 1.0;
    left[0][0] = 1.0;
  }
};

struct EulerModel {
  static constexpr int num_vars = 3;
  using State = std::array<double, 3>;   // (rho, rho u, E)
  using Prim = std::array<double, 3>;    // (rho, u, p)
  using Matrix = std::array<std::array<double, 3>, 3>;

  double gamma = 1.4;

  explicit EulerModel(double g = 1.4) : gamma(g) {
    if (!(g > 1.0)) throw ConfigError("euler model: gamma must exceed 1");
  }

  static State cons_from_prim_static(const Prim& w, double gamma) {
    const double rho = w[0], u = w[1], p = w[2];
    const double e = p / ((gamma - 1.0) * rho);
    return {rho, rho * u, rho * (0.5 * u * u + e)};
  }
  State cons(const Prim& w) const { return cons_from_prim_static(w, gamma); }
  Prim prim(const State& q) const {
    const double rho = q[0];
    const double u = q[1] / rho;
    const double p = (gamma - 1.0) * (q[2] - 0.5 * rho * u * u);
    return {rho, u, p};
  }
  double pressure(const State& q) const { return prim(q)[2]; }
  double sound_speed(const State& q) const {
    const Prim w = prim(q);
    return std::sqrt(gamma * w[2] / w[0]);
  }

  State flux(const State& q) const {
    const Prim w = prim(q);
    const double u = w[1], p = w[2];
    return {q[1], q[1] * u + p, u * (q[2] + p)};
  }
  State source(const State&) const { return {0.0, 0.0, 0.0}; }
  bool has_source() const { return false; }

  bool admissible(const State& q) const {
    if (!std::isfinite(q[0]) || !std::isfinite(q[1]) || !std::isfinite(q[2])) return false;
    if (q[0] <= 0.0) return false;
    const double internal = q[2] - 0.5 * q[1] * q[1] / q[0];
    return internal > 0.0;
  }

  void eigenvalues(const State& q, std::array<double, 3>& lam) const {
    const Prim w = prim(q);
    const double a = std::sqrt(gamma * w[2] / w[0]);
    lam = {w[1] - a, w[1], w[1] + a};
  }
  double max_abs_eigenvalue(const State& q) const {
    const Prim w = prim(q);
    const double a = std::sqrt(gamma * w[2] / w[0]);
    return std::abs(w[1]) + a;
  }

  // Analytic eigenvectors of dF/dQ; columns of `right` are r_1..r_3, rows of
  // `left` the matching left eigenvectors, normalized so left*right = I.
  void eigen_basis(const State& q, Matrix& right, Matrix& left) const {
    const Prim w = prim(q);
    const double rho = w[0], u = w[1], p = w[2];
    const double a = std::sqrt(gamma * p / rho);
    const double H = (q[2] + p) / rho;

    right[0] = {1.0, 1.0, 1.0};
    right[1] = {u - a, u, u + a};
    right[2] = {H - u * a, 0.5 * u * u, H + u * a};

    const double b1 = (gamma - 1.0) / (a * a);
    const double b2 = 0.5 * b1 * u * u;
    left[0] = {0.5 * (b2 + u / a), -0.5 * (b1 * u + 1.0 / a), 0.5 * b1};
    left[1] = {1.0 - b2, b1 * u, -b1};
    left[2] = {0.5 * (b2 - u / a), -0.5 * (b1 * u - 1.0 / a), 0.5 * b1};
  }
};

// w = R^{-1}(ref) v, and its inverse. The reconstruction wrapper uses the
// eigenbasis frozen at the owning cell's average.
template <class Model>
typename Model::State char_project(const typename Model::Matrix& left,
                                   const typename Model::State& v) {
  constexpr int N = Model::num_vars;
  typename Model::State w{};
  for (int r = 0; r < N; ++r) {
    double s = 0.0;
    for (int c = 0; c < N; ++c) s += left[r][c] * v[c];
    w[r] = s;
  }
  return w;
}

template <class Model>
typename Model::State char_unproject(const typename Model::Matrix& right,
                                     const typename Model::State& w) {
  constexpr int N = Model::num_vars;
  typename Model::State v{};
  for (int r = 0; r < N; ++r) {
    double s = 0.0;
    for (int c = 0; c < N; ++c) s += right[r][c] * w[c];
    v[r] = s;
  }
  return v;
}

// S_max = max over cells and eigenvalues of |lambda_j(Q_i)|.
template <class Model>
double max_wavespeed(const Model& model, const FieldState<Model::num_vars>& state) {
  double s = 0.0;
  for (int i = 0; i < state.grid.num_cells; ++i) {
    const auto& q = state.averages[i];
    if (!model.admissible(q))
      throw NumericalError("max_wavespeed: inadmissible state in cell " + std::to_string(i));
    s = std::max(s, model.max_abs_eigenvalue(q));
  }
  return s;
}

}  // namespace ader1d

#endif
