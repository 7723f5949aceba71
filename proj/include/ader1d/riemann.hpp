#ifndef ADER1D_RIEMANN_HPP
#define ADER1D_RIEMANN_HPP

#include <array>
#include <cmath>
#include <string>

#include "ader1d/errors.hpp"
#include "ader1d/models.hpp"

namespace ader1d {

// Exact solution of the scalar advection Riemann problem at x/t = 0.
// The lambda = 0 tie is broken with the arithmetic mean.
inline double advection_rp(double lambda, double qL, double qR) {
  if (lambda > 0.0) return qL;
  if (lambda < 0.0) return qR;
  return 0.5 * (qL + qR);
}

namespace euler_rp {

struct StarState {
  double p = 0.0;
  double u = 0.0;
  double rho_left = 0.0;
  double rho_right = 0.0;
};

inline void require_no_vacuum(double gamma, const EulerModel::Prim& wL,
                              const EulerModel::Prim& wR) {
  const double aL = std::sqrt(gamma * wL[2] / wL[0]);
  const double aR = std::sqrt(gamma * wR[2] / wR[0]);
  if (2.0 / (gamma - 1.0) * (aL + aR) <= wR[1] - wL[1])
    throw NumericalError("euler riemann: initial data generate vacuum");
}

// Two-rarefaction approximation: closed-form star pressure
//   p* = [(aL + aR - (gamma-1)(uR-uL)/2) / (aL/pL^z + aR/pR^z)]^{1/z},
// z = (gamma-1)/(2 gamma), star velocity and densities from the isentropic
// relations. Both waves are treated as rarefactions regardless of p*.
inline StarState trrs_star(double gamma, const EulerModel::Prim& wL,
                           const EulerModel::Prim& wR) {
  require_no_vacuum(gamma, wL, wR);
  const double aL = std::sqrt(gamma * wL[2] / wL[0]);
  const double aR = std::sqrt(gamma * wR[2] / wR[0]);
  const double z = (gamma - 1.0) / (2.0 * gamma);
  const double num = aL + aR - 0.5 * (gamma - 1.0) * (wR[1] - wL[1]);
  const double den = aL / std::pow(wL[2], z) + aR / std::pow(wR[2], z);
  StarState star;
  star.p = std::pow(num / den, 1.0 / z);
  star.u = wL[1] - 2.0 * aL / (gamma - 1.0) * (std::pow(star.p / wL[2], z) - 1.0);
  star.rho_left = wL[0] * std::pow(star.p / wL[2], 1.0 / gamma);
  star.rho_right = wR[0] * std::pow(star.p / wR[2], 1.0 / gamma);
  return star;
}

// Sample the two-rarefaction wave pattern at x/t = 0.
inline EulerModel::Prim sample_two_rarefaction(double gamma, const EulerModel::Prim& wL,
                                               const EulerModel::Prim& wR,
                                               const StarState& star) {
  const double g1 = gamma - 1.0;
  const double aL = std::sqrt(gamma * wL[2] / wL[0]);
  const double aR = std::sqrt(gamma * wR[2] / wR[0]);
  const double a_star_l = aL * std::pow(star.p / wL[2], g1 / (2.0 * gamma));
  const double a_star_r = aR * std::pow(star.p / wR[2], g1 / (2.0 * gamma));

  if (star.u >= 0.0) {
    const double head = wL[1] - aL;
    const double tail = star.u - a_star_l;
    if (head >= 0.0) return wL;
    if (tail <= 0.0) return {star.rho_left, star.u, star.p};
    // inside the left fan
    const double f = 2.0 / (gamma + 1.0) + g1 / ((gamma + 1.0) * aL) * wL[1];
    return {wL[0] * std::pow(f, 2.0 / g1), 2.0 / (gamma + 1.0) * (aL + 0.5 * g1 * wL[1]),
            wL[2] * std::pow(f, 2.0 * gamma / g1)};
  }
  const double head = wR[1] + aR;
  const double tail = star.u + a_star_r;
  if (head <= 0.0) return wR;
  if (tail >= 0.0) return {star.rho_right, star.u, star.p};
  const double f = 2.0 / (gamma + 1.0) - g1 / ((gamma + 1.0) * aR) * wR[1];
  return {wR[0] * std::pow(f, 2.0 / g1), 2.0 / (gamma + 1.0) * (-aR + 0.5 * g1 * wR[1]),
          wR[2] * std::pow(f, 2.0 * gamma / g1)};
}

inline EulerModel::Prim trrs_state(double gamma, const EulerModel::Prim& wL,
                                   const EulerModel::Prim& wR) {
  if (!(wL[0] > 0.0 && wL[2] > 0.0 && wR[0] > 0.0 && wR[2] > 0.0))
    throw NumericalError("trrs_state: inadmissible Riemann data");
  const StarState star = trrs_star(gamma, wL, wR);
  return sample_two_rarefaction(gamma, wL, wR, star);
}

// Exact iterative solver: Newton iteration on the pressure function with
// shock/rarefaction branches, then sampling across the three-wave pattern.
// Reference-solution oracle; independent of the TRRS path above.
class ExactSolver {
public:
  ExactSolver(double gamma, const EulerModel::Prim& wL, const EulerModel::Prim& wR)
      : gamma_(gamma), wL_(wL), wR_(wR) {
    if (!(wL[0] > 0.0 && wL[2] > 0.0 && wR[0] > 0.0 && wR[2] > 0.0))
      throw NumericalError("exact riemann: inadmissible data");
    require_no_vacuum(gamma, wL, wR);
    aL_ = std::sqrt(gamma * wL[2] / wL[0]);
    aR_ = std::sqrt(gamma * wR[2] / wR[0]);
    solve_star();
  }

  double star_pressure() const { return p_star_; }
  double star_velocity() const { return u_star_; }

  EulerModel::Prim sample(double xi) const {
    const double g = gamma_, g1 = g - 1.0;
    if (xi <= u_star_) {
      // left of the contact
      if (p_star_ > wL_[2]) {  // left shock
        const double sl =
            wL_[1] - aL_ * std::sqrt((g + 1.0) / (2.0 * g) * p_star_ / wL_[2] + g1 / (2.0 * g));
        if (xi <= sl) return wL_;
        const double r = p_star_ / wL_[2];
        const double rho = wL_[0] * (r + g1 / (g + 1.0)) / (g1 / (g + 1.0) * r + 1.0);
        return {rho, u_star_, p_star_};
      }
      const double a_star = aL_ * std::pow(p_star_ / wL_[2], g1 / (2.0 * g));
      const double head = wL_[1] - aL_, tail = u_star_ - a_star;
      if (xi <= head) return wL_;
      if (xi >= tail) return {wL_[0] * std::pow(p_star_ / wL_[2], 1.0 / g), u_star_, p_star_};
      const double f = 2.0 / (g + 1.0) + g1 / ((g + 1.0) * aL_) * (wL_[1] - xi);
      return {wL_[0] * std::pow(f, 2.0 / g1),
              2.0 / (g + 1.0) * (aL_ + 0.5 * g1 * wL_[1] + xi),
              wL_[2] * std::pow(f, 2.0 * g / g1)};
    }
    if (p_star_ > wR_[2]) {  // right shock
      const double sr =
          wR_[1] + aR_ * std::sqrt((g + 1.0) / (2.0 * g) * p_star_ / wR_[2] + g1 / (2.0 * g));
      if (xi >= sr) return wR_;
      const double r = p_star_ / wR_[2];
      const double rho = wR_[0] * (r + g1 / (g + 1.0)) / (g1 / (g + 1.0) * r + 1.0);
      return {rho, u_star_, p_star_};
    }
    const double a_star = aR_ * std::pow(p_star_ / wR_[2], g1 / (2.0 * g));
    const double head = wR_[1] + aR_, tail = u_star_ + a_star;
    if (xi >= head) return wR_;
    if (xi <= tail) return {wR_[0] * std::pow(p_star_ / wR_[2], 1.0 / g), u_star_, p_star_};
    const double f = 2.0 / (g + 1.0) - g1 / ((g + 1.0) * aR_) * (wR_[1] - xi);
    return {wR_[0] * std::pow(f, 2.0 / g1),
            2.0 / (g + 1.0) * (-aR_ + 0.5 * g1 * wR_[1] + xi),
            wR_[2] * std::pow(f, 2.0 * g / g1)};
  }

private:
  double wave_function(double p, const EulerModel::Prim& w, double a, double& deriv) const {
    const double g = gamma_, g1 = g - 1.0;
    if (p > w[2]) {  // shock branch
      const double A = 2.0 / ((g + 1.0) * w[0]);
      const double B = g1 / (g + 1.0) * w[2];
      const double root = std::sqrt(A / (p + B));
      deriv = root * (1.0 - 0.5 * (p - w[2]) / (p + B));
      return (p - w[2]) * root;
    }
    const double z = g1 / (2.0 * g);
    const double pr = p / w[2];
    deriv = std::pow(pr, -(g + 1.0) / (2.0 * g)) / (w[0] * a);
    return 2.0 * a / g1 * (std::pow(pr, z) - 1.0);
  }

  void solve_star() {
    // start from the two-rarefaction guess
    p_star_ = trrs_star(gamma_, wL_, wR_).p;
    const double du = wR_[1] - wL_[1];
    bool converged = false;
    double residual = 0.0;
    for (int it = 0; it < 100; ++it) {
      double dfl = 0.0, dfr = 0.0;
      const double fl = wave_function(p_star_, wL_, aL_, dfl);
      const double fr = wave_function(p_star_, wR_, aR_, dfr);
      residual = fl + fr + du;
      const double dp = residual / (dfl + dfr);
      double p_new = p_star_ - dp;
      if (p_new <= 0.0) p_new = 0.5 * p_star_;
      const double rel = std::abs(p_new - p_star_) / (0.5 * (p_new + p_star_));
      p_star_ = p_new;
      if (rel < 1e-12) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw NumericalError("exact riemann: pressure iteration failed to converge, residual " +
                           std::to_string(residual));
    double dfl = 0.0, dfr = 0.0;
    const double fl = wave_function(p_star_, wL_, aL_, dfl);
    const double fr = wave_function(p_star_, wR_, aR_, dfr);
    u_star_ = 0.5 * (wL_[1] + wR_[1]) + 0.5 * (fr - fl);
  }

  double gamma_;
  EulerModel::Prim wL_, wR_;
  double aL_ = 0.0, aR_ = 0.0;
  double p_star_ = 0.0, u_star_ = 0.0;
};

inline EulerModel::Prim exact_state(double gamma, const EulerModel::Prim& wL,
                                    const EulerModel::Prim& wR, double x_over_t) {
  return ExactSolver(gamma, wL, wR).sample(x_over_t);
}

}  // namespace euler_rp

// Godunov state at x/t = 0 for the classical Riemann problem of each model:
// exact upwinding for advection, the two-rarefaction approximation for Euler.
inline AdvectionModel::State godunov_state(const AdvectionModel& model,
                                           const AdvectionModel::State& qL,
                                           const AdvectionModel::State& qR) {
  return {advection_rp(model.lambda, qL[0], qR[0])};
}

inline EulerModel::State godunov_state(const EulerModel& model, const EulerModel::State& qL,
                                       const EulerModel::State& qR) {
  const EulerModel::Prim w =
      euler_rp::trrs_state(model.gamma, model.prim(qL), model.prim(qR));
  return model.cons(w);
}

template <class Model>
typename Model::State godunov_flux(const Model& model, const typename Model::State& qL,
                                   const typename Model::State& qR) {
  return model.flux(godunov_state(model, qL, qR));
}

}  // namespace ader1d

#endif
