#ifndef ADER1D_PREDICTOR_HPP
#define ADER1D_PREDICTOR_HPP

#include <array>
#include <cmath>
#include <string>

#include "ader1d/errors.hpp"
#include "ader1d/legendre.hpp"
#include "ader1d/linalg.hpp"
#include "ader1d/polynomial.hpp"
#include "ader1d/quadrature.hpp"

namespace ader1d {

// Space-time polynomial on the reference element [0,1]x[0,1], tensor modal
// basis B_k(xi) B_l(tau) of degree m in each direction.
template <int N>
struct SpaceTimePoly {
  int degree = 0;
  double dt = 0.0;
  std::array<std::array<std::array<double, N>, 5>, 5> coeff{};  // [k][l][comp]

  std::array<double, N> trace(double xi, double tau) const {
    std::array<double, N> v{};
    for (int k = 0; k <= degree; ++k) {
      const double bx = legendre::basis_value(k, xi);
      for (int l = 0; l <= degree; ++l) {
        const double b = bx * legendre::basis_value(l, tau);
        for (int c = 0; c < N; ++c) v[c] += coeff[k][l][c] * b;
      }
    }
    return v;
  }
};

// Locally implicit space-time Galerkin evolution of one cell's reconstruction
// polynomial (the predictor step of the GRP solver). The weak form upwinds in
// time only; Picard iteration starts from the time-constant extension of the
// input polynomial and runs m+1 sweeps or until the coefficient increments
// drop below 1e-14. (For linear fluxes the sweep operator is nilpotent, so
// the full m+1 sweeps terminate on the exact space-time solution; the exit
// threshold is kept below that so convergent runs are not cut one sweep
// short.)
class PredictorOperator {
public:
  explicit PredictorOperator(int m) : m_(m), rule_(gauss_legendre(m + 1)) {
    const int n = m + 1;
    const QuadratureRule q = gauss_legendre(5);  // exact through degree 9

    SmallMatrix k1(n, n);
    for (int l = 0; l < n; ++l)
      for (int lp = 0; lp < n; ++lp) {
        double kt = 0.0;  // int_0^1 B_l' B_lp dtau
        for (int g = 0; g < q.size(); ++g)
          kt += q.weights[g] * legendre::basis_derivative(l, 1, q.nodes[g]) *
                legendre::basis_value(lp, q.nodes[g]);
        k1(l, lp) = legendre::basis_value(l, 1.0) * legendre::basis_value(lp, 1.0) - kt;
      }
    k1_inv_ = invert_dense(k1);

    sxi_ = SmallMatrix(n, n);
    for (int k = 0; k < n; ++k)
      for (int kp = 0; kp < n; ++kp) {
        double s = 0.0;  // int_0^1 B_k B_kp' dxi
        for (int g = 0; g < q.size(); ++g)
          s += q.weights[g] * legendre::basis_value(k, q.nodes[g]) *
               legendre::basis_derivative(kp, 1, q.nodes[g]);
        sxi_(k, kp) = s;
      }

    for (int g = 0; g < n; ++g)
      for (int k = 0; k < n; ++k) vand_[g][k] = legendre::basis_value(k, rule_.nodes[g]);
    for (int l = 0; l < n; ++l) basis_at0_[l] = legendre::basis_value(l, 0.0);
  }

  int degree() const { return m_; }
  const QuadratureRule& nodes() const { return rule_; }

  // Nodal values of the space-time polynomial at the tensor quadrature grid.
  template <int N>
  void nodal_values(const SpaceTimePoly<N>& st,
                    std::array<std::array<std::array<double, N>, 5>, 5>& u) const {
    const int n = m_ + 1;
    std::array<std::array<std::array<double, N>, 5>, 5> tmp{};
    for (int k = 0; k < n; ++k)
      for (int h = 0; h < n; ++h)
        for (int l = 0; l < n; ++l)
          for (int c = 0; c < N; ++c) tmp[k][h][c] += st.coeff[k][l][c] * vand_[h][l];
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        u[g][h] = {};
        for (int k = 0; k < n; ++k)
          for (int c = 0; c < N; ++c) u[g][h][c] += tmp[k][h][c] * vand_[g][k];
      }
  }

  template <class Model>
  SpaceTimePoly<Model::num_vars> evolve(const Model& model,
                                        const CellPoly<Model::num_vars>& p, double dt,
                                        double dx) const {
    constexpr int N = Model::num_vars;
    const int n = m_ + 1;
    const double dt_dx = dt / dx;

    SpaceTimePoly<N> st;
    st.degree = m_;
    st.dt = dt;
    for (int k = 0; k < n; ++k)
      for (int c = 0; c < N; ++c) st.coeff[k][0][c] = p.coeff[k][c];

    // fixed part of the right-hand side: the initial trace
    std::array<std::array<std::array<double, N>, 5>, 5> rhs0{};
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int c = 0; c < N; ++c)
          rhs0[k][l][c] = basis_at0_[l] * p.coeff[k][c] * legendre::mode_norm_sq(k);

    std::array<std::array<std::array<double, N>, 5>, 5> u{}, fnod{}, snod{};
    std::array<std::array<std::array<double, N>, 5>, 5> fmod{}, smod{};
    const bool with_source = model.has_source();

    for (int iter = 0; iter < n; ++iter) {
      nodal_values<N>(st, u);
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
          for (int c = 0; c < N; ++c)
            if (!std::isfinite(u[g][h][c]))
              throw NumericalError("det_predictor: non-finite state in cell " +
                                   std::to_string(p.cell));
          fnod[g][h] = model.flux(u[g][h]);
          if (with_source) snod[g][h] = model.source(u[g][h]);
        }
      project<N>(fnod, fmod);
      if (with_source) project<N>(snod, smod);

      double residual = 0.0;
      for (int k = 0; k < n; ++k) {
        // rhs_k[l] = rhs0 - dt/dx sum_kp Sxi(k,kp) fmod[kp][l] / (2l+1)
        //            + dt smod[k][l] / ((2k+1)(2l+1))
        std::array<std::array<double, N>, 5> r{};
        for (int l = 0; l < n; ++l) {
          for (int c = 0; c < N; ++c) r[l][c] = rhs0[k][l][c];
          const double wl = legendre::mode_norm_sq(l);
          for (int kp = 0; kp < n; ++kp) {
            const double s = sxi_(k, kp) * wl * dt_dx;
            for (int c = 0; c < N; ++c) r[l][c] -= s * fmod[kp][l][c];
          }
          if (with_source) {
            const double s = dt * legendre::mode_norm_sq(k) * wl;
            for (int c = 0; c < N; ++c) r[l][c] += s * smod[k][l][c];
          }
        }
        // q_k[:] = (2k+1) K1^{-1} r
        const double scale = 2 * k + 1;
        for (int l = 0; l < n; ++l) {
          std::array<double, N> qkl{};
          for (int lp = 0; lp < n; ++lp)
            for (int c = 0; c < N; ++c) qkl[c] += k1_inv_(l, lp) * r[lp][c];
          for (int c = 0; c < N; ++c) {
            const double v = scale * qkl[c];
            residual = std::max(residual, std::abs(v - st.coeff[k][l][c]));
            st.coeff[k][l][c] = v;
          }
        }
      }
      if (residual < 1e-14) break;
    }
    return st;
  }

private:
  // L2 projection of nodal data onto the tensor modal basis.
  template <int N>
  void project(const std::array<std::array<std::array<double, N>, 5>, 5>& nod,
               std::array<std::array<std::array<double, N>, 5>, 5>& mod) const {
    const int n = m_ + 1;
    std::array<std::array<std::array<double, N>, 5>, 5> tmp{};
    for (int k = 0; k < n; ++k)
      for (int h = 0; h < n; ++h) {
        tmp[k][h] = {};
        for (int g = 0; g < n; ++g) {
          const double w = rule_.weights[g] * vand_[g][k];
          for (int c = 0; c < N; ++c) tmp[k][h][c] += w * nod[g][h][c];
        }
      }
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        mod[k][l] = {};
        for (int h = 0; h < n; ++h) {
          const double w = rule_.weights[h] * vand_[h][l];
          for (int c = 0; c < N; ++c) mod[k][l][c] += w * tmp[k][h][c];
        }
        const double norm = (2 * k + 1) * (2 * l + 1);
        for (int c = 0; c < N; ++c) mod[k][l][c] *= norm;
      }
  }

  int m_;
  QuadratureRule rule_;
  SmallMatrix k1_inv_, sxi_;
  std::array<std::array<double, 5>, 5> vand_{};
  std::array<double, 5> basis_at0_{};
};

}  // namespace ader1d

#endif
