#ifndef ADER1D_POLYNOMIAL_HPP
#define ADER1D_POLYNOMIAL_HPP

#include <array>
#include <cmath>
#include <stdexcept>

#include "ader1d/legendre.hpp"

namespace ader1d {

// Degree-m polynomial on one cell, stored as modal shifted-Legendre
// coefficients per component. Reference coordinate xi in [0,1] maps to
// physical x = x_{i-1/2} + xi*dx; evaluation and integration outside [0,1]
// extend the polynomial to neighbour cells.
template <int N>
struct CellPoly {
  int degree = 0;
  int cell = 0;
  double dx = 1.0;
  // coeff[k][comp], k = 0..degree
  std::array<std::array<double, N>, legendre::kMaxDegree + 1> coeff{};

  std::array<double, N> eval(double xi) const {
    std::array<double, N> v{};
    for (int k = 0; k <= degree; ++k) {
      const double b = legendre::basis_value(k, xi);
      for (int c = 0; c < N; ++c) v[c] += coeff[k][c] * b;
    }
    return v;
  }

  // Mean over the reference sub-interval [a,b].
  std::array<double, N> mean(double a, double b) const {
    std::array<double, N> v{};
    for (int k = 0; k <= degree; ++k) {
      const double w = legendre::basis_integral(k, a, b) / (b - a);
      for (int c = 0; c < N; ++c) v[c] += coeff[k][c] * w;
    }
    return v;
  }

  // Physical-coordinate derivative d^order/dx^order at reference xi.
  std::array<double, N> derivative(int order, double xi) const {
    std::array<double, N> v{};
    const double scale = std::pow(1.0 / dx, order);
    for (int k = order; k <= degree; ++k) {
      const double b = legendre::basis_derivative(k, order, xi) * scale;
      for (int c = 0; c < N; ++c) v[c] += coeff[k][c] * b;
    }
    return v;
  }

  std::array<double, N> cell_mean() const { return coeff[0]; }
};

using ScalarPoly = CellPoly<1>;

inline ScalarPoly make_scalar_poly(int m, const std::array<double, 5>& c, double dx = 1.0,
                                   int cell = 0) {
  ScalarPoly p;
  p.degree = m;
  p.dx = dx;
  p.cell = cell;
  for (int k = 0; k <= m; ++k) p.coeff[k][0] = c[k];
  return p;
}

}  // namespace ader1d

#endif
