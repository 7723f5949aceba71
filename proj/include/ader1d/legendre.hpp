#ifndef ADER1D_LEGENDRE_HPP
#define ADER1D_LEGENDRE_HPP

#include <array>
#include <cmath>

namespace ader1d {

// Shifted Legendre basis on the reference cell [0,1]:
//   B_k(xi) = P_k(2 xi - 1),  k = 0..4.
// Orthogonality: int_0^1 B_j B_k dxi = delta_jk / (2k+1); B_0 has unit mean,
// higher modes have zero mean, so the cell mean of a modal expansion is the
// coefficient of B_0.
namespace legendre {

inline constexpr int kMaxDegree = 4;

// Monomial coefficients of B_k, lowest power first.
inline constexpr std::array<std::array<double, 5>, 5> kMonomial = {{
    {1.0, 0.0, 0.0, 0.0, 0.0},
    {-1.0, 2.0, 0.0, 0.0, 0.0},
    {1.0, -6.0, 6.0, 0.0, 0.0},
    {-1.0, 12.0, -30.0, 20.0, 0.0},
    {1.0, -20.0, 90.0, -140.0, 70.0},
}};

inline double basis_value(int k, double xi) {
  const auto& c = kMonomial[k];
  double v = c[4];
  for (int p = 3; p >= 0; --p) v = v * xi + c[p];
  return v;
}

// d^order/dxi^order B_k at xi (reference-coordinate derivative).
inline double basis_derivative(int k, int order, double xi) {
  if (order == 0) return basis_value(k, xi);
  std::array<double, 5> c = kMonomial[k];
  for (int d = 0; d < order; ++d) {
    for (int p = 0; p < 4; ++p) c[p] = (p + 1) * c[p + 1];
    c[4] = 0.0;
  }
  double v = c[4];
  for (int p = 3; p >= 0; --p) v = v * xi + c[p];
  return v;
}

// int_a^b B_k dxi via the monomial antiderivative; exact for any a, b and
// used to express conservation conditions on neighbour cells, where the
// cell-i polynomial is extended beyond [0,1].
inline double basis_integral(int k, double a, double b) {
  const auto& c = kMonomial[k];
  double va = 0.0, vb = 0.0;
  for (int p = 4; p >= 0; --p) {
    va = va * a + c[p] / (p + 1);
    vb = vb * b + c[p] / (p + 1);
  }
  return vb * b - va * a;
}

inline double mode_norm_sq(int k) { return 1.0 / (2 * k + 1); }

}  // namespace legendre
}  // namespace ader1d

#endif
