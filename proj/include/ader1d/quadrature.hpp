#ifndef ADER1D_QUADRATURE_HPP
#define ADER1D_QUADRATURE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ader1d {

// Gauss-Legendre rule mapped to the reference interval [0,1].
// Weights sum to 1; an n-point rule is exact for polynomials of degree 2n-1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

inline QuadratureRule gauss_legendre(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("gauss_legendre: n must be in 1..10");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n over [-1,1], roots seeded from the Chebyshev
  // approximation; standard and accurate to machine precision for n <= 10.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (n == 1) p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = (n == 1) ? x : p1;
      const double pn1 = (n == 1) ? 1.0 : p0;
      dp = n * (x * pn - pn1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace ader1d

#endif
