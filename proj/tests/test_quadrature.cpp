#include <cmath>

#include "ader1d/quadrature.hpp"
#include "gtest/gtest.h"

using namespace ader1d;

TEST(GaussLegendre, OnePoint) {
  const auto r = gauss_legendre(1);
  ASSERT_EQ(r.size(), 1);
  EXPECT_NEAR(r.nodes[0], 0.5, 1e-15);
  EXPECT_NEAR(r.weights[0], 1.0, 1e-15);
}

TEST(GaussLegendre, TwoPointNodes) {
  const auto r = gauss_legendre(2);
  const double off = 1.0 / (2.0 * std::sqrt(3.0));
  EXPECT_NEAR(r.nodes[0], 0.5 - off, 1e-15);
  EXPECT_NEAR(r.nodes[1], 0.5 + off, 1e-15);
  EXPECT_NEAR(r.weights[0], 0.5, 1e-15);
  EXPECT_NEAR(r.weights[1], 0.5, 1e-15);
}

TEST(GaussLegendre, ThreePointIntegratesQuintic) {
  const auto r = gauss_legendre(3);
  double s = 0.0;
  for (int g = 0; g < 3; ++g) s += r.weights[g] * std::pow(r.nodes[g], 5);
  EXPECT_NEAR(s, 1.0 / 6.0, 1e-15);
}

TEST(GaussLegendre, ExactnessDegree2nMinus1) {
  for (int n = 1; n <= 10; ++n) {
    const auto r = gauss_legendre(n);
    double wsum = 0.0;
    for (int g = 0; g < n; ++g) wsum += r.weights[g];
    EXPECT_NEAR(wsum, 1.0, 1e-14) << "n=" << n;
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0.0;
      for (int g = 0; g < n; ++g) s += r.weights[g] * std::pow(r.nodes[g], p);
      EXPECT_NEAR(s, 1.0 / (p + 1), 1e-14) << "n=" << n << " p=" << p;
    }
  }
}

TEST(GaussLegendre, RejectsOutOfRange) {
  EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
  EXPECT_THROW(gauss_legendre(11), std::invalid_argument);
}
