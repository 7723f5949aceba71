#include <cmath>
#include <random>

#include "ader1d/models.hpp"
#include "ader1d/predictor.hpp"
#include "gtest/gtest.h"

using namespace ader1d;

namespace {

CellPoly<1> scalar_cell_poly(int m, const std::array<double, 5>& c, double dx) {
  CellPoly<1> p;
  p.degree = m;
  p.dx = dx;
  for (int k = 0; k <= m; ++k) p.coeff[k][0] = c[k];
  return p;
}

}  // namespace

TEST(Predictor, ConstantIsExactFixedPoint) {
  const AdvectionModel model(1.0);
  for (int m = 1; m <= 4; ++m) {
    const PredictorOperator op(m);
    const auto st = op.evolve(model, scalar_cell_poly(m, {2.5, 0, 0, 0, 0}, 0.1), 0.05, 0.1);
    for (double xi : {0.0, 0.3, 1.0})
      for (double tau : {0.0, 0.5, 1.0}) EXPECT_NEAR(st.trace(xi, tau)[0], 2.5, 1e-12);
  }
}

TEST(Predictor, AdvectionPolynomialDataEvolvesAsExactShift) {
  // for linear advection the space-time solution of degree-m data lies in the
  // tensor space, so the predictor reproduces the exact shift
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const AdvectionModel model(1.0);
  const double dx = 0.1, dt = 0.09;  // Courant 0.9
  const double shift = model.lambda * dt / dx;
  for (int m = 1; m <= 4; ++m) {
    const PredictorOperator op(m);
    for (int trial = 0; trial < 10; ++trial) {
      std::array<double, 5> c{};
      for (int k = 0; k <= m; ++k) c[k] = dist(rng);
      const CellPoly<1> p = scalar_cell_poly(m, c, dx);
      const auto st = op.evolve(model, p, dt, dx);
      // tolerance is relative to the solution's magnitude over the element
      // (the upstream foot points extrapolate the polynomial beyond [0,1])
      double scale = 1.0;
      for (double xi : {0.0, 0.25, 0.5, 0.75, 1.0})
        for (double tau : {0.0, 0.4, 1.0})
          scale = std::max(scale, std::abs(p.eval(xi - shift * tau)[0]));
      for (double xi : {0.0, 0.25, 0.5, 0.75, 1.0})
        for (double tau : {0.0, 0.4, 1.0}) {
          const double exact = p.eval(xi - shift * tau)[0];
          EXPECT_NEAR(st.trace(xi, tau)[0], exact, 1e-12 * scale)
              << "m=" << m << " xi=" << xi << " tau=" << tau;
        }
    }
  }
}

TEST(Predictor, InitialTraceReproducesReconstruction) {
  // linear flux: the tau=0 trace must match the input polynomial
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const AdvectionModel model(-1.7);
  for (int m = 1; m <= 4; ++m) {
    const PredictorOperator op(m);
    std::array<double, 5> c{};
    for (int k = 0; k <= m; ++k) c[k] = dist(rng);
    const CellPoly<1> p = scalar_cell_poly(m, c, 0.05);
    const auto st = op.evolve(model, p, 0.02, 0.05);
    for (double xi : {0.0, 0.2, 0.5, 0.9, 1.0})
      EXPECT_NEAR(st.trace(xi, 0.0)[0], p.eval(xi)[0], 1e-10);
  }
}

TEST(Predictor, SourceDecayMatchesExponentialToSchemeOrder) {
  // S(q) = -q with spatially constant data: the trace must follow c*exp(-tau*dt)
  // with local error of order m+2 (superconvergent at the element end)
  for (int m = 1; m <= 3; ++m) {
    const PredictorOperator op(m);
    const AdvectionModel model(1.0, -1.0);
    double prev_err = 0.0;
    const std::array<double, 3> dts{0.4, 0.2, 0.1};
    std::array<double, 3> errs{};
    for (int r = 0; r < 3; ++r) {
      const double dt = dts[r];
      const auto st = op.evolve(model, scalar_cell_poly(m, {1.0, 0, 0, 0, 0}, 1.0), dt, 1.0);
      errs[r] = std::abs(st.trace(0.5, 1.0)[0] - std::exp(-dt));
    }
    (void)prev_err;
    const double order1 = std::log2(errs[0] / errs[1]);
    const double order2 = std::log2(errs[1] / errs[2]);
    EXPECT_GT(order1, m + 1 - 0.4) << "m=" << m;
    EXPECT_GT(order2, m + 1 - 0.4) << "m=" << m;
  }
}

TEST(Predictor, FirstOrderTraceIsForwardEulerToSecondOrder) {
  // with the decay source, forward Euler predicts 1 - dt; the predictor trace
  // deviates from it by O(dt^2). (For linear advection data the exact shift
  // coincides with forward Euler, so the source term supplies the curvature.)
  const AdvectionModel model(1.0, -1.0);
  const PredictorOperator op(1);
  std::array<double, 3> errs{};
  const std::array<double, 3> dts{0.04, 0.02, 0.01};
  for (int r = 0; r < 3; ++r) {
    const double dt = dts[r];
    const auto st = op.evolve(model, scalar_cell_poly(1, {1.0, 0, 0, 0, 0}, 1.0), dt, 1.0);
    errs[r] = std::abs(st.trace(0.5, 1.0)[0] - (1.0 - dt));
  }
  // the difference is O(dt^2): halving dt divides it by about 4
  EXPECT_GT(std::log2(errs[0] / errs[1]), 1.6);
  EXPECT_GT(std::log2(errs[1] / errs[2]), 1.6);
}

TEST(Predictor, EulerSmoothDataStaysAdmissible) {
  const EulerModel model(1.4);
  const PredictorOperator op(3);
  CellPoly<3> p;
  p.degree = 3;
  p.dx = 0.025;
  const auto q = model.cons({1.0, 1.0, 2.0});
  for (int c = 0; c < 3; ++c) {
    p.coeff[0][c] = q[c];
    p.coeff[1][c] = 0.05 * q[c];  // mild gradient
  }
  const auto st = op.evolve(model, p, 0.005, 0.025);
  for (double xi : {0.0, 0.5, 1.0})
    for (double tau : {0.0, 1.0}) EXPECT_TRUE(model.admissible(st.trace(xi, tau)));
}

TEST(Predictor, InadmissibleQuadratureStateNamesCell) {
  const EulerModel model(1.4);
  const PredictorOperator op(2);
  CellPoly<3> p;
  p.degree = 2;
  p.dx = 0.1;
  p.cell = 7;
  const auto q = model.cons({1.0, 0.0, 1.0});
  for (int c = 0; c < 3; ++c) p.coeff[0][c] = q[c];
  p.coeff[1][0] = -1.5;  // density swings negative inside the cell
  try {
    op.evolve(model, p, 0.01, 0.1);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("cell 7"), std::string::npos);
  }
}
