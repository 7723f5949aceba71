#include <cmath>
#include <random>

#include "ader1d/riemann.hpp"
#include "gtest/gtest.h"

using namespace ader1d;

TEST(AdvectionRp, UpwindAndTieBreak) {
  EXPECT_NEAR(advection_rp(1.0, 0.3, 0.7), 0.3, 1e-15);
  EXPECT_NEAR(advection_rp(-1.0, 0.3, 0.7), 0.7, 1e-15);
  EXPECT_NEAR(advection_rp(0.0, 0.3, 0.7), 0.5, 1e-15);
  EXPECT_NEAR(advection_rp(5.0, 2.0, 2.0), 2.0, 1e-15);
}

TEST(Trrs, EqualStatesReturnThatState) {
  const auto w = euler_rp::trrs_state(1.4, {1.0, 0.0, 1.0}, {1.0, 0.0, 1.0});
  EXPECT_NEAR(w[0], 1.0, 1e-12);
  EXPECT_NEAR(w[1], 0.0, 1e-12);
  EXPECT_NEAR(w[2], 1.0, 1e-12);
}

TEST(Trrs, SodStarPressureNearExact) {
  const EulerModel::Prim wl{1.0, 0.0, 1.0}, wr{0.125, 0.0, 0.1};
  const auto star = euler_rp::trrs_star(1.4, wl, wr);
  const euler_rp::ExactSolver exact(1.4, wl, wr);
  EXPECT_NEAR(star.p, exact.star_pressure(), 0.01);
}

TEST(Trrs, Problem123SymmetricStationaryContact) {
  const auto w = euler_rp::trrs_state(1.4, {1.0, -2.0, 0.4}, {1.0, 2.0, 0.4});
  EXPECT_NEAR(w[1], 0.0, 1e-12);
  const auto star = euler_rp::trrs_star(1.4, {1.0, -2.0, 0.4}, {1.0, 2.0, 0.4});
  EXPECT_NEAR(star.u, 0.0, 1e-12);
  EXPECT_NEAR(star.rho_left, star.rho_right, 1e-12);
}

TEST(Trrs, VacuumDataRejected) {
  EXPECT_THROW(euler_rp::trrs_state(1.4, {1.0, -20.0, 0.4}, {1.0, 20.0, 0.4}), NumericalError);
}

TEST(ExactSolver, SodStarValues) {
  // classical reference values for Sod's problem
  const euler_rp::ExactSolver s(1.4, {1.0, 0.0, 1.0}, {0.125, 0.0, 0.1});
  EXPECT_NEAR(s.star_pressure(), 0.30313, 2e-5);
  EXPECT_NEAR(s.star_velocity(), 0.92745, 2e-5);
}

TEST(ExactSolver, EqualStatesEverywhere) {
  const EulerModel m(1.4);
  const euler_rp::ExactSolver s(1.4, {1.0, 0.5, 2.0}, {1.0, 0.5, 2.0});
  for (double xi : {-3.0, -1.0, 0.0, 0.49, 3.0}) {
    // outside the characteristic cone [u-a, u+a] the data state is returned;
    // inside, the solution is the (identical) star state
    const auto w = s.sample(xi);
    EXPECT_NEAR(w[0], 1.0, 1e-12);
    EXPECT_NEAR(w[1], 0.5, 1e-12);
    EXPECT_NEAR(w[2], 2.0, 1e-12);
  }
}

TEST(ExactSolver, Problem123SymmetricAtZero) {
  const euler_rp::ExactSolver s(1.4, {1.0, -2.0, 0.4}, {1.0, 2.0, 0.4});
  EXPECT_NEAR(s.star_velocity(), 0.0, 1e-12);
  EXPECT_NEAR(s.sample(0.0)[1], 0.0, 1e-12);
}

TEST(GodunovFlux, AdvectionUpwind) {
  const AdvectionModel m(1.0);
  const auto f = godunov_flux(m, {2.0}, {5.0});
  EXPECT_NEAR(f[0], 2.0, 1e-15);
}

TEST(GodunovFlux, ConsistencyOnEqualStates) {
  const EulerModel m(1.4);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> rho(0.1, 5.0), u(-3.0, 3.0), p(0.05, 8.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = m.cons({rho(rng), u(rng), p(rng)});
    const auto f = godunov_flux(m, q, q);
    const auto exact = m.flux(q);
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(f[c], exact[c], 1e-12 * (1.0 + std::abs(exact[c])));
  }
}

TEST(GodunovFlux, SodFluxMatchesExactSolverWithinOnePercent) {
  const EulerModel m(1.4);
  const auto qL = m.cons({1.0, 0.0, 1.0});
  const auto qR = m.cons({0.125, 0.0, 0.1});
  const auto f = godunov_flux(m, qL, qR);
  const auto w_exact = euler_rp::exact_state(1.4, {1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 0.0);
  const auto f_exact = m.flux(m.cons(w_exact));
  for (int c = 0; c < 3; ++c)
    EXPECT_NEAR(f[c], f_exact[c], 0.01 * std::max(1.0, std::abs(f_exact[c]))) << "component " << c;
}

TEST(GodunovState, MirrorSymmetryForEuler) {
  const EulerModel m(1.4);
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> rho(0.2, 3.0), u(-1.0, 1.0), p(0.2, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const EulerModel::Prim wl{rho(rng), u(rng), p(rng)}, wr{rho(rng), u(rng), p(rng)};
    const auto s = euler_rp::trrs_state(1.4, wl, wr);
    const EulerModel::Prim wl_m{wr[0], -wr[1], wr[2]}, wr_m{wl[0], -wl[1], wl[2]};
    const auto s_m = euler_rp::trrs_state(1.4, wl_m, wr_m);
    EXPECT_NEAR(s_m[0], s[0], 1e-10 * (1.0 + s[0]));
    EXPECT_NEAR(s_m[1], -s[1], 1e-10 * (1.0 + std::abs(s[1])));
    EXPECT_NEAR(s_m[2], s[2], 1e-10 * (1.0 + s[2]));
  }
}

TEST(Trrs, StarPressureWithinFivePercentOfExactOn200RandomPairs) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> rho(0.125, 8.0), pratio(0.1, 10.0), u(-0.5, 0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const double v = u(rng);  // common velocity; the pressure ratio drives the waves
    const EulerModel::Prim wl{rho(rng), v, 1.0};
    const EulerModel::Prim wr{rho(rng), v, pratio(rng)};
    const auto star = euler_rp::trrs_star(1.4, wl, wr);
    const euler_rp::ExactSolver exact(1.4, wl, wr);
    EXPECT_NEAR(star.p, exact.star_pressure(), 0.05 * exact.star_pressure())
        << "trial " << trial << " data (" << wl[0] << "," << wl[1] << "," << wl[2] << ")|("
        << wr[0] << "," << wr[1] << "," << wr[2] << ")";
  }
}
