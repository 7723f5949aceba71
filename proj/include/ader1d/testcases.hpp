#ifndef ADER1D_TESTCASES_HPP
#define ADER1D_TESTCASES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "ader1d/errors.hpp"
#include "ader1d/grid.hpp"
#include "ader1d/models.hpp"
#include "ader1d/riemann.hpp"

namespace ader1d {

enum class ModelKind { advection, euler };

// A registered problem: model parameters, domain, initial condition and,
// when available, the exact solution. States are conservative; component 0
// is the advected scalar or the density.
struct TestCase {
  std::string name;
  ModelKind model = ModelKind::advection;
  double lambda = 1.0;
  double gamma = 1.4;
  double x_min = -1.0;
  double x_max = 1.0;
  Boundary boundary = Boundary::periodic;
  double t_end = 4.0;
  double cfl = 0.9;
  bool smooth = true;  // false: error-norm tables are replaced by TV/min-max diagnostics
  std::vector<double> ic_breaks;  // discontinuities/kinks of the IC for split quadrature
  std::function<std::array<double, 3>(double)> ic;
  std::function<std::array<double, 3>(double, double)> exact;  // null if none

  bool has_exact() const { return static_cast<bool>(exact); }
  int num_vars() const { return model == ModelKind::euler ? 3 : 1; }
};

namespace testcases {

inline double wrap_periodic(double x, double a, double b) {
  const double len = b - a;
  double y = std::fmod(x - a, len);
  if (y < 0) y += len;
  return a + y;
}

inline double multiwave_profile(double x) {
  if (x >= -0.8 && x <= -0.6) return std::exp(-std::log(2.0) * (x + 0.7) * (x + 0.7) / 0.0009);
  if (x >= -0.4 && x <= -0.2) return 1.0;
  if (x >= 0.0 && x <= 0.2) return 1.0 - std::abs(10.0 * x - 1.0);
  if (x >= 0.4 && x <= 0.6) return std::sqrt(std::max(0.0, 1.0 - 100.0 * (x - 0.5) * (x - 0.5)));
  return 0.0;
}

inline TestCase make_advection_case(const std::string& name,
                                    std::function<double(double)> profile, double t_end,
                                    bool smooth, std::vector<double> breaks, double lambda) {
  TestCase tc;
  tc.name = name;
  tc.model = ModelKind::advection;
  tc.lambda = lambda;
  tc.x_min = -1.0;
  tc.x_max = 1.0;
  tc.boundary = Boundary::periodic;
  tc.t_end = t_end;
  tc.smooth = smooth;
  tc.ic_breaks = std::move(breaks);
  tc.ic = [profile](double x) { return std::array<double, 3>{profile(x), 0.0, 0.0}; };
  tc.exact = [profile, lambda](double x, double t) {
    return std::array<double, 3>{profile(wrap_periodic(x - lambda * t, -1.0, 1.0)), 0.0, 0.0};
  };
  return tc;
}

inline TestCase make_euler_riemann_case(const std::string& name, EulerModel::Prim left,
                                        EulerModel::Prim right, double x_c, double t_end,
                                        double gamma) {
  TestCase tc;
  tc.name = name;
  tc.model = ModelKind::euler;
  tc.gamma = gamma;
  tc.x_min = 0.0;
  tc.x_max = 1.0;
  tc.boundary = Boundary::transmissive;
  tc.t_end = t_end;
  tc.smooth = false;
  tc.ic_breaks = {x_c};
  tc.ic = [=](double x) {
    return EulerModel::cons_from_prim_static(x <= x_c ? left : right, gamma);
  };
  tc.exact = [=](double x, double t) {
    if (t <= 0.0)
      return EulerModel::cons_from_prim_static(x <= x_c ? left : right, gamma);
    const auto w = euler_rp::exact_state(gamma, left, right, (x - x_c) / t);
    return EulerModel::cons_from_prim_static(w, gamma);
  };
  return tc;
}

}  // namespace testcases

// Build a registered test case; gamma applies to the Euler cases and lambda
// to the advection cases.
inline TestCase make_test_case(const std::string& name, double gamma = 1.4,
                               double lambda = 1.0) {
  using namespace testcases;
  if (name == "multiwave")
    return make_advection_case(name, multiwave_profile, 2000.0, false,
                               {-0.8, -0.6, -0.4, -0.2, 0.0, 0.1, 0.2, 0.4, 0.6}, lambda);
  if (name == "square-wave")
    return make_advection_case(
        name, [](double x) { return (x >= -0.3 && x <= 0.3) ? 1.0 : 0.0; }, 4.0, false,
        {-0.3, 0.3}, lambda);
  if (name == "quartic-sine")
    return make_advection_case(
        name, [](double x) { return std::pow(std::sin(M_PI * x), 4); }, 4.0, true, {}, lambda);
  if (name == "euler-smooth") {
    TestCase tc;
    tc.name = name;
    tc.model = ModelKind::euler;
    tc.gamma = gamma;
    tc.x_min = 0.0;
    tc.x_max = 1.0;
    tc.boundary = Boundary::periodic;
    tc.t_end = 4.0;
    tc.ic = [gamma](double x) {
      return EulerModel::cons_from_prim_static(
          {1.0 + 0.2 * std::sin(2.0 * M_PI * x), 1.0, 2.0}, gamma);
    };
    tc.exact = [gamma](double x, double t) {
      return EulerModel::cons_from_prim_static(
          {1.0 + 0.2 * std::sin(2.0 * M_PI * (x - t)), 1.0, 2.0}, gamma);
    };
    return tc;
  }
  if (name == "sod")
    return testcases::make_euler_riemann_case(name, {1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 0.3,
                                              0.2, gamma);
  if (name == "123")
    return testcases::make_euler_riemann_case(name, {1.0, -2.0, 0.4}, {1.0, 2.0, 0.4}, 0.5,
                                              0.15, gamma);
  throw ConfigError("unknown test case '" + name + "'");
}

inline std::vector<std::string> test_case_names() {
  return {"multiwave", "square-wave", "quartic-sine", "euler-smooth", "sod", "123"};
}

inline const std::vector<TestCase>& test_case_registry() {
  static const std::vector<TestCase> reg = [] {
    std::vector<TestCase> v;
    for (const auto& n : test_case_names()) v.push_back(make_test_case(n));
    return v;
  }();
  return reg;
}

inline const TestCase& find_test_case(const std::string& name) {
  for (const auto& tc : test_case_registry())
    if (tc.name == name) return tc;
  throw ConfigError("unknown test case '" + name + "'");
}

// Cell averages of a pointwise function with per-cell composite quadrature
// split at the listed break points; exact for piecewise-smooth data.
template <int N>
std::vector<std::array<double, N>> cell_averages_split(
    const Grid& grid, const std::function<std::array<double, N>(double)>& f, int quad_order,
    const std::vector<double>& breaks) {
  const QuadratureRule rule = gauss_legendre(quad_order);
  std::vector<std::array<double, N>> avgs(grid.num_cells);
  for (int i = 0; i < grid.num_cells; ++i) {
    const double a = grid.cell_left(i);
    const double b = a + grid.dx;
    std::vector<double> edges{a};
    for (double s : breaks)
      if (s > a && s < b) edges.push_back(s);
    std::sort(edges.begin() + 1, edges.end());
    edges.push_back(b);
    std::array<double, N> avg{};
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
      const double lo = edges[e], hi = edges[e + 1];
      for (int g = 0; g < rule.size(); ++g) {
        const auto v = f(lo + rule.nodes[g] * (hi - lo));
        const double w = rule.weights[g] * (hi - lo) / grid.dx;
        for (int c = 0; c < N; ++c) avg[c] += w * v[c];
      }
    }
    avgs[i] = avg;
  }
  return avgs;
}

}  // namespace ader1d

#endif
