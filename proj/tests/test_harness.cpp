#include <cmath>
#include <cstdio>
#include <filesystem>

#include "ader1d/ader1d.hpp"
#include "gtest/gtest.h"

using namespace ader1d;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST(TestCases, ExactMatchesInitialConditionAtTimeZero) {
  for (const auto& tc : test_case_registry()) {
    if (!tc.has_exact()) continue;
    for (double x : {0.11, 0.43, 0.77}) {
      const double xs = tc.x_min + x * (tc.x_max - tc.x_min);
      const auto a = tc.ic(xs);
      const auto b = tc.exact(xs, 0.0);
      for (int c = 0; c < tc.num_vars(); ++c) EXPECT_NEAR(a[c], b[c], 1e-12) << tc.name;
    }
  }
}

TEST(TestCases, InitialErrorBelow1em12ForSmoothCases) {
  for (const auto& tc : test_case_registry()) {
    if (!tc.smooth) continue;
    const Grid grid = build_grid(tc.x_min, tc.x_max, 32, tc.boundary);
    const auto init = cell_averages_split<3>(grid, tc.ic, 10, tc.ic_breaks);
    const auto exact = exact_cell_averages(tc, grid, 0.0);
    for (int i = 0; i < 32; ++i)
      for (int c = 0; c < tc.num_vars(); ++c)
        EXPECT_NEAR(init[i][c], exact[i][c], 1e-12) << tc.name;
  }
}

TEST(TestCases, SquareWaveStraddledCellGetsExactOverlap) {
  const TestCase tc = make_test_case("square-wave");
  const Grid grid = build_grid(-1.0, 1.0, 50, Boundary::periodic);
  const auto avgs = cell_averages_split<3>(grid, tc.ic, 10, tc.ic_breaks);
  // cell [-0.32, -0.28) straddles -0.3: overlap fraction 0.5 exactly
  const int idx = static_cast<int>((-0.32 + 1.0) / grid.dx + 0.5);
  EXPECT_NEAR(avgs[idx][0], 0.5, 1e-14);
}

TEST(RunCase, ZeroTimeReturnsInitialState) {
  const TestCase tc = make_test_case("quartic-sine");
  SchemeConfig cfg;
  cfg.order = 3;
  const RunOutput out = run_case(tc, cfg, 32, 0.0);
  EXPECT_EQ(out.steps, 0);
  EXPECT_EQ(out.time, 0.0);
  const Grid grid = build_grid(-1.0, 1.0, 32, Boundary::periodic);
  const auto init = cell_averages_split<3>(grid, tc.ic, cfg.order, tc.ic_breaks);
  for (int i = 0; i < 32; ++i) EXPECT_NEAR(out.averages[i][0], init[i][0], 1e-15);
}

TEST(RunCase, DeterministicAcrossRuns) {
  const TestCase tc = make_test_case("quartic-sine");
  SchemeConfig cfg;
  cfg.order = 4;
  const RunOutput a = run_case(tc, cfg, 32, 1.0);
  const RunOutput b = run_case(tc, cfg, 32, 1.0);
  ASSERT_EQ(a.averages.size(), b.averages.size());
  for (std::size_t i = 0; i < a.averages.size(); ++i)
    EXPECT_EQ(a.averages[i][0], b.averages[i][0]);  // bit-identical
  EXPECT_EQ(a.steps, b.steps);
}

TEST(RunCase, LandsExactlyOnFinalTime) {
  const TestCase tc = make_test_case("quartic-sine");
  SchemeConfig cfg;
  cfg.order = 2;
  const RunOutput out = run_case(tc, cfg, 16, 0.5);
  EXPECT_NEAR(out.time, 0.5, 1e-12);
}

TEST(RunCase, SquareWaveCompletesForAllFourSchemes) {
  const TestCase tc = make_test_case("square-wave");
  for (SchemeType s : {SchemeType::fv_grprec, SchemeType::fv_grprec_nl, SchemeType::fv_weno_dk,
                       SchemeType::dg}) {
    SchemeConfig cfg;
    cfg.scheme = s;
    cfg.order = 3;
    cfg.cfl = (s == SchemeType::dg) ? 0.6 : 0.9;
    const RunOutput out = run_case(tc, cfg, 50);
    EXPECT_NEAR(out.time, 4.0, 1e-12) << scheme_name(s);
    const Diagnostics d = field_diagnostics(out);
    EXPECT_LT(d.max_value, 2.0) << scheme_name(s);
    EXPECT_GT(d.min_value, -1.0) << scheme_name(s);
  }
}

TEST(ConvergenceStudy, OrderFormulaAndReportShape) {
  EXPECT_NEAR(empirical_order(8.18e-2, 3.11e-2), 1.39, 0.005);

  const TestCase tc = make_test_case("quartic-sine");
  SchemeConfig cfg;
  cfg.order = 2;
  const ConvergenceReport rep = convergence_study(tc, cfg, {16, 32}, 0.25);
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_TRUE(std::isnan(rep.rows[0].ord_l1));
  EXPECT_FALSE(std::isnan(rep.rows[1].ord_l1));
  EXPECT_GT(rep.rows[0].norms.l1, rep.rows[1].norms.l1);
  EXPECT_EQ(rep.scheme, "FV+GRPrec");
}

TEST(ConvergenceStudy, PreconditionsEnforced) {
  const TestCase tc = make_test_case("quartic-sine");
  SchemeConfig cfg;
  EXPECT_THROW(convergence_study(tc, cfg, {16}), ConfigError);
  EXPECT_THROW(convergence_study(tc, cfg, {2, 4}), ConfigError);
}

TEST(EfficiencyStudy, PowerLawFitRecoversSyntheticExponent) {
  // err = C * cpu^{-p}  <=>  log(cpu) = (1/-p) log(err) + const
  const double p = 3.7, C = 2.0;
  std::vector<double> errs, cpus;
  for (double cpu : {0.01, 0.04, 0.2, 1.5, 8.0}) {
    cpus.push_back(cpu);
    errs.push_back(C * std::pow(cpu, -p));
  }
  const auto fit = power_law_fit(errs, cpus, 1e-16);
  EXPECT_NEAR(fit.exponent, -1.0 / p, 1e-6);
  const double expected_cpu = std::pow(1e-16 / C, -1.0 / p);
  EXPECT_NEAR(fit.cpu_at_target / expected_cpu, 1.0, 1e-6);
}

TEST(EfficiencyStudy, SingleMeshRefused) {
  const TestCase tc = make_test_case("quartic-sine");
  SchemeConfig cfg;
  EXPECT_THROW(efficiency_study(tc, {cfg}, {16}), ConfigError);
  EXPECT_THROW(power_law_fit({1e-3}, {0.1}), ConfigError);
}

TEST(RiemannProfiles, SodSymmetryAndColumns) {
  const TestCase tc = make_test_case("123");
  SchemeConfig cfg;
  cfg.scheme = SchemeType::fv_grprec_nl;
  cfg.order = 2;
  cfg.cfl = 0.9;
  const auto profiles = riemann_profiles(tc, {cfg}, 100);
  ASSERT_EQ(profiles.size(), 1u);
  const auto& prof = profiles[0];
  EXPECT_EQ(prof.points.size(), 100u);
  // symmetric data: velocity at the domain center stays near zero
  double u_center = 0.0;
  for (const auto& pt : prof.points)
    if (std::abs(pt.x - 0.5) < 0.006) u_center = pt.numerical[1];
  EXPECT_NEAR(u_center, 0.0, 5e-2);
  EXPECT_GT(prof.min_density, 0.0);
}

TEST(EmitCsv, ConvergenceRoundTripAndRowCount) {
  const TestCase tc = make_test_case("quartic-sine");
  SchemeConfig cfg;
  cfg.order = 2;
  const ConvergenceReport rep = convergence_study(tc, cfg, {16, 32}, 0.25);
  const std::string path = temp_path("ader1d_conv.csv");
  emit_csv(rep, path);
  const auto rows = csv::parse(path);
  ASSERT_EQ(rows.size(), 3u);  // header + 2 meshes
  EXPECT_EQ(rows[0][0], "test");
  EXPECT_EQ(rows[1][3], "16");
  EXPECT_EQ(rows[1][5], "");  // order column empty on the first mesh
  // parse-back reproduces the stored error to 6 significant digits
  const double l1 = std::stod(rows[2][8]);
  EXPECT_NEAR(l1, rep.rows[1].norms.l1, 5e-6 * rep.rows[1].norms.l1);
  std::filesystem::remove(path);
}

TEST(EmitCsv, ProfileFileHasExactColumns) {
  const TestCase tc = make_test_case("sod");
  SchemeConfig cfg;
  cfg.scheme = SchemeType::fv_weno_dk;
  cfg.order = 2;
  const auto profiles = riemann_profiles(tc, {cfg}, 40);
  const std::string path = temp_path("ader1d_profile.csv");
  emit_csv(profiles[0], path);
  const auto rows = csv::parse(path);
  ASSERT_EQ(rows.size(), 41u);
  ASSERT_EQ(rows[0].size(), 7u);
  EXPECT_EQ(rows[0][4], "rho_exact");
  std::filesystem::remove(path);
}

TEST(EmitCsv, IoFailureSurfaces) {
  const TestCase tc = make_test_case("quartic-sine");
  SchemeConfig cfg;
  cfg.order = 2;
  const ConvergenceReport rep = convergence_study(tc, cfg, {16, 32}, 0.25);
  EXPECT_THROW(emit_csv(rep, "/nonexistent-dir/x.csv"), ConfigError);
}

TEST(Config, ParsesKeysSectionsAndLists) {
  const auto cfg = Config::from_string(
      "# a comment\n"
      "test = quartic-sine\n"
      "order = 4\n"
      "cfl = 0.9  # trailing comment\n"
      "meshes = 16, 32, 64\n"
      "[output]\n"
      "path = out.csv\n");
  EXPECT_EQ(cfg.get("test"), "quartic-sine");
  EXPECT_EQ(cfg.get_int("order"), 4);
  EXPECT_NEAR(cfg.get_double("cfl"), 0.9, 1e-15);
  EXPECT_EQ(cfg.get_int_list("meshes"), (std::vector<int>{16, 32, 64}));
  EXPECT_EQ(cfg.get("output.path"), "out.csv");
  EXPECT_EQ(cfg.get("missing", "fallback"), "fallback");
  EXPECT_THROW(cfg.get("missing"), ConfigError);
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_THROW(Config::from_string("novalue\n"), ConfigError);
  EXPECT_THROW(Config::from_string("[bad\n"), ConfigError);
  EXPECT_THROW(Config::from_string("x = \n"), ConfigError);
  const auto cfg = Config::from_string("n = abc\n");
  EXPECT_THROW(cfg.get_int("n"), ConfigError);
  EXPECT_THROW(Config::from_file("/nonexistent/config"), ConfigError);
}

TEST(Config, SchemeAndBootstrapNames) {
  EXPECT_EQ(parse_scheme("FV+GRPrec"), SchemeType::fv_grprec);
  EXPECT_EQ(parse_scheme("grprec-nl"), SchemeType::fv_grprec_nl);
  EXPECT_EQ(parse_scheme("FV+WENO-DK"), SchemeType::fv_weno_dk);
  EXPECT_EQ(parse_scheme("dg"), SchemeType::dg);
  EXPECT_THROW(parse_scheme("upwind"), ConfigError);
  EXPECT_EQ(parse_bootstrap("central-linear"), BootstrapMethod::central_linear);
  EXPECT_THROW(parse_bootstrap("none"), ConfigError);
}

TEST(Bootstrap, CentralLinearAlternativeStaysClose) {
  // order-2 quartic advection run: swapping the bootstrap reconstruction
  // changes the final error by well under 5%
  const TestCase tc = make_test_case("quartic-sine");
  SchemeConfig a;
  a.order = 2;
  SchemeConfig b = a;
  b.bootstrap = BootstrapMethod::central_linear;
  const auto ra = convergence_study(tc, a, {64, 128}, 4.0);
  const auto rb = convergence_study(tc, b, {64, 128}, 4.0);
  EXPECT_NEAR(rb.rows[1].norms.l1 / ra.rows[1].norms.l1, 1.0, 0.05);
}

TEST(Diagnostics, TotalVariationOfSquareWave) {
  const TestCase tc = make_test_case("square-wave");
  SchemeConfig cfg;
  cfg.order = 2;
  const RunOutput out = run_case(tc, cfg, 50, 0.0);
  const Diagnostics d = field_diagnostics(out);
  EXPECT_NEAR(d.total_variation, 2.0, 1e-12);
  EXPECT_NEAR(d.max_value, 1.0, 1e-12);
  EXPECT_NEAR(d.min_value, 0.0, 1e-12);
}
