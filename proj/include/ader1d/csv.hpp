#ifndef ADER1D_CSV_HPP
#define ADER1D_CSV_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ader1d/driver.hpp"
#include "ader1d/errors.hpp"

namespace ader1d {
namespace csv {

// All emitted files are UTF-8 CSV with one header row; floats are written in
// scientific notation with 6 significant digits. Column orders are documented
// in the README and versioned via the schema constant below.
inline constexpr const char* kSchemaVersion = "1";

inline std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5e", v);
  return buf;
}

class Writer {
public:
  explicit Writer(const std::string& path) : out_(path) {
    if (!out_) throw ConfigError("cannot open '" + path + "' for writing");
    path_ = path;
  }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
    if (!out_) throw ConfigError("write failure on '" + path_ + "'");
  }

private:
  std::ofstream out_;
  std::string path_;
};

inline std::vector<std::vector<std::string>> parse(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace csv

inline void emit_csv(const ConvergenceReport& report, const std::string& path) {
  csv::Writer w(path);
  w.row({"test", "scheme", "order", "mesh", "dx", "linf_ord", "linf_err", "l1_ord", "l1_err",
         "l2_ord", "l2_err", "cpu_seconds", "steps"});
  for (const auto& r : report.rows)
    w.row({report.test, report.scheme, std::to_string(report.order), std::to_string(r.mesh),
           csv::fmt(r.dx), csv::fmt(r.ord_linf), csv::fmt(r.norms.linf), csv::fmt(r.ord_l1),
           csv::fmt(r.norms.l1), csv::fmt(r.ord_l2), csv::fmt(r.norms.l2),
           csv::fmt(r.cpu_seconds), std::to_string(r.steps)});
}

inline void emit_csv(const EfficiencyReport& report, const std::string& path,
                     const std::string& extrapolation_path = "") {
  csv::Writer w(path);
  w.row({"test", "scheme", "order", "mesh", "l1_err", "cpu_seconds"});
  for (const auto& r : report.rows)
    w.row({report.test, r.scheme, std::to_string(r.order), std::to_string(r.mesh),
           csv::fmt(r.l1_error), csv::fmt(r.cpu_seconds)});
  if (!extrapolation_path.empty()) {
    csv::Writer we(extrapolation_path);
    we.row({"test", "scheme", "order", "target_error", "cpu_at_target", "fit_exponent"});
    for (const auto& e : report.extrapolations)
      we.row({report.test, e.scheme, std::to_string(e.order), csv::fmt(e.target_error),
              csv::fmt(e.cpu_at_target), csv::fmt(e.exponent)});
  }
}

inline void emit_csv(const RiemannProfile& profile, const std::string& path) {
  csv::Writer w(path);
  w.row({"x", "rho", "u", "p", "rho_exact", "u_exact", "p_exact"});
  for (const auto& pt : profile.points)
    w.row({csv::fmt(pt.x), csv::fmt(pt.numerical[0]), csv::fmt(pt.numerical[1]),
           csv::fmt(pt.numerical[2]), csv::fmt(pt.exact[0]), csv::fmt(pt.exact[1]),
           csv::fmt(pt.exact[2])});
}

// Single-run profile: x, the evolved cell averages (component 0 for the
// scalar model, primitive rho/u/p for Euler) and the exact columns when the
// test case provides them.
inline void emit_csv(const TestCase& tc, const RunOutput& out, const std::string& path) {
  csv::Writer w(path);
  const bool euler = tc.model == ModelKind::euler;
  const bool exact = tc.has_exact();
  std::vector<std::string> header =
      euler ? std::vector<std::string>{"x", "rho", "u", "p"} : std::vector<std::string>{"x", "q"};
  if (exact) {
    if (euler) {
      header.push_back("rho_exact");
      header.push_back("u_exact");
      header.push_back("p_exact");
    } else {
      header.push_back("q_exact");
    }
  }
  w.row(header);
  std::vector<std::array<double, 3>> exact_avgs;
  if (exact) exact_avgs = exact_cell_averages(tc, out.grid, out.time);
  const EulerModel model(tc.gamma);
  for (int i = 0; i < out.grid.num_cells; ++i) {
    std::vector<std::string> cells{csv::fmt(out.grid.cell_center(i))};
    if (euler) {
      cells.push_back(csv::fmt(out.primitives[i][0]));
      cells.push_back(csv::fmt(out.primitives[i][1]));
      cells.push_back(csv::fmt(out.primitives[i][2]));
    } else {
      cells.push_back(csv::fmt(out.averages[i][0]));
    }
    if (exact) {
      if (euler) {
        const auto we = model.prim({exact_avgs[i][0], exact_avgs[i][1], exact_avgs[i][2]});
        cells.push_back(csv::fmt(we[0]));
        cells.push_back(csv::fmt(we[1]));
        cells.push_back(csv::fmt(we[2]));
      } else {
        cells.push_back(csv::fmt(exact_avgs[i][0]));
      }
    }
    w.row(cells);
  }
}

}  // namespace ader1d

#endif
