#ifndef ADER1D_LINALG_HPP
#define ADER1D_LINALG_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ader1d {

// Dense matrix just large enough for the condition systems and predictor
// operators in this library (KKT systems are at most 6x6, space-time mass
// matrices at most 5x5).
class SmallMatrix {
public:
  SmallMatrix() = default;
  SmallMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int r, int c) { return a_[r * cols_ + c]; }
  double operator()(int r, int c) const { return a_[r * cols_ + c]; }

  std::vector<double> apply(const std::vector<double>& x) const {
    std::vector<double> y(rows_, 0.0);
    for (int r = 0; r < rows_; ++r) {
      double s = 0.0;
      for (int c = 0; c < cols_; ++c) s += a_[r * cols_ + c] * x[c];
      y[r] = s;
    }
    return y;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

// In-place Gaussian elimination with partial pivoting. Throws on a pivot
// smaller than `tol` times the largest entry, which for the fixed condition
// sets of this library indicates a programming error rather than bad data.
inline std::vector<double> solve_dense(SmallMatrix a, std::vector<double> b,
                                       double tol = 1e-12) {
  const int n = a.rows();
  if (n != a.cols() || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("solve_dense: shape mismatch");

  double scale = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) scale = std::max(scale, std::abs(a(r, c)));
  if (scale == 0.0) throw std::runtime_error("solve_dense: zero matrix");

  std::vector<int> piv(n);
  for (int i = 0; i < n; ++i) piv[i] = i;

  for (int k = 0; k < n; ++k) {
    int pr = k;
    double pmax = std::abs(a(k, k));
    for (int r = k + 1; r < n; ++r) {
      if (std::abs(a(r, k)) > pmax) {
        pmax = std::abs(a(r, k));
        pr = k == r ? k : r;
      }
    }
    if (pmax < tol * scale) throw std::runtime_error("solve_dense: singular system");
    if (pr != k) {
      for (int c = 0; c < n; ++c) std::swap(a(k, c), a(pr, c));
      std::swap(b[k], b[pr]);
    }
    for (int r = k + 1; r < n; ++r) {
      const double f = a(r, k) / a(k, k);
      a(r, k) = 0.0;
      for (int c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
      b[r] -= f * b[k];
    }
  }
  for (int k = n - 1; k >= 0; --k) {
    double s = b[k];
    for (int c = k + 1; c < n; ++c) s -= a(k, c) * b[c];
    b[k] = s / a(k, k);
  }
  return b;
}

inline SmallMatrix invert_dense(const SmallMatrix& a, double tol = 1e-12) {
  const int n = a.rows();
  SmallMatrix inv(n, n);
  for (int c = 0; c < n; ++c) {
    std::vector<double> e(n, 0.0);
    e[c] = 1.0;
    std::vector<double> col = solve_dense(a, std::move(e), tol);
    for (int r = 0; r < n; ++r) inv(r, c) = col[r];
  }
  return inv;
}

}  // namespace ader1d

#endif
