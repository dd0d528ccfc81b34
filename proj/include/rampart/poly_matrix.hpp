#ifndef RAMPART_POLY_MATRIX_HPP
#define RAMPART_POLY_MATRIX_HPP

#include <utility>
#include <vector>

#include "rampart/errors.hpp"
#include "rampart/multipoly.hpp"

namespace rampart {

// Dense rectangular matrix of exact polynomials.
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0) {}
  PolyMatrix(int rows, int cols, std::vector<std::string> vars)
      : rows_(rows),
        cols_(cols),
        vars_(vars),
        entries_(static_cast<std::size_t>(rows) * cols, MultiPoly(vars)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<std::string>& vars() const { return vars_; }
  MultiPoly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const MultiPoly& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }

 private:
  int rows_, cols_;
  std::vector<std::string> vars_;
  std::vector<MultiPoly> entries_;
};

// Determinant of a rational matrix by fraction-free elimination on a
// common-denominator integer matrix.
inline Rat det_numeric(std::vector<std::vector<Rat>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int scale = 1;
  for (auto& row : m) {
    Int lcm = 1;
    for (auto& x : row) {
      Int d = boost::multiprecision::denominator(x);
      lcm = boost::multiprecision::lcm(lcm, d);
    }
    for (auto& x : row) x *= Rat(lcm);
    scale *= lcm;
  }
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = boost::multiprecision::numerator(m[i][j]);
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return Rat(sign * a[n - 1][n - 1]) / Rat(scale);
}

// Exact determinant by Bareiss fraction-free elimination over the
// polynomial ring (pivot divisions are exact).
inline MultiPoly det_exact(const PolyMatrix& M) {
  if (M.rows() != M.cols()) throw validation_error("det: matrix not square");
  int n = M.rows();
  MultiPoly one = MultiPoly::constant(1, M.vars());
  if (n == 0) return one;
  std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly(M.vars())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = M.at(i, j);
  int sign = 1;
  MultiPoly prev = one;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return MultiPoly(M.vars());
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

// Determinant of M evaluated at a point, without forming the symbolic det.
inline Rat det_at(const PolyMatrix& M, const std::vector<Rat>& point) {
  if (M.rows() != M.cols()) throw validation_error("det: matrix not square");
  std::vector<std::vector<Rat>> m(M.rows(), std::vector<Rat>(M.cols()));
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) m[i][j] = M.at(i, j).evaluate(point);
  return det_numeric(std::move(m));
}

namespace detail {

// Lagrange interpolation through (x=0..k, values[k]), values polynomial.
inline MultiPoly lagrange(const std::vector<MultiPoly>& values,
                          const MultiPoly& x) {
  int npts = static_cast<int>(values.size());
  MultiPoly acc(x.vars());
  for (int k = 0; k < npts; ++k) {
    if (values[k].is_zero()) continue;
    MultiPoly basis = MultiPoly::constant(1, x.vars());
    Rat denom = 1;
    for (int j = 0; j < npts; ++j) {
      if (j == k) continue;
      basis *= x - MultiPoly::constant(j, x.vars());
      denom *= k - j;
    }
    acc += basis.scaled(Rat(1) / denom) * values[k];
  }
  return acc;
}

inline MultiPoly det_interp_rec(const PolyMatrix& M, std::size_t var);

// Substitute integer v for variable `var` in every entry.
inline PolyMatrix specialize(const PolyMatrix& M, std::size_t var, int v) {
  PolyMatrix R(M.rows(), M.cols(), M.vars());
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < M.vars().size(); ++i)
    images.push_back(i == var
                         ? MultiPoly::constant(v, M.vars())
                         : MultiPoly::variable(M.vars()[i], M.vars()));
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) R.at(i, j) = M.at(i, j).substitute(images);
  return R;
}

inline MultiPoly det_interp_rec(const PolyMatrix& M, std::size_t var) {
  if (var == M.vars().size()) {
    // fully specialized: numeric determinant
    std::vector<std::vector<Rat>> m(M.rows(), std::vector<Rat>(M.cols()));
    for (int i = 0; i < M.rows(); ++i)
      for (int j = 0; j < M.cols(); ++j)
        m[i][j] = M.at(i, j).evaluate(std::vector<Rat>(M.vars().size(), 0));
    // entries are constants at this point; evaluation point is irrelevant
    return MultiPoly::constant(det_numeric(std::move(m)), M.vars());
  }
  // degree bound: sum over rows of the max entry degree in this variable
  int bound = 0;
  for (int i = 0; i < M.rows(); ++i) {
    int rowmax = 0;
    for (int j = 0; j < M.cols(); ++j)
      rowmax = std::max(rowmax, M.at(i, j).degree(var));
    bound += rowmax;
  }
  std::vector<MultiPoly> values;
  for (int v = 0; v <= bound; ++v)
    values.push_back(det_interp_rec(specialize(M, var, v), var + 1));
  return lagrange(values, MultiPoly::variable(M.vars()[var], M.vars()));
}

}  // namespace detail

// Determinant by evaluation at integer points beyond per-variable degree
// bounds, followed by Lagrange interpolation. Exact; agrees with det_exact.
inline MultiPoly det_interpolate(const PolyMatrix& M) {
  if (M.rows() != M.cols()) throw validation_error("det: matrix not square");
  if (M.rows() == 0) return MultiPoly::constant(1, M.vars());
  return detail::det_interp_rec(M, 0);
}

}  // namespace rampart

#endif
