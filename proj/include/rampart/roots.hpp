#ifndef RAMPART_ROOTS_HPP
#define RAMPART_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "rampart/errors.hpp"
#include "rampart/multipoly.hpp"

namespace rampart {

namespace detail {

using cplx = std::complex<double>;

inline cplx horner(const std::vector<double>& c, cplx z) {
  cplx acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline double residual_scale(const std::vector<double>& c, cplx z) {
  double az = std::abs(z), pw = 1, acc = 0;
  for (double ci : c) {
    acc += std::abs(ci) * pw;
    pw *= az;
  }
  return acc;
}

// Aberth-Ehrlich simultaneous iteration. c[0..deg], c[deg] != 0.
inline std::vector<cplx> aberth(const std::vector<double>& c) {
  int deg = static_cast<int>(c.size()) - 1;
  std::vector<double> dc(deg);
  for (int i = 1; i <= deg; ++i) dc[i - 1] = c[i] * i;
  // Cauchy-style initial radius, roots staggered on a circle.
  double radius = 0;
  for (int i = 0; i < deg; ++i)
    radius = std::max(radius, std::pow(std::abs(c[i] / c[deg]), 1.0 / (deg - i)));
  radius = 1.0 + 2.0 * radius;
  std::vector<cplx> z(deg);
  for (int i = 0; i < deg; ++i) {
    double theta = 2 * M_PI * i / deg + 0.4;
    z[i] = radius * cplx(std::cos(theta), std::sin(theta));
  }
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0;
    for (int i = 0; i < deg; ++i) {
      cplx p = horner(c, z[i]);
      cplx dp = horner(dc, z[i]);
      if (dp == cplx(0)) dp = 1e-30;
      cplx ratio = p / dp;
      cplx sum = 0;
      for (int j = 0; j < deg; ++j)
        if (j != i) sum += cplx(1) / (z[i] - z[j]);
      cplx w = ratio / (cplx(1) - ratio * sum);
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

// Companion-matrix eigenvalues (fallback when the iteration stalls).
inline std::vector<cplx> companion_roots(const std::vector<double>& c) {
  int deg = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) A(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) A(i, deg - 1) = -c[i] / c[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
  std::vector<cplx> z(deg);
  for (int i = 0; i < deg; ++i) z[i] = es.eigenvalues()[i];
  return z;
}

// Force the multiset to be closed under conjugation (real coefficients).
inline void pair_conjugates(std::vector<cplx>& z, double tol) {
  std::vector<char> used(z.size(), 0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i]) continue;
    if (std::abs(z[i].imag()) <= tol * std::max(1.0, std::abs(z[i]))) {
      z[i] = cplx(z[i].real(), 0);
      used[i] = 1;
      continue;
    }
    std::size_t best = i;
    double best_dist = 1e300;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i || used[j]) continue;
      double dist = std::abs(z[j] - std::conj(z[i]));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best != i && best_dist <= tol * std::max(1.0, std::abs(z[i]))) {
      cplx avg = (z[i] + std::conj(z[best])) / 2.0;
      z[i] = avg;
      z[best] = std::conj(avg);
      used[i] = used[best] = 1;
    }
  }
}

}  // namespace detail

// All deg(p) complex roots of a univariate polynomial, with multiplicity.
// Each root r satisfies |p(r)| <= tol * sum_i |c_i||r|^i.
inline std::vector<std::complex<double>> roots_univariate(
    const std::vector<double>& coeffs, double tol = 1e-10) {
  std::vector<double> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw validation_error("roots: zero polynomial");
  std::vector<std::complex<double>> out;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  for (std::size_t i = 0; i < low; ++i) out.emplace_back(0, 0);
  c.erase(c.begin(), c.begin() + low);
  if (c.size() <= 1) return out;
  // scale for conditioning
  double maxc = 0;
  for (double ci : c) maxc = std::max(maxc, std::abs(ci));
  for (double& ci : c) ci /= maxc;

  auto z = detail::aberth(c);
  bool ok = true;
  for (auto r : z)
    if (std::abs(detail::horner(c, r)) > tol * detail::residual_scale(c, r))
      ok = false;
  if (!ok) z = detail::companion_roots(c);
  detail::pair_conjugates(z, tol);
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

inline std::vector<std::complex<double>> roots_univariate(const MultiPoly& p,
                                                          double tol = 1e-10) {
  if (p.vars().size() != 1)
    throw validation_error("roots: polynomial is not univariate");
  if (p.is_zero()) throw validation_error("roots: zero polynomial");
  std::vector<double> c(p.degree(0) + 1, 0.0);
  for (const auto& [e, coef] : p.terms())
    c[e[0]] = static_cast<double>(coef);
  return roots_univariate(c, tol);
}

}  // namespace rampart

#endif
