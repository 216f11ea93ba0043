#pragma once

// Truncated weak Frobenius data over Q for a MOM operator:
//   delta Y = G Y - Y G(0), Y(0) = I        (uniform part)
//   F = [delta(Lambda Y) + (1/p) Lambda(Y) G(0)] (Lambda Y)^{-1}
// Matrices of series are stored as lists of coefficient matrices.

#include <vector>

#include "holocert/diffop.hpp"
#include "holocert/holoseries.hpp"

namespace holocert {

using QMat = Matrix<BigRat>;
using QMatSeries = std::vector<QMat>;  // entry m is the coefficient of z^m

struct FrobShadow {
  QMatSeries F, Y, G;
  std::uint32_t p = 0;
  std::size_t T = 0;
  bool y0_identity = false;
  bool pF0_equals_G0 = false;
  std::size_t residual_zero_to = 0;  // last-row relation holds below this order
};

namespace detail {

inline QMat qzero(std::size_t n) { return QMat(n, std::vector<BigRat>(n, BigRat(0))); }

inline QMat qidentity(std::size_t n) {
  QMat m = qzero(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline void addmul(QMat& acc, const QMat& a, const QMat& b) {
  std::size_t n = acc.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) acc[i][j] += a[i][k] * b[k][j];
    }
}

inline QMat mul(const QMat& a, const QMat& b) {
  QMat m = qzero(a.size());
  addmul(m, a, b);
  return m;
}

inline bool is_zero_mat(const QMat& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (sgn(x) != 0) return false;
  return true;
}

// delta-companion of the monic delta-form, as coefficient matrices to order T.
inline QMatSeries delta_companion(const QDiffOp& L, std::size_t T) {
  auto b = to_delta(L).monic_coeffs();
  std::size_t n = static_cast<std::size_t>(L.order());
  QMatSeries G(T, qzero(n));
  if (T > 0)
    for (std::size_t i = 0; i + 1 < n; ++i) G[0][i][i + 1] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    // last row: -b_n, ..., -b_1
    QSeries s = series_from_ratfun(b[n - j], T);
    for (std::size_t m = 0; m < T; ++m) G[m][n - 1][j] -= s[m];
  }
  return G;
}

}  // namespace detail

inline FrobShadow frobenius_shadow(const QDiffOp& L, std::uint32_t p, std::size_t T) {
  if (!is_mom(L)) throw NotMomAtZero("frobenius_shadow needs a MOM operator");
  std::size_t n = static_cast<std::size_t>(L.order());
  FrobShadow sh;
  sh.p = p;
  sh.T = T;
  sh.G = detail::delta_companion(L, T);
  const QMat& G0 = sh.G[0];

  // m Y_m - [G0, Y_m] = sum_{k>=1} G_k Y_{m-k}; Neumann series in ad_{G0}/m
  sh.Y.assign(T, detail::qzero(n));
  if (T > 0) sh.Y[0] = detail::qidentity(n);
  for (std::size_t m = 1; m < T; ++m) {
    QMat rhs = detail::qzero(n);
    for (std::size_t k = 1; k <= m; ++k) detail::addmul(rhs, sh.G[k], sh.Y[m - k]);
    BigRat inv_m(1, static_cast<long>(m));
    QMat term = rhs, Ym = detail::qzero(n);
    std::size_t iters = 0;
    while (!detail::is_zero_mat(term)) {
      if (++iters > 2 * n + 1) throw SylvesterSingular("Neumann series does not terminate at m = " + std::to_string(m));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          term[i][j] *= inv_m;
          Ym[i][j] += term[i][j];
        }
      // next term: [G0, term] / m, scaled at the top of the loop
      QMat next = detail::mul(G0, term);
      QMat tg = detail::mul(term, G0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) next[i][j] -= tg[i][j];
      term = std::move(next);
    }
    sh.Y[m] = std::move(Ym);
  }

  // Lambda Y and its inverse
  std::size_t Lt = (T + p - 1) / p;
  QMatSeries LY(Lt), X(Lt, detail::qzero(n));
  for (std::size_t j = 0; j < Lt; ++j) LY[j] = sh.Y[j * p];
  if (Lt > 0) X[0] = detail::qidentity(n);
  for (std::size_t m = 1; m < Lt; ++m) {
    QMat acc = detail::qzero(n);
    for (std::size_t k = 1; k <= m; ++k) detail::addmul(acc, LY[k], X[m - k]);
    for (auto& row : acc)
      for (auto& x : row) x = -x;
    X[m] = std::move(acc);
  }
  BigRat inv_p(1, static_cast<long>(p));
  QMatSeries M(Lt);
  for (std::size_t j = 0; j < Lt; ++j) {
    M[j] = detail::mul(LY[j], G0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) M[j][a][b] = M[j][a][b] * inv_p + LY[j][a][b] * static_cast<long>(j);
  }
  sh.F.assign(Lt, detail::qzero(n));
  for (std::size_t m = 0; m < Lt; ++m)
    for (std::size_t k = 0; k <= m; ++k) detail::addmul(sh.F[m], M[k], X[m - k]);

  sh.y0_identity = T > 0 && sh.Y[0] == detail::qidentity(n);
  if (Lt > 0) {
    QMat pF0 = sh.F[0];
    for (auto& row : pF0)
      for (auto& x : row) x *= p;
    sh.pF0_equals_G0 = pF0 == G0;
  }

  // last row of F against v = first column of Lambda Y:
  // sum_j F[n-1][j] v_j - delta v_{n-1}
  sh.residual_zero_to = Lt;
  for (std::size_t m = 0; m < Lt; ++m) {
    BigRat res = -BigRat(static_cast<long>(m)) * LY[m][n - 1][0];
    for (std::size_t k = 0; k <= m; ++k)
      for (std::size_t j = 0; j < n; ++j) res += sh.F[k][n - 1][j] * LY[m - k][j][0];
    if (sgn(res) != 0) {
      sh.residual_zero_to = m;
      break;
    }
  }
  return sh;
}

// Entry (i, j) of a matrix series as a series.
inline QSeries mat_entry(const QMatSeries& S, std::size_t i, std::size_t j) {
  std::vector<BigRat> v;
  for (const auto& m : S) v.push_back(m[i][j]);
  return QSeries(RationalField{}, std::move(v));
}

}  // namespace holocert
