#pragma once

#include <vector>

#include "holocert/diffop/diffop.hpp"

namespace holocert {

struct PCurvature {
  Matrix<FpRatFun> matrix;
  bool is_nilpotent = false;
};

namespace detail {

inline Matrix<FpRatFun> mat_mul(const Matrix<FpRatFun>& A, const Matrix<FpRatFun>& B, PrimeField F) {
  std::size_t n = A.size();
  Matrix<FpRatFun> C(n, std::vector<FpRatFun>(n, FpRatFun(F)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (A[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (B[k][j].is_zero()) continue;
        C[i][j] = C[i][j] + A[i][k] * B[k][j];
      }
    }
  return C;
}

}  // namespace detail

// D-companion matrix of the monic form: Y = (y, y', ..., y^{(n-1)}), Y' = A Y.
inline Matrix<FpRatFun> companion(const FpDiffOp& L) {
  FpDiffOp Ld = to_d(L);
  auto a = Ld.monic_coeffs();
  PrimeField F = L.field();
  std::size_t n = static_cast<std::size_t>(Ld.order());
  Matrix<FpRatFun> A(n, std::vector<FpRatFun>(n, FpRatFun(F)));
  for (std::size_t i = 0; i + 1 < n; ++i) A[i][i + 1] = FpRatFun::one(F);
  for (std::size_t j = 0; j < n; ++j) A[n - 1][j] = -a[n - j];
  return A;
}

inline PCurvature p_curvature(const FpDiffOp& L) {
  PrimeField F = L.field();
  auto A1 = companion(L);
  std::size_t n = A1.size();
  auto Ak = A1;
  for (std::uint32_t k = 1; k < F.p; ++k) {
    auto next = detail::mat_mul(Ak, A1, F);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) next[i][j] = next[i][j] + Ak[i][j].derivative();
    Ak = std::move(next);
  }
  PCurvature out{Ak, true};
  auto power = Ak;
  for (std::size_t e = 1; e < n; ++e) power = detail::mat_mul(power, Ak, F);
  for (auto& row : power)
    for (auto& x : row)
      if (!x.is_zero()) out.is_nilpotent = false;
  return out;
}

}  // namespace holocert
