#pragma once

// Coefficient recurrences: z^n L = sum_j z^j Q_j(delta) gives
// sum_j Q_j(m - j) a_{m-j} = 0 for every m.

#include <vector>

#include "holocert/diffop/diffop.hpp"

namespace holocert {

struct Recurrence {
  std::vector<QPoly> polys;  // Q_0 .. Q_d in the index variable
  int span() const { return static_cast<int>(polys.size()) - 1; }
};

// Recurrence of an arbitrary operator with Q_0 scaled monic (no MOM check).
inline Recurrence recurrence_of(const QDiffOp& L) {
  auto polys = primitive_polys(to_delta(L));
  int n = static_cast<int>(polys.size()) - 1;
  std::size_t d = 0;
  for (const auto& p : polys)
    if (!p.is_zero()) d = std::max(d, p.size() - 1);
  RationalField Q;
  Recurrence rec;
  for (std::size_t j = 0; j <= d; ++j) {
    std::vector<BigRat> c(static_cast<std::size_t>(n + 1), BigRat(0));
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(n - k)] = polys[static_cast<std::size_t>(k)].coeff(j);
    rec.polys.emplace_back(Q, std::move(c));
  }
  if (rec.polys[0].is_zero()) throw NotMomAtZero("Q_0 vanishes identically");
  BigRat inv = inverse(rec.polys[0].lead());
  for (auto& q : rec.polys) q *= inv;
  return rec;
}

inline Recurrence recurrence_from(const QDiffOp& L) {
  Recurrence rec = recurrence_of(L);
  int n = L.order();
  if (rec.polys[0] != QPoly::monomial(RationalField{}, BigRat(1), static_cast<std::size_t>(n)))
    throw NotMomAtZero("Q_0 = " + rec.polys[0].to_string("x") + " is not x^" + std::to_string(n));
  return rec;
}

}  // namespace holocert
