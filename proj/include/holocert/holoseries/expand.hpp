#pragma once

#include <vector>

#include "holocert/diffop.hpp"
#include "holocert/holoseries/series.hpp"

namespace holocert {

// Forward solve of Q_0(m) a_m = -sum_{j>=1} Q_j(m-j) a_{m-j}.
inline QSeries expand(const Recurrence& rec, const std::vector<BigRat>& initial, std::size_t T) {
  RationalField Q;
  std::vector<BigRat> a;
  a.reserve(T);
  int d = rec.span();
  for (std::size_t m = 0; m < T; ++m) {
    if (m < initial.size()) {
      a.push_back(initial[m]);
      continue;
    }
    BigRat q0 = rec.polys[0].eval(BigRat(static_cast<long>(m)));
    if (sgn(q0) == 0) throw LeadingZero("Q_0(" + std::to_string(m) + ") = 0 with no initial value supplied");
    BigRat acc = 0;
    for (int j = 1; j <= d && static_cast<std::size_t>(j) <= m; ++j) {
      std::size_t idx = m - static_cast<std::size_t>(j);
      if (sgn(a[idx]) == 0) continue;
      acc += rec.polys[static_cast<std::size_t>(j)].eval(BigRat(static_cast<long>(idx))) * a[idx];
    }
    a.push_back(-acc / q0);
  }
  return QSeries(Q, std::move(a));
}

// L applied to a truncated series. delta-basis keeps the order T; D-basis
// loses one order per derivative, so the residual has order T - n.
template <class K>
TruncSeries<K> apply_op(const DiffOp<K>& L, const TruncSeries<K>& f) {
  auto polys = primitive_polys(L);
  int n = L.order();
  std::size_t T = L.basis == Basis::Delta ? f.T() : (f.T() > static_cast<std::size_t>(n) ? f.T() - static_cast<std::size_t>(n) : 0);
  auto acc = TruncSeries<K>::zero(f.field(), T);
  TruncSeries<K> g = f;
  for (int k = 0; k <= n; ++k) {
    const auto& c = polys[static_cast<std::size_t>(n - k)];
    if (!c.is_zero()) acc += c * g.truncated(T);
    g = L.basis == Basis::Delta ? delta_series(g) : derivative_series(g);
  }
  return acc;
}

}  // namespace holocert
