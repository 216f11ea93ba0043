#pragma once

// Splitting f = P(z) c(z^p) over F_p.
//   split_pade:        section ratios by rational reconstruction
//   split_elimination: one linear system over all sections (independent oracle)

#include <optional>
#include <utility>
#include <vector>

#include "holocert/exactfield.hpp"
#include "holocert/holoseries.hpp"

namespace holocert {

struct SplitWitness {
  FpPoly P;
  std::uint32_t p = 0;
  int d = 0;
  int degree_bound = 0;  // p d - 1
  std::size_t verified_to = 0;
};

namespace detail {

// (N, D) with D q = N mod z^L, deg N <= nd, deg D <= dd, D(0) != 0, reduced.
template <class K>
std::optional<std::pair<Poly<K>, Poly<K>>> rational_reconstruction(const TruncSeries<K>& q, std::size_t L, int nd, int dd) {
  const auto& F = q.field();
  Poly<K> r0 = Poly<K>::monomial(F, F.one(), L), r1 = q.truncated(L).to_poly();
  Poly<K> t0(F), t1 = Poly<K>::one(F);
  while (r1.degree() > nd) {
    auto [qq, rr] = divmod(r0, r1);
    Poly<K> t2 = t0 - qq * t1;
    r0 = std::move(r1);
    r1 = std::move(rr);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1.degree() > dd || is_zero(t1.coeff(0))) return std::nullopt;
  Poly<K> g = gcd(r1, t1);
  if (!r1.is_zero() && g.degree() > 0) {
    r1 = exact_div(r1, g);
    t1 = exact_div(t1, g);
  }
  K inv = inverse(t1.lead());
  return std::make_pair(r1 * inv, t1 * inv);
}

// P(z) = sum_r z^r P_r(z^p)
inline FpPoly interleave(const std::vector<FpPoly>& parts, std::uint32_t p) {
  PrimeField F{p};
  std::vector<FpElem> c;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (std::size_t k = 0; k < parts[r].size(); ++k) {
      std::size_t idx = k * p + r;
      if (c.size() <= idx) c.resize(idx + 1, F.zero());
      c[idx] = parts[r][k];
    }
  }
  return FpPoly(F, std::move(c));
}

// f == P c(z^p) to order f.T() with c = Lambda_p(f) / P_0.
inline bool check_split(const FpSeries& f, const FpPoly& P, std::uint32_t p) {
  FpPoly P0 = P.section(p, 0);
  FpSeries s0 = cartier(f, p, 0);
  FpSeries c = s0 * FpSeries::from_poly(P0, s0.T()).inverse();
  return (P * compose_power(c, p, f.T())) == f;
}

inline SplitWitness finish(FpPoly P, const FpSeries& f, int d, std::uint32_t p) {
  if (P.is_zero() || P.coeff(0).is_zero()) throw ReconstructionFailed("split polynomial vanishes at 0");
  P *= P.coeff(0).inverse();
  if (P.degree() > static_cast<int>(p) * d - 1)
    throw ReconstructionFailed("split polynomial degree " + std::to_string(P.degree()) + " exceeds p d - 1");
  if (!check_split(f, P, p)) throw ReconstructionFailed("f != P c(z^p) to order " + std::to_string(f.T()));
  return {std::move(P), p, d, static_cast<int>(p) * d - 1, f.T()};
}

}  // namespace detail

inline SplitWitness split_pade(const FpSeries& f, int d, std::uint32_t p) {
  if (f.T() == 0 || f[0].is_zero()) throw PreconditionViolated("split_pade needs f(0) != 0");
  if (d < 1) throw PreconditionViolated("split_pade needs d >= 1");
  std::size_t L = f.T() / p;
  if (L < 2 * static_cast<std::size_t>(d))
    throw ReconstructionFailed("order " + std::to_string(f.T()) + " too small for d = " + std::to_string(d));
  PrimeField F{p};
  FpSeries s0inv = cartier(f, p, 0).truncated(L).inverse();
  std::vector<FpPoly> N(p, FpPoly(F)), D(p, FpPoly::one(F));
  N[0] = FpPoly::one(F);
  FpPoly P0 = FpPoly::one(F);
  for (std::uint32_t r = 1; r < p; ++r) {
    FpSeries q = cartier(f, p, r).truncated(L) * s0inv;
    auto nd = detail::rational_reconstruction(q, L, d - 1, d - 1);
    if (!nd) throw ReconstructionFailed("no degree " + std::to_string(d - 1) + " relation for section " + std::to_string(r));
    N[r] = nd->first;
    D[r] = nd->second;
    P0 = lcm(P0, D[r]);
  }
  std::vector<FpPoly> parts(p, FpPoly(F));
  for (std::uint32_t r = 0; r < p; ++r) parts[r] = N[r] * exact_div(P0, D[r]);
  return detail::finish(detail::interleave(parts, p), f, d, p);
}

// Unknowns: coefficients of P_0..P_{p-1} of degree <= e; equations
// P_r s_0 = P_0 s_r mod z^L. The smallest e with a nonzero kernel gives a
// one-dimensional kernel.
inline SplitWitness split_elimination(FpSeries f, int d, std::uint32_t p) {
  if (d < 1) throw PreconditionViolated("split_elimination needs d >= 1");
  if (f.is_zero()) throw PreconditionViolated("split_elimination on the zero series");
  while (f[0].is_zero()) {
    for (std::uint32_t i = 0; i < p && i < f.T(); ++i)
      if (!f[i].is_zero()) throw PreconditionViolated("f(0) = 0 but f is not divisible by z^p");
    f = FpSeries(f.field(), std::vector<FpElem>(f.coeffs().begin() + p, f.coeffs().end()));
  }
  std::size_t L = f.T() / p;
  if (L < 2 * static_cast<std::size_t>(d) + 1)
    throw ReconstructionFailed("order " + std::to_string(f.T()) + " too small for d = " + std::to_string(d));
  PrimeField F{p};
  std::vector<FpSeries> s;
  for (std::uint32_t r = 0; r < p; ++r) s.push_back(cartier(f, p, r).truncated(L));
  for (int e = 0; e < d; ++e) {
    std::size_t w = static_cast<std::size_t>(e) + 1, cols = p * w;
    Matrix<FpElem> m;
    for (std::uint32_t r = 1; r < p; ++r) {
      for (std::size_t j = 0; j < L; ++j) {
        std::vector<FpElem> row(cols, F.zero());
        for (std::size_t k = 0; k < w && k <= j; ++k) {
          row[r * w + k] += s[0][j - k];
          row[k] -= s[r][j - k];
        }
        m.push_back(std::move(row));
      }
    }
    Matrix<FpElem> red = m;
    std::size_t rank = row_reduce(red).size();
    if (rank == cols) continue;
    if (cols - rank > 1) throw ReconstructionFailed("section kernel is not one-dimensional");
    auto v = kernel_vector(m, cols, F);
    std::vector<FpPoly> parts;
    for (std::uint32_t r = 0; r < p; ++r)
      parts.emplace_back(F, std::vector<FpElem>(v->begin() + r * w, v->begin() + (r + 1) * w));
    return detail::finish(detail::interleave(parts, p), f, d, p);
  }
  throw ReconstructionFailed("no relation of degree <= " + std::to_string(d - 1) + " among sections");
}

}  // namespace holocert
