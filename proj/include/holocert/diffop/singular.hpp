#pragma once

#include <set>
#include <string>
#include <vector>

#include "holocert/diffop/diffop.hpp"

namespace holocert {

enum class PointKind { Nonsingular, Regular, Irregular };

inline std::string point_kind_name(PointKind k) {
  switch (k) {
    case PointKind::Nonsingular: return "nonsingular";
    case PointKind::Regular: return "regular";
    case PointKind::Irregular: return "irregular";
  }
  return "?";
}

template <class K>
struct SingularPoint {
  Poly<K> factor;  // monic, irreducible when `proven`
  bool proven = true;
  bool regular = true;
};

template <class K>
struct SingularityReport {
  std::vector<SingularPoint<K>> finite_points;
  PointKind infinity = PointKind::Nonsingular;
  int count_r = 0;

  bool fuchsian() const {
    if (infinity == PointKind::Irregular) return false;
    for (const auto& s : finite_points)
      if (!s.regular) return false;
    return true;
  }
};

namespace detail {

// Pole orders of the monic D-form coefficients along each element of a
// coprime squarefree basis of their denominators.
template <class K>
struct PoleData {
  std::vector<Poly<K>> basis;
  std::vector<bool> regular;
};

template <class K>
PoleData<K> pole_data(const std::vector<RatFun<K>>& a) {
  std::vector<Poly<K>> dens;
  for (const auto& c : a) dens.push_back(c.den());
  PoleData<K> out;
  out.basis = coprime_basis(dens);
  for (const auto& g : out.basis) {
    bool reg = true;
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      if (multiplicity(a[i].den(), g) > static_cast<int>(i)) reg = false;
    }
    out.regular.push_back(reg);
  }
  return out;
}

template <class K>
bool has_pole_at_zero(const std::vector<RatFun<K>>& a) {
  for (const auto& c : a)
    if (is_zero(c.den()[0])) return true;
  return false;
}

template <class K>
bool infinity_degree_criterion(const std::vector<RatFun<K>>& a) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    if (a[i].num().degree() > a[i].den().degree() - static_cast<int>(i)) return false;
  }
  return true;
}

}  // namespace detail

template <class K>
SingularityReport<K> singularities(const DiffOp<K>& L) {
  DiffOp<K> Ld = to_d(L);
  auto a = Ld.monic_coeffs();
  auto pd = detail::pole_data(a);
  SingularityReport<K> rep;
  for (std::size_t b = 0; b < pd.basis.size(); ++b) {
    rep.count_r += pd.basis[b].degree();
    for (auto& f : irreducible_factors(pd.basis[b])) rep.finite_points.push_back({f.factor, f.proven, pd.regular[b]});
  }
  // infinity: look at zero of the transformed operator
  auto ainf = to_d(infinity_transform(Ld)).monic_coeffs();
  if (!detail::has_pole_at_zero(ainf)) {
    rep.infinity = PointKind::Nonsingular;
  } else {
    rep.infinity = detail::infinity_degree_criterion(a) ? PointKind::Regular : PointKind::Irregular;
  }
  return rep;
}

template <class K>
Poly<K> indicial_at_zero(const DiffOp<K>& L) {
  DiffOp<K> Ldelta = to_delta(L);
  auto b = Ldelta.monic_coeffs();
  auto F = L.field();
  std::vector<K> c(b.size(), F.zero());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].is_zero()) continue;
    if (is_zero(b[i].den()[0])) throw NotSeriesExpandable("delta-form coefficient " + std::to_string(i) + " has a pole at 0");
    c[b.size() - 1 - i] = b[i].num().coeff(0) / b[i].den()[0];
  }
  return Poly<K>(F, std::move(c));
}

template <class K>
bool is_mom(const DiffOp<K>& L) {
  if (!singularities(L).fuchsian()) return false;
  try {
    auto F = L.field();
    return indicial_at_zero(L) == Poly<K>::monomial(F, F.one(), static_cast<std::size_t>(L.order()));
  } catch (const NotSeriesExpandable&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// good primes

namespace detail {

inline void add_prime_divisors(BigInt n, std::uint32_t bound, std::set<std::uint32_t>& bad) {
  n = abs(n);
  if (n == 0) return;
  for (std::uint32_t p : primes_up_to(bound))
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) bad.insert(p);
}

}  // namespace detail

inline std::vector<std::uint32_t> good_primes(const QDiffOp& L, std::uint32_t bound) {
  std::set<std::uint32_t> bad;
  QDiffOp Ld = to_d(L);
  auto a = Ld.monic_coeffs();
  // Gauss norm of each a_i at most 1
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    BigRat ratio = primitive_part(a[i].num()).second / primitive_part(a[i].den()).second;
    detail::add_prime_divisors(ratio.get_den(), bound, bad);
  }
  // singular points are p-adic units, pairwise distinct mod p
  auto rep = singularities(Ld);
  std::vector<QPoly> factors;
  for (const auto& s : rep.finite_points) factors.push_back(s.factor);
  QPoly z = QPoly::x(RationalField{});
  for (const auto& f : factors) {
    if (f == z) continue;
    for (const auto& c : f.coeffs()) detail::add_prime_divisors(c.get_den(), bound, bad);
    detail::add_prime_divisors(f[0].get_num(), bound, bad);
  }
  BigRat d = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    d *= discriminant(factors[i]);
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      BigRat r = resultant(factors[i], factors[j]);
      d *= r * r;
    }
  }
  detail::add_prime_divisors(d.get_num(), bound, bad);
  detail::add_prime_divisors(d.get_den(), bound, bad);
  std::vector<std::uint32_t> out;
  for (std::uint32_t p : primes_up_to(bound))
    if (!bad.count(p)) out.push_back(p);
  return out;
}

}  // namespace holocert
