#pragma once

// Linear differential operators with rational-function coefficients, written
// either in D = d/dz or in delta = z d/dz. coeffs[0] is the leading
// coefficient (highest derivative), coeffs[n] the order-zero term.

#include <string>
#include <utility>
#include <vector>

#include "holocert/exactfield.hpp"

namespace holocert {

enum class Basis { D, Delta };

inline std::string basis_name(Basis b) { return b == Basis::D ? "d" : "delta"; }

template <class K>
struct DiffOp {
  using Field = field_t<K>;
  Basis basis = Basis::D;
  std::vector<RatFun<K>> coeffs;

  DiffOp() = default;
  DiffOp(Basis b, std::vector<RatFun<K>> c) : basis(b), coeffs(std::move(c)) {
    if (coeffs.size() < 2) throw PreconditionViolated("operator must have order >= 1");
    if (coeffs[0].is_zero()) throw PreconditionViolated("operator leading coefficient is zero");
  }
  // Polynomial coefficients, leading first.
  static DiffOp from_polys(Basis b, const std::vector<Poly<K>>& polys) {
    std::vector<RatFun<K>> c;
    for (const auto& p : polys) c.emplace_back(p);
    return DiffOp(b, std::move(c));
  }

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  Field field() const { return coeffs[0].field(); }
  // Coefficient of the k-th derivative (or delta^k).
  const RatFun<K>& coeff_of_order(int k) const { return coeffs[static_cast<std::size_t>(order() - k)]; }

  // a_i = coeffs[i] / coeffs[0]
  std::vector<RatFun<K>> monic_coeffs() const {
    std::vector<RatFun<K>> out;
    for (const auto& c : coeffs) out.push_back(c / coeffs[0]);
    return out;
  }

  std::string to_string() const {
    std::string sym = basis == Basis::D ? "D" : "delta";
    std::string s;
    for (int i = 0; i <= order(); ++i) {
      const auto& c = coeffs[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")";
      int k = order() - i;
      if (k > 0) s += "*" + sym + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s;
  }
};

using QDiffOp = DiffOp<BigRat>;
using FpDiffOp = DiffOp<FpElem>;

namespace detail {

inline void scale_primitive(std::vector<QPoly>& polys) {
  // Multiply by a positive rational so every coefficient is an integer with
  // overall content 1; the sign is left alone.
  BigInt den = 1, num = 0;
  for (const auto& p : polys)
    for (const auto& c : p.coeffs()) {
      BigInt d = c.get_den();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
  for (const auto& p : polys)
    for (const auto& c : p.coeffs()) {
      BigInt v = c.get_num() * (den / c.get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
  if (num == 0) return;
  BigRat s = make_rat(den, num);
  for (auto& p : polys) p *= s;
}

inline void scale_primitive(std::vector<FpPoly>&) {}

// Signed Stirling numbers of the first kind s(k, j), k <= n.
inline std::vector<std::vector<BigInt>> stirling1(int n) {
  std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(n + 1), std::vector<BigInt>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= k; ++j)
      s[k][j] = s[k - 1][j - 1] - BigInt(k - 1) * s[k - 1][j];
  return s;
}

// Stirling numbers of the second kind S(k, j).
inline std::vector<std::vector<BigInt>> stirling2(int n) {
  std::vector<std::vector<BigInt>> S(static_cast<std::size_t>(n + 1), std::vector<BigInt>(static_cast<std::size_t>(n + 1), 0));
  S[0][0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= k; ++j)
      S[k][j] = S[k - 1][j - 1] + BigInt(j) * S[k - 1][j];
  return S;
}

}  // namespace detail

// Clears denominators, removes the monic gcd of the coefficient polynomials
// and (over Q) scales to integer content 1. Returns polynomial coefficients.
template <class K>
std::vector<Poly<K>> primitive_polys(const DiffOp<K>& L) {
  auto F = L.field();
  Poly<K> den = Poly<K>::one(F);
  for (const auto& c : L.coeffs) den = lcm(den, c.den());
  std::vector<Poly<K>> polys;
  for (const auto& c : L.coeffs) polys.push_back(c.num() * exact_div(den, c.den()));
  Poly<K> g(F);
  for (const auto& p : polys) g = gcd(g, p);
  if (g.degree() > 0)
    for (auto& p : polys) p = exact_div(p, g);
  detail::scale_primitive(polys);
  return polys;
}

template <class K>
DiffOp<K> normalized(const DiffOp<K>& L) {
  return DiffOp<K>::from_polys(L.basis, primitive_polys(L));
}

// True when A = r * B for some nonzero rational function r.
template <class K>
bool equivalent(const DiffOp<K>& A, const DiffOp<K>& B) {
  if (A.basis != B.basis || A.order() != B.order()) return false;
  for (std::size_t i = 0; i < A.coeffs.size(); ++i) {
    if (A.coeffs[i] * B.coeffs[0] != B.coeffs[i] * A.coeffs[0]) return false;
  }
  return true;
}

// z^n L rewritten in delta, normalized.
template <class K>
DiffOp<K> to_delta(const DiffOp<K>& L) {
  if (L.basis == Basis::Delta) return L;
  auto F = L.field();
  int n = L.order();
  auto s = detail::stirling1(n);
  std::vector<RatFun<K>> out(static_cast<std::size_t>(n + 1), RatFun<K>(F));
  // a(z) D^k = a(z) z^{-k} (z^k D^k) = a z^{n-k} sum_j s(k,j) delta^j  (after multiplying by z^n)
  for (int k = 0; k <= n; ++k) {
    const auto& a = L.coeff_of_order(k);
    if (a.is_zero()) continue;
    RatFun<K> shifted = a * RatFun<K>(Poly<K>::monomial(F, F.one(), static_cast<std::size_t>(n - k)));
    for (int j = 0; j <= k; ++j) {
      if (s[k][j] == 0) continue;
      auto& slot = out[static_cast<std::size_t>(n - j)];
      slot = slot + shifted * F.from_bigint(s[k][j]);
    }
  }
  return normalized(DiffOp<K>(Basis::Delta, std::move(out)));
}

// delta-form rewritten in D, normalized.
template <class K>
DiffOp<K> to_d(const DiffOp<K>& L) {
  if (L.basis == Basis::D) return L;
  auto F = L.field();
  int n = L.order();
  auto S = detail::stirling2(n);
  std::vector<RatFun<K>> out(static_cast<std::size_t>(n + 1), RatFun<K>(F));
  // delta^k = sum_j S(k,j) z^j D^j
  for (int k = 0; k <= n; ++k) {
    const auto& b = L.coeff_of_order(k);
    if (b.is_zero()) continue;
    for (int j = 0; j <= k; ++j) {
      if (S[k][j] == 0) continue;
      RatFun<K> zj(Poly<K>::monomial(F, F.from_bigint(S[k][j]), static_cast<std::size_t>(j)));
      auto& slot = out[static_cast<std::size_t>(n - j)];
      slot = slot + b * zj;
    }
  }
  return normalized(DiffOp<K>(Basis::D, std::move(out)));
}

// Substitution z = 1/w; the result is written in the input's basis.
template <class K>
DiffOp<K> infinity_transform(const DiffOp<K>& L) {
  auto F = L.field();
  int n = L.order();
  std::vector<RatFun<K>> out(static_cast<std::size_t>(n + 1), RatFun<K>(F));
  if (L.basis == Basis::Delta) {
    // delta_z = -delta_w
    for (int k = 0; k <= n; ++k) {
      RatFun<K> c = L.coeff_of_order(k).compose_inverse();
      if (k % 2 == 1) c = -c;
      out[static_cast<std::size_t>(n - k)] = c;
    }
    return normalized(DiffOp<K>(Basis::Delta, std::move(out)));
  }
  // D_z = -w^2 D_w. powk[j] = coefficient of D_w^j in (D_z)^k.
  Poly<K> mw2 = Poly<K>::monomial(F, -F.one(), 2);
  std::vector<Poly<K>> powk{Poly<K>::one(F)};
  for (int k = 0; k <= n; ++k) {
    RatFun<K> a = L.coeff_of_order(k).compose_inverse();
    if (!a.is_zero()) {
      for (std::size_t j = 0; j < powk.size(); ++j) {
        if (powk[j].is_zero()) continue;
        auto& slot = out[static_cast<std::size_t>(n) - j];
        slot = slot + a * RatFun<K>(powk[j]);
      }
    }
    // (-w^2 D) o sum_j c_j D^j = sum_j -w^2 (c_j' D^j + c_j D^{j+1})
    std::vector<Poly<K>> next(powk.size() + 1, Poly<K>(F));
    for (std::size_t j = 0; j < powk.size(); ++j) {
      next[j] += mw2 * powk[j].derivative();
      next[j + 1] += mw2 * powk[j];
    }
    powk = std::move(next);
  }
  return normalized(DiffOp<K>(Basis::D, std::move(out)));
}

// Reduction mod p of the primitive integer form.
inline FpDiffOp reduce_op_mod_p(const QDiffOp& L, std::uint32_t p) {
  if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
  auto polys = primitive_polys(L);
  std::vector<FpPoly> red;
  for (const auto& q : polys) red.push_back(reduce_poly_mod_p(q, p));
  if (red[0].is_zero()) throw BadPrime("leading coefficient vanishes mod " + std::to_string(p));
  return FpDiffOp::from_polys(L.basis, red);
}

}  // namespace holocert
