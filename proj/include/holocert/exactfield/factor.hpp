#pragma once

// Squarefree decomposition, coprime bases, and irreducible factorization.
// Over F_p factorization is complete (Cantor-Zassenhaus). Over Q we split off
// rational roots; a leftover piece of degree <= 3 is then irreducible, larger
// leftovers are returned whole and flagged.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "holocert/exactfield/poly.hpp"

namespace holocert {

template <class K>
struct FactorPower {
  Poly<K> factor;
  int multiplicity = 1;
};

template <class K>
struct IrreducibleFactor {
  Poly<K> factor;       // monic
  bool proven = true;   // false: leftover over Q that was not split further
};

namespace detail {

inline FpPoly pth_root(const FpPoly& a) {
  std::uint32_t p = a.field().p;
  return a.section(p, 0);
}

inline QPoly pth_root(const QPoly&) { throw PreconditionViolated("p-th root over Q"); }

template <class K>
Poly<K> mulmod(const Poly<K>& a, const Poly<K>& b, const Poly<K>& m) {
  return (a * b) % m;
}

template <class K>
Poly<K> powmod(Poly<K> base, BigInt e, const Poly<K>& m) {
  Poly<K> acc = Poly<K>::one(m.field()) % m;
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mulmod(acc, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m);
  }
  return acc;
}

}  // namespace detail

// Multiplicity of the nonconstant polynomial g in a (a != 0).
template <class K>
int multiplicity(Poly<K> a, const Poly<K>& g) {
  int m = 0;
  while (!a.is_zero()) {
    auto [q, r] = divmod(a, g);
    if (!r.is_zero()) break;
    a = std::move(q);
    ++m;
  }
  return m;
}

// Squarefree decomposition a = c * prod f_i^{m_i}, factors monic, pairwise coprime.
template <class K>
std::vector<FactorPower<K>> squarefree_decomposition(const Poly<K>& a) {
  std::vector<FactorPower<K>> out;
  if (a.degree() <= 0) return out;
  std::uint32_t p = a.field().characteristic();
  Poly<K> f = a.monic();
  Poly<K> c = gcd(f, f.derivative());
  Poly<K> w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    Poly<K> y = gcd(w, c);
    Poly<K> z = exact_div(w, y);
    if (z.degree() > 0) out.push_back({z, i});
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) {
    // only reachable in characteristic p: c is a p-th power
    for (auto& fp : squarefree_decomposition(detail::pth_root(c))) {
      out.push_back({fp.factor, fp.multiplicity * static_cast<int>(p)});
    }
  }
  return out;
}

template <class K>
Poly<K> squarefree_part(const Poly<K>& a) {
  Poly<K> acc = Poly<K>::one(a.field());
  for (auto& fp : squarefree_decomposition(a)) acc = acc * fp.factor;
  return acc;
}

// Refines a list of nonconstant polynomials into pairwise coprime monic
// squarefree pieces whose products generate the same radical.
template <class K>
std::vector<Poly<K>> coprime_basis(const std::vector<Poly<K>>& input) {
  std::vector<Poly<K>> basis;
  for (const auto& a : input) {
    if (a.degree() <= 0) continue;
    for (auto& fp : squarefree_decomposition(a)) {
      std::vector<Poly<K>> pending{fp.factor};
      while (!pending.empty()) {
        Poly<K> q = pending.back();
        pending.pop_back();
        if (q.degree() <= 0) continue;
        bool split = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
          Poly<K> g = gcd(q, basis[i]);
          if (g.degree() <= 0) continue;
          Poly<K> b = basis[i];
          basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
          pending.push_back(g);
          pending.push_back(exact_div(b, g));
          pending.push_back(exact_div(q, g));
          split = true;
          break;
        }
        if (!split) basis.push_back(q.monic());
      }
    }
  }
  return basis;
}

// ---------------------------------------------------------------------------
// F_p

// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  PrimeField F = f.field();
  FpPoly x = FpPoly::x(F);
  FpPoly h = x % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = detail::powmod(h, BigInt(F.p), f);
    FpPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.push_back({g, d});
      f = exact_div(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f.monic(), f.degree()});
  return out;
}

// Splits a monic squarefree product of irreducibles of degree d.
inline void equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  PrimeField F = f.field();
  std::uniform_int_distribution<std::uint32_t> coin(0, F.p - 1);
  while (true) {
    std::vector<FpElem> rv;
    for (int i = 0; i < f.degree(); ++i) rv.push_back(FpElem(coin(rng), F.p));
    FpPoly a(F, rv);
    if (a.degree() <= 0) continue;
    FpPoly b(F);
    if (F.p == 2) {
      // trace map a + a^2 + ... + a^{2^{d-1}}
      FpPoly t = a % f;
      b = t;
      for (int i = 1; i < d; ++i) {
        t = detail::mulmod(t, t, f);
        b = b + t;
      }
    } else {
      BigInt e;
      mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = detail::powmod(a, e, f) - FpPoly::one(F);
    }
    FpPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

inline std::vector<IrreducibleFactor<FpElem>> irreducible_factors(const FpPoly& a) {
  std::vector<IrreducibleFactor<FpElem>> out;
  std::mt19937_64 rng(0x5eed);
  for (auto& sq : squarefree_decomposition(a)) {
    for (auto& [g, d] : distinct_degree(sq.factor)) {
      std::vector<FpPoly> pieces;
      equal_degree(g, d, rng, pieces);
      for (auto& q : pieces) out.push_back({q, true});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Q

namespace detail {

// Positive divisors of |n|, or empty if |n| is too large to factor by trial division.
inline std::vector<BigInt> divisors(const BigInt& n) {
  BigInt m = abs(n);
  if (m == 0 || m > BigInt("1000000000000")) return {};
  std::vector<std::pair<BigInt, int>> primes;
  for (BigInt d = 2; d * d <= m; ++d) {
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) primes.push_back({d, e});
  }
  if (m > 1) primes.push_back({m, 1});
  std::vector<BigInt> out{1};
  for (auto& [q, e] : primes) {
    std::size_t n0 = out.size();
    BigInt pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= q;
      for (std::size_t j = 0; j < n0; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

}  // namespace detail

inline std::vector<IrreducibleFactor<BigRat>> irreducible_factors(const QPoly& a) {
  std::vector<IrreducibleFactor<BigRat>> out;
  RationalField Q;
  for (auto& sq : squarefree_decomposition(a)) {
    QPoly f = sq.factor;
    while (f.degree() >= 1 && is_zero(f[0])) {
      out.push_back({QPoly::x(Q), true});
      f = exact_div(f, QPoly::x(Q));
    }
    bool searched = false;
    if (f.degree() >= 2) {
      auto prim = primitive_part(f).first;
      auto num_div = detail::divisors(prim.front());
      auto den_div = detail::divisors(prim.back());
      if (!num_div.empty() && !den_div.empty()) {
        searched = true;
        for (const auto& u : num_div) {
          for (const auto& v : den_div) {
            for (int s : {1, -1}) {
              if (f.degree() < 2) break;
              BigRat root = make_rat(BigInt(s) * u, v);
              if (!is_zero(f.eval(root))) continue;
              QPoly lin(Q, {-root, BigRat(1)});
              out.push_back({lin, true});
              f = exact_div(f, lin);
            }
          }
        }
      }
    }
    if (f.degree() >= 1) out.push_back({f.monic(), f.degree() == 1 || (searched && f.degree() <= 3)});
  }
  return out;
}

}  // namespace holocert
