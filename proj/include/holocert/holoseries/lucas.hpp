#pragma once

#include <optional>
#include <vector>

#include "holocert/holoseries/catalog.hpp"

namespace holocert {

// C(n, k) mod p from base-p digits.
inline FpElem lucas_binom(unsigned long long n, unsigned long long k, std::uint32_t p) {
  FpElem acc(1, p);
  while (n > 0 || k > 0) {
    unsigned long long ni = n % p, ki = k % p;
    if (ki > ni) return FpElem(0, p);
    // C(ni, ki) for digits below p: product formula in F_p
    FpElem num(1, p), den(1, p);
    for (unsigned long long i = 0; i < ki; ++i) {
      num *= FpElem(static_cast<long long>(ni - i), p);
      den *= FpElem(static_cast<long long>(i + 1), p);
    }
    acc *= num / den;
    n /= p;
    k /= p;
  }
  return acc;
}

struct LucasResult {
  bool ok = true;
  std::size_t r = 0, m = 0;  // first counterexample a(r + m p) != a(r) a(m)
};

inline LucasResult p_lucas_check(const std::vector<FpElem>& a, std::uint32_t p, std::size_t M) {
  LucasResult res;
  for (std::size_t m = 1; m * p <= M && m * p < a.size(); ++m) {
    for (std::size_t r = 0; r < p && r + m * p <= M && r + m * p < a.size(); ++r) {
      if (a[r + m * p] != a[r] * a[m]) {
        res.ok = false;
        res.r = r;
        res.m = m;
        return res;
      }
    }
  }
  return res;
}

// a(r + m p) = a(r) a(m) mod p for r < p, m >= 1, r + m p <= M.
inline LucasResult p_lucas_check(const std::vector<BigRat>& terms, std::uint32_t p, std::size_t M) {
  std::size_t n = std::min(terms.size(), M + 1);
  return p_lucas_check(reduce_series_mod_p(std::vector<BigRat>(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(n)), p).coeffs(), p, M);
}

inline LucasResult p_lucas_check(const SeqGen& g, std::uint32_t p, std::size_t M) {
  return p_lucas_check(gen_terms(g, M + 1), p, M);
}

}  // namespace holocert
