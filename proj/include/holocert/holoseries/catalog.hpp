#pragma once

// Named sequences with exact rational terms.
//   g_r    sum C(2n,n)^r z^n
//   f_r    sum -C(2n,n)^r/(2n-1) z^n
//   apery  sum_k C(n,k)^2 C(n+k,k)^2
//   cy26   C(2j,j) sum_k C(j,k)^2 C(j+k,k) C(2k,j)
//   cy210  C(2j,j) sum_{k<=2j} (-1)^k C(2j,k)^4
//   operator: expansion of a MOM operator from initial values

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holocert/holoseries/expand.hpp"

namespace holocert {

enum class SeqKind { BinomPower, FrFamily, Apery, Cy26, Cy210, Operator };

inline std::string kind_name(SeqKind k) {
  switch (k) {
    case SeqKind::BinomPower: return "binom_power";
    case SeqKind::FrFamily: return "f_r";
    case SeqKind::Apery: return "apery";
    case SeqKind::Cy26: return "cy26";
    case SeqKind::Cy210: return "cy210";
    case SeqKind::Operator: return "operator";
  }
  return "?";
}

struct SeqGen {
  SeqKind kind = SeqKind::BinomPower;
  std::string name;
  int r = 0;
  std::optional<QDiffOp> op;      // only for kind Operator
  std::vector<BigRat> initial;    // only for kind Operator
};

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  if (k > n) return 0;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

namespace detail {

inline BigRat binom_power_term(unsigned long n, int r) {
  BigInt c = binomial(2 * n, n), out;
  mpz_pow_ui(out.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(r));
  return BigRat(out);
}

inline BigRat fr_term(unsigned long n, int r) {
  BigRat b = binom_power_term(n, r);
  return make_rat(-b.get_num(), BigInt(2 * static_cast<long>(n) - 1));
}

inline BigRat apery_term(unsigned long n) {
  BigInt sum = 0, c1 = 1, c2 = 1;  // C(n,k), C(n+k,k)
  for (unsigned long k = 0; k <= n; ++k) {
    if (k > 0) {
      c1 = c1 * (n - k + 1) / k;
      c2 = c2 * (n + k) / k;
    }
    BigInt t = c1 * c2;
    sum += t * t;
  }
  return BigRat(sum);
}

inline BigRat cy26_term(unsigned long j) {
  BigInt sum = 0;
  for (unsigned long k = (j + 1) / 2; k <= j; ++k) {  // C(2k, j) = 0 for 2k < j
    BigInt c = binomial(j, k);
    sum += c * c * binomial(j + k, k) * binomial(2 * k, j);
  }
  return BigRat(binomial(2 * j, j) * sum);
}

inline BigRat cy210_term(unsigned long j) {
  BigInt sum = 0, c = 1;
  for (unsigned long k = 0; k <= 2 * j; ++k) {
    if (k > 0) c = c * (2 * j - k + 1) / k;
    BigInt c2 = c * c;
    BigInt c4 = c2 * c2;
    if (k % 2) sum -= c4;
    else sum += c4;
  }
  return BigRat(binomial(2 * j, j) * sum);
}

// Operator annihilating g_r: delta^r - 4^r z (delta + 1/2)^r.
// With shift = -1/2 on the first factor it annihilates f_r instead.
inline QDiffOp binomial_family_op(int r, bool f_family) {
  RationalField Q;
  QPoly x = QPoly::x(Q);
  QPoly half_plus = x + QPoly::constant(Q, BigRat(1, 2));
  QPoly prod = f_family ? x - QPoly::constant(Q, BigRat(1, 2)) : half_plus;
  for (int i = 1; i < r; ++i) prod = prod * half_plus;
  BigRat four_r = 1;
  for (int i = 0; i < r; ++i) four_r *= 4;
  std::vector<QPoly> coeffs;
  for (int k = r; k >= 0; --k) {
    BigRat c0 = (k == r) ? BigRat(1) : BigRat(0);
    BigRat c1 = -four_r * prod.coeff(static_cast<std::size_t>(k));
    coeffs.push_back(QPoly(Q, {c0, c1}));
  }
  return normalized(QDiffOp::from_polys(Basis::Delta, coeffs));
}

}  // namespace detail

// L_r = delta^r - 4^r z (delta - 1/2)(delta + 1/2)^{r-1}
inline QDiffOp op_L_r(int r) { return detail::binomial_family_op(r, true); }
inline QDiffOp op_g_r(int r) { return detail::binomial_family_op(r, false); }

// z(1-16z) D^2 + (1-16z) D + 4, the operator of f_2
inline QDiffOp op_f2_d() {
  RationalField Q;
  return QDiffOp::from_polys(Basis::D, {QPoly::from_ints(Q, {0, 1, -16}), QPoly::from_ints(Q, {1, -16}), QPoly::from_ints(Q, {4})});
}

inline QDiffOp op_apery() {
  RationalField Q;
  return QDiffOp::from_polys(Basis::D, {QPoly::from_ints(Q, {0, 0, 1, -34, 1}), QPoly::from_ints(Q, {0, 3, -153, 6}),
                                        QPoly::from_ints(Q, {1, -112, 7}), QPoly::from_ints(Q, {-5, 1})});
}

// Exact term a(n).
inline BigRat term(const SeqGen& g, unsigned long n) {
  switch (g.kind) {
    case SeqKind::BinomPower: return detail::binom_power_term(n, g.r);
    case SeqKind::FrFamily: return detail::fr_term(n, g.r);
    case SeqKind::Apery: return detail::apery_term(n);
    case SeqKind::Cy26: return detail::cy26_term(n);
    case SeqKind::Cy210: return detail::cy210_term(n);
    case SeqKind::Operator: {
      QSeries s = expand(recurrence_from(*g.op), g.initial, n + 1);
      return s[n];
    }
  }
  throw UnknownSeries(g.name);
}

inline bool has_closed_form(const SeqGen& g) { return g.kind != SeqKind::Operator; }

// Exact terms a(0) .. a(T-1).
inline std::vector<BigRat> gen_terms(const SeqGen& g, std::size_t T) {
  std::vector<BigRat> out;
  out.reserve(T);
  switch (g.kind) {
    case SeqKind::BinomPower:
    case SeqKind::FrFamily: {
      BigInt c = 1;
      for (std::size_t n = 0; n < T; ++n) {
        if (n > 0) c = c * (2 * (2 * n - 1)) / n;
        BigInt cr;
        mpz_pow_ui(cr.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(g.r));
        if (g.kind == SeqKind::BinomPower) out.emplace_back(cr);
        else out.push_back(make_rat(-cr, BigInt(2 * static_cast<long>(n) - 1)));
      }
      return out;
    }
    case SeqKind::Apery: {
      // n^3 a_n = (34n^3 - 51n^2 + 27n - 5) a_{n-1} - (n-1)^3 a_{n-2}
      BigInt a0 = 1, a1 = 5;
      for (std::size_t n = 0; n < T; ++n) {
        if (n == 0) {
          out.emplace_back(a0);
          continue;
        }
        if (n == 1) {
          out.emplace_back(a1);
          continue;
        }
        BigInt N = static_cast<unsigned long>(n);
        BigInt next = ((34 * N * N * N - 51 * N * N + 27 * N - 5) * a1 - (N - 1) * (N - 1) * (N - 1) * a0) / (N * N * N);
        a0 = a1;
        a1 = next;
        out.emplace_back(next);
      }
      return out;
    }
    case SeqKind::Cy26:
    case SeqKind::Cy210:
      for (std::size_t n = 0; n < T; ++n) out.push_back(term(g, n));
      return out;
    case SeqKind::Operator: {
      QSeries s = expand(recurrence_from(*g.op), g.initial, T);
      return s.coeffs();
    }
  }
  throw UnknownSeries(g.name);
}

inline QSeries gen_series(const SeqGen& g, std::size_t T) { return QSeries(RationalField{}, gen_terms(g, T)); }

// Annihilating operator, when one is known.
inline std::optional<QDiffOp> operator_for(const SeqGen& g) {
  switch (g.kind) {
    case SeqKind::BinomPower: return op_g_r(g.r);
    case SeqKind::FrFamily: return op_L_r(g.r);
    case SeqKind::Apery: return op_apery();
    case SeqKind::Operator: return g.op;
    case SeqKind::Cy26:
    case SeqKind::Cy210: return std::nullopt;
  }
  return std::nullopt;
}

inline SeqGen make_binom_power(int r) { return {SeqKind::BinomPower, "g" + std::to_string(r), r, std::nullopt, {}}; }
inline SeqGen make_fr(int r) { return {SeqKind::FrFamily, "f" + std::to_string(r), r, std::nullopt, {}}; }
inline SeqGen make_apery() { return {SeqKind::Apery, "apery", 0, std::nullopt, {}}; }
inline SeqGen make_cy26() { return {SeqKind::Cy26, "cy26", 0, std::nullopt, {}}; }
inline SeqGen make_cy210() { return {SeqKind::Cy210, "cy210", 0, std::nullopt, {}}; }
inline SeqGen make_operator_seq(std::string name, QDiffOp op, std::vector<BigRat> initial) {
  return {SeqKind::Operator, std::move(name), 0, std::move(op), std::move(initial)};
}

// f1 is the 2F1(1/2,1/2;1;16z) series, i.e. g2 under another name.
inline std::map<std::string, SeqGen> default_catalog() {
  std::map<std::string, SeqGen> c;
  SeqGen f1 = make_binom_power(2);
  f1.name = "f1";
  c["f1"] = f1;
  for (int r = 2; r <= 3; ++r) c["f" + std::to_string(r)] = make_fr(r);
  for (int r = 1; r <= 3; ++r) c["g" + std::to_string(r)] = make_binom_power(r);
  c["apery"] = make_apery();
  c["cy26"] = make_cy26();
  c["cy210"] = make_cy210();
  return c;
}

inline SeqGen lookup(const std::map<std::string, SeqGen>& catalog, const std::string& name) {
  auto it = catalog.find(name);
  if (it == catalog.end()) throw UnknownSeries("unknown series '" + name + "'");
  return it->second;
}

// ---------------------------------------------------------------------------
// Reductions of Cartier iterates.

// lambda(k, T) returns Lambda_p^k f |_p to order T (possibly shorter when the
// source is a finite truncation).
struct ModPSource {
  std::uint32_t p = 0;
  std::function<FpSeries(unsigned k, std::size_t T)> lambda;
};

// Exact terms a(n p^k) evaluated individually for closed-form kinds; full
// expansion followed by repeated sections otherwise.
inline ModPSource sampler(const SeqGen& g, std::uint32_t p) {
  ModPSource src;
  src.p = p;
  src.lambda = [g, p](unsigned k, std::size_t T) {
    unsigned long step = 1;
    for (unsigned i = 0; i < k; ++i) step *= p;
    if (k == 0 || !has_closed_form(g)) {
      auto s = reduce_series_mod_p(gen_terms(g, (T - 1) * step + 1), p);
      for (unsigned i = 0; i < k; ++i) s = cartier(s, p, 0);
      return s.truncated(T);
    }
    std::vector<FpElem> v;
    v.reserve(T);
    for (std::size_t n = 0; n < T; ++n) v.push_back(reduce_rat_mod_p(term(g, n * step), p));
    return FpSeries(PrimeField{p}, std::move(v));
  };
  return src;
}

inline ModPSource from_series(const FpSeries& f) {
  ModPSource src;
  src.p = f.field().p;
  src.lambda = [f](unsigned k, std::size_t T) {
    FpSeries s = f;
    for (unsigned i = 0; i < k; ++i) s = cartier(s, f.field().p, 0);
    return s.truncated(T);
  };
  return src;
}

}  // namespace holocert
