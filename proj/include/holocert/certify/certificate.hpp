#pragma once

// Certificates f|_p = A(z) (Lambda_p^k f|_p)(z^{p^l}).
//   certificate_prop62  one step, k = l = 1
//   iterate_lemma52     telescoped steps
//   orbit_detect        Lambda_p^a f = Lambda_p^{a+b} f
//   assemble_theorem1   k = 0, level l_p

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holocert/certify/split.hpp"
#include "holocert/diffop.hpp"

namespace holocert {

enum class BoundKind { L_bound, L2_bound, Prop62 };

inline std::string bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::L_bound: return "L_bound";
    case BoundKind::L2_bound: return "L2_bound";
    case BoundKind::Prop62: return "prop62_bound";
  }
  return "?";
}

inline BoundKind parse_bound_kind(const std::string& s) {
  if (s == "L_bound") return BoundKind::L_bound;
  if (s == "L2_bound") return BoundKind::L2_bound;
  if (s == "prop62_bound") return BoundKind::Prop62;
  throw ParseError("unknown bound_kind '" + s + "'");
}

struct Certificate {
  std::string series;
  std::uint32_t p = 0;
  int level = 1;
  int lambda_power = 0;  // right-hand side is Lambda_p^k f
  FpRatFun A;
  std::size_t verified_to = 0;
  int height = 0;
  std::int64_t bound = 0;
  BoundKind bound_kind = BoundKind::L_bound;
};

inline std::int64_t ipow(std::int64_t b, unsigned e) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > INT64_MAX / b) throw PreconditionViolated("integer overflow in p^" + std::to_string(e));
    r *= b;
  }
  return r;
}

// Multiply-and-compare with plain loops: den * lhs == num * rhs(z^step) to
// order T. Kept separate from the series arithmetic used to build A.
inline bool verify_identity(const FpRatFun& A, const FpSeries& lhs, const FpSeries& rhs, std::size_t step, std::size_t T) {
  if (lhs.T() < T || rhs.T() * step < T) return false;
  std::uint32_t p = lhs.field().p;
  const auto& num = A.num().coeffs();
  const auto& den = A.den().coeffs();
  for (std::size_t k = 0; k < T; ++k) {
    std::uint64_t left = 0, right = 0;
    for (std::size_t i = 0; i < den.size() && i <= k; ++i) left = (left + den[i].value() * lhs[k - i].value()) % p;
    for (std::size_t i = 0; i < num.size() && i <= k; ++i) {
      std::size_t m = k - i;
      if (m % step) continue;
      right = (right + num[i].value() * rhs[m / step].value()) % p;
    }
    if (left != right) return false;
  }
  return true;
}

// Re-check a certificate against a fresh source of Lambda iterates.
inline bool verify_certificate(const Certificate& c, const ModPSource& src) {
  if (c.A.den().coeff(0).is_zero()) return false;
  if (c.height != c.A.height() || c.height > c.bound) return false;
  std::size_t step = static_cast<std::size_t>(ipow(c.p, static_cast<unsigned>(c.level)));
  std::size_t T = c.verified_to;
  FpSeries lhs = src.lambda(0, T);
  FpSeries rhs = src.lambda(static_cast<unsigned>(c.lambda_power), (T + step - 1) / step);
  return verify_identity(c.A, lhs, rhs, step, T);
}

// One step: f = P/(Lambda_p P)(z^p) * (Lambda_p f)(z^p), P from split_pade with d = n r.
inline Certificate certificate_prop62(const FpSeries& f, int n, int r, std::uint32_t p) {
  if (f.T() == 0 || f[0] != FpElem(1, p)) throw PreconditionViolated("certificate_prop62 needs f(0) = 1");
  SplitWitness w = split_pade(f, n * r, p);
  FpRatFun A(w.P, w.P.section(p, 0).compose_power(p));
  Certificate c;
  c.p = p;
  c.level = 1;
  c.lambda_power = 1;
  c.A = A;
  c.height = A.height();
  c.bound = static_cast<std::int64_t>(n) * r * p - 1;
  c.bound_kind = BoundKind::Prop62;
  if (c.height > c.bound)
    throw HeightBoundViolated("one-step height " + std::to_string(c.height) + " > " + std::to_string(c.bound));
  if (!verify_identity(A, f, cartier(f, p, 0), p, f.T())) throw VerificationFailed("one-step identity fails");
  c.verified_to = f.T();
  return c;
}

struct StepIterate {
  FpRatFun A;
  int height = 0;
  std::int64_t bound = 0;
  std::size_t verified_to = 0;
};

// Lambda^i f = A_{i,m} (Lambda^{i+m} f)(z^{p^m}), A_{i,m+1} = A_{i,m} A_step(z^{p^m}).
inline StepIterate iterate_lemma52(const ModPSource& src, unsigned i, unsigned m, int n, int r, std::size_t T) {
  std::uint32_t p = src.p;
  PrimeField F{p};
  StepIterate out{FpRatFun::one(F), 0, 2LL * n * r * ipow(p, m), T};
  std::size_t pj = 1;
  for (unsigned j = 0; j < m; ++j) {
    Certificate step = certificate_prop62(src.lambda(i + j, T), n, r, p);
    out.A = out.A * step.A.compose_power(pj);
    pj *= p;
    std::int64_t bound_j = 2LL * n * r * static_cast<std::int64_t>(pj);
    if (out.A.height() > bound_j)
      throw HeightBoundViolated("iterate height " + std::to_string(out.A.height()) + " > " + std::to_string(bound_j));
  }
  out.height = out.A.height();
  if (!verify_identity(out.A, src.lambda(i, T), src.lambda(i + m, (T + pj - 1) / pj), pj, T))
    throw VerificationFailed("iterate identity fails at i = " + std::to_string(i) + ", m = " + std::to_string(m));
  return out;
}

struct OrbitReport {
  unsigned a = 0, b = 1, l = 1;
  std::size_t verified_to = 0;
};

// Minimal (a, b) by a + b, then a. Iterates are compared to order
// max(floor(T / p^{a+b}), min_order), asking the source for more terms
// when needed; a source that cannot supply min_order terms ends the search.
inline OrbitReport orbit_detect(const ModPSource& src, std::size_t T, unsigned max_steps, std::size_t min_order = 32) {
  std::size_t pk = 1;
  for (unsigned s = 1; s <= max_steps; ++s) {
    pk *= src.p;
    std::size_t Tc = std::max(T / pk, min_order);
    std::vector<FpSeries> it;
    for (unsigned k = 0; k <= s; ++k) it.push_back(src.lambda(k, Tc));
    for (unsigned a = 0; a < s; ++a) {
      if (it[a].T() < min_order || it[s].T() < min_order) throw NoCycleFound("iterates too short to compare at step " + std::to_string(s));
      if (it[a].truncated(Tc) == it[s].truncated(Tc)) {
        OrbitReport rep;
        rep.a = a;
        rep.b = s - a;
        rep.l = (a / rep.b + 1) * rep.b;
        rep.verified_to = Tc;
        return rep;
      }
    }
  }
  throw NoCycleFound("no cycle within " + std::to_string(max_steps) + " Cartier steps");
}

struct AssemblyResult {
  OrbitReport orbit;
  Certificate l2;                  // A_p per the assembly formula
  std::optional<Certificate> l1;   // A_{p,0,l} when a = 0
  const Certificate& best() const { return l1 ? *l1 : l2; }
};

inline int singular_count(const QDiffOp& L) { return singularities(L).count_r; }

inline AssemblyResult assemble_theorem1(const SeqGen& g, const QDiffOp& L, std::uint32_t p, std::size_t T, unsigned max_steps = 6) {
  if (!is_mom(L)) throw NotMomAtZero("operator is not MOM at zero");
  auto good = good_primes(L, p);
  if (std::find(good.begin(), good.end(), p) == good.end()) throw BadPrime(std::to_string(p) + " is not a good prime");
  int n = L.order(), r = singular_count(L);
  std::int64_t C = 2LL * n * r;
  ModPSource src = sampler(g, p);
  AssemblyResult res;
  res.orbit = orbit_detect(src, T, max_steps);
  unsigned l = res.orbit.l;
  std::size_t pl = static_cast<std::size_t>(ipow(p, l));
  StepIterate a0 = iterate_lemma52(src, 0, l, n, r, T);
  StepIterate al = iterate_lemma52(src, l, l, n, r, T);
  FpRatFun A = a0.A * (al.A * a0.A.inverse()).compose_power(pl);

  Certificate& c = res.l2;
  c.series = g.name;
  c.p = p;
  c.level = static_cast<int>(l);
  c.A = A;
  c.height = A.height();
  c.bound = 2 * C * ipow(p, 2 * l);
  c.bound_kind = BoundKind::L2_bound;
  if (c.height > c.bound)
    throw HeightBoundViolated("assembled height " + std::to_string(c.height) + " > " + std::to_string(c.bound));
  FpSeries f = src.lambda(0, T);
  if (!verify_identity(A, f, f.truncated((T + pl - 1) / pl), pl, T)) throw VerificationFailed("assembled identity fails");
  c.verified_to = T;

  if (res.orbit.a == 0) {
    Certificate c1 = c;
    c1.A = a0.A;
    c1.height = a0.height;
    c1.bound = C * static_cast<std::int64_t>(pl);
    c1.bound_kind = BoundKind::L_bound;
    if (c1.height > c1.bound)
      throw HeightBoundViolated("L bound " + std::to_string(c1.height) + " > " + std::to_string(c1.bound));
    if (!verify_identity(c1.A, f, f.truncated((T + pl - 1) / pl), pl, T)) throw VerificationFailed("L certificate identity fails");
    res.l1 = c1;
  }
  return res;
}

// ---------------------------------------------------------------------------
// L(S) versus L^2(S) evidence

struct EvidenceRow {
  std::uint32_t p = 0;
  int level = 0;
  int height = 0;
  BigRat per_pl, per_p2l;  // height / p^l, height / p^{2l}
};

struct EvidenceReport {
  std::vector<EvidenceRow> rows;
  std::string verdict;
};

// s(p) = min over certificates at p of height / p^l. Bounded s(p) is what
// L(S) predicts; L^2-only series grow like p. The verdict is
// "L2-only-consistent" when s(p_max) / s(p_min) >= sqrt(p_max / p_min).
inline EvidenceReport classify_evidence(const std::vector<Certificate>& certs) {
  EvidenceReport rep;
  std::map<std::uint32_t, BigRat> s;
  for (const auto& c : certs) {
    BigRat pl(BigInt(static_cast<unsigned long>(ipow(c.p, static_cast<unsigned>(c.level)))));
    EvidenceRow row{c.p, c.level, c.height, BigRat(c.height) / pl, BigRat(c.height) / (pl * pl)};
    row.per_pl.canonicalize();
    row.per_p2l.canonicalize();
    auto it = s.find(c.p);
    if (it == s.end() || row.per_pl < it->second) s[c.p] = row.per_pl;
    rep.rows.push_back(row);
  }
  if (s.size() < 2) {
    rep.verdict = "insufficient data";
    return rep;
  }
  const auto& lo = *s.begin();
  const auto& hi = *s.rbegin();
  if (sgn(lo.second) == 0) {
    rep.verdict = "L(S)-consistent";
    return rep;
  }
  BigRat ratio = hi.second / lo.second;
  BigRat growth(BigInt(hi.first), BigInt(lo.first));
  growth.canonicalize();
  rep.verdict = (ratio * ratio >= growth) ? "L2-only-consistent" : "L(S)-consistent";
  return rep;
}

}  // namespace holocert
