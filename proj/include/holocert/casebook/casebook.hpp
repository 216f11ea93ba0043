#pragma once

// Worked examples as executable checks:
//   210          a(jp) = a(j) mod p for the cy210 sequence (p odd)
//   26           same for cy26
//   2f1          the f_1 / f_2 identities and the B_k height law
//   ingredients  Lambda f_r = g_r = Lambda^2 f_r, L_r, Apery p-Lucas, f2/g2
//   apery        p-Lucas property of the Apery numbers

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "holocert/certify.hpp"

namespace holocert {

struct Check {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct CaseResult {
  CaseResult() = default;
  CaseResult(std::string id, std::uint32_t prime) : case_id(std::move(id)), p(prime) {}

  std::string case_id;
  std::uint32_t p = 0;
  bool excluded = false;
  std::vector<Check> checks;
  std::map<std::string, std::size_t> orders;
  std::vector<std::string> notes;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string label, bool pass, std::string detail = "") { checks.push_back({std::move(label), pass, std::move(detail)}); }
};

struct CaseOptions {
  unsigned jmax_210 = 40;
  unsigned jmax_26 = 30;
  unsigned kmax = 2;
  std::size_t T = 500;
  std::size_t lucas_M = 2000;
  std::uint64_t height_cap = 400;  // B_k checked only while p^{k+1} <= cap
};

namespace detail {

// cy210 and cy26 modulo p through base-p digits only.
inline FpElem cy210_mod_p(unsigned long long n, std::uint32_t p) {
  FpElem s(0, p);
  for (unsigned long long k = 0; k <= 2 * n; ++k) {
    FpElem c = lucas_binom(2 * n, k, p);
    FpElem c4 = c * c * c * c;
    if (k % 2) s -= c4;
    else s += c4;
  }
  return lucas_binom(2 * n, n, p) * s;
}

inline FpElem cy26_mod_p(unsigned long long n, std::uint32_t p) {
  FpElem s(0, p);
  for (unsigned long long k = 0; k <= n; ++k) {
    FpElem c = lucas_binom(n, k, p);
    s += c * c * lucas_binom(n + k, k, p) * lucas_binom(2 * k, n, p);
  }
  return lucas_binom(2 * n, n, p) * s;
}

inline void lucas_congruence(CaseResult& res, const SeqGen& g, std::uint32_t p, unsigned jmax,
                             const std::function<FpElem(unsigned long long, std::uint32_t)>& digits) {
  std::string bad_exact, bad_digits, bad_agree;
  for (unsigned long long j = 0; j <= jmax; ++j) {
    FpElem ej = reduce_rat_mod_p(term(g, j), p), ejp = reduce_rat_mod_p(term(g, j * p), p);
    FpElem dj = digits(j, p), djp = digits(j * p, p);
    if (ejp != ej && bad_exact.empty()) bad_exact = "j = " + std::to_string(j);
    if (djp != dj && bad_digits.empty()) bad_digits = "j = " + std::to_string(j);
    if ((ej != dj || ejp != djp) && bad_agree.empty()) bad_agree = "j = " + std::to_string(j);
  }
  std::string range = "j <= " + std::to_string(jmax);
  res.add("a(jp) = a(j) mod p, exact sums", bad_exact.empty(), bad_exact.empty() ? range : "first failure " + bad_exact);
  res.add("a(jp) = a(j) mod p, Lucas digits", bad_digits.empty(), bad_digits.empty() ? range : "first failure " + bad_digits);
  res.add("exact and digit routes agree", bad_agree.empty(), bad_agree.empty() ? range : "first disagreement " + bad_agree);
  res.orders["jmax"] = jmax;
}

inline FpPoly truncation(const SeqGen& g, std::uint32_t p) {
  return reduce_series_mod_p(gen_terms(g, p), p).to_poly();
}

}  // namespace detail

inline CaseResult case_210(std::uint32_t p, unsigned jmax) {
  if (p == 2) throw BadPrime("case 210 needs p != 2");
  CaseResult res{"210", p};
  detail::lucas_congruence(res, make_cy210(), p, jmax, detail::cy210_mod_p);
  return res;
}

inline CaseResult case_26(std::uint32_t p, unsigned jmax) {
  CaseResult res{"26", p};
  detail::lucas_congruence(res, make_cy26(), p, jmax, detail::cy26_mod_p);
  return res;
}

inline CaseResult case_2f1(std::uint32_t p, unsigned kmax, std::size_t T, std::uint64_t height_cap = 400) {
  if (p < 3) throw BadPrime("case 2f1 needs p >= 3");
  CaseResult res{"2f1", p};
  res.orders["T"] = T;
  PrimeField F{p};
  SeqGen g1 = make_binom_power(2), g2 = make_fr(2);
  FpPoly P1 = detail::truncation(g1, p), P2 = detail::truncation(g2, p);
  int half = static_cast<int>(p - 1) / 2;
  res.add("(i) deg P1 = deg P2 = (p-1)/2", P1.degree() == half && P2.degree() == half,
          "deg P1 = " + std::to_string(P1.degree()) + ", deg P2 = " + std::to_string(P2.degree()));

  // over Q
  RationalField Q;
  QSeries f1 = gen_series(g1, T), f2 = gen_series(g2, T);
  QPoly one_16z = QPoly::from_ints(Q, {1, -16});
  QSeries rhs15 = one_16z * (f1 + delta_series(f1) * BigRat(2));
  res.add("(ii) f2 = (1-16z)(f1 + 2 delta f1) over Q", rhs15 == f2, "order " + std::to_string(T));
  res.add("(iii) f1 = f2 - 2 delta f2 over Q", f2 - delta_series(f2) * BigRat(2) == f1, "order " + std::to_string(T));

  // over F_p
  FpPoly one_16zp = FpPoly::from_ints(F, {1, -16});
  FpPoly dP1(F, [&] {
    std::vector<FpElem> v;
    for (std::size_t i = 0; i < P1.size(); ++i) v.push_back(P1[i] * F.from_int(static_cast<long long>(i)));
    return v;
  }());
  res.add("(iv) P2 = (1-16z)(P1 + 2 delta P1)", one_16zp * (P1 + dP1 * F.from_int(2)) == P2);

  std::size_t Tp = (T + p - 1) / p;
  FpSeries f1p = reduce_series_mod_p(gen_terms(g1, std::max<std::size_t>(T, Tp)), p);
  FpSeries f2p = reduce_series_mod_p(f2, p);
  FpSeries f1_zp = compose_power(f1p, p, T);
  res.add("(v) f2 = P2 f1(z^p) mod p", P2 * f1_zp == f2p, "order " + std::to_string(T));
  res.add("(v') f2 = P2 P1(z^p) f1(z^{p^2}) mod p", (P2 * P1.compose_power(p)) * compose_power(f1p, p * p, T) == f2p,
          "order " + std::to_string(T));
  res.add("(vi) P2^{p-1} f2 = P1^p f2(z^p) mod p", P2.pow(p - 1) * f2p == P1.pow(p) * compose_power(f2p, p, T),
          "order " + std::to_string(T));

  FpPoly g = gcd(P2, P2.derivative());
  res.add("(vii) gcd(P2, P2') = 1", g.degree() == 0, "gcd = " + g.to_string());
  FpPoly zdP2 = FpPoly::x(F) * P2.derivative();
  bool rel = P1 == P2 - zdP2 * F.from_int(2);
  FpPoly g12 = gcd(P1, P2);
  res.add("(viii) P1 = P2 - 2z P2' and gcd(P1, P2) = 1", rel && g12.degree() == 0, "gcd = " + g12.to_string());

  std::uint64_t pk = p;
  for (unsigned k = 0; k <= kmax; ++k, pk *= p) {
    if (pk > height_cap) {
      res.notes.push_back("B_" + std::to_string(k) + " not checked: p^" + std::to_string(k + 1) + " > " + std::to_string(height_cap));
      continue;
    }
    std::size_t e1 = static_cast<std::size_t>((pk - 1) / (p - 1) * p), e2 = static_cast<std::size_t>(pk - 1);
    FpRatFun B(P1.pow(e1), P2.pow(e2));
    std::int64_t expect = static_cast<std::int64_t>(p) * static_cast<std::int64_t>(pk - 1) / 2;
    res.add("(ix) height B_" + std::to_string(k) + " = (p/2)(p^{k+1}-1)", B.height() == expect,
            "height " + std::to_string(B.height()) + ", expected " + std::to_string(expect));
    bool ident = verify_identity(B, f2p, f2p.truncated((T + pk - 1) / pk), static_cast<std::size_t>(pk), T);
    res.add("(ix) f2 = B_" + std::to_string(k) + " f2(z^{p^{k+1}}) mod p", ident, "order " + std::to_string(T));
  }
  return res;
}

inline CaseResult case_apery(std::uint32_t p, std::size_t M) {
  CaseResult res{"apery", p};
  LucasResult lr = p_lucas_check(make_apery(), p, M);
  res.add("apery p-Lucas", lr.ok,
          lr.ok ? "r + mp <= " + std::to_string(M) : "fails at r = " + std::to_string(lr.r) + ", m = " + std::to_string(lr.m));
  res.orders["M"] = M;
  return res;
}

inline CaseResult case_independence_ingredients(std::uint32_t p, std::size_t T) {
  if (p < 3) throw BadPrime("ingredients case needs p >= 3");
  CaseResult res{"ingredients", p};
  res.orders["T"] = T;
  for (int r = 2; r <= 3; ++r) {
    std::string rs = std::to_string(r);
    ModPSource fr = sampler(make_fr(r), p), gr = sampler(make_binom_power(r), p);
    FpSeries g = gr.lambda(0, T);
    res.add("Lambda f" + rs + " = g" + rs + " mod p", fr.lambda(1, T) == g, "order " + std::to_string(T));
    res.add("Lambda^2 f" + rs + " = g" + rs + " mod p", fr.lambda(2, T) == g, "order " + std::to_string(T));
    QDiffOp L = op_L_r(r);
    res.add("L" + rs + " f" + rs + " = 0", apply_op(L, gen_series(make_fr(r), T)).is_zero(), "order " + std::to_string(T));
    res.add("L" + rs + " is MOM at 0", is_mom(L));
  }
  res.add("apery p-Lucas", p_lucas_check(make_apery(), p, T).ok, "r + mp <= " + std::to_string(T));

  // f_{2|p} = B g_{2|p} with B rational
  FpSeries f2 = sampler(make_fr(2), p).lambda(0, T), g2 = sampler(make_binom_power(2), p).lambda(0, T);
  int cap = static_cast<int>(p);
  auto nd = detail::rational_reconstruction(f2 * g2.inverse(), T, cap, cap);
  bool ok = nd.has_value();
  std::string detail = "no rational B of height <= " + std::to_string(cap);
  if (ok) {
    FpRatFun B(nd->first, nd->second);
    ok = verify_identity(B, f2, g2, 1, T);
    detail = "B = " + B.to_string() + ", height " + std::to_string(B.height());
  }
  res.add("f2 = B g2 mod p, B rational", ok, detail);
  return res;
}

inline const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids{"210", "26", "2f1", "ingredients", "apery"};
  return ids;
}

inline CaseResult run_case(const std::string& id, std::uint32_t p, const CaseOptions& o) {
  if (id == "210") return case_210(p, o.jmax_210);
  if (id == "26") return case_26(p, o.jmax_26);
  if (id == "2f1") return case_2f1(p, o.kmax, o.T, o.height_cap);
  if (id == "ingredients") return case_independence_ingredients(p, o.T);
  if (id == "apery") return case_apery(p, o.lucas_M);
  throw UnknownCase("unknown case '" + id + "'");
}

// Rows for every (case, prime); cases whose hypotheses exclude the prime are
// marked excluded instead of failing.
inline std::vector<CaseResult> batch_report(const std::vector<std::uint32_t>& primes, std::vector<std::string> cases,
                                            const CaseOptions& o = {}) {
  if (cases.size() == 1 && cases[0] == "all") cases = case_ids();
  for (const auto& c : cases)
    if (std::find(case_ids().begin(), case_ids().end(), c) == case_ids().end()) throw UnknownCase("unknown case '" + c + "'");
  std::vector<CaseResult> out;
  for (const auto& c : cases) {
    for (auto p : primes) {
      try {
        out.push_back(run_case(c, p, o));
      } catch (const BadPrime& e) {
        CaseResult r{c, p};
        r.excluded = true;
        r.notes.push_back(e.what());
        out.push_back(r);
      }
    }
  }
  return out;
}

inline bool batch_pass(const std::vector<CaseResult>& rows) {
  for (const auto& r : rows)
    if (!r.excluded && !r.all_pass()) return false;
  return true;
}

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}
}  // namespace detail

// case_id,p,check_label,pass,detail
inline std::string to_csv(const std::vector<CaseResult>& rows) {
  std::ostringstream os;
  os << "case_id,p,check_label,pass,detail\n";
  for (const auto& r : rows) {
    if (r.excluded) {
      os << r.case_id << ',' << r.p << ",excluded,excluded," << detail::csv_field(r.notes.empty() ? "" : r.notes[0]) << '\n';
      continue;
    }
    for (const auto& c : r.checks)
      os << r.case_id << ',' << r.p << ',' << detail::csv_field(c.label) << ',' << (c.pass ? "true" : "false") << ','
         << detail::csv_field(c.detail) << '\n';
  }
  return os.str();
}

}  // namespace holocert
