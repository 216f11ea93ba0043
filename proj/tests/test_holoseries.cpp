#include <gtest/gtest.h>

#include "holocert/holoseries.hpp"

using namespace holocert;

namespace {

RationalField Q;

// Independent oracle: binomials from Pascal's triangle.
struct Pascal {
  std::vector<std::vector<BigInt>> rows;
  explicit Pascal(std::size_t n) {
    rows.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      rows[i].assign(i + 1, 1);
      for (std::size_t j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
    }
  }
  BigInt operator()(std::size_t n, std::size_t k) const { return k > n ? BigInt(0) : rows[n][k]; }
};

const Pascal& pascal() {
  static Pascal P(200);
  return P;
}

BigRat oracle_f2(std::size_t n) {
  BigInt c = pascal()(2 * n, n);
  BigRat q(-c * c, BigInt(2 * static_cast<long>(n) - 1));
  q.canonicalize();
  return q;
}

BigRat oracle_apery(std::size_t n) {
  BigInt s = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt t = pascal()(n, k) * pascal()(n + k, k);
    s += t * t;
  }
  return BigRat(s);
}

BigRat oracle_cy26(std::size_t j) {
  BigInt s = 0;
  for (std::size_t k = 0; k <= j; ++k) s += pascal()(j, k) * pascal()(j, k) * pascal()(j + k, k) * pascal()(2 * k, j);
  return BigRat(pascal()(2 * j, j) * s);
}

BigRat oracle_cy210(std::size_t j) {
  BigInt s = 0;
  for (std::size_t k = 0; k <= 2 * j; ++k) {
    BigInt c = pascal()(2 * j, k);
    BigInt c4 = c * c * c * c;
    s += (k % 2 ? -c4 : c4);
  }
  return BigRat(pascal()(2 * j, j) * s);
}

std::vector<BigRat> rats(std::initializer_list<long> v) {
  std::vector<BigRat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

QSeries qs(std::initializer_list<long> v) { return QSeries(Q, rats(v)); }

}  // namespace

TEST(Expand, F2Operator) {
  QSeries s = expand(recurrence_from(op_f2_d()), {BigRat(1)}, 4);
  EXPECT_EQ(s.coeffs(), rats({1, -4, -12, -80}));
  for (std::size_t n = 0; n < 4; ++n) EXPECT_EQ(s[n], oracle_f2(n));
}

TEST(Expand, DeltaOnlyAndApery) {
  QDiffOp d2 = QDiffOp::from_polys(Basis::Delta, {QPoly::one(Q), QPoly(Q), QPoly(Q)});
  QSeries c = expand(recurrence_from(d2), {BigRat(1)}, 6);
  EXPECT_EQ(c.coeffs(), rats({1, 0, 0, 0, 0, 0}));
  QSeries a = expand(recurrence_from(op_apery()), {BigRat(1)}, 4);
  EXPECT_EQ(a.coeffs(), rats({1, 5, 73, 1445}));
  for (std::size_t n = 0; n < 4; ++n) EXPECT_EQ(a[n], oracle_apery(n));
}

TEST(Expand, LeadingZero) {
  // delta - 2 has Q_0(2) = 0
  QDiffOp op = QDiffOp::from_polys(Basis::Delta, {QPoly::one(Q), QPoly::from_ints(Q, {-2, 1})});
  Recurrence rec = recurrence_of(op);
  EXPECT_THROW(expand(rec, {BigRat(1), BigRat(1)}, 5), LeadingZero);
}

TEST(ReduceSeries, Examples) {
  FpSeries f = reduce_series_mod_p(gen_series(lookup(default_catalog(), "f1"), 5), 3);
  std::vector<std::uint32_t> got;
  for (auto& c : f.coeffs()) got.push_back(c.value());
  // oracle: 1, 4, 36, 400, 4900 mod 3
  std::vector<long> raw{1, 4, 36, 400, 4900};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(got[i], static_cast<std::uint32_t>(raw[i] % 3));
  EXPECT_TRUE(reduce_series_mod_p(QSeries::zero(Q, 7), 5).is_zero());
  QSeries bad(Q, {BigRat(1), BigRat(1, 5)});
  EXPECT_THROW(reduce_series_mod_p(bad, 5), NotPLocal);
}

TEST(Cartier, Examples) {
  QSeries cb = qs({1, 2, 6, 20, 70, 252, 924});
  EXPECT_EQ(cartier(cb, 3, 0).coeffs(), rats({1, 20, 924}));
  QSeries cb8 = qs({1, 2, 6, 20, 70, 252, 924, 3432});
  EXPECT_EQ(cartier(cb8, 3, 1).coeffs(), rats({2, 70, 3432}));
  QSeries f = qs({3, 1, 4, 1, 5, 9, 2, 6});
  // output length ceil((T - r) / p)
  EXPECT_EQ(cartier(f, 3, 2).T(), 2u);
  QSeries comp = compose_zpk(f, 3, 1);
  EXPECT_EQ(cartier(comp, 3, 0).coeffs(), rats({3, 1, 4}));
}

TEST(Compose, Examples) {
  QSeries f = qs({1, 1, 0, 0, 0, 0});
  EXPECT_EQ(compose_zpk(f, 3, 1).coeffs(), rats({1, 0, 0, 1, 0, 0}));
  EXPECT_EQ(compose_zpk(f, 3, 0), f);
  FpSeries f1 = reduce_series_mod_p(gen_series(make_binom_power(2), 30), 3);
  EXPECT_EQ(f1.pow(3), compose_zpk(f1, 3, 1));
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta_series(qs({1, 1, 1})).coeffs(), rats({0, 1, 2}));
  EXPECT_TRUE(delta_series(qs({5, 0, 0})).is_zero());
  QSeries f1 = gen_series(make_binom_power(2), 50);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    QSeries lhs = cartier(delta_series(f1), p, 0);
    QSeries rhs = delta_series(cartier(f1, p, 0)) * BigRat(p);
    EXPECT_EQ(lhs, rhs) << p;
  }
}

TEST(RatfunSeries, Expansion) {
  // 1/(1-z) = sum z^n; (1+z)/(1-2z)
  QRatFun a(QPoly::one(Q), QPoly::from_ints(Q, {1, -1}));
  EXPECT_EQ(series_from_ratfun(a, 4).coeffs(), rats({1, 1, 1, 1}));
  QRatFun b(QPoly::from_ints(Q, {1, 1}), QPoly::from_ints(Q, {1, -2}));
  EXPECT_EQ(series_from_ratfun(b, 4).coeffs(), rats({1, 3, 6, 12}));
  EXPECT_THROW(series_from_ratfun(QRatFun(QPoly::one(Q), QPoly::x(Q)), 3), NotSeriesExpandable);
  QSeries inv = qs({1, -1, 0, 0}).inverse();
  EXPECT_EQ(inv.coeffs(), rats({1, 1, 1, 1}));
}

TEST(Lucas, Binomials) {
  EXPECT_EQ(lucas_binom(7, 2, 5).value(), 1u);
  EXPECT_EQ(lucas_binom(7, 2, 5).value(), static_cast<std::uint32_t>(pascal()(7, 2).get_ui() % 5));
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (unsigned long long n = 0; n < 60; ++n) {
      EXPECT_EQ(lucas_binom(n, 0, p).value(), 1u);
      for (unsigned long long k = 0; k <= n; ++k) {
        BigInt c = pascal()(n, k);
        EXPECT_EQ(lucas_binom(n, k, p).value(), mpz_fdiv_ui(c.get_mpz_t(), p)) << n << " " << k << " " << p;
      }
    }
  for (auto [j, p] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {2, 5}, {3, 7}}) {
    BigInt big = pascal()(2 * j * p, j * p);
    BigInt small = pascal()(2 * j, j);
    EXPECT_EQ(mpz_fdiv_ui(big.get_mpz_t(), p), mpz_fdiv_ui(small.get_mpz_t(), p));
    EXPECT_EQ(lucas_binom(2 * j * p, j * p, p).value(), mpz_fdiv_ui(small.get_mpz_t(), p));
  }
}

TEST(Lucas, PLucasCheck) {
  EXPECT_TRUE(p_lucas_check(make_binom_power(2), 7, 500).ok);
  EXPECT_TRUE(p_lucas_check(make_apery(), 5, 500).ok);
  LucasResult bad = p_lucas_check(make_fr(2), 5, 200);
  ASSERT_FALSE(bad.ok);
  // brute-force confirm the reported counterexample, and that it is the first
  auto t = gen_terms(make_fr(2), 201);
  auto md = [&](std::size_t n) { return reduce_rat_mod_p(t[n], 5); };
  EXPECT_NE(md(bad.r + bad.m * 5), md(bad.r) * md(bad.m));
  bool earlier = false;
  for (std::size_t m = 1; m < bad.m; ++m)
    for (std::size_t r = 0; r < 5; ++r)
      if (md(r + m * 5) != md(r) * md(m)) earlier = true;
  for (std::size_t r = 0; r < bad.r; ++r)
    if (md(r + bad.m * 5) != md(r) * md(bad.m)) earlier = true;
  EXPECT_FALSE(earlier);
}

TEST(Catalog, ClosedForms) {
  auto c = default_catalog();
  EXPECT_EQ(gen_terms(c.at("apery"), 4), rats({1, 5, 73, 1445}));
  EXPECT_EQ(gen_terms(c.at("f2"), 4), rats({1, -4, -12, -80}));
  auto cy26 = gen_terms(c.at("cy26"), 12);
  auto cy210 = gen_terms(c.at("cy210"), 12);
  auto ap = gen_terms(c.at("apery"), 60);
  for (std::size_t n = 0; n < 12; ++n) {
    EXPECT_EQ(cy26[n], oracle_cy26(n)) << n;
    EXPECT_EQ(cy210[n], oracle_cy210(n)) << n;
  }
  for (std::size_t n = 0; n < 60; ++n) {
    EXPECT_EQ(ap[n], oracle_apery(n)) << n;
    EXPECT_EQ(term(c.at("apery"), n), ap[n]);
  }
  // by hand, j = 1: C(2,1) * C(1,1)^2 C(2,1) C(2,1) = 2 * 4
  EXPECT_EQ(cy26[1], BigRat(8));
  EXPECT_THROW(lookup(c, "nosuch"), UnknownSeries);
  for (auto& [name, g] : c) EXPECT_EQ(gen_terms(g, 1)[0], BigRat(1)) << name;
}

TEST(Catalog, GeneratorsMatchOperators) {
  for (auto& [name, g] : default_catalog()) {
    auto op = operator_for(g);
    if (!op) continue;
    auto direct = gen_terms(g, 200);
    QSeries viaop = expand(recurrence_from(*op), {BigRat(1)}, 200);
    EXPECT_EQ(viaop.coeffs(), direct) << name;
    // both bases annihilate the truncation
    QSeries f(Q, direct);
    EXPECT_TRUE(apply_op(to_delta(*op), f).is_zero()) << name;
    EXPECT_TRUE(apply_op(to_d(*op), f).is_zero()) << name;
    EXPECT_TRUE(is_mom(*op)) << name;
  }
}

TEST(Catalog, OperatorKind) {
  SeqGen g = make_operator_seq("f2op", op_f2_d(), {BigRat(1)});
  EXPECT_EQ(gen_terms(g, 4), rats({1, -4, -12, -80}));
  EXPECT_EQ(term(g, 3), BigRat(-80));
}

TEST(Sampler, MatchesFullExpansion) {
  for (const auto& g : {make_fr(2), make_apery(), make_cy210()}) {
    for (std::uint32_t p : {3u, 5u}) {
      ModPSource s = sampler(g, p);
      FpSeries full = reduce_series_mod_p(gen_terms(g, 10 * p * p), p);
      EXPECT_EQ(s.lambda(0, 10 * p), full.truncated(10 * p)) << g.name;
      EXPECT_EQ(s.lambda(1, 10), cartier(full, p).truncated(10)) << g.name;
      EXPECT_EQ(s.lambda(2, 10), cartier(cartier(full, p), p).truncated(10)) << g.name;
    }
  }
}
