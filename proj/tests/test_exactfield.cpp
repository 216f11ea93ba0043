#include <gtest/gtest.h>

#include "holocert/exactfield.hpp"

using namespace holocert;

namespace {

RationalField Q;
PrimeField F3{3};

QPoly qp(std::initializer_list<long long> c) { return QPoly::from_ints(Q, c); }
FpPoly fp(std::uint32_t p, std::initializer_list<long long> c) { return FpPoly::from_ints(PrimeField{p}, c); }

// brute force: x with 3x = -1 mod 5
std::uint32_t brute_inverse_solve(long long num, long long den, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    if (((static_cast<long long>(x) * den - num) % p + p) % p == 0) return x;
  }
  return p;
}

}  // namespace

TEST(ReduceRat, Examples) {
  EXPECT_EQ(reduce_rat_mod_p(BigRat(0), 7).value(), 0u);
  EXPECT_EQ(reduce_rat_mod_p(parse_rat("-1/3"), 5).value(), brute_inverse_solve(-1, 3, 5));
  EXPECT_EQ(reduce_rat_mod_p(parse_rat("-1/3"), 5).value(), 3u);
  EXPECT_THROW(reduce_rat_mod_p(parse_rat("1/5"), 5), NotPLocal);
}

TEST(ReduceRat, ParseErrors) {
  EXPECT_THROW(parse_rat("abc"), ParseError);
  EXPECT_THROW(parse_rat(""), ParseError);
  EXPECT_THROW(parse_rat("1/0"), ZeroDenominator);
  EXPECT_EQ(parse_rat("6/4"), BigRat(3, 2));
}

TEST(FpElem, Arithmetic) {
  FpElem a(4, 7), b(5, 7);
  EXPECT_EQ((a + b).value(), 2u);
  EXPECT_EQ((a - b).value(), 6u);
  EXPECT_EQ((a * b).value(), 6u);
  EXPECT_EQ((a / b * b), a);
  EXPECT_EQ((-a).value(), 3u);
  EXPECT_EQ(a.pow(6).value(), 1u);
  EXPECT_THROW(FpElem(0, 7).inverse(), ZeroDenominator);
}

TEST(Poly, GcdExamples) {
  EXPECT_EQ(gcd(qp({-1, 0, 1}), qp({-1, 1})), qp({-1, 1}));
  EXPECT_EQ(gcd(qp({2, 4}), QPoly(Q)), qp({2, 4}).monic());
  EXPECT_TRUE(gcd(QPoly(Q), QPoly(Q)).is_zero());
  // P_{2,3}: coefficients of f_2 = 1, -4, -12 ... truncated below 3 -> 1 - 4z - 12 z^2 mod 3 = 1 + 2z
  long long f2[3] = {1, -4, -12};
  FpPoly p23 = fp(3, {f2[0], f2[1], f2[2]});
  EXPECT_EQ(p23, fp(3, {1, 2}));
  EXPECT_EQ(gcd(p23, p23.derivative()), fp(3, {1}));
}

TEST(Poly, DivmodAndArith) {
  QPoly a = qp({1, 2, 3, 4}), b = qp({1, 1});
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_EQ(qp({1, 1}).pow(3), qp({1, 3, 3, 1}));
  EXPECT_EQ(qp({1, 1}).compose_power(3), qp({1, 0, 0, 1}));
  EXPECT_EQ(qp({0, 0, 3}).derivative(), qp({0, 6}));
  EXPECT_THROW(divmod(a, QPoly(Q)), ZeroDenominator);
}

TEST(Poly, ResultantDiscriminant) {
  // disc(z^2 - 34 z + 1) = 34^2 - 4
  EXPECT_EQ(discriminant(qp({1, -34, 1})), BigRat(1152));
  // res(z-2, z-5) = g(2) = -3
  EXPECT_EQ(resultant(qp({-2, 1}), qp({-5, 1})), BigRat(-3));
  // res(f, g) = lc(f)^deg g prod g(roots f); f = z^2-1, g = z+3: g(1)g(-1) = 4*2
  EXPECT_EQ(resultant(qp({-1, 0, 1}), qp({3, 1})), BigRat(8));
  EXPECT_EQ(resultant(qp({-1, 0, 1}), qp({-1, 1})), BigRat(0));
}

TEST(RatFun, NewExamples) {
  QRatFun a(qp({0, 0, 1}), qp({0, 1}));
  EXPECT_EQ(a.num(), qp({0, 1}));
  EXPECT_EQ(a.den(), qp({1}));
  EXPECT_EQ(a.height(), 1);
  EXPECT_EQ(QRatFun(qp({1}), qp({1})).height(), 0);
  FpRatFun b(fp(3, {1, 1}).pow(3), fp(3, {1, 2}).pow(2));
  EXPECT_EQ(b.height(), 3);
  EXPECT_EQ(gcd(b.num(), b.den()).degree(), 0);
  EXPECT_THROW(QRatFun(qp({1}), QPoly(Q)), ZeroDenominator);
  // den monic
  QRatFun c(qp({1}), qp({2, 4}));
  EXPECT_EQ(c.den().lead(), BigRat(1));
  EXPECT_EQ(c.num(), QPoly::constant(Q, BigRat(1, 4)));
}

TEST(RatFun, ArithmeticAndComposition) {
  QRatFun a(qp({1, 1}), qp({1, -1}));
  QRatFun b(qp({1, -1}), qp({1, 2}));
  EXPECT_EQ(a * b, QRatFun(qp({1, 1}), qp({1, 2})));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(a / a, QRatFun::one(Q));
  EXPECT_EQ(a.compose_inverse().compose_inverse(), a);
  // d/dz (1+z)/(1-z) = 2/(1-z)^2
  EXPECT_EQ(a.derivative(), QRatFun(qp({2}), qp({1, -2, 1})));
}

TEST(Factor, SquarefreeCharP) {
  // (z+1)^3 (z+2) over F_3: (z+1)^3 = z^3 + 1
  FpPoly f = fp(3, {1, 1}).pow(3) * fp(3, {2, 1});
  auto sq = squarefree_decomposition(f);
  ASSERT_EQ(sq.size(), 2u);
  FpPoly rebuilt = FpPoly::one(F3);
  for (auto& s : sq) rebuilt = rebuilt * s.factor.pow(static_cast<std::size_t>(s.multiplicity));
  EXPECT_EQ(rebuilt, f.monic());
}

TEST(Factor, IrreducibleFp) {
  // z^4 - 1 over F_5 splits completely
  auto fs = irreducible_factors(fp(5, {-1, 0, 0, 0, 1}));
  EXPECT_EQ(fs.size(), 4u);
  // z^2 + 1 over F_3 irreducible
  EXPECT_EQ(irreducible_factors(fp(3, {1, 0, 1})).size(), 1u);
  // over F_2: z^4 + z = z (z+1)(z^2+z+1)
  auto f2 = irreducible_factors(fp(2, {0, 1, 0, 0, 1}));
  EXPECT_EQ(f2.size(), 3u);
}

TEST(Factor, IrreducibleQ) {
  auto fs = irreducible_factors(qp({0, 1, -34, 1}));
  ASSERT_EQ(fs.size(), 2u);
  int total = 0;
  for (auto& f : fs) {
    total += f.factor.degree();
    EXPECT_TRUE(f.proven);
  }
  EXPECT_EQ(total, 3);
  auto gs = irreducible_factors(qp({0, 1, -16}));
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[1].factor, QPoly(Q, {BigRat(-1, 16), BigRat(1)}));
}

TEST(Factor, CoprimeBasis) {
  auto basis = coprime_basis<BigRat>({qp({0, 1}).pow(2) * qp({-1, 1}), qp({0, 1}) * qp({1, 1})});
  int total = 0;
  for (auto& b : basis) total += b.degree();
  EXPECT_EQ(total, 3);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) EXPECT_EQ(gcd(basis[i], basis[j]).degree(), 0);
}

TEST(Linalg, Kernel) {
  Matrix<BigRat> m{{BigRat(1), BigRat(2), BigRat(3)}, {BigRat(2), BigRat(4), BigRat(6)}};
  auto v = kernel_vector(m, 3, Q);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ((*v)[0] + 2 * (*v)[1] + 3 * (*v)[2], BigRat(0));
  Matrix<BigRat> id{{BigRat(1), BigRat(0)}, {BigRat(0), BigRat(1)}};
  EXPECT_FALSE(kernel_vector(id, 2, Q).has_value());
}
