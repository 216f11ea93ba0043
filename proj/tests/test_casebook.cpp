#include <gtest/gtest.h>

#include "holocert/casebook/casebook.hpp"

using namespace holocert;

namespace {

// Oracle: cy210 and cy26 terms from a Pascal triangle of big integers.
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
  static Pascal P(130);
  return P;
}

BigInt oracle_210(std::size_t j) {
  BigInt s = 0;
  for (std::size_t k = 0; k <= 2 * j; ++k) {
    BigInt c = pascal()(2 * j, k);
    BigInt c4 = c * c * c * c;
    s += (k % 2) ? BigInt(-c4) : c4;
  }
  return pascal()(2 * j, j) * s;
}

BigInt oracle_26(std::size_t j) {
  BigInt s = 0;
  for (std::size_t k = 0; k <= j; ++k) s += pascal()(j, k) * pascal()(j, k) * pascal()(j + k, k) * pascal()(2 * k, j);
  return pascal()(2 * j, j) * s;
}

long mod(const BigInt& a, long p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  return r.get_si();
}

const Check* find(const CaseResult& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.label.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST(Case210, OracleCongruence) {
  for (long p : {3L, 5L, 7L}) {
    for (std::size_t j = 0; j * p <= 60; ++j) {
      EXPECT_EQ(mod(oracle_210(j * static_cast<std::size_t>(p)), p), mod(oracle_210(j), p)) << "p=" << p << " j=" << j;
      EXPECT_EQ(detail::cy210_mod_p(j, static_cast<std::uint32_t>(p)).value(), mod(oracle_210(j), p));
    }
  }
  for (std::size_t j = 0; j < 15; ++j) EXPECT_EQ(term(make_cy210(), j), BigRat(oracle_210(j)));
}

TEST(Case210, Examples) {
  CaseResult r3 = case_210(3, 20);
  EXPECT_TRUE(r3.all_pass());
  EXPECT_EQ(r3.checks.size(), 3u);
  EXPECT_TRUE(case_210(5, 10).all_pass());
  EXPECT_THROW(case_210(2, 10), BadPrime);
}

TEST(Case26, OracleAndExamples) {
  for (std::size_t j = 0; j < 20; ++j) EXPECT_EQ(term(make_cy26(), j), BigRat(oracle_26(j)));
  for (std::size_t j = 0; j * 3 <= 60; ++j) EXPECT_EQ(detail::cy26_mod_p(j * 3, 3).value(), mod(oracle_26(j * 3), 3));
  EXPECT_TRUE(case_26(3, 15).all_pass());
  EXPECT_TRUE(case_26(5, 8).all_pass());
  EXPECT_TRUE(case_26(2, 8).all_pass());
  EXPECT_EQ(mod(oracle_26(0), 7), 1);
}

TEST(Case2F1, HeightsAtThree) {
  CaseResult r = case_2f1(3, 2, 300);
  EXPECT_TRUE(r.all_pass());
  std::vector<std::string> expect{"height 3, expected 3", "height 12, expected 12", "height 39, expected 39"};
  std::vector<std::string> got;
  for (const auto& c : r.checks)
    if (c.label.rfind("(ix) height", 0) == 0) got.push_back(c.detail);
  EXPECT_EQ(got, expect);
}

TEST(Case2F1, SeparableAtFive) {
  CaseResult r = case_2f1(5, 1, 200);
  const Check* c = find(r, "(vii)");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->pass);
  EXPECT_TRUE(r.all_pass());
}

TEST(Case2F1, SevenToFiveHundred) {
  CaseResult r = case_2f1(7, 2, 500);
  const Check* c = find(r, "(v) ");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->pass);
  EXPECT_TRUE(r.all_pass());
  EXPECT_THROW(case_2f1(2, 1, 100), BadPrime);
}

TEST(Case2F1, HeightCapSkips) {
  CaseResult r = case_2f1(11, 2, 300);
  EXPECT_TRUE(r.all_pass());
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_NE(r.notes[0].find("B_2"), std::string::npos);
}

TEST(Ingredients, AtFive) {
  CaseResult r = case_independence_ingredients(5, 300);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.label << ": " << c.detail;
  const Check* b = find(r, "f2 = B g2");
  ASSERT_NE(b, nullptr);
  EXPECT_NE(b->detail.find("height 2"), std::string::npos);
}

TEST(Batch, RowsAndExclusion) {
  CaseOptions o;
  o.jmax_210 = 10;
  o.jmax_26 = 10;
  o.lucas_M = 300;
  auto rows = batch_report({3, 5, 7}, {"210", "26", "apery"}, o);
  EXPECT_EQ(rows.size(), 9u);
  EXPECT_TRUE(batch_pass(rows));
  EXPECT_TRUE(batch_report({3}, {}, o).empty());
  auto ex = batch_report({2}, {"210"}, o);
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_TRUE(ex[0].excluded);
  EXPECT_TRUE(batch_pass(ex));
  EXPECT_NE(to_csv(ex).find("210,2,excluded,excluded"), std::string::npos);
  EXPECT_THROW(batch_report({3}, {"nosuch"}, o), UnknownCase);
}

TEST(Batch, CsvQuoting) {
  CaseResult r{"x", 3};
  r.add("a, b", true, "say \"hi\"");
  EXPECT_EQ(to_csv({r}), "case_id,p,check_label,pass,detail\nx,3,\"a, b\",true,\"say \"\"hi\"\"\"\n");
}
