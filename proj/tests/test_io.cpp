#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "holocert.hpp"

using namespace holocert;
using io::json;

TEST(OperatorJson, RoundTrip) {
  for (const QDiffOp& L : {op_f2_d(), op_apery(), op_L_r(2), op_g_r(3)}) {
    QDiffOp back = io::op_from_json(io::parse_text(io::op_to_json(L).dump(), "mem"));
    EXPECT_EQ(back.basis, L.basis);
    EXPECT_TRUE(equivalent(back, L)) << L.to_string();
  }
}

TEST(OperatorJson, F2Literal) {
  // z(1-16z) D^2 + (1-16z) D + 4
  const char* text = R"({"basis":"d","coeffs":[{"num":[0,1,-16],"den":[1]},{"num":[1,-16],"den":[1]},{"num":[4],"den":[1]}]})";
  QDiffOp L = io::op_from_json(io::parse_text(text, "mem"));
  EXPECT_EQ(L.order(), 2);
  EXPECT_TRUE(equivalent(L, op_f2_d()));
  EXPECT_TRUE(is_mom(L));
}

TEST(OperatorJson, RationalCoefficientsAndBigInts) {
  const char* text = R"({"basis":"delta","coeffs":[{"num":[1]},{"num":["123456789012345678901234567890"],"den":[2,0,3]}]})";
  QDiffOp L = io::op_from_json(io::parse_text(text, "mem"));
  EXPECT_EQ(L.coeffs[1].den(), QPoly::from_ints(RationalField{}, {2, 0, 3}).monic());
  QDiffOp back = io::op_from_json(io::op_to_json(L));
  EXPECT_TRUE(equivalent(back, L));
}

TEST(OperatorJson, Errors) {
  EXPECT_THROW(io::parse_text("{\"basis\": \"d\", ", "mem"), ParseError);
  try {
    io::parse_text("{\n  \"basis\": ]", "op.json");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::op_from_json(json::parse(R"({"basis":"x","coeffs":[{"num":[1]}]})")), ParseError);
  EXPECT_THROW(io::op_from_json(json::parse(R"({"basis":"d"})")), ParseError);
  EXPECT_THROW(io::op_from_json(json::parse(R"({"basis":"d","coeffs":[{"num":[1],"den":[0]}]})")), ZeroDenominator);
  EXPECT_THROW(io::op_from_json(json::parse(R"({"basis":"d","coeffs":[{"num":["x1"]}]})")), ParseError);
  EXPECT_THROW(io::op_from_json(json::parse(R"({"basis":"d","coeffs":[{"num":[0]},{"num":[1]}]})")), ParseError);
  try {
    io::op_from_json(json::parse(R"({"basis":"d","coeffs":[{"num":[1]},{"num":[1, true]}]})"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("coeffs[1].num[1]"), std::string::npos) << e.what();
  }
}

TEST(CatalogJson, BuiltinsAndOperatorEntry) {
  for (const auto& [name, g] : default_catalog()) {
    SeqGen back = io::seq_from_json(io::seq_to_json(g));
    EXPECT_EQ(back.name, name);
    EXPECT_EQ(gen_terms(back, 12), gen_terms(g, 12)) << name;
  }
  json j = io::seq_to_json(make_operator_seq("f2op", op_f2_d(), {BigRat(1)}));
  SeqGen g = io::seq_from_json(j);
  EXPECT_EQ(gen_terms(g, 30), gen_terms(make_fr(2), 30));
  EXPECT_THROW(io::seq_from_json(json::parse(R"({"name":"x","kind":"nope"})")), ParseError);
  EXPECT_THROW(io::seq_from_json(json::parse(R"({"name":"x","kind":"f_r"})")), ParseError);
}

TEST(CatalogJson, LoadFile) {
  std::string path = testing::TempDir() + "holocert_catalog.json";
  {
    std::ofstream out(path);
    out << R"([{"name":"t2","kind":"apery"},{"name":"h","kind":"operator","initial":["1"],)"
        << R"("operator":{"basis":"delta","coeffs":[{"num":[1,-16]},{"num":[0]},{"num":[0,4]}]}}])";
  }
  auto cat = io::load_catalog(path);
  EXPECT_TRUE(cat.count("f2"));
  EXPECT_EQ(gen_terms(lookup(cat, "t2"), 5), gen_terms(make_apery(), 5));
  // (1-16z) delta^2 + 4z is the f2 operator in delta form
  EXPECT_EQ(gen_terms(lookup(cat, "h"), 20), gen_terms(make_fr(2), 20));
  std::remove(path.c_str());
  EXPECT_THROW(io::load_catalog(path), ParseError);
}

TEST(CertificateJson, RoundTripAndReverify) {
  AssemblyResult r = assemble_theorem1(make_fr(2), op_L_r(2), 3, 400);
  json j = io::cert_to_json(r.best());
  for (const char* key : {"series", "p", "level", "A_num", "A_den", "height", "bound", "bound_kind", "verified_to"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["height"], 12);
  EXPECT_EQ(j["bound_kind"], "L2_bound");
  Certificate back = io::cert_from_json(io::parse_text(j.dump(), "mem"));
  EXPECT_EQ(back.A, r.best().A);
  EXPECT_TRUE(verify_certificate(back, sampler(make_fr(2), 3)));
  json bad = j;
  bad["A_num"][0] = 2;
  EXPECT_FALSE(verify_certificate(io::cert_from_json(bad), sampler(make_fr(2), 3)));
  bad = j;
  bad["bound_kind"] = "huge";
  EXPECT_THROW(io::cert_from_json(bad), ParseError);
  bad = j;
  bad["p"] = 4;
  EXPECT_THROW(io::cert_from_json(bad), BadPrime);
}

TEST(CaseJson, Fields) {
  CaseResult r("x", 3);
  r.add("ok", true, "fine");
  r.orders["T"] = 10;
  json j = io::case_to_json(r);
  EXPECT_EQ(j["case_id"], "x");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["checks"][0]["label"], "ok");
  EXPECT_EQ(j["orders"]["T"], 10);
}
