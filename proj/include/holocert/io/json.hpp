#pragma once

// JSON forms of operators, catalog entries, certificates and case results.
// Integers too large for int64 are written as decimal strings; both forms are
// accepted on input.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "holocert/casebook/casebook.hpp"

namespace holocert::io {

using json = nlohmann::json;

inline json int_to_json(const BigInt& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

inline BigInt json_to_int(const json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    BigInt n;
    if (n.set_str(j.get<std::string>(), 10) != 0) throw ParseError(where + ": not an integer: \"" + j.get<std::string>() + "\"");
    return n;
  }
  throw ParseError(where + ": expected an integer");
}

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

inline json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

// ---------------------------------------------------------------------------
// operators

inline json op_to_json(const QDiffOp& L) {
  json j;
  j["basis"] = basis_name(L.basis);
  j["coeffs"] = json::array();
  for (const auto& c : L.coeffs) {
    // scale num and den by one common multiple of all coefficient denominators
    BigInt m = 1;
    for (const auto* poly : {&c.num(), &c.den()})
      for (const auto& x : poly->coeffs()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), x.get_den().get_mpz_t());
    json num = json::array(), den = json::array();
    for (const auto& x : c.num().coeffs()) {
      BigRat y = x * BigRat(m);
      num.push_back(int_to_json(y.get_num()));
    }
    for (const auto& x : c.den().coeffs()) {
      BigRat y = x * BigRat(m);
      den.push_back(int_to_json(y.get_num()));
    }
    j["coeffs"].push_back({{"num", num}, {"den", den}});
  }
  return j;
}

inline QPoly poly_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array of integers");
  std::vector<BigRat> c;
  for (std::size_t i = 0; i < arr.size(); ++i) c.emplace_back(json_to_int(arr[i], where + "[" + std::to_string(i) + "]"));
  return QPoly(RationalField{}, std::move(c));
}

inline QDiffOp op_from_json(const json& j, const std::string& where = "operator") {
  try {
    std::string b = field(j, "basis", where).is_string() ? field(j, "basis", where).get<std::string>() : "";
    Basis basis;
    if (b == "d") basis = Basis::D;
    else if (b == "delta") basis = Basis::Delta;
    else throw ParseError(where + ".basis: expected \"d\" or \"delta\"");
    const json& cs = field(j, "coeffs", where);
    if (!cs.is_array() || cs.empty()) throw ParseError(where + ".coeffs: expected a non-empty array");
    std::vector<QRatFun> coeffs;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::string w = where + ".coeffs[" + std::to_string(i) + "]";
      QPoly num = poly_from_json(field(cs[i], "num", w), w + ".num");
      QPoly den = cs[i].contains("den") ? poly_from_json(cs[i]["den"], w + ".den") : QPoly::one(RationalField{});
      if (den.is_zero()) throw ZeroDenominator(w + ".den: zero denominator");
      coeffs.emplace_back(num, den);
    }
    if (coeffs[0].is_zero()) throw ParseError(where + ".coeffs[0]: leading coefficient is zero");
    return QDiffOp(basis, std::move(coeffs));
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// catalog

inline SeqGen seq_from_json(const json& j, const std::string& where = "series") {
  try {
    std::string name = field(j, "name", where).get<std::string>();
    std::string kind = field(j, "kind", where).get<std::string>();
    int r = j.contains("r") ? j["r"].get<int>() : 0;
    SeqGen g;
    if (kind == "binom_power") g = make_binom_power(r);
    else if (kind == "f_r") g = make_fr(r);
    else if (kind == "apery") g = make_apery();
    else if (kind == "cy26") g = make_cy26();
    else if (kind == "cy210") g = make_cy210();
    else if (kind == "operator") {
      QDiffOp L = op_from_json(field(j, "operator", where), where + ".operator");
      std::vector<BigRat> init;
      const json& ini = field(j, "initial", where);
      if (!ini.is_array()) throw ParseError(where + ".initial: expected an array");
      for (std::size_t i = 0; i < ini.size(); ++i) {
        std::string w = where + ".initial[" + std::to_string(i) + "]";
        if (ini[i].is_string()) init.push_back(parse_rat(ini[i].get<std::string>()));
        else init.emplace_back(json_to_int(ini[i], w));
      }
      g = make_operator_seq(name, L, init);
    } else {
      throw ParseError(where + ".kind: unknown kind \"" + kind + "\"");
    }
    if ((kind == "binom_power" || kind == "f_r") && r < 1) throw ParseError(where + ".r: expected a positive integer");
    g.name = name;
    return g;
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline json seq_to_json(const SeqGen& g) {
  json j{{"name", g.name}, {"kind", kind_name(g.kind)}};
  if (g.kind == SeqKind::BinomPower || g.kind == SeqKind::FrFamily) j["r"] = g.r;
  if (g.kind == SeqKind::Operator) {
    j["operator"] = op_to_json(*g.op);
    json init = json::array();
    for (const auto& q : g.initial) init.push_back(q.get_str());
    j["initial"] = init;
  }
  return j;
}

// Entries from a file holding one object or an array of them; they extend
// (and may override) the built-in catalog.
inline std::map<std::string, SeqGen> load_catalog(const std::string& path) {
  auto cat = default_catalog();
  json j = parse_file(path);
  std::vector<json> items;
  if (j.is_array()) items.assign(j.begin(), j.end());
  else items.push_back(j);
  for (std::size_t i = 0; i < items.size(); ++i) {
    SeqGen g = seq_from_json(items[i], path + "[" + std::to_string(i) + "]");
    cat[g.name] = g;
  }
  return cat;
}

// ---------------------------------------------------------------------------
// certificates

inline json fp_poly_to_json(const FpPoly& a) {
  json arr = json::array();
  for (const auto& c : a.coeffs()) arr.push_back(c.value());
  return arr;
}

inline json cert_to_json(const Certificate& c) {
  json j{{"series", c.series},
         {"p", c.p},
         {"level", c.level},
         {"A_num", fp_poly_to_json(c.A.num())},
         {"A_den", fp_poly_to_json(c.A.den())},
         {"height", c.height},
         {"bound", c.bound},
         {"bound_kind", bound_kind_name(c.bound_kind)},
         {"verified_to", c.verified_to}};
  if (c.lambda_power != 0) j["lambda_power"] = c.lambda_power;
  return j;
}

inline Certificate cert_from_json(const json& j, const std::string& where = "certificate") {
  Certificate c;
  try {
    c.series = field(j, "series", where).get<std::string>();
    c.p = field(j, "p", where).get<std::uint32_t>();
    if (!is_prime(c.p)) throw BadPrime(where + ".p: " + std::to_string(c.p) + " is not prime");
    c.level = field(j, "level", where).get<int>();
    PrimeField F{c.p};
    auto poly = [&](const char* key) {
      std::vector<FpElem> v;
      for (const auto& x : field(j, key, where)) v.push_back(F.from_bigint(json_to_int(x, where + "." + key)));
      return FpPoly(F, std::move(v));
    };
    FpPoly den = poly("A_den");
    if (den.is_zero()) throw ZeroDenominator(where + ".A_den: zero denominator");
    c.A = FpRatFun(poly("A_num"), den);
    c.height = field(j, "height", where).get<int>();
    c.bound = field(j, "bound", where).get<std::int64_t>();
    c.bound_kind = parse_bound_kind(field(j, "bound_kind", where).get<std::string>());
    c.verified_to = field(j, "verified_to", where).get<std::size_t>();
    c.lambda_power = j.contains("lambda_power") ? j["lambda_power"].get<int>() : 0;
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  return c;
}

// ---------------------------------------------------------------------------
// case results

inline json case_to_json(const CaseResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
  json orders = json::object();
  for (const auto& [k, v] : r.orders) orders[k] = v;
  return {{"case_id", r.case_id}, {"p", r.p},        {"excluded", r.excluded}, {"pass", r.excluded || r.all_pass()},
          {"checks", checks},     {"orders", orders}, {"notes", r.notes}};
}

inline json cases_to_json(const std::vector<CaseResult>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(case_to_json(r));
  return arr;
}

}  // namespace holocert::io
