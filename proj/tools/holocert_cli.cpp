// holocert: expand, opinfo, certify, casebook, verify.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "holocert.hpp"

using namespace holocert;
using io::json;

namespace {

struct RunConfig {
  std::size_t T = 512;
  std::vector<std::uint32_t> primes;
  bool allow_2 = false;
  std::string catalog;
  std::string format;  // empty: command default
  std::string out;
};

std::vector<std::uint32_t> parse_primes(const std::string& csv) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw ParseError("--primes: not an integer: '" + item + "'");
    }
    if (used != item.size()) throw ParseError("--primes: not an integer: '" + item + "'");
    if (v > 0xffffffffUL || !is_prime(v)) throw BadPrime("--primes: " + item + " is not prime");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw ParseError("--primes: empty list");
  return out;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw ParseError(cfg.out + ": cannot write");
  f << text;
}

std::map<std::string, SeqGen> catalog(const RunConfig& cfg) {
  return cfg.catalog.empty() ? default_catalog() : io::load_catalog(cfg.catalog);
}

std::string fmt(const RunConfig& cfg, const std::string& dflt, std::initializer_list<const char*> allowed) {
  std::string f = cfg.format.empty() ? dflt : cfg.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw ParseError("--format " + f + " is not supported by this command");
}

int cmd_expand(const RunConfig& cfg, const std::string& name) {
  SeqGen g = lookup(catalog(cfg), name);
  auto terms = gen_terms(g, cfg.T);
  std::string f = fmt(cfg, "text", {"text", "json", "csv"});
  std::ostringstream os;
  if (f == "json") {
    json arr = json::array();
    for (const auto& t : terms) arr.push_back(t.get_str());
    os << arr.dump() << "\n";
  } else {
    if (f == "csv") os << "n,a\n";
    for (std::size_t n = 0; n < terms.size(); ++n) os << (f == "csv" ? std::to_string(n) + "," : "") << terms[n].get_str() << "\n";
  }
  emit(cfg, os.str());
  return 0;
}

std::string poly_text(const QPoly& a, const std::string& var) { return a.to_string(var); }

int cmd_opinfo(const RunConfig& cfg, const std::string& path) {
  QDiffOp L = io::op_from_json(io::parse_file(path), path);
  auto rep = singularities(L);
  std::sort(rep.finite_points.begin(), rep.finite_points.end(), [](const auto& a, const auto& b) {
    return a.factor.degree() != b.factor.degree() ? a.factor.degree() < b.factor.degree() : a.factor.to_string() < b.factor.to_string();
  });
  bool mom = is_mom(L);
  std::optional<QPoly> ind;
  try {
    ind = indicial_at_zero(L);
  } catch (const NotSeriesExpandable&) {
  }
  std::uint32_t bound = 1;
  for (auto p : cfg.primes) bound = std::max(bound, p);
  auto good = good_primes(L, bound);

  json j;
  j["order"] = L.order();
  j["fuchsian"] = rep.fuchsian();
  j["mom"] = mom;
  j["indicial"] = ind ? json(poly_text(*ind, "x")) : json(nullptr);
  json exps = json::array();
  if (ind) {
    // rational roots only; MOM operators have the single root 0
    for (const auto& fct : irreducible_factors(*ind)) {
      if (fct.factor.degree() != 1) continue;
      for (QPoly q = *ind; (q % fct.factor).is_zero(); q = q / fct.factor) exps.push_back(BigRat(-fct.factor.coeff(0)).get_str());
    }
  }
  j["exponents"] = exps;
  json sing = json::array();
  for (const auto& s : rep.finite_points)
    sing.push_back({{"factor", s.factor.to_string()}, {"regular", s.regular}, {"proven", s.proven}});
  j["finite_singular_factors"] = sing;
  j["infinity"] = point_kind_name(rep.infinity);
  j["good_primes"] = good;
  json pc = json::array();
  for (auto p : cfg.primes) {
    json row{{"p", p}};
    try {
      row["nilpotent"] = p_curvature(reduce_op_mod_p(L, p)).is_nilpotent;
    } catch (const Error& e) {
      row["nilpotent"] = nullptr;
      row["note"] = e.what();
    }
    row["good"] = std::find(good.begin(), good.end(), p) != good.end();
    pc.push_back(row);
  }
  j["p_curvature"] = pc;

  std::string f = fmt(cfg, "text", {"text", "json"});
  std::ostringstream os;
  if (f == "json") {
    os << j.dump(2) << "\n";
  } else {
    os << "MOM: " << (mom ? "yes" : "no") << "; indicial: " << (ind ? poly_text(*ind, "x") : "undefined")
       << "; finite singular factors: ";
    for (std::size_t i = 0; i < rep.finite_points.size(); ++i) os << (i ? ", " : "") << rep.finite_points[i].factor.to_string();
    os << "\n";
    os << "order: " << L.order() << "; fuchsian: " << (rep.fuchsian() ? "yes" : "no") << "; infinity: " << point_kind_name(rep.infinity)
       << "\n";
    os << "exponents at 0:";
    for (const auto& e : exps) os << " " << e.get<std::string>();
    os << "\ngood primes <= " << bound << ":";
    for (auto p : good) os << " " << p;
    os << "\n";
    for (const auto& row : pc) {
      os << "p=" << row["p"].get<std::uint32_t>() << ": p-curvature ";
      if (row["nilpotent"].is_null()) os << "n/a (" << row["note"].get<std::string>() << ")";
      else os << (row["nilpotent"].get<bool>() ? "nilpotent" : "not nilpotent");
      os << "\n";
    }
  }
  emit(cfg, os.str());
  return 0;
}

int cmd_certify(const RunConfig& cfg, const std::string& name) {
  SeqGen g = lookup(catalog(cfg), name);
  auto L = operator_for(g);
  if (!L) throw UnknownSeries("no annihilating operator known for '" + name + "'");
  fmt(cfg, "json", {"json"});
  std::vector<std::future<Certificate>> jobs;
  for (auto p : cfg.primes)
    jobs.push_back(std::async(std::launch::async, [&, p] { return assemble_theorem1(g, *L, p, cfg.T).best(); }));
  std::vector<Certificate> certs;
  for (auto& j : jobs) certs.push_back(j.get());
  json out;
  if (certs.size() == 1) {
    out = io::cert_to_json(certs[0]);
  } else {
    out = json::array();
    for (const auto& c : certs) out.push_back(io::cert_to_json(c));
    std::cerr << "evidence: " << classify_evidence(certs).verdict << "\n";
  }
  emit(cfg, out.dump(2) + "\n");
  return 0;
}

int cmd_casebook(const RunConfig& cfg, const std::vector<std::string>& ids) {
  CaseOptions o;
  o.T = cfg.T;
  auto rows = batch_report(cfg.primes, ids, o);
  std::string f = fmt(cfg, "csv", {"csv", "json"});
  emit(cfg, f == "json" ? io::cases_to_json(rows).dump(2) + "\n" : to_csv(rows));
  for (const auto& r : rows)
    if (r.excluded) std::cerr << "warning: case " << r.case_id << " excluded at p=" << r.p << "\n";
  return batch_pass(rows) ? 0 : static_cast<int>(ErrorKind::verification);
}

int cmd_verify(const RunConfig& cfg, const std::string& path) {
  json j = io::parse_file(path);
  std::vector<Certificate> certs;
  if (j.is_array())
    for (std::size_t i = 0; i < j.size(); ++i) certs.push_back(io::cert_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  else
    certs.push_back(io::cert_from_json(j, path));
  auto cat = catalog(cfg);
  bool all = true;
  std::ostringstream os;
  for (const auto& c : certs) {
    bool ok = verify_certificate(c, sampler(lookup(cat, c.series), c.p));
    all = all && ok;
    os << c.series << " p=" << c.p << " level=" << c.level << " height=" << c.height << ": " << (ok ? "pass" : "fail") << "\n";
  }
  emit(cfg, os.str());
  return all ? 0 : static_cast<int>(ErrorKind::verification);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holocert: holonomic series modulo primes and their algebraicity certificates"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string primes_csv;
  app.add_option("--T", cfg.T, "truncation order (>= 64)")->check(CLI::Range(std::size_t{64}, std::size_t{1} << 24));
  app.add_option("-p,--primes", primes_csv, "comma-separated primes (default 3,5,7,11,13)");
  app.add_flag("--allow-2", cfg.allow_2, "add 2 to the default prime set");
  app.add_option("--catalog", cfg.catalog, "extra catalog entries (JSON)");
  app.add_option("--format", cfg.format, "json | csv (text where supported)");
  app.add_option("--out", cfg.out, "write the report to this file");
  app.fallthrough();

  std::string name, path;
  std::vector<std::string> ids;
  auto* expand = app.add_subcommand("expand", "print exact coefficients of a catalog series");
  expand->add_option("name", name)->required();
  auto* opinfo = app.add_subcommand("opinfo", "analyse an operator file");
  opinfo->add_option("file", path)->required();
  auto* certify = app.add_subcommand("certify", "build a certificate per prime");
  certify->add_option("series", name)->required();
  auto* casebook = app.add_subcommand("casebook", "run worked cases (ids or 'all')");
  casebook->add_option("ids", ids)->required();
  auto* verify = app.add_subcommand("verify", "re-verify a certificate file");
  verify->add_option("file", path)->required();

  // --T is allowed below 64 only for expand (a display convenience)
  for (auto* sub : {expand, opinfo, certify, casebook, verify}) sub->fallthrough();
  expand->add_option("--T", cfg.T, "number of terms")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ErrorKind::input);
  }

  try {
    if (primes_csv.empty()) {
      cfg.primes = {3, 5, 7, 11, 13};
      if (cfg.allow_2) cfg.primes.insert(cfg.primes.begin(), 2);
    } else {
      cfg.primes = parse_primes(primes_csv);
    }
    if (*expand) return cmd_expand(cfg, name);
    if (*opinfo) return cmd_opinfo(cfg, path);
    if (*certify) return cmd_certify(cfg, name);
    if (*casebook) return cmd_casebook(cfg, ids);
    if (*verify) return cmd_verify(cfg, path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  }
  return 0;
}
