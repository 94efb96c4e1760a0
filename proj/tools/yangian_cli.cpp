// yangian: normal forms, relation listings, coproducts, Toda and zastava helpers, verification suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "yangian/coproduct.hpp"
#include "yangian/parser.hpp"
#include "yangian/pbw.hpp"
#include "yangian/presentations.hpp"
#include "yangian/suites.hpp"
#include "yangian/toda.hpp"

using namespace yangian;

namespace {

struct Globals {
  std::string type = "A";
  int rank = 1;
  std::string shift, mu1, mu2, mu3;
  int bound = -1, order = -1;
  std::string hbar = "graded";
  uint64_t seed = 1;
  unsigned jobs = 0;
  std::string format = "table";
  std::string symbols;
  bool timing = false;
};

std::set<std::string> symbol_set(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(item);
  return out;
}

int int_of(const std::string& s, const std::string& what) {
  SuiteParams p;
  p.values[what] = s;
  return p.get_int(what, 0);
}

void require_rank1(const Globals& g) {
  if (g.type != "A" || g.rank != 1) fail(Error::Kind::Unsupported, "this command is implemented for sl2 (--type A --rank 1)");
}

// one result line per format; json carries the input next to the output
void emit_value(const Globals& g, const std::string& command, const std::string& input, const std::string& value) {
  if (g.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["input"] = input;
    j["result"] = value;
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "command,input,result\n" << command << ",\"" << input << "\",\"" << value << "\"\n";
  } else {
    std::cout << value << "\n";
  }
}

template <class C>
std::string normal_form_text(const std::string& expr, int m, const std::set<std::string>& symbols) {
  PbwEngine<C> eng(m);
  auto x = parse_expr<C>(expr, symbols);
  return to_string(eng.normal_form(s_to_h(x, Coweight::rank1(m))));
}

int cmd_nf(const Globals& g, const std::string& expr) {
  require_rank1(g);
  int m = g.shift.empty() ? 0 : int_of(g.shift, "shift");
  auto symbols = symbol_set(g.symbols);
  std::string out;
  if (g.hbar == "graded") {
    out = normal_form_text<HPoly>(expr, m, symbols);
  } else if (g.hbar == "one") {
    out = normal_form_text<Rational>(expr, m, symbols);
  } else if (g.hbar == "zero") {
    PbwEngine<HPoly> eng(m);
    auto nf = eng.normal_form(s_to_h(parse_expr<HPoly>(expr, symbols), Coweight::rank1(m)));
    NCPoly<HPoly> classical;
    for (auto& [w, c] : nf.terms()) classical.add_term(w, HPoly(c.at_zero()));
    out = to_string(classical);
  } else {
    fail(Error::Kind::Parse, "--hbar expects graded, one or zero");
  }
  emit_value(g, "nf", expr, out);
  return 0;
}

int cmd_relations(const Globals& g) {
  CartanDatum d(g.type.at(0), g.rank);
  int bound = g.bound < 0 ? 3 : g.bound;
  auto coweight = [&](const std::string& s) {
    SuiteParams p;
    p.values["c"] = s;
    return Coweight(p.get_ints("c", std::vector<int>(g.rank, 0)));
  };
  Presentation pres = Presentation::ymu(d, coweight(g.shift), bound);
  if (!g.mu1.empty() || !g.mu2.empty()) pres = Presentation::ymu1mu2(d, coweight(g.mu1), coweight(g.mu2));
  auto rels = relations_for<HPoly>(pres);
  if (g.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (auto& r : rels) {
      nlohmann::ordered_json e;
      e["family"] = r.family;
      e["indices"] = r.indices;
      e["relation"] = to_string(r.poly);
      j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (g.format == "csv") std::cout << "family,indices,relation\n";
    for (auto& r : rels) {
      std::string idx;
      for (int i : r.indices) idx += (idx.empty() ? "" : " ") + std::to_string(i);
      if (g.format == "csv")
        std::cout << r.family << ",\"" << idx << "\",\"" << to_string(r.poly) << "\"\n";
      else
        std::cout << r.family << " [" << idx << "]  " << to_string(r.poly) << " = 0\n";
    }
  }
  return 0;
}

int cmd_delta(const Globals& g, const std::string& expr) {
  require_rank1(g);
  int k = g.mu1.empty() ? 0 : int_of(g.mu1, "mu1");
  int l = g.mu2.empty() ? 0 : int_of(g.mu2, "mu2");
  auto x = parse_expr<HPoly>(expr, symbol_set(g.symbols));
  x = s_to_h(x, Coweight::rank1(k + l));
  GeneralCoproduct<HPoly> delta(k, l);
  emit_value(g, "delta", expr, to_string(delta.apply(x)));
  return 0;
}

int cmd_toda_hams(const Globals& g, int n, bool sp) {
  auto sys = lax_and_hamiltonians(n, sp ? TodaVariant::Sp : TodaVariant::GL);
  if (g.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["variant"] = sp ? "Sp" : "GL";
    j["monodromy11"] = sys.monodromy(0, 0).str();
    j["hamiltonians"] = nlohmann::ordered_json::array();
    for (auto& h : sys.hamiltonians) j["hamiltonians"].push_back(h.str());
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (g.format == "csv") std::cout << "name,value\n";
  for (size_t i = 0; i < sys.hamiltonians.size(); ++i) {
    std::string name = "q" + std::to_string(i + 1);
    if (g.format == "csv")
      std::cout << name << ",\"" << sys.hamiltonians[i].str() << "\"\n";
    else
      std::cout << name << " = " << sys.hamiltonians[i].str() << "\n";
  }
  return 0;
}

ZPoly zpoly_of(const std::string& text) {
  auto p = parse_mpoly(text, {"z"});
  if (!p.is_scalar() && !p.is_zero()) fail(Error::Kind::Parse, "expected a polynomial in z: " + text);
  MPoly c = p.is_zero() ? MPoly() : p.terms().begin()->second;
  for (uint32_t v : c.variables())
    if (v != zvar()) fail(Error::Kind::Parse, "only the variable z may appear in " + text);
  return to_zpoly(c);
}

int cmd_zastava(const Globals& g, const std::string& op, const std::string& q, const std::string& r, const std::string& q2, const std::string& r2) {
  ZastavaPoint a{zpoly_of(q), zpoly_of(r)};
  std::vector<std::pair<std::string, std::string>> out;
  if (op == "psi") {
    auto m = psi_complete(a);
    out = {{"Q", m.Q.str()}, {"Rp", m.Rp.str()}, {"R", m.R.str()}, {"Qp", m.Qp.str()}, {"det", m.det().str()}};
  } else if (op == "mul") {
    if (q2.empty() || r2.empty()) fail(Error::Kind::Parse, "zastava mul needs --q2 and --r2");
    auto p = zastava_multiply(a, {zpoly_of(q2), zpoly_of(r2)});
    out = {{"Q", p.Q.str()}, {"R", p.R.str()}};
  } else if (op == "inv") {
    auto p = zastava_involution(a);
    out = {{"Q", p.Q.str()}, {"R", p.R.str()}};
  } else {
    fail(Error::Kind::Parse, "zastava expects psi, mul or inv");
  }
  if (g.format == "json") {
    nlohmann::ordered_json j;
    j["op"] = op;
    for (auto& [k, v] : out) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else {
    if (g.format == "csv") std::cout << "name,value\n";
    for (auto& [k, v] : out) std::cout << k << (g.format == "csv" ? "," : " = ") << v << "\n";
  }
  return 0;
}

SuiteParams base_params(const Globals& g, const std::map<std::string, std::string>& extra) {
  SuiteParams p;
  p.seed = g.seed;
  p.jobs = g.jobs;
  p.timing = g.timing;
  auto put = [&](const std::string& k, const std::string& v) {
    if (!v.empty()) p.values[k] = v;
  };
  put("shift", g.shift);
  put("mu1", g.mu1);
  put("mu2", g.mu2);
  put("mu3", g.mu3);
  if (g.bound >= 0) p.values["bound"] = std::to_string(g.bound);
  if (g.order >= 0) p.values["order"] = std::to_string(g.order);
  if (g.type != "A") p.values["type"] = g.type;
  if (g.rank != 1) p.values["rank"] = std::to_string(g.rank);
  for (auto& [k, v] : extra) put(k, v);
  return p;
}

int cmd_verify(const Globals& g, const std::string& suite, const std::map<std::string, std::string>& extra, const std::string& sweep) {
  if (!is_suite(suite)) {
    std::string list;
    for (auto& s : suite_names()) list += " " + s;
    std::cerr << "error: unknown suite '" << suite << "'\nsuites:" << list << "\n";
    return 64;
  }
  Format f = parse_format(g.format);
  if (sweep.empty()) {
    auto rep = run_suite(suite, base_params(g, extra));
    std::cout << emit_report(rep, f);
    return rep.exit_code();
  }
  std::ifstream in(sweep);
  if (!in) fail(Error::Kind::Parse, "cannot open sweep file " + sweep);
  int worst = 0;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
      fail(Error::Kind::Parse, std::string("sweep line: ") + e.what());
    }
    SuiteParams p = base_params(g, extra);
    for (auto& [k, v] : j.items()) {
      std::string s = v.is_string() ? v.get<std::string>() : v.dump();
      if (k == "seed")
        p.seed = std::stoull(s);
      else
        p.values[k] = s;
    }
    auto rep = run_suite(suite, p);
    if (f == Format::Json) {
      std::cout << to_json(rep, -1);
    } else if (f == Format::Csv) {
      std::string csv = to_csv(rep);
      if (header) csv = csv.substr(csv.find('\n') + 1);
      header = true;
      std::cout << csv;
    } else {
      std::cout << to_table(rep) << "\n";
    }
    int code = rep.exit_code();
    if (code == 1 || (code == 2 && worst == 0)) worst = code;
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shifted Yangian and Toda verification engine"};
  app.set_config("--config", "", "flat key=value file; flags override it");
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--type", g.type, "Cartan type")->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
  app.add_option("--rank", g.rank, "Cartan rank")->check(CLI::PositiveNumber);
  app.add_option("--shift", g.shift, "shift coweight (comma separated)");
  app.add_option("--mu1", g.mu1, "first shift");
  app.add_option("--mu2", g.mu2, "second shift");
  app.add_option("--mu3", g.mu3, "third shift");
  app.add_option("--bound", g.bound, "level bound");
  app.add_option("--order", g.order, "order or depth");
  app.add_option("--hbar", g.hbar, "graded, one or zero")->check(CLI::IsMember({"graded", "one", "zero"}));
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--jobs", g.jobs, "worker threads (0: available parallelism)");
  app.add_option("--format", g.format, "json, table or csv")->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--symbols", g.symbols, "extra commuting symbols, comma separated");
  app.add_flag("--timing", g.timing, "record wall-clock milliseconds in reports");

  std::string expr;
  auto* nf = app.add_subcommand("nf", "PBW normal form in Y_m(sl2)");
  nf->add_option("expr", expr)->required();
  app.add_subcommand("relations", "list the defining relations");
  auto* delta = app.add_subcommand("delta", "coproduct Y_{mu1+mu2} -> Y_mu1 (x) Y_mu2");
  delta->add_option("expr", expr)->required();

  auto* toda = app.add_subcommand("toda", "Toda lattice");
  toda->require_subcommand(1);
  int n = 3;
  bool sp = false;
  auto* hams = toda->add_subcommand("hams", "Hamiltonians of the n-site lattice");
  hams->add_option("--n", n)->check(CLI::PositiveNumber);
  hams->add_flag("--sp", sp, "folded Sp(2n) lattice");

  auto* zas = app.add_subcommand("zastava", "zastava points (Q, R) in z");
  std::string zop, q, r, q2, r2;
  zas->add_option("op", zop)->required()->check(CLI::IsMember({"psi", "mul", "inv"}));
  zas->add_option("--q", q)->required();
  zas->add_option("--r", r)->required();
  zas->add_option("--q2", q2);
  zas->add_option("--r2", r2);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, sweep, k, l, vn, count;
  bool vsp = false;
  verify->add_option("suite", suite)->required();
  verify->add_option("--k", k);
  verify->add_option("--l", l);
  verify->add_option("--n", vn);
  verify->add_option("--count", count);
  verify->add_flag("--sp", vsp);
  verify->add_option("--sweep", sweep, "JSONL file, one parameter object per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 64;
  }

  try {
    if (*nf) return cmd_nf(g, expr);
    if (app.got_subcommand("relations")) return cmd_relations(g);
    if (*delta) return cmd_delta(g, expr);
    if (*hams) return cmd_toda_hams(g, n, sp);
    if (*zas) return cmd_zastava(g, zop, q, r, q2, r2);
    if (*verify) {
      std::map<std::string, std::string> extra{{"k", k}, {"l", l}, {"n", vn}, {"count", count}};
      if (vsp) extra["sp"] = "1";
      return cmd_verify(g, suite, extra, sweep);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == Error::Kind::Parse ? 64 : 70;
  }
  return 0;
}
