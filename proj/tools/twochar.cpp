// twochar: command-line front end for the tworep library.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 bound exceeded.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tworep/burnside.hpp"
#include "tworep/errors.hpp"
#include "tworep/gkchar.hpp"
#include "tworep/io.hpp"
#include "tworep/verify.hpp"

#ifndef TWOCHAR_DATA_DIR
#define TWOCHAR_DATA_DIR "data"
#endif

using namespace tworep;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kInputError = 2, kBoundExceeded = 3;

struct Job {
  std::string data_dir = TWOCHAR_DATA_DIR;
  std::size_t max_order = 64;
  std::string output;
  std::string format = "text";
  bool numeric = false;
  std::uint64_t seed = 1;
  int iters = 0;
};

std::size_t max_order_from_env() {
  const char* env = std::getenv("TWO_CHAR_MAX_ORDER");
  if (!env || !*env) return 64;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end || v < 1) throw InvalidArgument(std::string("TWO_CHAR_MAX_ORDER must be a positive integer, got ") + env);
  return static_cast<std::size_t>(v);
}

// A path, or the stem of a file in the bundled corpus.
std::string resolve(const Job& job, const std::string& arg, const char* sub) {
  if (fs::exists(arg)) return arg;
  fs::path bundled = fs::path(job.data_dir) / sub / (arg + ".json");
  if (fs::exists(bundled)) return bundled.string();
  throw ParseError("no such file: " + arg);
}

GroupPtr load_group(const Job& job, const std::string& arg) {
  return share(io::group_from_json(io::read_json_file(resolve(job, arg, "groups")), job.max_order));
}

void emit(const Job& job, const std::string& text) {
  if (job.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(job.output, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + job.output);
  out << text;
}

std::string cyclic_structure(const std::vector<Value>& factors) {
  std::string s;
  for (Value f : factors) {
    if (f == 1) continue;
    if (!s.empty()) s += " x ";
    s += "Z/" + std::to_string(f);
  }
  return s.empty() ? "1" : s;
}

std::string describe_group(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return g.order() == 1 ? "1" : "Z/" + std::to_string(g.order());
  return "order " + std::to_string(g.order()) + (g.is_abelian() ? ", abelian" : ", nonabelian");
}

std::string elements_text(const Subgroup& p) {
  std::string s = "{";
  for (int i = 0; i < p.order(); ++i) s += (i ? "," : "") + std::to_string(p.element(i));
  return s + "}";
}

std::string label_text(const SubgroupAtlas& atlas, const OrbitLabel& l) {
  return "<class " + std::to_string(l.cls) + ", " + elements_text(atlas.subgroup(l.subgroup)) + ">";
}

std::string numeric_text(std::complex<double> z) {
  char buf[64];
  double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", re, im);
  return buf;
}

template <class C>
std::string value_text(const Job& job, const C& v) {
  return job.numeric ? numeric_text(v.to_complex()) : v.to_string();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// ---------------------------------------------------------------- commands

int cmd_h2(const Job& job, const std::string& file, int level) {
  auto g = load_group(job, file);
  auto schur = schur_classes(g, level);
  std::ostringstream os;
  os << "group: " << g->name() << " (order " << g->order() << ")\n";
  os << "level: " << schur.level() << "\n";
  os << "Schur classes: " << schur.order();
  if (schur.order() > 1) os << ", structure: " << cyclic_structure(schur.classes.invariant_factors);
  os << "\n";
  os << "invariant factors:";
  for (Value f : schur.classes.invariant_factors) os << " " << f;
  os << "\n";
  for (std::size_t i = 0; i < schur.order(); ++i) {
    os << "class " << i << " (order " << schur.element_order(static_cast<int>(i)) << "):";
    for (Value v : schur.representative(static_cast<int>(i)).values()) os << " " << v;
    os << "\n";
  }
  emit(job, os.str());
  return kOk;
}

int cmd_burnside(const Job& job, const std::string& file) {
  auto g = load_group(job, file);
  auto atlas = make_atlas(g);
  auto basis = burnside_basis(*atlas);
  const int n = static_cast<int>(basis.size());
  auto index = [&](const OrbitLabel& l) {
    return static_cast<int>(std::find(basis.begin(), basis.end(), l) - basis.begin());
  };
  std::vector<BurnsideElement> e;
  for (const auto& b : basis) e.push_back(BurnsideElement::basis(atlas, b));
  auto marks = mark_matrix(atlas);
  CycloRat det = determinant(marks.entries);
  auto element_text = [&](const BurnsideElement& u) {
    std::string s;
    for (const auto& [l, c] : u.terms()) {
      if (!s.empty()) s += " + ";
      s += (c == CycloRat::integer(1) ? "" : value_text(job, c) + " ") + "e" + std::to_string(index(l));
    }
    return s.empty() ? std::string("0") : s;
  };
  std::ostringstream os;
  if (job.format == "json") {
    io::Json j;
    j["group"] = g->name();
    j["order"] = g->order();
    j["level"] = atlas->level();
    io::Json jb = io::Json::array();
    for (const auto& b : basis)
      jb.push_back({{"subgroup", atlas->subgroup(b.subgroup).elements()}, {"class", b.cls}});
    j["basis"] = std::move(jb);
    io::Json table = io::Json::array();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        io::Json terms = io::Json::array();
        for (const auto& [l, c] : mul(e[a], e[b]).terms())
          terms.push_back({{"basis", index(l)}, {"coeff", value_text(job, c)}});
        table.push_back({{"left", a}, {"right", b}, {"product", std::move(terms)}});
      }
    j["products"] = std::move(table);
    io::Json rows = io::Json::array();
    for (std::size_t r = 0; r < marks.rows.size(); ++r) {
      io::Json vals = io::Json::array();
      for (const auto& v : marks.entries[r]) vals.push_back(value_text(job, v));
      rows.push_back({{"subgroup", atlas->subgroup(marks.rows[r].subgroup).elements()},
                      {"alpha", marks.rows[r].alpha},
                      {"marks", std::move(vals)}});
    }
    j["marks"] = std::move(rows);
    j["determinant"] = value_text(job, det);
    j["determinant_nonzero"] = !det.is_zero();
    os << j.dump(2) << "\n";
  } else if (job.format == "csv") {
    os << "section,row,column,value\n";
    for (int a = 0; a < n; ++a) os << "basis," << a << ",," << csv_field(label_text(*atlas, basis[a])) << "\n";
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) os << "product," << a << "," << b << "," << csv_field(element_text(mul(e[a], e[b]))) << "\n";
    for (std::size_t r = 0; r < marks.rows.size(); ++r)
      for (int c = 0; c < n; ++c) os << "mark," << r << "," << c << "," << csv_field(value_text(job, marks.entries[r][c])) << "\n";
    os << "determinant,,," << csv_field(value_text(job, det)) << "\n";
  } else {
    os << "group: " << g->name() << " (order " << g->order() << ")\n";
    os << "zeta: primitive root of unity of order " << atlas->level() << "\n";
    os << "basis pairs: " << n << "\n";
    for (int a = 0; a < n; ++a) os << "  e" << a << " = " << label_text(*atlas, basis[a]) << "\n";
    os << "multiplication:\n";
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) os << "  e" << a << " * e" << b << " = " << element_text(mul(e[a], e[b])) << "\n";
    os << "mark matrix: " << marks.rows.size() << "x" << n << "\n";
    for (std::size_t r = 0; r < marks.rows.size(); ++r) {
      os << "  " << elements_text(atlas->subgroup(marks.rows[r].subgroup)) << " alpha(";
      for (std::size_t k = 0; k < marks.rows[r].alpha.size(); ++k) os << (k ? "," : "") << marks.rows[r].alpha[k];
      os << "):";
      for (const auto& v : marks.entries[r]) os << " " << value_text(job, v);
      os << "\n";
    }
    os << "determinant: " << value_text(job, det) << (det.is_zero() ? " (zero)" : " (nonzero)") << "\n";
  }
  emit(job, os.str());
  return kOk;
}

int cmd_char_table(const Job& job, const std::string& file, bool verify) {
  auto g = load_group(job, file);
  auto atlas = make_atlas(g);
  CharTable t = char_table(atlas);
  auto pair_text = [](const std::pair<Element, Element>& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
  };
  SuiteReport check{"three-way", true, {}, {}};
  if (verify) check = verify_three_way(g, SuiteOptions{job.seed, job.iters, false});
  std::ostringstream os;
  if (job.format == "json") {
    io::Json j;
    j["group"] = g->name();
    j["level"] = atlas->level();
    io::Json cols = io::Json::array();
    for (const auto& c : t.columns) cols.push_back({{"subgroup", atlas->subgroup(c.subgroup).elements()}, {"class", c.cls}});
    j["columns"] = std::move(cols);
    io::Json rows = io::Json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      io::Json vals = io::Json::array();
      for (const auto& v : t.entries[r]) vals.push_back(job.numeric ? io::Json(value_text(job, v)) : io::to_json(v));
      const auto& [a, b] = t.rows[r].representative;
      rows.push_back({{"pair", {a, b}}, {"class_size", t.rows[r].orbit.size()}, {"values", std::move(vals)}});
    }
    j["rows"] = std::move(rows);
    if (verify) j["verify"] = {{"seed", job.seed}, {"result", check.pass ? "PASS" : "FAIL"}, {"witness", check.witness}};
    os << j.dump(2) << "\n";
  } else if (job.format == "csv") {
    os << "pair";
    for (const auto& c : t.columns) os << "," << csv_field(label_text(*atlas, c));
    os << "\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      os << csv_field(pair_text(t.rows[r].representative));
      for (const auto& v : t.entries[r]) os << "," << csv_field(value_text(job, v));
      os << "\n";
    }
  } else {
    os << "group: " << g->name() << " (order " << g->order() << ")\n";
    os << "zeta: primitive root of unity of order " << atlas->level() << "\n";
    os << "table: " << t.rows.size() << "x" << t.columns.size() << "\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << "  c" << c << " = " << label_text(*atlas, t.columns[c]) << "\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      os << "  " << pair_text(t.rows[r].representative) << ":";
      for (const auto& v : t.entries[r]) os << " " << value_text(job, v);
      os << "\n";
    }
  }
  if (verify && job.format != "json") {
    std::string line = "verify (seed " + std::to_string(job.seed) + "): " + (check.pass ? "PASS" : "FAIL");
    if (!check.pass) line += ": " + check.witness;
    (job.format == "csv" ? std::cerr : os) << line << "\n";
  }
  emit(job, os.str());
  return check.pass ? kOk : kVerifyFailed;
}

int cmd_verify(const Job& job, const std::string& suite, bool poison) {
  auto corpus = io::load_corpus(job.data_dir, job.max_order);
  SuiteReport r = run_suite(suite, corpus, SuiteOptions{job.seed, job.iters, poison});
  std::ostringstream os;
  os << "suite: " << r.suite << "\n";
  os << "seed: " << job.seed << "\n";
  if (poison) os << "poison: on\n";
  for (const auto& n : r.notes) os << "  " << n << "\n";
  os << (r.pass ? "PASS" : "FAIL: " + r.witness) << "\n";
  emit(job, os.str());
  return r.pass ? kOk : kVerifyFailed;
}

int cmd_crossed(const Job& job, const std::string& file, const std::string& what) {
  CrossedModule k = io::crossed_from_json(io::read_json_file(resolve(job, file, "crossed")), job.max_order);
  std::ostringstream os;
  if (what == "validate") {
    os << "valid crossed module: |H| = " << k.h()->order() << ", |G| = " << k.g()->order() << "\n";
  } else if (what == "pi") {
    os << "pi_1 = " << describe_group(*k.pi1().group) << "\n";
    os << "pi_2 = " << describe_group(*k.pi2().as_group()) << "\n";
  } else {
    auto classes = triple_classes(k);
    os << "|triples| = " << triples_G(k).size() << "\n";
    os << "conjugacy classes: " << classes.size() << "\n";
    for (const auto& c : classes)
      os << "  (" << c.representative.a << "," << c.representative.b << "," << c.representative.h << ") x"
         << c.orbit.size() << "\n";
  }
  emit(job, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite group 2-representations: Schur classes, Burnside rings, 2-character tables"};
  app.require_subcommand(1);
  Job job;
  app.add_option("--data", job.data_dir, "Corpus directory")->capture_default_str();

  std::string file, suite, what = "validate";
  int level = 0;
  bool verify = false, poison = false;

  auto* h2 = app.add_subcommand("h2", "Schur classes H^2(G, C^x) of a group");
  h2->add_option("group", file, "Group JSON file or corpus name")->required();
  h2->add_option("--level", level, "Level of the representative cocycles (multiple of |G|)");
  h2->add_option("-o,--output", job.output);

  auto* burn = app.add_subcommand("burnside", "Burnside ring basis, products and marks");
  burn->add_option("group", file, "Group JSON file or corpus name")->required();
  burn->add_option("--format", job.format)->check(CLI::IsMember({"text", "csv", "json"}));
  burn->add_option("-o,--output", job.output);
  burn->add_flag("--numeric", job.numeric, "Print decimal approximations");

  auto* table = app.add_subcommand("char-table", "2-character table");
  table->add_option("group", file, "Group JSON file or corpus name")->required();
  table->add_option("--format", job.format)->check(CLI::IsMember({"text", "csv", "json"}));
  table->add_option("-o,--output", job.output);
  table->add_flag("--numeric", job.numeric, "Print decimal approximations");
  table->add_flag("--verify", verify, "Run the three-way agreement check on random 2-representations");
  table->add_option("--seed", job.seed);
  table->add_option("--iters", job.iters);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", suite)->required()->check(CLI::IsMember({"shapiro", "oracle", "burnside", "crossed"}));
  ver->add_option("--seed", job.seed);
  ver->add_option("--iters", job.iters);
  ver->add_flag("--poison", poison, "Corrupt one computed entry; the suite must fail");
  ver->add_option("-o,--output", job.output);

  auto* crossed = app.add_subcommand("crossed", "Inspect a crossed module");
  crossed->add_option("file", file, "Crossed module JSON file or corpus name")->required();
  crossed->add_option("what", what)->check(CLI::IsMember({"validate", "pi", "triples"}));
  crossed->add_option("-o,--output", job.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    job.max_order = max_order_from_env();
    if (h2->parsed()) return cmd_h2(job, file, level);
    if (burn->parsed()) return cmd_burnside(job, file);
    if (table->parsed()) return cmd_char_table(job, file, verify);
    if (ver->parsed()) return cmd_verify(job, suite, poison);
    return cmd_crossed(job, file, what);
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
