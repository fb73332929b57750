// Command-line front end: validate, analyze, classify, oracle, crosscheck,
// refute, loop, enumerate, catalog.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hypunits/catalog.hpp"
#include "hypunits/classify.hpp"
#include "hypunits/enumerate.hpp"
#include "hypunits/error.hpp"
#include "hypunits/raloop.hpp"
#include "hypunits/report.hpp"
#include "hypunits/verdict.hpp"

using namespace hypunits;

namespace {

constexpr int kOk = 0, kInternal = 1, kInvalid = 2, kIndeterminate = 3;

struct Config {
  std::string format = "human";
  bool deterministic = false;
  bool json() const { return format == "json"; }
};

CayleyTable load(const std::string& input, std::optional<TableKind> kind) {
  if (input.rfind("catalog:", 0) == 0) {
    const auto& t = catalog(input.substr(8)).table;
    return kind ? validate(t, *kind) : t;
  }
  std::ifstream f(input);
  if (!f) throw Error(ErrorCode::MalformedInput, "cannot read '" + input + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return kind ? parse_and_validate(ss.str(), *kind) : parse_and_validate(ss.str());
}

std::string set_text(const CayleyTable& t, const ElemSet& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + t.label(xs[i]);
  return out + "}";
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

void print_classification(const CayleyTable& t, const ClassificationReport& r) {
  std::cout << "verdict: " << to_string(r.verdict) << " (" << to_string(r.theorem_path) << ")\n";
  if (r.k_certificate)
    std::cout << "K: " << r.k_certificate->name << " [" << r.k_certificate->list << "] "
              << set_text(t, r.k_certificate->elements) << "\n";
  if (r.t_type) std::cout << "t_type: " << to_string(*r.t_type) << "\n";
  if (r.lambda_mu)
    std::cout << "lambda = " << r.lambda_mu->lambda << ", mu = " << r.lambda_mu->mu
              << ", lambda + mu = " << r.lambda_mu->sum() << "\n";
  if (!r.factor_certificates.empty()) std::cout << "factors:\n";
  for (const auto& c : r.factor_certificates)
    std::cout << "  " << set_text(t, c.j_class) << " " << c.recognition << (c.identified.empty() ? "" : ": ")
              << c.identified << " [" << c.list << "]\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
}

void print_oracle(const AlgebraVerdict& v, bool shape) {
  std::cout << "hyperbolic: " << to_string(v.hyperbolic) << "\n";
  if (shape) std::cout << "shape: " << to_string(v.shape) << "\n";
  if (v.analysis) {
    const auto& an = *v.analysis;
    std::cout << "algebra: dim " << an.algebra.dim << (an.algebra.unity_adjoined ? " (unity adjoined)" : "")
              << ", radical dim " << an.split.radical_dim
              << (an.split.radical_dim ? (an.split.radical_central ? " (central)" : " (not central)") : "") << "\n";
    std::cout << "components:\n";
    for (std::size_t k = 0; k < an.descriptors.size(); ++k) {
      const auto& d = an.descriptors[k];
      std::cout << "  " << k + 1 << ". dim " << d.dim << " " << to_string(d.kind) << ", center "
                << d.center_minpoly.to_string() << ", signature (" << d.r1 << "," << d.r2 << "), units "
                << to_string(d.unit_class.tag) << "\n";
    }
    if (shape && an.split.radical_dim == 1 && !an.split.radical_central) std::cout << "  + T2(Q) block on the radical\n";
  }
  for (const auto& s : v.infinite_sources)
    std::cout << "infinite source: " << s.source << " " << to_string(s.tag) << " (" << s.justification << ")\n";
  for (const auto& c : v.certificates) std::cout << "certificate: " << c << "\n";
}

int cmd_validate(const Config& cfg, const std::string& input, const std::string& kind) {
  std::optional<TableKind> k;
  if (kind == "semigroup") k = TableKind::Semigroup;
  if (kind == "loop") k = TableKind::Loop;
  const auto t = load(input, k);
  if (cfg.json()) {
    emit(Json{{"valid", true},
              {"kind", to_string(t.kind())},
              {"order", t.order()},
              {"zero", t.zero() ? Json(*t.zero() + 1) : Json(nullptr)},
              {"identity", t.identity() ? Json(*t.identity() + 1) : Json(nullptr)}});
  } else {
    std::cout << "valid " << to_string(t.kind()) << " of order " << t.order();
    if (t.zero()) std::cout << ", zero " << t.label(*t.zero());
    if (t.identity()) std::cout << ", identity " << t.label(*t.identity());
    std::cout << "\n";
  }
  return kOk;
}

int cmd_analyze(const Config& cfg, const std::string& input) {
  const auto t = load(input, TableKind::Semigroup);
  const auto g = greens_data(t);
  const auto ps = principal_series(t);
  if (cfg.json()) {
    emit(to_json(t, g, ps));
    return kOk;
  }
  std::cout << "order " << t.order() << ", " << g.J.size() << " J-classes, " << g.idempotents.size()
            << " idempotents\n";
  std::cout << "principal factors (top to bottom):\n";
  for (const auto& f : ps.factors) std::cout << "  " << set_text(t, f.j_class) << " " << recognition_name(f.recognition) << "\n";
  return kOk;
}

int cmd_classify(const Config& cfg, const std::string& input) {
  const auto t = load(input, std::nullopt);
  if (t.kind() == TableKind::Loop && t.associativity_witness()) {
    const auto c = classify_raloop(t);
    if (cfg.json()) emit(to_json(c));
    else print_classification(t, c.report);
    return kOk;
  }
  const auto s = validate(CayleyTable(t.order(), t.entries(), TableKind::Semigroup, t.names()), TableKind::Semigroup);
  const auto r = classify_semigroup(s);
  if (cfg.json()) emit(to_json(r));
  else print_classification(s, r);
  return kOk;
}

int cmd_oracle(const Config& cfg, const std::string& input, bool shape) {
  const auto t = load(input, std::nullopt);
  const auto v = algebra_verdict(build_algebra(t));
  if (cfg.json()) emit(to_json(v));
  else print_oracle(v, shape);
  return v.hyperbolic == Hyperbolic::Indeterminate ? kIndeterminate : kOk;
}

int cmd_crosscheck(const Config& cfg, const std::string& input, const std::string& ledger) {
  const auto t = load(input, TableKind::Semigroup);
  const auto rec = crosscheck(t, input);
  const auto j = to_json(rec, &t);
  if (!ledger.empty()) {
    std::ofstream out(ledger, std::ios::app);
    out << j.dump() << "\n";
  }
  if (cfg.json()) {
    emit(j);
  } else {
    std::cout << "agreement: " << to_string(rec.agreement) << "\n";
    std::cout << "paper: " << to_string(rec.paper.verdict) << " (" << to_string(rec.paper.theorem_path) << ")\n";
    std::cout << "oracle: " << to_string(rec.oracle.hyperbolic) << " (" << to_string(rec.oracle.shape) << ")\n";
    if (!rec.discrepancy_note.empty()) std::cout << "note: " << rec.discrepancy_note << "\n";
  }
  return rec.oracle.hyperbolic == Hyperbolic::Indeterminate ? kIndeterminate : kOk;
}

int cmd_refute(const Config& cfg, const std::string& input, int height, int bound, double max_vectors) {
  const auto t = load(input, std::nullopt);
  RefuteLimits lim;
  lim.max_vectors = max_vectors;
  const auto r = refute_search(build_algebra(t), height, bound, lim);
  if (cfg.json()) {
    emit(to_json(r));
    return kOk;
  }
  auto vec = [](const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
  };
  std::cout << "searched: " << r.search_space << (r.exhaustive_box ? "" : " (not exhaustive)") << ", "
            << r.vectors_examined << " vectors, " << r.units_found << " units, " << r.infinite_order_units
            << " of infinite order\n";
  if (r.witness)
    std::cout << "Z^2 witness: u = " << vec(r.witness->u) << ", v = " << vec(r.witness->v) << " via "
              << r.witness->coordinates << ", minor " << r.witness->minor << "\n";
  else
    std::cout << "no witness up to height " << height << "\n";
  return kOk;
}

int cmd_loop(const Config& cfg, const std::string& input, bool classify, int unit_height) {
  const auto t = load(input, TableKind::Loop);
  if (classify) {
    const auto c = classify_raloop(t, unit_height);
    if (cfg.json()) {
      emit(to_json(c));
    } else {
      std::cout << "moufang: " << c.analysis.moufang << ", ra_loop: " << c.analysis.ra_loop << "\n";
      print_classification(t, c.report);
    }
    return kOk;
  }
  const auto a = loop_predicates(t);
  if (cfg.json()) {
    emit(Json{{"moufang", a.moufang}, {"associative", a.associative}, {"ra_loop", a.ra_loop},
              {"element_orders", a.element_orders}});
  } else {
    std::cout << "moufang: " << a.moufang << ", associative: " << a.associative << ", ra_loop: " << a.ra_loop << "\n";
  }
  return kOk;
}

int cmd_enumerate(const Config& cfg, std::size_t order, const std::string& up_to, bool monoids, bool classify,
                  const std::string& out_dir, const std::string& ledger, bool allow_six) {
  EnumerateOptions opts;
  opts.dedup = up_to == "iso" ? Dedup::Iso : Dedup::Equivalence;
  opts.monoid_only = monoids;
  opts.allow_order_six = allow_six;
  if (!classify) {
    const auto ts = enumerate_tables(order, opts);
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        std::ofstream f(std::filesystem::path(out_dir) / ("s" + std::to_string(order) + "_" + std::to_string(i + 1) + ".cay"));
        f << serialize_text(ts[i]);
      }
    }
    if (cfg.json()) {
      for (const auto& t : ts) emit(Json::parse(serialize_json(t)));
    } else {
      std::cout << ts.size() << " semigroups of order " << order << " up to " << (up_to == "iso" ? "isomorphism" : "equivalence") << "\n";
    }
    return kOk;
  }
  std::ofstream ledger_file;
  if (!ledger.empty()) ledger_file.open(ledger);
  std::size_t disagree = 0, oracle_only = 0;
  const auto row = census(order, opts, [&](const CayleyTable& t, const CrosscheckRecord& rec) {
    disagree += rec.agreement == Agreement::Disagree;
    oracle_only += rec.agreement == Agreement::OracleOnly;
    // The ledger keeps disagreements and records outside the theorems.
    if (ledger_file && rec.agreement != Agreement::Agree) ledger_file << to_json(rec, &t).dump() << "\n";
    if (cfg.json()) emit(to_json(rec, &t));
  });
  if (cfg.json()) {
    emit(to_json(row, !cfg.deterministic));
  } else {
    std::cout << "order " << row.order << ": " << row.count << " structures, " << disagree << " Disagree, "
              << oracle_only << " OracleOnly\n";
    std::cout << "              Yes   No  Indet\n";
    const char* rows[] = {"YesPerPaper ", "NoPerPaper  ", "OutOfScope  "};
    for (std::size_t p = 0; p < 3; ++p) {
      std::cout << rows[p];
      for (auto c : row.histogram[p]) std::cout << std::setw(5) << c;
      std::cout << "\n";
    }
    if (!cfg.deterministic) std::cout << "seconds: " << row.seconds << "\n";
  }
  return kOk;
}

int cmd_catalog(const Config& cfg, const std::string& action, const std::string& name) {
  if (action == "list") {
    for (const auto& e : catalog_entries()) {
      if (cfg.json())
        emit(Json{{"name", e.name}, {"family", to_string(e.family)}, {"order", e.table.order()}, {"description", e.description}});
      else
        std::cout << e.name << "\t" << to_string(e.family) << "\t" << e.table.order() << "\t" << e.description << "\n";
    }
    return kOk;
  }
  const auto& t = catalog(name).table;
  std::cout << (cfg.json() ? serialize_json(t) + "\n" : serialize_text(t));
  return kOk;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::MalformedInput:
    case ErrorCode::NotAssociative:
    case ErrorCode::NotAQuasigroup:
    case ErrorCode::NoIdentity:
    case ErrorCode::SubsetNotClosed:
    case ErrorCode::UnknownName:
    case ErrorCode::NotAGroup:
    case ErrorCode::CapExceeded:
    case ErrorCode::OrderCapExceeded:
      return kInvalid;
    default:
      return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic property of rational semigroup and RA-loop algebras"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "human or json (one record per line)")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_flag("--deterministic", cfg.deterministic, "omit timings so repeated runs are byte-identical");

  std::string input, kind = "auto", ledger, out_dir, up_to = "equiv", action, name;
  bool shape = false, classify = false, monoids = false, allow_six = false;
  int height = 2, bound = 6, unit_height = 2;
  double max_vectors = 2e6;
  std::size_t order = 0;

  auto* validate_cmd = app.add_subcommand("validate", "parse and validate a table");
  validate_cmd->add_option("input", input, "file or catalog:NAME")->required();
  validate_cmd->add_option("--kind", kind)->check(CLI::IsMember({"auto", "semigroup", "loop"}));

  auto* analyze_cmd = app.add_subcommand("analyze", "Green's relations and the principal series");
  analyze_cmd->add_option("input", input)->required();

  auto* classify_cmd = app.add_subcommand("classify", "combinatorial classification");
  classify_cmd->add_option("input", input)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "algebra decomposition verdict");
  oracle_cmd->add_option("input", input)->required();
  oracle_cmd->add_flag("--shape", shape, "report the structural shape and components");

  auto* cross_cmd = app.add_subcommand("crosscheck", "run both engines and compare");
  cross_cmd->add_option("input", input)->required();
  cross_cmd->add_option("--ledger", ledger, "append the record to this file");

  auto* refute_cmd = app.add_subcommand("refute", "search for commuting independent units");
  refute_cmd->add_option("input", input)->required();
  refute_cmd->add_option("--height", height)->check(CLI::Range(1, 10));
  refute_cmd->add_option("--bound", bound)->check(CLI::Range(1, 50));
  refute_cmd->add_option("--max-vectors", max_vectors);

  auto* loop_cmd = app.add_subcommand("loop", "loop predicates and the RA-loop verdict");
  loop_cmd->add_option("input", input)->required();
  loop_cmd->add_flag("--classify", classify);
  loop_cmd->add_option("--unit-height", unit_height)->check(CLI::Range(0, 4));

  auto* enum_cmd = app.add_subcommand("enumerate", "small semigroups and the census");
  enum_cmd->add_option("--order", order)->required();
  enum_cmd->add_option("--up-to", up_to)->check(CLI::IsMember({"iso", "equiv"}));
  enum_cmd->add_flag("--monoids", monoids);
  enum_cmd->add_flag("--classify", classify, "crosscheck every table and print the census row");
  enum_cmd->add_option("--out", out_dir, "write one .cay file per structure");
  enum_cmd->add_option("--ledger", ledger, "write non-agreeing records here");
  enum_cmd->add_flag("--allow-order-six", allow_six);

  auto* catalog_cmd = app.add_subcommand("catalog", "named structures");
  catalog_cmd->add_option("action", action)->required()->check(CLI::IsMember({"list", "emit"}));
  catalog_cmd->add_option("name", name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(cfg, input, kind);
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, input);
    if (classify_cmd->parsed()) return cmd_classify(cfg, input);
    if (oracle_cmd->parsed()) return cmd_oracle(cfg, input, shape);
    if (cross_cmd->parsed()) return cmd_crosscheck(cfg, input, ledger);
    if (refute_cmd->parsed()) return cmd_refute(cfg, input, height, bound, max_vectors);
    if (loop_cmd->parsed()) return cmd_loop(cfg, input, classify, unit_height);
    if (enum_cmd->parsed()) return cmd_enumerate(cfg, order, up_to, monoids, classify, out_dir, ledger, allow_six);
    if (catalog_cmd->parsed()) {
      if (action == "emit" && name.empty()) throw Error(ErrorCode::UnknownName, "catalog emit needs a NAME");
      return cmd_catalog(cfg, action, name);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
