// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria. argv[1] is the CLI binary (for the
// determinism check).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "hypunits/catalog.hpp"
#include "hypunits/classify.hpp"
#include "hypunits/enumerate.hpp"
#include "hypunits/raloop.hpp"
#include "hypunits/verdict.hpp"
#include "naive_enumerate.hpp"

using namespace hypunits;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  std::vector<std::string> failures;
  std::string summary;
  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int report(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const bool ok = o.failures.empty();
  std::printf("%s criterion %d: %s (%s; %.1fs)\n", ok ? "PASS" : "FAIL", number, title.c_str(), o.summary.c_str(),
              seconds_since(t0));
  for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return ok ? 0 : 1;
}

// Catalog expectations for both engines.
void catalog_expectations(Outcome& o) {
  using P = PaperVerdict;
  using T = TheoremPath;
  struct Row {
    const char* name;
    P verdict;
    T path;
    const char* k;
  };
  const Row rows[] = {
      {"C1", P::YesPerPaper, T::Thm2, ""},      {"C2", P::YesPerPaper, T::Thm2, ""},
      {"C3", P::YesPerPaper, T::Thm2, ""},      {"C4", P::YesPerPaper, T::Thm2, ""},
      {"C6", P::YesPerPaper, T::Thm2, ""},      {"C5", P::YesPerPaper, T::Thm2, "C5"},
      {"C8", P::YesPerPaper, T::Thm2, "C8"},    {"C12", P::YesPerPaper, T::Thm2, "C12"},
      {"C7", P::NoPerPaper, T::Thm2, ""},       {"C9", P::NoPerPaper, T::Thm2, ""},
      {"C10", P::NoPerPaper, T::Thm2, ""},      {"C11", P::NoPerPaper, T::Thm2, ""},
      {"C13", P::NoPerPaper, T::Thm2, ""},      {"C14", P::NoPerPaper, T::Thm2, ""},
      {"C15", P::NoPerPaper, T::Thm2, ""},      {"C16", P::NoPerPaper, T::Thm2, ""},
      {"Q8", P::YesPerPaper, T::Thm2, ""},      {"Q8xC2", P::YesPerPaper, T::Thm2, ""},
      {"S3", P::YesPerPaper, T::Thm3, "S3"},    {"D4", P::YesPerPaper, T::Thm3, "D4"},
      {"Q12", P::YesPerPaper, T::Thm3, "Q12"},  {"C4:C4", P::YesPerPaper, T::Thm3, "C4:C4"},
      {"C2>S3", P::YesPerPaper, T::Thm3, "S3"}, {"C2>D4", P::YesPerPaper, T::Thm3, "D4"},
      {"C2>Q12", P::YesPerPaper, T::Thm3, "Q12"}, {"C2>C4:C4", P::YesPerPaper, T::Thm3, "C4:C4"},
      {"M", P::YesPerPaper, T::Thm3, "M"},      {"M12", P::YesPerPaper, T::Thm3, "M12"},
      {"C2>M", P::YesPerPaper, T::Thm3, "M"},   {"C2>M12", P::YesPerPaper, T::Thm3, "M12"},
      {"N2", P::YesPerPaper, T::Thm4, ""},      {"T2", P::YesPerPaper, T::Thm4, ""},
      {"T2prime", P::YesPerPaper, T::Thm4, ""}, {"T2hat", P::YesPerPaper, T::Thm4, ""},
      {"C5>C8", P::NoPerPaper, T::Thm2, ""},
  };
  double slowest = 0;
  std::string slowest_name;
  for (const auto& r : rows) {
    const std::string n = r.name;
    const auto t0 = Clock::now();
    const auto rec = crosscheck(catalog(n).table, n);
    const double dt = seconds_since(t0);
    if (dt > slowest) slowest = dt, slowest_name = n;
    o.check(dt <= 1.0, n + " took " + std::to_string(dt) + "s");
    o.check(rec.agreement == Agreement::Agree, n + ": engines do not agree (" + rec.discrepancy_note + ")");
    o.check(rec.paper.verdict == r.verdict, n + ": verdict " + to_string(rec.paper.verdict));
    o.check(rec.paper.theorem_path == r.path, n + ": path " + to_string(rec.paper.theorem_path));
    const bool want_yes = r.verdict == P::YesPerPaper;
    o.check((rec.oracle.hyperbolic == Hyperbolic::Yes) == want_yes, n + ": oracle " + to_string(rec.oracle.hyperbolic));
    if (*r.k)
      o.check(rec.paper.k_certificate && rec.paper.k_certificate->name == r.k, n + ": missing K certificate " + r.k);
    else
      o.check(!rec.paper.k_certificate, n + ": unexpected K certificate");
    if (r.path == T::Thm4) {
      const auto& p = rec.paper;
      o.check(p.t_type.has_value() && p.lambda_mu.has_value(), n + ": missing t_type or lambda/mu");
      if (p.lambda_mu) o.check(p.lambda_mu->sum() == 0 || p.lambda_mu->sum() == 1, n + ": lambda + mu outside {0,1}");
    }
  }
  const auto t_of = [](const char* n) { return classify_semigroup(catalog(n).table); };
  const auto t2 = t_of("T2"), tp = t_of("T2prime"), th = t_of("T2hat");
  o.check(t2.t_type == TType::T2 && t2.lambda_mu && t2.lambda_mu->sum() == 0, "T2: t_type or lambda + mu");
  o.check(tp.t_type == TType::T2Prime && tp.lambda_mu && tp.lambda_mu->sum() == 0, "T2': t_type or lambda + mu");
  o.check(th.t_type == TType::T2Hat && th.lambda_mu && th.lambda_mu->sum() == 1, "T2hat: t_type or lambda + mu");

  const auto chain = algebra_verdict(build_algebra(catalog("C5>C8").table));
  std::size_t vz = 0;
  for (const auto& s : chain.infinite_sources) vz += s.tag == UnitTag::VirtuallyZ;
  o.check(vz >= 2, "C5>C8: expected two VirtuallyZ sources, got " + std::to_string(vz));
  o.summary = std::to_string(std::size(rows)) + " inputs, slowest " + slowest_name + " " +
              std::to_string(slowest).substr(0, 5) + "s";
}

void structural_identities(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& entry : catalog_entries()) {
    const auto a = build_algebra(entry.table);
    if (!alternative_check(a).alternative) continue;  // not an alternative algebra: no decomposition
    const auto an = analyze_algebra(a);
    ++checked;
    const auto& n = entry.name;
    std::size_t total = an.split.radical_dim;
    for (const auto& d : an.descriptors) {
      total += d.dim;
      o.check(d.r1 + 2 * d.r2 == static_cast<int>(d.center_minpoly.degree()), n + ": r1 + 2 r2 != deg");
    }
    o.check(total == an.algebra.dim, n + ": dimensions do not add up");
    const auto& ss = an.split.semisimple_quotient;
    QVec sum(ss.dim);
    for (const auto& e : an.decomposition.idempotents) sum = add(sum, e);
    o.check(sum == ss.unity, n + ": central idempotents do not sum to 1");
  }
  auto has_kind = [](const char* name, ComponentKind k, std::size_t dim) {
    const auto an = analyze_algebra(build_algebra(catalog(name).table));
    for (const auto& d : an.descriptors)
      if (d.kind == k && d.dim == dim) return true;
    return false;
  };
  o.check(has_kind("Q8", ComponentKind::QuaternionDefinite, 4), "QQ8: no definite quaternion component");
  o.check(has_kind("S3", ComponentKind::MatrixTwoOverQ, 4), "QS3: no M2(Q) component");
  o.check(has_kind("M", ComponentKind::MatrixTwoOverQ, 4), "Q(M): no M2(Q) component");
  for (const char* n : {"T2", "T2hat"})
    o.check(algebra_verdict(build_algebra(catalog(n).table)).shape == Shape::Item4, std::string(n) + ": shape not Item4");
  o.summary = std::to_string(checked) + " catalog algebras";
}

void enumeration_agreement(Outcome& o) {
  const std::array<std::size_t, 4> naive_expected{1, 4, 18, 0};
  std::size_t disagree = 0, oracle_only = 0, total = 0;
  std::string counts;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto tables = enumerate_tables(n);
    if (n <= 3) {
      const auto naive = naive::semigroups(n, true);
      o.check(naive.size() == naive_expected[n - 1], "naive count at order " + std::to_string(n));
      o.check(tables.size() == naive.size(), "order " + std::to_string(n) + ": " + std::to_string(tables.size()) +
                                                  " enumerated vs " + std::to_string(naive.size()) + " naive");
    }
    const auto row = census(n, {}, [&](const CayleyTable&, const CrosscheckRecord& rec) {
      if (rec.agreement == Agreement::Disagree) {
        ++disagree;
        o.failures.push_back("Disagree: " + rec.input_id + " " + rec.discrepancy_note);
      }
      oracle_only += rec.agreement == Agreement::OracleOnly;
    });
    total += row.count;
    counts += (n > 1 ? "," : "") + std::to_string(row.count);
  }
  o.summary = "counts " + counts + ", " + std::to_string(total) + " records, " + std::to_string(disagree) +
              " Disagree, " + std::to_string(oracle_only) + " OracleOnly";
}

bool has_field_source(const AlgebraVerdict& v) {
  if (!v.analysis) return false;
  for (const auto& d : v.analysis->descriptors)
    if (d.kind == ComponentKind::Field && d.unit_class.tag != UnitTag::Finite) return true;
  return false;
}

void refuter_soundness(Outcome& o) {
  std::size_t no_cases = 0, witnessed = 0, field_cases = 0, yes_cases = 0;
  auto run = [&](const CayleyTable& t, const std::string& id) {
    const auto a = build_algebra(t);
    const auto v = algebra_verdict(a);
    if (v.hyperbolic == Hyperbolic::No) {
      ++no_cases;
      const bool field = has_field_source(v);
      field_cases += field;
      const auto r = refute_search(a, 3, 6);
      witnessed += r.witness.has_value();
      if (field) o.check(r.witness.has_value(), id + ": field-component No without a witness");
    } else if (v.hyperbolic == Hyperbolic::Yes) {
      ++yes_cases;
      const auto r = refute_search(a, 2, 6);
      o.check(!r.witness, id + ": witness found although the oracle says Yes");
    }
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto tables = enumerate_tables(n);
    for (std::size_t i = 0; i < tables.size(); ++i) run(tables[i], "order" + std::to_string(n) + "#" + std::to_string(i + 1));
  }
  run(catalog("C7").table, "C7");  // the field-component case
  o.summary = std::to_string(no_cases) + " No (" + std::to_string(witnessed) + " witnessed, " +
              std::to_string(field_cases) + " field), " + std::to_string(yes_cases) + " Yes";
}

void raloop_suite(Outcome& o) {
  const auto t0 = Clock::now();
  const auto q = classify_raloop(catalog("M(Q8,2)").table, 2);
  o.check(q.analysis.ra_loop, "M(Q8,2): not an RA-loop");
  o.check(q.report.verdict == PaperVerdict::YesPerPaper, "M(Q8,2): verdict");
  o.check(q.unit_check && !q.unit_check->unit, "M(Q8,2): nontrivial normalized unit at height 2");
  const auto d = classify_raloop(catalog("M(D4,2)").table, 2);
  o.check(d.report.verdict == PaperVerdict::NoPerPaper, "M(D4,2): verdict");
  o.check(d.non_normal_witness.has_value(), "M(D4,2): no non-normal subloop witness");
  if (d.non_normal_witness) o.check(!is_normal_subloop(catalog("M(D4,2)").table, *d.non_normal_witness), "M(D4,2): witness is normal");
  const auto c = classify_raloop(catalog("M(Q8,2)xC3").table, 2);
  o.check(c.report.verdict == PaperVerdict::NoPerPaper, "M(Q8,2)xC3: verdict");
  const double dt = seconds_since(t0);
  o.check(dt < 60, "runtime " + std::to_string(dt) + "s");
  o.summary = "M(Q8,2) " + std::string(q.unit_check ? q.unit_check->search_space : "no unit check");
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  while (std::size_t k = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), k);
  status = pclose(p);
  return out;
}

void determinism(Outcome& o, const std::string& cli) {
  o.check(!cli.empty(), "no CLI path given");
  if (cli.empty()) return;
  const std::string cmd = "'" + cli + "' --format json --deterministic enumerate --order 3 --classify";
  int s1 = 0, s2 = 0;
  const auto a = capture(cmd, s1);
  const auto b = capture(cmd, s2);
  o.check(s1 == 0 && s2 == 0, "CLI exit status");
  o.check(!a.empty(), "empty output");
  o.check(a == b, "outputs differ");
  const auto lines = std::count(a.begin(), a.end(), '\n');
  o.summary = std::to_string(a.size()) + " bytes, " + std::to_string(lines) + " lines";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  int failed = 0;
  failed += report(1, "catalog expectations", catalog_expectations);
  failed += report(2, "oracle structural identities", structural_identities);
  failed += report(3, "enumeration agreement up to order 4", enumeration_agreement);
  failed += report(4, "refuter soundness", refuter_soundness);
  failed += report(5, "RA-loop suite", raloop_suite);
  failed += report(6, "deterministic census", [&](Outcome& o) { determinism(o, cli); });
  return failed;
}
