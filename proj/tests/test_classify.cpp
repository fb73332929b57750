#include <doctest.h>

#include <numeric>
#include <random>

#include "hypunits/catalog.hpp"
#include "hypunits/classify.hpp"

using namespace hypunits;

namespace {

ClassificationReport classify(const std::string& name) { return classify_semigroup(catalog(name).table); }

struct Expect {
  const char* name;
  PaperVerdict verdict;
  TheoremPath path;
  const char* k;  // expected unique K, or ""
};

}  // namespace

TEST_CASE("catalog expectations") {
  using P = PaperVerdict;
  using T = TheoremPath;
  const Expect table[] = {
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
      {"C2>S3", P::YesPerPaper, T::Thm3, "S3"}, {"C2>Q12", P::YesPerPaper, T::Thm3, "Q12"},
      {"M", P::YesPerPaper, T::Thm3, "M"},      {"M12", P::YesPerPaper, T::Thm3, "M12"},
      {"C2>M", P::YesPerPaper, T::Thm3, "M"},   {"C2>M12", P::YesPerPaper, T::Thm3, "M12"},
      {"N2", P::YesPerPaper, T::Thm4, ""},      {"T2", P::YesPerPaper, T::Thm4, ""},
      {"T2prime", P::YesPerPaper, T::Thm4, ""}, {"T2hat", P::YesPerPaper, T::Thm4, ""},
      {"C5>C8", P::NoPerPaper, T::Thm2, ""},
  };
  for (const auto& e : table) {
    CAPTURE(e.name);
    const auto r = classify(e.name);
    CHECK(r.verdict == e.verdict);
    CHECK(r.theorem_path == e.path);
    if (*e.k) {
      REQUIRE(r.k_certificate);
      CHECK(r.k_certificate->name == e.k);
    } else {
      CHECK_FALSE(r.k_certificate);
    }
    CHECK(r.t_type.has_value() == (e.path == T::Thm4 && e.verdict == P::YesPerPaper));
    if (r.verdict == P::YesPerPaper)
      for (const auto& c : r.factor_certificates) CHECK(c.allowed);
  }
}

TEST_CASE("triangular cases and lambda + mu") {
  const auto t2 = classify("T2");
  REQUIRE(t2.t_type);
  CHECK(*t2.t_type == TType::T2);
  REQUIRE(t2.lambda_mu);
  CHECK(t2.lambda_mu->sum() == 0);

  const auto tp = classify("T2prime");
  REQUIRE(tp.t_type);
  CHECK(*tp.t_type == TType::T2Prime);
  REQUIRE(tp.lambda_mu);
  CHECK(tp.lambda_mu->sum() == 0);

  const auto th = classify("T2hat");
  REQUIRE(th.t_type);
  CHECK(*th.t_type == TType::T2Hat);
  REQUIRE(th.lambda_mu);
  CHECK(th.lambda_mu->sum() == 1);

  // The three are pairwise non-isomorphic, even allowing anti-isomorphisms.
  const auto& a = catalog("T2").table;
  const auto& b = catalog("T2hat").table;
  CHECK_FALSE(isomorphism_test(a, b, true));
  CHECK(catalog("T2prime").table.order() == 5);

  const auto n2 = classify("N2");
  REQUIRE(n2.lambda_mu);
  CHECK(n2.lambda_mu->sum() == 0);
}

TEST_CASE("scope and negative branches") {
  SUBCASE("left-zero band lies outside every premise") {
    const auto r = classify("LZ2");
    CHECK(r.verdict == PaperVerdict::OutOfTheoremScope);
    CHECK(r.theorem_path == TheoremPath::None);
    CHECK_FALSE(r.t_type);
  }
  SUBCASE("Rees K that is not an ideal") {
    const auto s = chain_join(catalog("M").table, catalog("C2").table);
    const auto r = classify_semigroup(s);
    CHECK(r.verdict == PaperVerdict::NoPerPaper);
  }
  SUBCASE("Thm4 premise with a forbidden group") {
    const auto s = chain_join(catalog("C7").table, catalog("N2").table);
    const auto r = classify_semigroup(s);
    CHECK(r.theorem_path == TheoremPath::Thm4);
    CHECK(r.verdict == PaperVerdict::NoPerPaper);
  }
  SUBCASE("two K groups") {
    const auto s = chain_join(catalog("S3").table, catalog("D4").table);
    CHECK(classify_semigroup(s).verdict == PaperVerdict::NoPerPaper);
  }
  SUBCASE("two nilpotents") {
    std::vector<Elem> e(9, 0);
    const CayleyTable z3(3, e, TableKind::Semigroup);
    const auto r = classify_semigroup(z3);
    CHECK(r.verdict == PaperVerdict::NoPerPaper);
    CHECK(r.theorem_path == TheoremPath::Thm4);
  }
}

TEST_CASE("invariance under relabeling and the choice of principal series") {
  std::mt19937 rng(11);
  for (const auto& entry : catalog_entries()) {
    if (entry.family == Family::Loop || entry.table.order() > 14) continue;
    CAPTURE(entry.name);
    const auto& t = entry.table;
    const auto base = classify_semigroup(t);
    std::vector<Elem> perm(t.order());
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (const auto& r : {classify_semigroup(relabel(t, perm)), classify_semigroup(t, TieBreak::GreatestFirst)}) {
      CHECK(r.verdict == base.verdict);
      CHECK(r.theorem_path == base.theorem_path);
      CHECK(r.t_type == base.t_type);
      CHECK(r.k_certificate.has_value() == base.k_certificate.has_value());
    }
  }
}

TEST_CASE("adjoining an identity keeps the triangular type") {
  for (const char* n : {"T2", "T2hat", "T2prime"}) {
    CAPTURE(n);
    const auto base = classify(n);
    const auto r = classify_semigroup(adjoin_identity(catalog(n).table));
    CHECK(r.verdict == PaperVerdict::YesPerPaper);
    CHECK(r.t_type == base.t_type);
  }
}

TEST_CASE("crosscheck") {
  for (const auto& entry : catalog_entries()) {
    if (entry.family == Family::Loop) continue;
    CAPTURE(entry.name);
    const auto rec = crosscheck(entry.table, entry.name);
    CHECK(rec.agreement != Agreement::Disagree);
    CHECK(rec.input_id == entry.name);
  }
  const auto c5 = crosscheck(catalog("C5").table);
  CHECK(c5.agreement == Agreement::Agree);
  CHECK(c5.oracle.hyperbolic == Hyperbolic::Yes);
  const auto c7 = crosscheck(catalog("C7").table);
  CHECK(c7.agreement == Agreement::Agree);
  CHECK(c7.oracle.hyperbolic == Hyperbolic::No);
  const auto lz = crosscheck(catalog("LZ2").table);
  CHECK(lz.agreement == Agreement::OracleOnly);
  CHECK(lz.oracle.hyperbolic == Hyperbolic::Yes);
  CHECK(lz.oracle.shape == Shape::Item4);
  // M above an ideal C2: QS = QC2 + QM is hyperbolic, but the Rees K is not
  // an ideal, so the literal reading of the ideal clause answers No.
  const auto bad_k = crosscheck(chain_join(catalog("M").table, catalog("C2").table));
  CHECK(bad_k.oracle.hyperbolic == Hyperbolic::Yes);
  CHECK(bad_k.oracle.shape == Shape::Item2);
  CHECK(bad_k.paper.verdict == PaperVerdict::NoPerPaper);
  CHECK(bad_k.agreement == Agreement::Disagree);
  const auto two_k = crosscheck(chain_join(catalog("S3").table, catalog("D4").table));
  CHECK(two_k.agreement == Agreement::Agree);
}
