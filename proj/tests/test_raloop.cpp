#include <doctest.h>

#include <algorithm>

#include "hypunits/catalog.hpp"
#include "hypunits/raloop.hpp"

using namespace hypunits;

namespace {

CayleyTable as_loop(const CayleyTable& g) { return CayleyTable(g.order(), g.entries(), TableKind::Loop, g.names()); }

// Brute force: every subset containing the identity and closed under the product.
std::vector<ElemSet> subloops_by_subsets(const CayleyTable& l) {
  const auto n = l.order();
  const Elem one = *l.identity();
  std::vector<ElemSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (!(m >> one & 1)) continue;
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x)
      for (std::size_t y = 0; y < n && closed; ++y)
        if ((m >> x & 1) && (m >> y & 1)) closed = m >> l(x, y) & 1;
    if (!closed) continue;
    ElemSet s;
    for (std::size_t x = 0; x < n; ++x)
      if (m >> x & 1) s.push_back(static_cast<Elem>(x));
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool left_coset_equals_right(const CayleyTable& l, const ElemSet& nset, std::size_t x) {
  ElemSet a, b;
  for (auto y : nset) {
    a.push_back(l(x, y));
    b.push_back(l(y, x));
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST_CASE("Moufang and RA predicates") {
  const auto m = loop_predicates(catalog("M(Q8,2)").table);
  CHECK(m.moufang);
  CHECK(m.ra_loop);
  CHECK_FALSE(m.associative);

  const auto q = loop_predicates(as_loop(catalog("Q8").table));
  CHECK(q.moufang);
  CHECK_FALSE(q.ra_loop);
  CHECK(q.group_case);

  // A Latin square loop of order 5; nonassociative Moufang loops need order >= 12.
  const CayleyTable five(5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}, TableKind::Loop);
  const auto v = validate(five, TableKind::Loop);
  CHECK_FALSE(is_moufang(v));
  CHECK(v.associativity_witness());
}

TEST_CASE("the four Moufang identities agree") {
  for (const auto& e : catalog_entries()) {
    if (e.family != Family::Loop || e.table.order() > 16) continue;
    CAPTURE(e.name);
    const auto& l = e.table;
    const auto n = l.order();
    bool id[4] = {true, true, true, true};
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          id[0] = id[0] && l(z, l(x, l(z, y))) == l(l(l(z, x), z), y);
          id[1] = id[1] && l(x, l(z, l(y, z))) == l(l(l(x, z), y), z);
          id[2] = id[2] && l(l(z, x), l(y, z)) == l(l(z, l(x, y)), z);
          id[3] = id[3] && l(l(z, x), l(y, z)) == l(z, l(l(x, y), z));
        }
    const bool m = is_moufang(l);
    for (bool b : id) CHECK(b == m);
  }
}

TEST_CASE("RA property is invariant under the opposite loop") {
  for (const auto& e : catalog_entries()) {
    if (e.family != Family::Loop || e.table.order() > 16) continue;
    CAPTURE(e.name);
    CHECK(loop_predicates(e.table).ra_loop == loop_predicates(opposite(e.table)).ra_loop);
  }
}

TEST_CASE("subloop enumeration matches subset search") {
  for (const char* n : {"M(Q8,2)", "M(D4,2)"}) {
    CAPTURE(n);
    auto got = subloops(catalog(n).table);
    std::sort(got.begin(), got.end());
    CHECK(got == subloops_by_subsets(catalog(n).table));
  }
  auto c4 = subloops(as_loop(catalog("C4").table));
  std::sort(c4.begin(), c4.end());
  CHECK(c4 == subloops_by_subsets(as_loop(catalog("C4").table)));
}

TEST_CASE("subloop normality") {
  const auto m = analyze_loop(catalog("M(Q8,2)").table);
  CHECK(std::all_of(m.normal_flags.begin(), m.normal_flags.end(), [](bool b) { return b; }));
  CHECK(m.hamiltonian_moufang_2loop);

  const auto c4 = analyze_loop(as_loop(catalog("C4").table));
  CHECK(std::all_of(c4.normal_flags.begin(), c4.normal_flags.end(), [](bool b) { return b; }));

  const auto d = analyze_loop(catalog("M(D4,2)").table);
  CHECK(std::find(d.normal_flags.begin(), d.normal_flags.end(), false) != d.normal_flags.end());
  CHECK_FALSE(d.hamiltonian_moufang_2loop);
}

TEST_CASE("loop verdicts") {
  SUBCASE("M(Q8,2)") {
    const auto c = classify_raloop(catalog("M(Q8,2)").table);
    CHECK(c.report.verdict == PaperVerdict::YesPerPaper);
    REQUIRE(c.unit_check);
    CHECK_FALSE(c.unit_check->unit);
  }
  SUBCASE("M(D4,2) has a non-normal subloop") {
    const auto& l = catalog("M(D4,2)").table;
    const auto c = classify_raloop(l);
    CHECK(c.report.verdict == PaperVerdict::NoPerPaper);
    REQUIRE(c.non_normal_witness);
    // Independent witness check: some left coset differs from the right coset,
    // or an associativity condition with the subloop fails.
    bool coset_differs = false;
    for (std::size_t x = 0; x < l.order(); ++x)
      coset_differs = coset_differs || !left_coset_equals_right(l, *c.non_normal_witness, x);
    CHECK((coset_differs || !is_normal_subloop(l, *c.non_normal_witness)));
  }
  SUBCASE("M(Q8,2) x C3 is not a 2-loop") {
    const auto c = classify_raloop(catalog("M(Q8,2)xC3").table);
    CHECK(c.report.verdict == PaperVerdict::NoPerPaper);
    const auto& o = c.analysis.element_orders;
    CHECK(std::find(o.begin(), o.end(), 3) != o.end());
  }
  SUBCASE("groups and non-alternative loops are out of scope") {
    CHECK(classify_raloop(as_loop(catalog("Q8").table)).report.verdict == PaperVerdict::OutOfTheoremScope);
    CHECK(classify_raloop(catalog("Chein(D4)").table).report.verdict == PaperVerdict::OutOfTheoremScope);
  }
}

TEST_CASE("hyperbolic loops have no Z^2 witness at height 2") {
  const auto a = build_algebra(catalog("M(Q8,2)").table);
  const auto r = refute_search(a, 2, 4);
  CHECK_FALSE(r.witness);
}
