#include <doctest.h>

#include <numeric>
#include <random>

#include "hypunits/catalog.hpp"
#include "hypunits/verdict.hpp"

using namespace hypunits;

namespace {

AlgebraVerdict verdict_of(const std::string& name) { return algebra_verdict(build_algebra(catalog(name).table)); }

std::size_t count_tag(const AlgebraVerdict& v, UnitTag t) {
  std::size_t n = 0;
  for (const auto& s : v.infinite_sources) n += s.tag == t;
  return n;
}

// Oracle: u is a unit of the integral span when some w with integer
// coordinates satisfies u w = w u = 1. Brute force over a small box.
bool has_integral_inverse(const StructureAlgebra& a, const QVec& u, int h) {
  std::vector<long> x(a.dim, -h);
  while (true) {
    QVec w;
    for (long c : x) w.emplace_back(c);
    if (a.mul(u, w) == a.unity && a.mul(w, u) == a.unity) return true;
    std::size_t i = 0;
    while (i < a.dim && x[i] == h) x[i++] = -h;
    if (i == a.dim) return false;
    ++x[i];
  }
}

}  // namespace

TEST_CASE("group algebra verdicts") {
  SUBCASE("C5: one real quadratic field") {
    const auto v = verdict_of("C5");
    CHECK(v.hyperbolic == Hyperbolic::Yes);
    CHECK(v.shape == Shape::Item1);
    REQUIRE(v.infinite_sources.size() == 1);
    CHECK(v.infinite_sources[0].tag == UnitTag::VirtuallyZ);
  }
  SUBCASE("Q8: finite units") {
    const auto v = verdict_of("Q8");
    CHECK(v.hyperbolic == Hyperbolic::Yes);
    CHECK(v.shape == Shape::Item1);
    CHECK(v.infinite_sources.empty());
  }
  SUBCASE("S3: one M2(Q)") {
    const auto v = verdict_of("S3");
    CHECK(v.hyperbolic == Hyperbolic::Yes);
    CHECK(v.shape == Shape::Item2);
    CHECK(count_tag(v, UnitTag::VirtuallyFree) == 1);
  }
  SUBCASE("C7: Z^2 inside a cyclotomic field") {
    const auto v = verdict_of("C7");
    CHECK(v.hyperbolic == Hyperbolic::No);
    CHECK(v.shape == Shape::Item1);  // shape is structural, the verdict is separate
  }
  SUBCASE("C2 x C2 and C6: finite") {
    for (const char* n : {"C2xC2", "C6", "C4", "C3"}) {
      const auto v = verdict_of(n);
      CHECK(v.hyperbolic == Hyperbolic::Yes);
      CHECK(v.infinite_sources.empty());
    }
  }
}

TEST_CASE("semigroup algebra verdicts") {
  SUBCASE("two infinite sources") {
    const auto v = verdict_of("C5>C8");
    CHECK(v.hyperbolic == Hyperbolic::No);
    CHECK(count_tag(v, UnitTag::VirtuallyZ) == 2);
  }
  SUBCASE("central radical") {
    const auto v = verdict_of("N2");
    CHECK(v.hyperbolic == Hyperbolic::Yes);
    CHECK(v.shape == Shape::Item3);
  }
  SUBCASE("triangular blocks") {
    for (const char* n : {"T2", "T2hat", "LZ2"}) {
      CAPTURE(n);
      const auto v = verdict_of(n);
      CHECK(v.hyperbolic == Hyperbolic::Yes);
      CHECK(v.shape == Shape::Item4);
      REQUIRE(v.analysis);
      const auto b = find_triangular_block(*v.analysis);
      REQUIRE(b);
      const auto& a = v.analysis->algebra;
      CHECK(a.mul(b->e, b->e) == b->e);
      CHECK(a.mul(b->f, b->f) == b->f);
      CHECK(a.mul(b->e, b->j) == b->j);
      CHECK(a.mul(b->j, b->f) == b->j);
    }
  }
  SUBCASE("radical of dimension 2") {
    // Null semigroup of order 3: two independent nilpotents.
    std::vector<Elem> e(9, 0);
    const CayleyTable z3(3, e, TableKind::Semigroup);
    const auto v = algebra_verdict(build_algebra(z3));
    CHECK(v.hyperbolic == Hyperbolic::No);
    CHECK(v.shape == Shape::OutsidePaperShapes);
  }
}

TEST_CASE("verdict is invariant under relabel, opposite and adjoining") {
  std::mt19937 rng(7);
  for (const char* n : {"C5", "S3", "N2", "T2", "T2hat", "C5>C8", "Q8", "C2>S3"}) {
    CAPTURE(n);
    const auto& t = catalog(n).table;
    const auto base = algebra_verdict(build_algebra(t));
    std::vector<Elem> perm(t.order());
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (const auto& u : {relabel(t, perm), opposite(t), adjoin_identity(t), adjoin_zero(t)}) {
      const auto v = algebra_verdict(build_algebra(u));
      CHECK(v.hyperbolic == base.hyperbolic);
    }
    CHECK(algebra_verdict(build_algebra(relabel(t, perm))).shape == base.shape);
    CHECK(algebra_verdict(build_algebra(opposite(t))).shape == base.shape);
  }
}

TEST_CASE("Item1 algebras have no nilpotents in a small box") {
  for (const char* n : {"C5", "Q8", "C3", "C2xC2"}) {
    CAPTURE(n);
    const auto a = build_algebra(catalog(n).table);
    const auto v = algebra_verdict(a);
    REQUIRE(v.shape == Shape::Item1);
    CHECK_FALSE(nilpotent_search(a, a.dim > 5 ? 1 : 2));
  }
}

TEST_CASE("integral unit test agrees with an inverse oracle") {
  const auto a = build_algebra(catalog("C5").table);
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-1, 1);
  int units = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<long> x(a.dim);
    for (auto& c : x) c = d(rng);
    QVec u;
    for (long c : x) u.emplace_back(c);
    const bool fast = is_integral_unit(a, x);
    CHECK(fast == has_integral_inverse(a, u, 2));
    units += fast;
  }
  CHECK(units > 0);
}

TEST_CASE("refuter") {
  SUBCASE("C7 has commuting independent units") {
    const auto a = build_algebra(catalog("C7").table);
    const auto r = refute_search(a, 2, 3);
    CHECK(r.exhaustive_box);
    REQUIRE(r.witness);
    const auto& w = *r.witness;
    CHECK(a.mul(w.u, w.v) == a.mul(w.v, w.u));
    CHECK(w.minor > 1e-6);
    // Witnesses are units, not merely vectors of unit determinant.
    auto coords = [](const QVec& q) {
      std::vector<long> c;
      for (const auto& x : q) c.push_back(x.get_num().get_si());
      return c;
    };
    CHECK(is_integral_unit(a, coords(w.u)));
    CHECK(is_integral_unit(a, coords(w.v)));
  }
  SUBCASE("finite unit groups give no witness") {
    for (const char* n : {"C2", "C4", "C6", "Q8"}) {
      CAPTURE(n);
      const auto r = refute_search(build_algebra(catalog(n).table), 2, 3);
      CHECK_FALSE(r.witness);
      CHECK(r.infinite_order_units == 0);
    }
  }
  SUBCASE("C5 has infinite units but rank one") {
    const auto r = refute_search(build_algebra(catalog("C5").table), 2, 3);
    CHECK_FALSE(r.witness);
    CHECK(r.infinite_order_units > 0);
  }
  SUBCASE("two unipotent directions") {
    std::vector<Elem> e(9, 0);
    const CayleyTable z3(3, e, TableKind::Semigroup);
    const auto a = build_algebra(z3);
    const auto r = refute_search(a, 1, 3);
    REQUIRE(r.witness);
    CHECK(r.witness->exact);
  }
  SUBCASE("bounded support is labelled") {
    RefuteLimits lim;
    lim.max_vectors = 1000;
    const auto r = refute_search(build_algebra(catalog("C7").table), 2, 3, lim);
    CHECK_FALSE(r.exhaustive_box);
    CHECK(r.search_space.find("support") != std::string::npos);
  }
}

TEST_CASE("normalized units") {
  SUBCASE("QC5 has nontrivial normalized units") {
    const auto a = build_algebra(catalog("C5").table);
    const auto r = normalized_unit_search(a, 1);
    REQUIRE(r.unit);
    Rational aug = 0;
    for (const auto& x : *r.unit) aug += x;
    CHECK(aug == 1);
  }
  SUBCASE("Z Q8 units are trivial") {
    const auto r = normalized_unit_search(build_algebra(catalog("Q8").table), 1);
    CHECK_FALSE(r.unit);
  }
}
