#include <doctest.h>

#include <numeric>
#include <random>

#include "hypunits/catalog.hpp"
#include "hypunits/error.hpp"
#include "hypunits/groupid.hpp"

using namespace hypunits;

TEST_CASE("group predicates on the named examples") {
  const auto c6 = group_predicates(catalog("C6").table);
  CHECK(c6.abelian);
  CHECK(c6.exponent == 6);
  CHECK(c6.allowed());

  const auto q8 = group_predicates(catalog("Q8").table);
  CHECK_FALSE(q8.abelian);
  CHECK(q8.all_subgroups_normal);
  CHECK(q8.two_group);
  CHECK(q8.hamiltonian_two_group());

  const auto c16 = group_predicates(catalog("C16").table);
  CHECK(c16.abelian);
  CHECK(c16.exponent == 16);
  CHECK((4 % 16 != 0 && 6 % 16 != 0));
  CHECK_FALSE(c16.allowed());

  CHECK(group_predicates(catalog("C1").table).allowed());
  CHECK_FALSE(group_predicates(catalog("D4").table).all_subgroups_normal);
}

TEST_CASE("non-groups are rejected") {
  CHECK_THROWS_AS(group_predicates(catalog("M").table), Error);
  CHECK_THROWS_AS(identify_named(catalog("N2").table, NamedList::KCyclic), Error);
}

TEST_CASE("identify named groups") {
  CHECK(identify_named(catalog("C8").table, NamedList::KCyclic) == "C8");
  CHECK(identify_named(catalog("D4").table, NamedList::KGroups) == "D4");
  CHECK(identify_named(catalog("Q8").table, NamedList::KGroups) == std::nullopt);
  CHECK(identify_named(catalog("C10").table, NamedList::KCyclic) == std::nullopt);
  CHECK(identify_named(catalog("C10").table, NamedList::KGroups) == std::nullopt);
  // D4 has five involutions, Q8 one.
  CHECK(group_predicates(catalog("D4").table).order_multiset ==
        std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 4, 4});
  CHECK(group_predicates(catalog("Q8").table).order_multiset ==
        std::vector<std::size_t>{1, 2, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("identification is relabeling-invariant") {
  std::mt19937 rng(5);
  for (const auto& name : {"C5", "C8", "C12", "S3", "D4", "Q12", "C4:C4"}) {
    const auto& t = catalog(name).table;
    std::vector<Elem> perm(t.order());
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto moved = relabel(t, perm);
    CHECK(identify_named(moved, NamedList::KCyclic) == identify_named(t, NamedList::KCyclic));
    CHECK(identify_named(moved, NamedList::KGroups) == identify_named(t, NamedList::KGroups));
  }
}

TEST_CASE("hamiltonian 2-groups are exactly Q8 x C2^k on the catalog") {
  const auto q8 = catalog("Q8").table;
  const auto q8c2 = direct_product(q8, catalog("C2").table);
  for (const auto& e : catalog_entries()) {
    if (e.family != Family::Group) continue;
    CAPTURE(e.name);
    const auto p = group_predicates(e.table);
    const bool structural = isomorphism_test(e.table, q8).has_value() ||
                            isomorphism_test(e.table, q8c2).has_value();
    CHECK(p.hamiltonian_two_group() == structural);
  }
}

TEST_CASE("abelian exponent rule matches the element-order description") {
  for (const auto& e : catalog_entries()) {
    if (e.family != Family::Group) continue;
    CAPTURE(e.name);
    const auto p = group_predicates(e.table);
    const auto& om = p.order_multiset;
    const bool in124 = std::all_of(om.begin(), om.end(), [](auto o) { return o == 1 || o == 2 || o == 4; });
    const bool in1236 = std::all_of(om.begin(), om.end(),
                                    [](auto o) { return o == 1 || o == 2 || o == 3 || o == 6; });
    CHECK(p.abelian_exponent_4_or_6() == (p.abelian && (in124 || in1236)));
    CHECK(p.two_group == std::all_of(om.begin(), om.end(), [](auto o) { return (o & (o - 1)) == 0; }));
  }
}
