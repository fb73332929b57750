#include "hypunits/groupid.hpp"

#include <algorithm>
#include <numeric>

#include "hypunits/catalog.hpp"
#include "hypunits/error.hpp"
#include "hypunits/green.hpp"

namespace hypunits {

namespace {

std::vector<std::size_t> element_orders(const CayleyTable& g, Elem e) {
  std::vector<std::size_t> orders(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t k = 1;
    for (std::size_t p = x; p != e; p = g(p, x)) ++k;
    orders[x] = k;
  }
  return orders;
}

bool is_power_of_two(std::size_t v) { return v && !(v & (v - 1)); }

}  // namespace

GroupProfile group_predicates(const CayleyTable& g) {
  if (!is_group(g)) throw Error(ErrorCode::NotAGroup, "table is not a group");
  const auto n = g.order();
  const auto e = *g.identity();
  GroupProfile p;
  p.order = n;
  p.abelian = g.is_commutative();
  const auto orders = element_orders(g, e);
  p.order_multiset = orders;
  std::sort(p.order_multiset.begin(), p.order_multiset.end());
  p.exponent = std::accumulate(orders.begin(), orders.end(), std::size_t{1},
                               [](std::size_t a, std::size_t b) { return std::lcm(a, b); });
  p.two_group = is_power_of_two(n);
  std::vector<Elem> inv(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g(x, y) == e) inv[x] = static_cast<Elem>(y);
  // All subgroups are normal iff every cyclic subgroup is.
  p.all_subgroups_normal = true;
  for (std::size_t x = 0; x < n && p.all_subgroups_normal; ++x) {
    std::vector<bool> in_cyclic(n);
    for (std::size_t q = x;; q = g(q, x)) {
      in_cyclic[q] = true;
      if (q == e) break;
    }
    for (std::size_t h = 0; h < n && p.all_subgroups_normal; ++h)
      if (!in_cyclic[g(g(inv[h], x), h)]) p.all_subgroups_normal = false;
  }
  return p;
}

const std::vector<std::string>& named_list(NamedList list) {
  static const std::vector<std::string> cyclic{"C5", "C8", "C12"};
  static const std::vector<std::string> groups{"S3", "D4", "Q12", "C4:C4"};
  return list == NamedList::KCyclic ? cyclic : groups;
}

std::optional<std::string> identify_named(const CayleyTable& g, NamedList list) {
  const auto profile = group_predicates(g);
  for (const auto& name : named_list(list)) {
    const auto& candidate = catalog(name).table;
    if (candidate.order() != profile.order) continue;
    if (group_predicates(candidate).order_multiset != profile.order_multiset) continue;
    if (isomorphism_test(g, candidate)) return name;
  }
  return std::nullopt;
}

}  // namespace hypunits
