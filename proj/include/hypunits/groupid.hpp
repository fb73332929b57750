#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypunits/cayley.hpp"

namespace hypunits {

struct GroupProfile {
  std::size_t order = 0;
  bool abelian = false;
  std::size_t exponent = 1;
  std::vector<std::size_t> order_multiset;  // sorted
  bool all_subgroups_normal = false;
  bool two_group = false;

  bool abelian_exponent_4_or_6() const { return abelian && (4 % exponent == 0 || 6 % exponent == 0); }
  bool hamiltonian_two_group() const { return !abelian && all_subgroups_normal && two_group; }
  // Groups allowed as ordinary principal factors.
  bool allowed() const { return abelian_exponent_4_or_6() || hamiltonian_two_group(); }
};

// Throws NotAGroup unless g is associative with identity and inverses.
GroupProfile group_predicates(const CayleyTable& g);

enum class NamedList { KCyclic, KGroups };

const std::vector<std::string>& named_list(NamedList list);

std::optional<std::string> identify_named(const CayleyTable& g, NamedList list);

}  // namespace hypunits
