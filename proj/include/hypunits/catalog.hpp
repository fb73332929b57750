#pragma once

#include <string>
#include <vector>

#include "hypunits/cayley.hpp"

namespace hypunits {

enum class Family { Group, Semigroup, Loop };

const char* to_string(Family f);

struct NamedCatalogEntry {
  std::string name;
  CayleyTable table;
  Family family;
  std::string description;
};

// Named structures. Q12 is the dicyclic group <a,b | a^6, b^2 = a^3, b^-1 a b = a^-1>
// and C4:C4 is <a,b | a^4, b^4, b^-1 a b = a^-1>.
const NamedCatalogEntry& catalog(const std::string& name);
const std::vector<NamedCatalogEntry>& catalog_entries();
std::vector<std::string> catalog_names();

// Building blocks, exposed for tests and the enumeration suite.
CayleyTable cyclic_group(std::size_t n);
CayleyTable dihedral_group(std::size_t n);   // order 2n
CayleyTable dicyclic_group(std::size_t m);   // order 4m
CayleyTable metacyclic_c4_c4();
CayleyTable chein_loop(const CayleyTable& group);  // M(G, 2), involution g -> g^-1
// M(G, *, g0) with g* = g for central g and sg otherwise, s the unique
// nontrivial commutator (G/Z(G) must be C2 x C2 for the result to be RA);
// g0 = s when u_squared_commutator, else g0 = 1.
CayleyTable ra_loop(const CayleyTable& group, bool u_squared_commutator);

// Rees matrix semigroup with zero over `group`; sandwich[l][i] is a group
// element index or -1 for zero, with `cols` rows (Lambda) and `rows` columns (I).
CayleyTable rees_matrix_semigroup(const CayleyTable& group, std::size_t rows, std::size_t cols,
                                  const std::vector<std::vector<int>>& sandwich);

// Ideal extension where every element of `top` acts as an identity on `bottom`.
CayleyTable chain_join(const CayleyTable& top, const CayleyTable& bottom);

}  // namespace hypunits
