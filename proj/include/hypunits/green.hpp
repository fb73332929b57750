#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hypunits/cayley.hpp"

namespace hypunits {

using ElemSet = std::vector<Elem>;  // sorted ascending
using Partition = std::vector<ElemSet>;  // classes ordered by least element

struct MaximalSubgroup {
  Elem idempotent;
  ElemSet elements;
};

struct GreenData {
  Partition R, L, J, H;
  // j_above[a][b] is true when J-class b lies weakly above J-class a
  // (the principal ideal of a is contained in that of b).
  std::vector<std::vector<bool>> j_above;
  ElemSet idempotents;
  std::vector<MaximalSubgroup> maximal_subgroups;
  std::vector<bool> regular;  // per J-class
  std::vector<std::size_t> j_class_of;  // element -> index into J

  std::size_t class_index(const Partition& p, Elem x) const;
};

GreenData greens_data(const CayleyTable& s);

// Sandwich entries are structural-group element indices, or -1 for zero.
struct ReesParameters {
  CayleyTable structural_group;
  std::size_t rows = 0;  // |I|, number of R-classes
  std::size_t cols = 0;  // |Lambda|, number of L-classes
  std::vector<std::vector<int>> sandwich;  // cols x rows
  bool with_zero = true;
};

struct FactorGroup { CayleyTable group; };
struct FactorGroupWithZero { CayleyTable group; };
struct FactorNull { std::size_t size; };
struct FactorRees { ReesParameters params; };
struct FactorOther {};

using Recognition =
    std::variant<FactorGroup, FactorGroupWithZero, FactorNull, FactorRees, FactorOther>;

const char* recognition_name(const Recognition& r);

struct PrincipalFactor {
  ElemSet j_class;           // elements of S forming this factor's J-class
  CayleyTable quotient_table;  // J-class elements in order, then the zero (if any)
  Recognition recognition;
};

struct PrincipalSeries {
  std::vector<ElemSet> chain;  // S = S_1 > S_2 > ... > S_m
  std::vector<PrincipalFactor> factors;  // factors[i] belongs to chain[i] \ chain[i+1]
};

enum class TieBreak { LeastFirst, GreatestFirst };

PrincipalSeries principal_series(const CayleyTable& s, TieBreak tie = TieBreak::LeastFirst);

// Rees quotient of the J-class `cls` over the ideal strictly below it;
// without a zero when `cls` is the minimal ideal.
CayleyTable factor_table(const CayleyTable& s, const ElemSet& cls, bool with_zero);

Recognition recognize_factor(const CayleyTable& f);

// Inverse of recognition: rebuilds a table isomorphic to the factor.
CayleyTable rebuild(const Recognition& r);

struct StructureScan {
  bool is_inverse = false;
  ElemSet nilpotents;
  std::optional<Elem> zero;
  bool is_union_of_groups = false;
};

StructureScan structure_scan(const CayleyTable& s);

bool is_group(const CayleyTable& t);

}  // namespace hypunits
