#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypunits/cayley.hpp"
#include "hypunits/linalg.hpp"
#include "hypunits/poly.hpp"

namespace hypunits {

using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

enum class Provenance { Semigroup, Loop, Quotient, Component };
const char* to_string(Provenance p);

struct StructureAlgebra {
  std::size_t dim = 0;
  std::vector<std::vector<SparseVec>> product;  // product[i][j] = e_i e_j
  QVec unity;
  bool unity_adjoined = false;
  bool associative = true;
  Provenance provenance = Provenance::Semigroup;
  std::vector<std::string> basis_names;
  // Images of the source table's elements in this algebra's coordinates.
  // Preferred candidates when a canonical field generator is chosen.
  std::vector<QVec> named_elements;

  QVec basis(std::size_t i) const;
  QVec mul(const QVec& x, const QVec& y) const;
  QMatrix left(const QVec& x) const;  // matrix of y -> x y
  Rational trace_left(const QVec& x) const;
  QVec power(const QVec& x, unsigned k) const;  // x^0 = unity
  QVec eval(const QPoly& p, const QVec& x, const QVec& one) const;
};

// Dense product table -> algebra. The associative flag is computed from basis
// triples, or assumed when check_associative is false.
StructureAlgebra make_algebra(const std::vector<std::vector<QVec>>& products, QVec unity,
                              Provenance provenance, bool check_associative = true);

StructureAlgebra build_algebra(const CayleyTable& t);

// Minimal polynomial of w inside a unital subalgebra whose unity is `one`.
QPoly minimal_polynomial(const StructureAlgebra& a, const QVec& w, const QVec& one);

struct AlternativeCheck {
  bool alternative = true;
  bool associative = true;
  std::optional<std::array<std::size_t, 3>> witness;
};
AlternativeCheck alternative_check(const StructureAlgebra& a);

struct RadicalSplit {
  std::vector<QVec> radical_basis;  // reduced echelon
  std::size_t radical_dim = 0;
  bool radical_central = true;
  StructureAlgebra semisimple_quotient;
  int nilpotency_index = 1;  // least k with J^k = 0
  bool reduced_confidence = false;  // non-associative input
  // Quotient basis element k is the image of ambient basis element complement[k].
  std::vector<std::size_t> complement;

  QVec embed(const QVec& quotient_elem) const;
  QVec project(const QVec& ambient_elem) const;
};
RadicalSplit radical_split(const StructureAlgebra& a);

// Basis of the center (commutant intersected with the nucleus).
std::vector<QVec> center_basis(const StructureAlgebra& a);

struct CentralDecomposition {
  std::vector<QVec> idempotents;  // in the decomposed algebra's coordinates
  std::vector<StructureAlgebra> components;
  std::vector<std::vector<QVec>> component_bases;  // component basis in ambient coordinates
};
CentralDecomposition central_decomposition(const StructureAlgebra& ss);

enum class ComponentKind {
  Field,
  QuaternionDefinite,
  QuaternionIndefiniteDivision,
  MatrixTwoOverQ,
  MatrixOther,
  OctonionDefinite,
  Other
};
const char* to_string(ComponentKind k);

enum class UnitTag { Finite, VirtuallyZ, VirtuallyFree, FuchsianLike, ContainsZ2, Indeterminate };
const char* to_string(UnitTag t);
bool is_infinite(UnitTag t);  // VirtuallyZ, VirtuallyFree or FuchsianLike

struct UnitClass {
  UnitTag tag = UnitTag::Indeterminate;
  std::string justification;
};

struct ComponentDescriptor {
  std::size_t dim = 0;
  QPoly center_minpoly;
  QVec center_generator;  // component coordinates
  int r1 = 0, r2 = 0;
  std::size_t dim_over_center = 0;  // m^2, or dim/f when that is not a square
  ComponentKind kind = ComponentKind::Other;
  std::optional<std::pair<Rational, Rational>> quaternion_invariants;
  UnitClass unit_class;
  std::string note;
};
ComponentDescriptor component_descriptor(const StructureAlgebra& b);
UnitClass unit_class(const ComponentDescriptor& d);

// Hilbert symbol (a, b)_p for nonzero rationals; p = 0 stands for the real place.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p);

// Exhaustive search for x != 0 with x^2 = 0 and integer coordinates in [-h, h].
std::optional<QVec> nilpotent_search(const StructureAlgebra& b, int height);

// Orthogonal idempotents of a lifting the central primitive idempotents of the
// semisimple quotient, in decomposition order.
std::vector<QVec> lift_idempotents(const StructureAlgebra& a, const RadicalSplit& split,
                                   const CentralDecomposition& cd);

struct AlgebraAnalysis {
  StructureAlgebra algebra;
  AlternativeCheck alt;
  RadicalSplit split;
  CentralDecomposition decomposition;
  std::vector<ComponentDescriptor> descriptors;
};
// Throws NonAssociativeUnsupported or FactorizationOverflow.
AlgebraAnalysis analyze_algebra(const StructureAlgebra& a);

}  // namespace hypunits
