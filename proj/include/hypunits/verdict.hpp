#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypunits/exactalg.hpp"

namespace hypunits {

enum class Hyperbolic { Yes, No, Indeterminate };
const char* to_string(Hyperbolic h);

enum class Shape { Item1, Item2, Item3, Item4, OutsidePaperShapes };
const char* to_string(Shape s);

struct InfiniteSource {
  std::string source;  // "component <k>" or "radical"
  UnitTag tag;
  std::string justification;
};

struct AlgebraVerdict {
  Hyperbolic hyperbolic = Hyperbolic::Indeterminate;
  std::vector<InfiniteSource> infinite_sources;
  Shape shape = Shape::OutsidePaperShapes;
  std::vector<std::string> certificates;
  std::optional<AlgebraAnalysis> analysis;  // absent when the analysis itself failed
};

AlgebraVerdict algebra_verdict(const StructureAlgebra& a);
AlgebraVerdict algebra_verdict(const AlgebraAnalysis& an);

// A T2(Q) block inside an algebra with one-dimensional radical spanned by j:
// orthogonal idempotents e, f with e j = j = j f.
struct TriangularBlock {
  QVec e, f, j;
  bool annihilator_complements = false;
};
std::optional<TriangularBlock> find_triangular_block(const AlgebraAnalysis& an);

struct Z2Witness {
  QVec u, v;
  bool exact = false;  // independence shown on the exact unipotent coordinates
  double minor = 0;    // the 2x2 minor used as certificate
  std::string coordinates;  // which homomorphism coordinates certify independence
};

struct RefuteReport {
  std::optional<Z2Witness> witness;
  std::string search_space;  // e.g. "box [-3,3]^7" or "support <= 3 in [-2,2]^16"
  bool exhaustive_box = true;
  std::size_t vectors_examined = 0;
  std::size_t units_found = 0;
  std::size_t infinite_order_units = 0;
  bool pair_cap_hit = false;
};

struct RefuteLimits {
  double max_vectors = 2e6;
  std::size_t max_pair_units = 300;
  double margin = 1e-6;
};

// Semi-decision search for commuting units u, v of the integral span of the
// basis that generate Z^2. Absence is reported as "no witness up to height".
RefuteReport refute_search(const StructureAlgebra& a, int height, int exp_bound,
                           const RefuteLimits& limits = {});

// Units of augmentation 1 with coordinates in [-height, height] that are not
// basis elements (loop algebras: normalized units outside L).
struct NormalizedUnitReport {
  std::optional<QVec> unit;
  std::string search_space;
  std::size_t vectors_examined = 0;
};
NormalizedUnitReport normalized_unit_search(const StructureAlgebra& a, int height,
                                            double max_vectors = 2e6);

bool is_integral_unit(const StructureAlgebra& a, const std::vector<long>& coords);

}  // namespace hypunits
