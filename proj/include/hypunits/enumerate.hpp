#pragma once

#include <array>
#include <functional>
#include <vector>

#include "hypunits/cayley.hpp"
#include "hypunits/classify.hpp"

namespace hypunits {

enum class Dedup { Iso, Equivalence };  // equivalence: isomorphism or anti-isomorphism

struct EnumerateOptions {
  Dedup dedup = Dedup::Equivalence;
  bool monoid_only = false;
  bool allow_order_six = false;
};

// Least entry vector over all relabelings (and transposes for Equivalence).
std::vector<Elem> canonical_form(const CayleyTable& t, Dedup dedup);

// Semigroups of order n up to the chosen equivalence, sorted by canonical form.
// Throws CapExceeded outside 1..5 (1..6 with allow_order_six).
std::vector<CayleyTable> enumerate_tables(std::size_t n, const EnumerateOptions& opts = {});

struct CensusRow {
  std::size_t order = 0;
  std::size_t count = 0;
  // histogram[paper][oracle]: paper in {Yes, No, OutOfScope}, oracle in {Yes, No, Indeterminate}
  std::array<std::array<std::size_t, 3>, 3> histogram{};
  double seconds = 0;
};

// Crosschecks every enumerated table; each record is passed to `sink` in order.
CensusRow census(std::size_t n, const EnumerateOptions& opts = {},
                 const std::function<void(const CayleyTable&, const CrosscheckRecord&)>& sink = {});

}  // namespace hypunits
