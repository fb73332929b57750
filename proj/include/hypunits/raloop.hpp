#pragma once

#include <optional>
#include <vector>

#include "hypunits/classify.hpp"
#include "hypunits/groupid.hpp"
#include "hypunits/verdict.hpp"

namespace hypunits {

struct LoopAnalysis {
  bool moufang = false;
  bool associative = false;
  bool ra_loop = false;
  std::vector<std::size_t> element_orders;  // sorted; meaningful when moufang
  bool torsion_is_all = true;               // finite inputs
  std::vector<ElemSet> subloops;            // proper and improper, sorted
  std::vector<bool> normal_flags;
  bool hamiltonian_moufang_2loop = false;
  std::optional<GroupProfile> group_case;
};

// Moufang, associativity, RA and element orders; subloops are left empty.
LoopAnalysis loop_predicates(const CayleyTable& l);

bool is_moufang(const CayleyTable& l);

// All subloops, by closing generated sets; throws OrderCapExceeded above 64.
std::vector<ElemSet> subloops(const CayleyTable& l);
bool is_normal_subloop(const CayleyTable& l, const ElemSet& n);

// Full analysis including subloops and normality.
LoopAnalysis analyze_loop(const CayleyTable& l);

struct LoopClassification {
  ClassificationReport report;
  LoopAnalysis analysis;
  std::optional<ElemSet> non_normal_witness;
  std::optional<NormalizedUnitReport> unit_check;  // run for YesPerPaper loops
};

LoopClassification classify_raloop(const CayleyTable& l, int unit_height = 2);

}  // namespace hypunits
