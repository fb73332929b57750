#include "hypunits/raloop.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "hypunits/error.hpp"

namespace hypunits {

namespace {

using Mask = std::uint64_t;

Mask closure(const CayleyTable& l, Mask m) {
  // In a finite loop a nonempty subset closed under the product is a subloop.
  while (true) {
    Mask next = m;
    for (std::size_t x = 0; x < l.order(); ++x) {
      if (!(m >> x & 1)) continue;
      for (std::size_t y = 0; y < l.order(); ++y)
        if (m >> y & 1) next |= Mask{1} << l(x, y);
    }
    if (next == m) return m;
    m = next;
  }
}

ElemSet elements(Mask m) {
  ElemSet out;
  for (Elem x = 0; m; ++x, m >>= 1)
    if (m & 1) out.push_back(x);
  return out;
}

std::size_t element_order(const CayleyTable& l, Elem x) {
  const Elem one = *l.identity();
  Elem p = x;
  std::size_t k = 1;
  while (p != one) {
    p = l(p, x);
    if (++k > l.order()) return 0;
  }
  return k;
}

bool power_of_two(std::size_t n) { return n && std::has_single_bit(n); }

}  // namespace

bool is_moufang(const CayleyTable& l) {
  const auto n = l.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto xy = l(x, y);
      for (std::size_t z = 0; z < n; ++z)
        if (l(l(x, l(y, z)), x) != l(xy, l(z, x))) return false;
    }
  return true;
}

LoopAnalysis loop_predicates(const CayleyTable& l) {
  LoopAnalysis a;
  a.moufang = is_moufang(l);
  a.associative = !l.associativity_witness();
  const auto alt = alternative_check(build_algebra(l));
  a.ra_loop = alt.alternative && !alt.associative;
  for (std::size_t x = 0; x < l.order(); ++x) a.element_orders.push_back(element_order(l, static_cast<Elem>(x)));
  std::sort(a.element_orders.begin(), a.element_orders.end());
  if (a.associative) a.group_case = group_predicates(l);
  return a;
}

std::vector<ElemSet> subloops(const CayleyTable& l) {
  const auto n = l.order();
  if (n > 64) throw Error(ErrorCode::OrderCapExceeded, "subloop enumeration is limited to order 64");
  std::set<Mask> found;
  std::vector<Mask> frontier;
  auto add = [&](Mask m) {
    if (found.insert(m).second) frontier.push_back(m);
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) add(closure(l, Mask{1} << x | Mask{1} << y));
  // Every subloop arises by adjoining one element at a time.
  while (!frontier.empty()) {
    const Mask m = frontier.back();
    frontier.pop_back();
    for (std::size_t x = 0; x < n; ++x)
      if (!(m >> x & 1)) add(closure(l, m | Mask{1} << x));
  }
  std::vector<ElemSet> out;
  for (Mask m : found) out.push_back(elements(m));
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_normal_subloop(const CayleyTable& l, const ElemSet& nset) {
  const auto n = l.order();
  auto left = [&](std::size_t x, const ElemSet& s) {  // x S
    Mask m = 0;
    for (auto y : s) m |= Mask{1} << l(x, y);
    return m;
  };
  auto right = [&](const ElemSet& s, std::size_t x) {  // S x
    Mask m = 0;
    for (auto y : s) m |= Mask{1} << l(y, x);
    return m;
  };
  auto times_right = [&](Mask s, std::size_t y) {  // (S) y
    Mask m = 0;
    for (std::size_t z = 0; z < n; ++z)
      if (s >> z & 1) m |= Mask{1} << l(z, y);
    return m;
  };
  auto times_left = [&](std::size_t y, Mask s) {  // y (S)
    Mask m = 0;
    for (std::size_t z = 0; z < n; ++z)
      if (s >> z & 1) m |= Mask{1} << l(y, z);
    return m;
  };
  for (std::size_t x = 0; x < n; ++x) {
    const Mask xn = left(x, nset), nx = right(nset, x);
    if (xn != nx) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (times_right(nx, y) != right(nset, l(x, y))) return false;
      if (times_left(y, xn) != left(l(y, x), nset)) return false;
    }
  }
  return true;
}

LoopAnalysis analyze_loop(const CayleyTable& l) {
  auto a = loop_predicates(l);
  a.subloops = subloops(l);
  bool all_normal = true;
  for (const auto& s : a.subloops) {
    a.normal_flags.push_back(is_normal_subloop(l, s));
    all_normal = all_normal && a.normal_flags.back();
  }
  const bool two_orders = std::all_of(a.element_orders.begin(), a.element_orders.end(), power_of_two);
  a.hamiltonian_moufang_2loop = a.moufang && !a.associative && all_normal && power_of_two(l.order()) && two_orders;
  return a;
}

LoopClassification classify_raloop(const CayleyTable& l, int unit_height) {
  LoopClassification c;
  c.analysis = analyze_loop(l);
  auto& r = c.report;
  r.theorem_path = TheoremPath::None;
  const auto& a = c.analysis;
  if (!a.ra_loop) {
    r.verdict = PaperVerdict::OutOfTheoremScope;
    r.notes.push_back(a.associative ? "associative: a group, not an RA-loop" : "loop algebra is not alternative");
    return c;
  }
  r.notes.push_back("finite RA-loop: T(L) = L");
  for (std::size_t i = 0; i < a.subloops.size(); ++i)
    if (!a.normal_flags[i]) {
      c.non_normal_witness = a.subloops[i];
      break;
    }
  if (a.hamiltonian_moufang_2loop) {
    r.verdict = PaperVerdict::YesPerPaper;
    r.notes.push_back("hamiltonian Moufang 2-loop, all subloops normal");
    c.unit_check = normalized_unit_search(build_algebra(l), unit_height);
    r.notes.push_back(c.unit_check->unit ? "nontrivial normalized unit found: inconsistent with U1(ZL) = L"
                                         : "no nontrivial normalized unit in " + c.unit_check->search_space);
    return c;
  }
  r.verdict = PaperVerdict::NoPerPaper;
  if (!power_of_two(l.order())) r.notes.push_back("order " + std::to_string(l.order()) + " is not a power of 2");
  for (auto o : a.element_orders)
    if (!power_of_two(o)) {
      r.notes.push_back("element of order " + std::to_string(o));
      break;
    }
  if (c.non_normal_witness) {
    std::string w = "non-normal subloop {";
    for (std::size_t i = 0; i < c.non_normal_witness->size(); ++i)
      w += (i ? "," : "") + l.label((*c.non_normal_witness)[i]);
    r.notes.push_back(w + "}");
  }
  return c;
}

}  // namespace hypunits
