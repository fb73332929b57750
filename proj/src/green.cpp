#include "hypunits/green.hpp"

#include <algorithm>
#include <bitset>
#include <cassert>
#include <map>
#include <numeric>

#include "hypunits/catalog.hpp"
#include "hypunits/error.hpp"

namespace hypunits {

namespace {

using Bits = std::bitset<kMaxOrder>;

Partition partition_by(std::size_t n, const std::vector<Bits>& keys) {
  Partition out;
  std::vector<bool> done(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    ElemSet cls;
    for (std::size_t y = x; y < n; ++y)
      if (!done[y] && keys[y] == keys[x]) {
        cls.push_back(static_cast<Elem>(y));
        done[y] = true;
      }
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace

std::size_t GreenData::class_index(const Partition& p, Elem x) const {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (std::binary_search(p[k].begin(), p[k].end(), x)) return k;
  assert(false && "element not in partition");
  return p.size();
}

GreenData greens_data(const CayleyTable& s) {
  const auto n = s.order();
  std::vector<Bits> right(n), left(n), two(n);
  for (std::size_t x = 0; x < n; ++x) {
    right[x].set(x);
    left[x].set(x);
    for (std::size_t y = 0; y < n; ++y) {
      right[x].set(s(x, y));
      left[x].set(s(y, x));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    two[x] = right[x] | left[x];
    for (std::size_t y = 0; y < n; ++y)
      if (right[x].test(y))
        for (std::size_t z = 0; z < n; ++z) two[x].set(s(z, y));
  }
  GreenData g;
  g.R = partition_by(n, right);
  g.L = partition_by(n, left);
  g.J = partition_by(n, two);
  {
    std::vector<bool> done(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (done[x]) continue;
      ElemSet cls;
      for (std::size_t y = x; y < n; ++y)
        if (!done[y] && right[y] == right[x] && left[y] == left[x]) {
          cls.push_back(static_cast<Elem>(y));
          done[y] = true;
        }
      g.H.push_back(std::move(cls));
    }
  }
  const auto nj = g.J.size();
  g.j_class_of.resize(n);
  for (std::size_t k = 0; k < nj; ++k)
    for (auto x : g.J[k]) g.j_class_of[x] = k;
  g.j_above.assign(nj, std::vector<bool>(nj));
  for (std::size_t a = 0; a < nj; ++a)
    for (std::size_t b = 0; b < nj; ++b)
      g.j_above[a][b] = two[g.J[b].front()].test(g.J[a].front());
  for (std::size_t x = 0; x < n; ++x)
    if (s.is_idempotent(x)) g.idempotents.push_back(static_cast<Elem>(x));
  for (auto e : g.idempotents) {
    const auto& h = g.H[g.class_index(g.H, e)];
    g.maximal_subgroups.push_back({e, h});
  }
  g.regular.assign(nj, false);
  for (auto e : g.idempotents) g.regular[g.j_class_of[e]] = true;
  return g;
}

const char* recognition_name(const Recognition& r) {
  return std::visit(
      [](const auto& v) -> const char* {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FactorGroup>) return "Group";
        else if constexpr (std::is_same_v<T, FactorGroupWithZero>) return "GroupWithZero";
        else if constexpr (std::is_same_v<T, FactorNull>) return "Null";
        else if constexpr (std::is_same_v<T, FactorRees>) return "ReesMatrix";
        else return "Other";
      },
      r);
}

CayleyTable factor_table(const CayleyTable& s, const ElemSet& cls, bool with_zero) {
  const auto k = cls.size();
  const auto m = k + (with_zero ? 1 : 0);
  std::vector<int> pos(s.order(), -1);
  for (std::size_t i = 0; i < k; ++i) pos[cls[i]] = static_cast<int>(i);
  std::vector<Elem> entries(m * m, static_cast<Elem>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const auto p = pos[s(cls[a], cls[b])];
      if (p >= 0) entries[a * m + b] = static_cast<Elem>(p);
      else if (!with_zero)
        throw Error(ErrorCode::NotAFactor, "minimal ideal is not closed");
    }
  std::vector<std::string> names;
  for (auto x : cls) names.push_back(s.label(x));
  if (with_zero) {
    std::string z = "0";
    while (std::find(names.begin(), names.end(), z) != names.end()) z += "'";
    names.push_back(z);
  }
  return CayleyTable(m, std::move(entries), TableKind::Semigroup, std::move(names));
}

PrincipalSeries principal_series(const CayleyTable& s, TieBreak tie) {
  const auto g = greens_data(s);
  const auto nj = g.J.size();
  std::vector<bool> removed(nj);
  ElemSet current(s.order());
  std::iota(current.begin(), current.end(), Elem{0});
  PrincipalSeries ps;
  for (std::size_t step = 0; step < nj; ++step) {
    // Maximal remaining J-classes: nothing remaining lies strictly above.
    std::vector<std::size_t> maximal;
    for (std::size_t a = 0; a < nj; ++a) {
      if (removed[a]) continue;
      bool is_max = true;
      for (std::size_t b = 0; b < nj && is_max; ++b)
        if (b != a && !removed[b] && g.j_above[a][b]) is_max = false;
      if (is_max) maximal.push_back(a);
    }
    assert(!maximal.empty());
    // J-classes are indexed by least element, so index order is lexicographic.
    const auto pick = tie == TieBreak::LeastFirst ? maximal.front() : maximal.back();
    ps.chain.push_back(current);
    const bool last = step + 1 == nj;
    auto table = factor_table(s, g.J[pick], !last);
    auto rec = recognize_factor(table);
    ps.factors.push_back({g.J[pick], std::move(table), std::move(rec)});
    removed[pick] = true;
    ElemSet next;
    for (auto x : current)
      if (g.j_class_of[x] != pick) next.push_back(x);
    current = std::move(next);
  }
  return ps;
}

bool is_group(const CayleyTable& t) {
  if (!t.identity()) return false;
  const auto e = *t.identity();
  for (std::size_t x = 0; x < t.order(); ++x) {
    bool has_inverse = false;
    for (std::size_t y = 0; y < t.order() && !has_inverse; ++y)
      has_inverse = t(x, y) == e && t(y, x) == e;
    if (!has_inverse) return false;
  }
  return !t.associativity_witness().has_value();
}

namespace {

ElemSet complement_of_zero(const CayleyTable& f, std::optional<Elem> zero) {
  ElemSet xs;
  for (std::size_t x = 0; x < f.order(); ++x)
    if (!zero || x != *zero) xs.push_back(static_cast<Elem>(x));
  return xs;
}

// Permutes rows and columns of the sandwich so that the diagonal carries as
// many nonzero entries as possible, then maximizes the nonzero pattern, then
// prefers smaller group entries. Matches the usual displayed forms such as
// [[1,1],[0,1]].
void normalize_sandwich(ReesParameters& p) {
  if (p.rows > 4 || p.cols > 4) return;
  std::vector<std::size_t> rp(p.rows), cp(p.cols);
  std::iota(rp.begin(), rp.end(), 0);
  const auto key = [&](const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
    std::vector<int> k;
    int diag = 0;
    for (std::size_t d = 0; d < std::min(p.rows, p.cols); ++d)
      diag += p.sandwich[c[d]][r[d]] >= 0;
    k.push_back(diag);
    for (std::size_t l = 0; l < p.cols; ++l)
      for (std::size_t i = 0; i < p.rows; ++i) k.push_back(p.sandwich[c[l]][r[i]] >= 0);
    for (std::size_t l = 0; l < p.cols; ++l)
      for (std::size_t i = 0; i < p.rows; ++i) k.push_back(-p.sandwich[c[l]][r[i]]);
    return k;
  };
  std::vector<int> best;
  std::vector<std::size_t> br, bc;
  do {
    std::iota(cp.begin(), cp.end(), 0);
    do {
      auto k = key(rp, cp);
      if (best.empty() || k > best) {
        best = std::move(k);
        br = rp;
        bc = cp;
      }
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  std::vector<std::vector<int>> out(p.cols, std::vector<int>(p.rows));
  for (std::size_t l = 0; l < p.cols; ++l)
    for (std::size_t i = 0; i < p.rows; ++i) out[l][i] = p.sandwich[bc[l]][br[i]];
  p.sandwich = std::move(out);
}

ReesParameters coordinatize(const CayleyTable& f, const ElemSet& xs, bool with_zero) {
  const auto g = greens_data(f);
  Elem e = 0;
  bool found = false;
  for (auto x : xs)
    if (f.is_idempotent(x)) {
      e = x;
      found = true;
      break;
    }
  if (!found) throw Error(ErrorCode::NotAFactor, "no idempotent in a non-null factor");
  const auto in = [](const ElemSet& set, Elem x) {
    return std::binary_search(set.begin(), set.end(), x);
  };
  std::vector<const ElemSet*> rcls, lcls;
  const auto& re = g.R[g.class_index(g.R, e)];
  const auto& le = g.L[g.class_index(g.L, e)];
  rcls.push_back(&re);
  lcls.push_back(&le);
  for (const auto& r : g.R)
    if (&r != &re && in(xs, r.front())) rcls.push_back(&r);
  for (const auto& l : g.L)
    if (&l != &le && in(xs, l.front())) lcls.push_back(&l);
  const auto& he = g.H[g.class_index(g.H, e)];
  const auto pick = [&](const ElemSet& a, const ElemSet& b) {
    for (auto x : a)
      if (in(b, x)) return x;
    throw Error(ErrorCode::NotAFactor, "R- and L-class do not meet");
  };
  std::vector<Elem> a_i, b_l;
  for (auto* r : rcls) a_i.push_back(r == &re ? e : pick(*r, le));
  for (auto* l : lcls) b_l.push_back(l == &le ? e : pick(re, *l));
  ReesParameters p;
  p.structural_group = restrict_to_subset(f, he);
  p.rows = rcls.size();
  p.cols = lcls.size();
  p.with_zero = with_zero;
  p.sandwich.assign(p.cols, std::vector<int>(p.rows, -1));
  std::vector<int> hpos(f.order(), -1);
  for (std::size_t k = 0; k < he.size(); ++k) hpos[he[k]] = static_cast<int>(k);
  for (std::size_t l = 0; l < p.cols; ++l)
    for (std::size_t i = 0; i < p.rows; ++i) p.sandwich[l][i] = hpos[f(b_l[l], a_i[i])];
  for (std::size_t l = 0; l < p.cols; ++l) {
    if (std::all_of(p.sandwich[l].begin(), p.sandwich[l].end(), [](int v) { return v < 0; }))
      throw Error(ErrorCode::NotAFactor, "sandwich matrix has a zero row");
  }
  normalize_sandwich(p);
  return p;
}

}  // namespace

Recognition recognize_factor(const CayleyTable& f) {
  const auto n = f.order();
  if (n == 1) return FactorGroup{f};
  const auto zero = f.zero();
  const auto xs = complement_of_zero(f, zero);
  if (zero) {
    bool null = true;
    for (auto x : xs)
      for (auto y : xs) null = null && f(x, y) == *zero;
    if (null) return FactorNull{xs.size()};
    bool closed = true;
    for (auto x : xs)
      for (auto y : xs) closed = closed && f(x, y) != *zero;
    if (closed) {
      auto sub = restrict_to_subset(f, xs);
      if (is_group(sub)) return FactorGroupWithZero{std::move(sub)};
    }
  } else if (is_group(f)) {
    return FactorGroup{f};
  }
  // Must be (0-)simple: the nonzero part is a single J-class.
  const auto g = greens_data(f);
  const auto jx = g.j_class_of[xs.front()];
  for (auto x : xs)
    if (g.j_class_of[x] != jx)
      throw Error(ErrorCode::NotAFactor, "factor has more than one nonzero J-class");
  if (!g.regular[jx]) return FactorOther{};
  return FactorRees{coordinatize(f, xs, zero.has_value())};
}

CayleyTable rebuild(const Recognition& r) {
  return std::visit(
      [](const auto& v) -> CayleyTable {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FactorGroup>) {
          return v.group;
        } else if constexpr (std::is_same_v<T, FactorGroupWithZero>) {
          return adjoin_zero(v.group);
        } else if constexpr (std::is_same_v<T, FactorNull>) {
          const auto m = v.size + 1;
          return CayleyTable(m, std::vector<Elem>(m * m, static_cast<Elem>(v.size)),
                             TableKind::Semigroup);
        } else if constexpr (std::is_same_v<T, FactorRees>) {
          const auto& p = v.params;
          auto t = rees_matrix_semigroup(p.structural_group, p.rows, p.cols, p.sandwich);
          if (p.with_zero) return t;
          ElemSet nonzero(t.order() - 1);
          std::iota(nonzero.begin(), nonzero.end(), Elem{0});
          return restrict_to_subset(t, nonzero);
        } else {
          throw Error(ErrorCode::NotAFactor, "cannot rebuild an unrecognized factor");
        }
      },
      r);
}

StructureScan structure_scan(const CayleyTable& s) {
  const auto n = s.order();
  StructureScan scan;
  scan.zero = s.zero();
  bool regular = true;
  for (std::size_t x = 0; x < n && regular; ++x) {
    bool rx = false;
    for (std::size_t y = 0; y < n && !rx; ++y) rx = s(s(x, y), x) == x;
    regular = rx;
  }
  ElemSet idem;
  for (std::size_t x = 0; x < n; ++x)
    if (s.is_idempotent(x)) idem.push_back(static_cast<Elem>(x));
  bool commute = true;
  for (auto e : idem)
    for (auto f : idem) commute = commute && s(e, f) == s(f, e);
  scan.is_inverse = regular && commute;
  if (scan.zero) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x == *scan.zero) continue;
      std::size_t p = x;
      for (std::size_t k = 1; k <= n && p != *scan.zero; ++k) p = s(p, x);
      if (p == *scan.zero) scan.nilpotents.push_back(static_cast<Elem>(x));
    }
  }
  const auto g = greens_data(s);
  std::vector<bool> covered(n);
  for (const auto& mg : g.maximal_subgroups)
    for (auto x : mg.elements) covered[x] = true;
  scan.is_union_of_groups = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  return scan;
}

}  // namespace hypunits
