#include "hypunits/classify.hpp"

#include <algorithm>
#include <array>

#include "hypunits/catalog.hpp"
#include "hypunits/error.hpp"
#include "hypunits/groupid.hpp"

namespace hypunits {

const char* to_string(PaperVerdict v) {
  switch (v) {
    case PaperVerdict::YesPerPaper: return "YesPerPaper";
    case PaperVerdict::NoPerPaper: return "NoPerPaper";
    case PaperVerdict::OutOfTheoremScope: return "OutOfTheoremScope";
  }
  return "?";
}

const char* to_string(TheoremPath p) {
  switch (p) {
    case TheoremPath::Thm2: return "Thm2";
    case TheoremPath::Thm3: return "Thm3";
    case TheoremPath::Thm4: return "Thm4";
    case TheoremPath::None: return "None";
  }
  return "?";
}

const char* to_string(TType t) {
  switch (t) {
    case TType::T2: return "T2";
    case TType::T2Prime: return "T2'";
    case TType::T2Hat: return "T2hat";
  }
  return "?";
}

const char* to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "Agree";
    case Agreement::Disagree: return "Disagree";
    case Agreement::OracleOnly: return "OracleOnly";
  }
  return "?";
}

namespace {

constexpr const char* kAbelian = "abelian-exp-4-6";
constexpr const char* kHamiltonian = "hamiltonian-2-group";
constexpr const char* kCyclic = "K-cyclic";
constexpr const char* kGroups = "K-groups";
constexpr const char* kRees = "K-rees";

struct Certified {
  FactorCertificate cert;
  bool nonabelian_group = false;  // nonabelian and not hamiltonian
  bool group = false;
};

Certified certify(const PrincipalFactor& f) {
  Certified c;
  c.cert.j_class = f.j_class;
  c.cert.recognition = recognition_name(f.recognition);
  c.cert.list = "none";
  const CayleyTable* g = nullptr;
  if (const auto* p = std::get_if<FactorGroup>(&f.recognition)) g = &p->group;
  if (const auto* p = std::get_if<FactorGroupWithZero>(&f.recognition)) g = &p->group;
  if (g) {
    c.group = true;
    const auto prof = group_predicates(*g);
    if (prof.abelian_exponent_4_or_6()) {
      c.cert.list = kAbelian;
      c.cert.identified = "abelian of order " + std::to_string(prof.order) + ", exponent " + std::to_string(prof.exponent);
    } else if (prof.hamiltonian_two_group()) {
      c.cert.list = kHamiltonian;
      c.cert.identified = "hamiltonian 2-group of order " + std::to_string(prof.order);
    } else if (auto k = identify_named(*g, NamedList::KCyclic)) {
      c.cert.list = kCyclic;
      c.cert.identified = *k;
    } else if (auto k2 = identify_named(*g, NamedList::KGroups)) {
      c.cert.list = kGroups;
      c.cert.identified = *k2;
    } else {
      c.cert.identified = std::string(prof.abelian ? "abelian" : "nonabelian") + " group of order " +
                          std::to_string(prof.order) + ", exponent " + std::to_string(prof.exponent);
    }
    c.nonabelian_group = !prof.abelian && !prof.hamiltonian_two_group();
  } else if (std::holds_alternative<FactorRees>(f.recognition)) {
    for (const char* name : {"M", "M12"})
      if (isomorphism_test(f.quotient_table, catalog(name).table)) {
        c.cert.list = kRees;
        c.cert.identified = name;
      }
  }
  c.cert.allowed = c.cert.list != "none";
  return c;
}

bool is_ordinary(const FactorCertificate& c) { return c.list == kAbelian || c.list == kHamiltonian; }

bool is_two_sided_ideal(const CayleyTable& s, const std::vector<bool>& in) {
  for (std::size_t x = 0; x < s.order(); ++x)
    for (std::size_t k = 0; k < s.order(); ++k)
      if (in[k] && (!in[s(x, k)] || !in[s(k, x)])) return false;
  return true;
}

// Elements outside `k` are all covered by maximal subgroups.
bool disjoint_union_of_groups(const CayleyTable& s, const std::vector<bool>& k) {
  const auto g = greens_data(s);
  std::vector<bool> covered = k;
  for (const auto& mg : g.maximal_subgroups) {
    const bool meets = std::any_of(mg.elements.begin(), mg.elements.end(), [&](Elem x) { return k[x]; });
    if (meets) continue;
    for (auto x : mg.elements) covered[x] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::string labels(const CayleyTable& s, const ElemSet& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + s.label(xs[i]);
  return out + "}";
}

// Rees quotient S/{theta, j0}, with the map from S.
std::pair<CayleyTable, std::vector<Elem>> quotient_by(const CayleyTable& s, Elem theta, Elem j0) {
  const auto n = s.order();
  std::vector<Elem> to(n), from;
  for (std::size_t x = 0; x < n; ++x) {
    if (x == j0) continue;
    to[x] = static_cast<Elem>(from.size());
    from.push_back(static_cast<Elem>(x));
  }
  to[j0] = to[theta];
  std::vector<Elem> entries;
  for (auto x : from)
    for (auto y : from) entries.push_back(to[s(x, y)]);
  std::vector<std::string> names;
  for (auto x : from) names.push_back(s.label(x));
  return {CayleyTable(from.size(), std::move(entries), TableKind::Semigroup, std::move(names)), from};
}

// lambda + mu from the Peirce component of e1, eN between the lifted idempotents.
std::optional<LambdaMu> lambda_mu(const CayleyTable& s, Elem theta, Elem j0, std::size_t e1, std::size_t en,
                                  std::string& note) {
  try {
    const auto an = analyze_algebra(build_algebra(s));
    const auto& a = an.algebra;
    const auto lifts = lift_idempotents(a, an.split, an.decomposition);
    const QVec j = sub(a.basis(j0), a.basis(theta));
    auto elem = [&](std::size_t x) { return x == s.order() ? a.unity : a.basis(x); };
    const QVec* fp = nullptr;
    const QVec* fq = nullptr;
    for (const auto& f : lifts) {
      if (a.mul(f, j) == j) fp = &f;
      if (a.mul(j, f) == j) fq = &f;
    }
    if (!fp || !fq) {
      note = "no lifted idempotents framing j0";
      return std::nullopt;
    }
    auto coefficient = [&](const QVec& x) -> std::optional<Rational> {
      if (x == a.unity) return Rational(0);  // the unity lies in every complement
      if (fp == fq) return std::nullopt;
      const QVec y = a.mul(a.mul(*fp, x), *fq);
      std::size_t p = 0;
      while (p < j.size() && j[p] == 0) ++p;
      const Rational r = y[p] / j[p];
      if (y != scale(r, j)) return std::nullopt;
      return r;
    };
    const auto l = coefficient(elem(e1));
    const auto m = coefficient(elem(en));
    if (!l || !m) {
      note = "Peirce component is not a multiple of j0";
      return std::nullopt;
    }
    return LambdaMu{*l, *m};
  } catch (const Error& e) {
    note = e.what();
    return std::nullopt;
  }
}

void theorem4(const CayleyTable& s, Elem theta, Elem j0, TieBreak tie, ClassificationReport& r) {
  r.theorem_path = TheoremPath::Thm4;
  const auto [q, from] = quotient_by(s, theta, j0);
  bool ok = true;
  for (const auto& f : principal_series(q, tie).factors) {
    auto c = certify(f).cert;
    for (auto& x : c.j_class) x = from[x];
    std::sort(c.j_class.begin(), c.j_class.end());
    if (!is_ordinary(c)) {
      ok = false;
      r.notes.push_back("factor " + labels(s, c.j_class) + " of S/I is not an allowed group");
    }
    r.factor_certificates.push_back(std::move(c));
  }
  if (!disjoint_union_of_groups(q, std::vector<bool>(q.order(), false))) {
    ok = false;
    r.notes.push_back("S/I is not the disjoint union of its maximal subgroups");
  }

  // Candidates; index n stands for the identity of S^1 when S has none.
  const std::size_t n = s.order();
  auto mul = [&](std::size_t x, std::size_t y) -> std::size_t {
    if (x == n) return y;
    if (y == n) return x;
    return s(x, y);
  };
  std::vector<std::size_t> c1, cn;
  for (std::size_t e = 0; e <= n; ++e) {
    if (e == n && s.identity()) break;
    if (e < n && (!s.is_idempotent(e) || e == theta)) continue;
    if (mul(e, j0) == j0) c1.push_back(e);
    if (mul(j0, e) == j0) cn.push_back(e);
  }
  auto name = [&](std::size_t x) { return x == n ? std::string("1") : s.label(x); };
  std::string cands = "e1 candidates:";
  for (auto e : c1) cands += " " + name(e);
  cands += "; eN candidates:";
  for (auto e : cn) cands += " " + name(e);
  r.notes.push_back(cands);

  auto pattern = [&](std::size_t e1, std::size_t en) -> std::optional<TType> {
    const auto a = mul(e1, en), b = mul(en, e1);
    if (a == theta && b == theta) return TType::T2;
    if (b == theta && a == j0) return TType::T2Hat;
    if (a == b && a != theta && mul(a, a) == a) return TType::T2Prime;
    return std::nullopt;
  };
  // One-sided candidates first, then patterns in a fixed priority, so the
  // choice does not depend on element labels.
  auto strict = [&](std::size_t e1, std::size_t en) {
    return std::find(cn.begin(), cn.end(), e1) == cn.end() && std::find(c1.begin(), c1.end(), en) == c1.end();
  };
  std::optional<std::array<std::size_t, 2>> chosen;
  for (bool want_strict : {true, false}) {
    for (TType t : {TType::T2, TType::T2Hat, TType::T2Prime}) {
      for (auto e1 : c1) {
        for (auto en : cn)
          if (strict(e1, en) == want_strict && pattern(e1, en) == t) {
            chosen = {e1, en};
            r.t_type = t;
            break;
          }
        if (chosen) break;
      }
      if (chosen) break;
    }
    if (chosen) break;
  }
  if (!chosen) {
    r.notes.push_back("no pair e1, eN matches one of the three product patterns");
    r.verdict = PaperVerdict::NoPerPaper;
    return;
  }
  const auto [e1, en] = *chosen;
  r.notes.push_back("e1 = " + name(e1) + ", eN = " + name(en) + ", j0 = " + s.label(j0));
  if (r.t_type == TType::T2Prime)
    r.notes.push_back("T2' = {e1, e2, e3, j0, theta} with e2 read as eN, e3 = " + name(mul(e1, en)));
  std::string why;
  r.lambda_mu = lambda_mu(s, theta, j0, e1, en, why);
  if (r.lambda_mu) {
    const Rational expected = r.t_type == TType::T2Hat ? 1 : 0;
    const Rational sum = r.lambda_mu->sum();
    r.notes.push_back(std::string("lambda + mu = ") + sum.get_str() + (sum == expected ? " (holds)" : " (MISMATCH, expected " + expected.get_str() + ")"));
  } else {
    r.notes.push_back("lambda, mu not computed: " + why);
  }
  r.verdict = ok ? PaperVerdict::YesPerPaper : PaperVerdict::NoPerPaper;
}

}  // namespace

ClassificationReport classify_semigroup(const CayleyTable& s, TieBreak tie) {
  ClassificationReport r;
  const auto scan = structure_scan(s);

  if (scan.zero && scan.nilpotents.size() == 1) {
    std::vector<bool> in(s.order());
    in[*scan.zero] = in[scan.nilpotents[0]] = true;
    if (is_two_sided_ideal(s, in)) {
      theorem4(s, *scan.zero, scan.nilpotents[0], tie, r);
      return r;
    }
  }

  const auto ps = principal_series(s, tie);
  bool any_nonabelian = false, any_nongroup = false;
  std::size_t k_cyclic = 0, k_other = 0, ordinary = 0;
  std::optional<std::size_t> k_index;
  for (const auto& f : ps.factors) {
    auto c = certify(f);
    any_nonabelian = any_nonabelian || c.nonabelian_group;
    any_nongroup = any_nongroup || !c.group;
    if (c.cert.list == kCyclic) ++k_cyclic;
    if (c.cert.list == kGroups || c.cert.list == kRees) {
      ++k_other;
      k_index = r.factor_certificates.size();
    }
    if (is_ordinary(c.cert)) ++ordinary;
    r.factor_certificates.push_back(std::move(c.cert));
  }
  const std::size_t m = r.factor_certificates.size();

  // Groups and a unique K from the noncommutative list or a Rees kernel.
  if (k_other == 1 && k_cyclic == 0 && ordinary + 1 == m) {
    const auto& kc = r.factor_certificates[*k_index];
    std::vector<bool> in(s.order());
    for (auto x : kc.j_class) in[x] = true;
    bool ok = true;
    if (kc.list == kRees) {
      if (scan.zero) in[*scan.zero] = true;
      if (!is_two_sided_ideal(s, in)) {
        ok = false;
        r.notes.push_back(kc.identified + " is not an ideal of S");
      }
    }
    if (ok && !disjoint_union_of_groups(s, in)) {
      ok = false;
      r.notes.push_back("S is not the disjoint union of its maximal subgroups and K");
    }
    if (ok) {
      ElemSet elems;
      for (std::size_t x = 0; x < s.order(); ++x)
        if (in[x]) elems.push_back(static_cast<Elem>(x));
      r.k_certificate = KCertificate{kc.identified, kc.list, elems};
      r.theorem_path = TheoremPath::Thm3;
      r.verdict = PaperVerdict::YesPerPaper;
      return r;
    }
  }

  // Inverse, no nilpotents, groups and at most one cyclic K.
  if (scan.is_inverse && scan.nilpotents.empty() && k_other == 0 && k_cyclic <= 1 && ordinary + k_cyclic == m) {
    for (std::size_t i = 0; i < m; ++i)
      if (r.factor_certificates[i].list == kCyclic) {
        const auto& kc = r.factor_certificates[i];
        r.k_certificate = KCertificate{kc.identified, kc.list, kc.j_class};
      }
    r.theorem_path = TheoremPath::Thm2;
    r.verdict = PaperVerdict::YesPerPaper;
    return r;
  }

  if (k_cyclic + k_other > 1) r.notes.push_back(std::to_string(k_cyclic + k_other) + " factors from the K lists");
  for (const auto& c : r.factor_certificates)
    if (!c.allowed) r.notes.push_back("factor " + labels(s, c.j_class) + " (" + c.recognition + ") is on no list");

  // Which premise applies decides the path of a negative answer.
  const auto split = radical_split(build_algebra(s));
  if (split.radical_dim > 0) {
    if (scan.nilpotents.empty()) {
      r.verdict = PaperVerdict::OutOfTheoremScope;
      r.theorem_path = TheoremPath::None;
      r.notes.push_back("QS has a radical of dimension " + std::to_string(split.radical_dim) +
                        " but S has no nilpotent element");
      return r;
    }
    r.theorem_path = TheoremPath::Thm4;
    r.notes.push_back(std::to_string(scan.nilpotents.size()) +
                      " nonzero nilpotent elements; no nilpotent j0 with {theta, j0} an ideal");
  } else {
    r.theorem_path =
        !scan.nilpotents.empty() || any_nongroup || any_nonabelian || k_other > 0 ? TheoremPath::Thm3 : TheoremPath::Thm2;
  }
  r.verdict = PaperVerdict::NoPerPaper;
  return r;
}

CrosscheckRecord crosscheck(const CayleyTable& s, const std::string& input_id) {
  CrosscheckRecord rec;
  rec.input_id = input_id;
  rec.paper = classify_semigroup(s);
  rec.oracle = algebra_verdict(build_algebra(s));
  const auto o = rec.oracle.hyperbolic;
  const auto p = rec.paper.verdict;
  if (p == PaperVerdict::OutOfTheoremScope) {
    rec.agreement = Agreement::OracleOnly;
    rec.discrepancy_note = std::string("outside the theorems' premises; oracle says ") + to_string(o);
  } else if (o == Hyperbolic::Indeterminate) {
    rec.agreement = Agreement::Disagree;
    rec.discrepancy_note = "oracle indeterminate";
  } else if ((p == PaperVerdict::YesPerPaper) == (o == Hyperbolic::Yes)) {
    rec.agreement = Agreement::Agree;
  } else {
    rec.agreement = Agreement::Disagree;
    rec.discrepancy_note = std::string("classifier ") + to_string(p) + ", oracle " + to_string(o);
  }
  return rec;
}

}  // namespace hypunits
