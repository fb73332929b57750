#include "hypunits/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "hypunits/error.hpp"

namespace hypunits {

const char* to_string(Hyperbolic h) {
  switch (h) {
    case Hyperbolic::Yes: return "Yes";
    case Hyperbolic::No: return "No";
    case Hyperbolic::Indeterminate: return "Indeterminate";
  }
  return "?";
}

const char* to_string(Shape s) {
  switch (s) {
    case Shape::Item1: return "Item1";
    case Shape::Item2: return "Item2";
    case Shape::Item3: return "Item3";
    case Shape::Item4: return "Item4";
    case Shape::OutsidePaperShapes: return "OutsidePaperShapes";
  }
  return "?";
}

namespace {

bool is_division(ComponentKind k) {
  return k == ComponentKind::Field || k == ComponentKind::QuaternionDefinite ||
         k == ComponentKind::QuaternionIndefiniteDivision || k == ComponentKind::OctonionDefinite;
}

// Null space of x -> (t x, x t) for all t in ts.
std::vector<QVec> two_sided_annihilator(const StructureAlgebra& a, const std::vector<QVec>& ts) {
  Subspace rows(a.dim);
  for (const auto& t : ts) {
    const QMatrix lt = a.left(t);
    QMatrix rt(a.dim, a.dim);
    for (std::size_t l = 0; l < a.dim; ++l) {
      const QVec col = a.mul(a.basis(l), t);
      for (std::size_t k = 0; k < a.dim; ++k) rt(k, l) = col[k];
    }
    for (std::size_t k = 0; k < a.dim; ++k) {
      rows.insert(lt.row(k));
      rows.insert(rt.row(k));
    }
  }
  std::vector<bool> is_pivot(a.dim);
  for (auto p : rows.pivots()) is_pivot[p] = true;
  std::vector<QVec> out;
  for (std::size_t f = 0; f < a.dim; ++f) {
    if (is_pivot[f]) continue;
    QVec v(a.dim);
    v[f] = 1;
    for (std::size_t i = 0; i < rows.dim(); ++i) v[rows.pivots()[i]] = -rows.basis()[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::optional<TriangularBlock> find_triangular_block(const AlgebraAnalysis& an) {
  if (an.split.radical_dim != 1) return std::nullopt;
  const auto& a = an.algebra;
  const QVec& j = an.split.radical_basis[0];
  const auto lifts = lift_idempotents(a, an.split, an.decomposition);
  const QVec zero(a.dim);
  for (std::size_t p = 0; p < lifts.size(); ++p)
    for (std::size_t q = 0; q < lifts.size(); ++q) {
      if (p == q) continue;
      const QVec& e = lifts[p];
      const QVec& f = lifts[q];
      if (a.mul(e, j) != j || a.mul(j, f) != j) continue;
      // Matrix-unit relations of T2(Q) with E11 = e, E22 = f, E12 = j.
      if (a.mul(e, f) != zero || a.mul(f, e) != zero || a.mul(j, e) != zero ||
          a.mul(f, j) != zero || a.mul(j, j) != zero)
        continue;
      TriangularBlock b{e, f, j, false};
      const auto ann = two_sided_annihilator(a, {e, f, j});
      Subspace total(a.dim);
      for (const auto& v : {e, f, j}) total.insert(v);
      for (const auto& v : ann) total.insert(v);
      b.annihilator_complements = ann.size() + 3 == a.dim && total.dim() == a.dim;
      return b;
    }
  return std::nullopt;
}

AlgebraVerdict algebra_verdict(const AlgebraAnalysis& an) {
  AlgebraVerdict v;
  v.analysis = an;
  bool no = false, indeterminate = false;
  const auto rd = an.split.radical_dim;
  for (std::size_t k = 0; k < an.descriptors.size(); ++k) {
    const auto& d = an.descriptors[k];
    const std::string name = "component " + std::to_string(k + 1);
    if (is_infinite(d.unit_class.tag)) v.infinite_sources.push_back({name, d.unit_class.tag, d.unit_class.justification});
    if (d.unit_class.tag == UnitTag::ContainsZ2) {
      no = true;
      v.certificates.push_back(name + " contains Z^2: " + d.unit_class.justification);
    }
    if (d.unit_class.tag == UnitTag::Indeterminate) {
      indeterminate = true;
      v.certificates.push_back(name + " unidentified: " + d.unit_class.justification);
    }
    if (d.unit_class.tag == UnitTag::FuchsianLike)
      v.certificates.push_back(name + " is an indefinite division quaternion algebra (outside the listed shapes)");
  }
  if (rd == 1) {
    v.infinite_sources.push_back({"radical", UnitTag::VirtuallyZ, "1 + J is infinite cyclic (radical of dimension 1)"});
  } else if (rd >= 2) {
    no = true;
    v.certificates.push_back("radical of dimension " + std::to_string(rd) +
                             ": 1 + J is torsion-free nilpotent of Hirsch length >= 2");
  }
  if (v.infinite_sources.size() >= 2) {
    no = true;
    v.certificates.push_back(std::to_string(v.infinite_sources.size()) + " infinite sources");
  }
  if (an.split.reduced_confidence) v.certificates.push_back("non-associative input: radical by trace form, reduced confidence");
  v.hyperbolic = no ? Hyperbolic::No : indeterminate ? Hyperbolic::Indeterminate : Hyperbolic::Yes;

  std::size_t matrix2 = 0, nondivision = 0;
  for (const auto& d : an.descriptors) {
    if (d.kind == ComponentKind::MatrixTwoOverQ) ++matrix2;
    else if (!is_division(d.kind)) ++nondivision;
  }
  if (rd == 0) {
    if (matrix2 == 0 && nondivision == 0) v.shape = Shape::Item1;
    else if (matrix2 == 1 && nondivision == 0) v.shape = Shape::Item2;
  } else if (rd == 1 && matrix2 == 0 && nondivision == 0) {
    if (an.split.radical_central) {
      v.shape = Shape::Item3;
    } else if (const auto b = find_triangular_block(an); b && b->annihilator_complements) {
      v.shape = Shape::Item4;
      v.certificates.push_back("T2(Q) block: orthogonal idempotents e, f with e j = j = j f; annihilator complements it");
    }
  }
  if (rd >= 2 && an.split.radical_central)
    v.certificates.push_back("central radical of dimension >= 2 (flagged: item 3 reading assumes dimension 1)");
  return v;
}

AlgebraVerdict algebra_verdict(const StructureAlgebra& a) {
  try {
    return algebra_verdict(analyze_algebra(a));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::FactorizationOverflow && e.code() != ErrorCode::NonAssociativeUnsupported &&
        e.code() != ErrorCode::NotSimple)
      throw;
    AlgebraVerdict v;
    v.hyperbolic = Hyperbolic::Indeterminate;
    v.certificates.push_back(e.what());
    if (e.code() == ErrorCode::FactorizationOverflow) {
      const auto split = radical_split(a);
      if (split.radical_dim >= 2) {
        v.hyperbolic = Hyperbolic::No;
        v.certificates.push_back("radical of dimension " + std::to_string(split.radical_dim));
      }
    }
    return v;
  }
}

// ---------------------------------------------------------------------------
// Refuter

namespace {

using Complex = std::complex<long double>;

struct IntAlgebra {
  std::size_t d = 0;
  // sparse integer structure constants
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, long>>>> c;
};

IntAlgebra integral_form(const StructureAlgebra& a) {
  IntAlgebra r;
  r.d = a.dim;
  r.c.assign(a.dim, std::vector<std::vector<std::pair<std::uint32_t, long>>>(a.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (const auto& [k, v] : a.product[i][j]) {
        if (v.get_den() != 1 || !v.get_num().fits_slong_p())
          throw Error(ErrorCode::MalformedInput, "structure constants are not small integers");
        r.c[i][j].emplace_back(k, v.get_num().get_si());
      }
  return r;
}

constexpr std::uint64_t kPrime = (1ull << 61) - 1;

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % kPrime);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, b = mulmod(b, b))
    if (e & 1) r = mulmod(r, b);
  return r;
}

std::vector<long> left_matrix(const IntAlgebra& a, const std::vector<long>& u) {
  std::vector<long> m(a.d * a.d);
  for (std::size_t i = 0; i < a.d; ++i) {
    if (!u[i]) continue;
    for (std::size_t l = 0; l < a.d; ++l)
      for (const auto& [k, v] : a.c[i][l]) m[k * a.d + l] += u[i] * v;
  }
  return m;
}

std::uint64_t det_mod(const std::vector<long>& m, std::size_t n) {
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const long x = m[i] % static_cast<long>(kPrime);
    a[i] = x < 0 ? static_cast<std::uint64_t>(x + static_cast<long>(kPrime)) : static_cast<std::uint64_t>(x);
  }
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * n + c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
      det = kPrime - det;
    }
    det = mulmod(det, a[c * n + c]);
    const std::uint64_t inv = powmod(a[c * n + c], kPrime - 2);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (!a[i * n + c]) continue;
      const std::uint64_t f = mulmod(a[i * n + c], inv);
      for (std::size_t j = c; j < n; ++j)
        a[i * n + j] = (a[i * n + j] + kPrime - mulmod(f, a[c * n + j])) % kPrime;
    }
  }
  return det;
}

Integer det_exact(const std::vector<long>& m, std::size_t n) {
  // Bareiss fraction-free elimination.
  std::vector<Integer> a(m.begin(), m.end());
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

bool integral_unit(const IntAlgebra& a, const std::vector<long>& u) {
  const auto m = left_matrix(a, u);
  const auto dm = det_mod(m, a.d);
  if (dm != 1 && dm != kPrime - 1) return false;
  const Integer det = det_exact(m, a.d);
  return det == 1 || det == -1;
}

// Durand-Kerner roots of a monic rational polynomial.
std::vector<Complex> complex_roots(const QPoly& p) {
  const int n = p.degree();
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = p.coeffs()[static_cast<std::size_t>(k)].get_d();
  auto eval = [&](Complex z) {
    Complex acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * z + c[static_cast<std::size_t>(k)];
    return acc;
  };
  std::vector<Complex> z(static_cast<std::size_t>(n));
  const Complex seed(0.4L, 0.9L);
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::pow(seed, k);
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex den = 1;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (i != j) den *= z[i] - z[j];
      const Complex step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

struct FieldCoordinates {
  std::size_t component;
  QVec idempotent;  // quotient coordinates
  Subspace basis;   // component basis, quotient coordinates
  QMatrix power_inverse;  // component coordinates -> power-basis coefficients
  std::vector<Complex> roots;
};

struct UnitData {
  std::vector<long> coords;
  QVec u;
  QVec unipotent_log;
  std::vector<long double> log_embedding;
};

QVec inverse_of(const StructureAlgebra& a, const QVec& x) {
  const auto sol = solve(a.left(x), a.unity);
  if (!sol) throw Error(ErrorCode::NotSimple, "element is not invertible");
  return *sol;
}

// Logarithm of the unipotent factor of the multiplicative Jordan decomposition.
QVec unipotent_log(const StructureAlgebra& a, const QVec& u, const QPoly& minpoly) {
  const QPoly g = squarefree_part(minpoly);
  if (g == minpoly) return QVec(a.dim);
  const QPoly dg = g.derivative();
  QVec s = u;
  for (int it = 0; it < 64; ++it) {
    const QVec gs = a.eval(g, s, a.unity);
    if (is_zero(gs)) break;
    s = sub(s, a.mul(gs, inverse_of(a, a.eval(dg, s, a.unity))));
  }
  const QVec n = sub(a.mul(inverse_of(a, s), u), a.unity);
  QVec log(a.dim), pw = n;
  for (unsigned k = 1; !is_zero(pw) && k <= a.dim + 1; ++k) {
    axpy(log, Rational(k % 2 ? 1 : -1, k), pw);
    pw = a.mul(pw, n);
  }
  return log;
}

std::vector<long double> log_embedding(const AlgebraAnalysis& an, const std::vector<FieldCoordinates>& fields,
                                       const QVec& u) {
  std::vector<long double> out;
  const QVec q = an.split.project(u);
  const auto& ss = an.split.semisimple_quotient;
  for (const auto& f : fields) {
    const QVec x = f.basis.coordinates(ss.mul(f.idempotent, q));
    const QVec coef = f.power_inverse.apply(x);
    for (const auto& r : f.roots) {
      Complex acc = 0;
      for (std::size_t k = coef.size(); k-- > 0;) acc = acc * r + static_cast<long double>(coef[k].get_d());
      out.push_back(std::log(std::abs(acc)));
    }
  }
  return out;
}

std::vector<FieldCoordinates> field_coordinates(const AlgebraAnalysis& an) {
  std::vector<FieldCoordinates> out;
  const auto& cd = an.decomposition;
  for (std::size_t k = 0; k < cd.components.size(); ++k) {
    const auto& d = an.descriptors[k];
    if (d.kind != ComponentKind::Field || d.center_minpoly.degree() < 2) continue;
    FieldCoordinates f{k, cd.idempotents[k], Subspace(an.split.semisimple_quotient.dim), QMatrix(), {}};
    for (const auto& v : cd.component_bases[k]) f.basis.insert(v);
    const auto& b = cd.components[k];
    QMatrix p(b.dim, b.dim);
    QVec pw = b.unity;
    for (std::size_t col = 0; col < b.dim; ++col) {
      for (std::size_t r = 0; r < b.dim; ++r) p(r, col) = pw[r];
      pw = b.mul(pw, d.center_generator);
    }
    // Invert by solving against each unit vector.
    f.power_inverse = QMatrix(b.dim, b.dim);
    for (std::size_t col = 0; col < b.dim; ++col) {
      QVec e(b.dim);
      e[col] = 1;
      const auto sol = solve(p, e);
      for (std::size_t r = 0; r < b.dim; ++r) f.power_inverse(r, col) = (*sol)[r];
    }
    f.roots = complex_roots(d.center_minpoly);
    out.push_back(std::move(f));
  }
  return out;
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

// Visits integer vectors: the full box when it fits, otherwise vectors of
// bounded support. Returns the description of the space visited.
template <class Visit>
std::string for_each_vector(std::size_t d, int h, double max_vectors, bool& exhaustive, std::size_t& count,
                            Visit&& visit) {
  double box = 1;
  for (std::size_t i = 0; i < d; ++i) box *= 2.0 * h + 1;
  std::vector<long> c(d, 0);
  count = 0;
  if (box <= max_vectors) {
    exhaustive = true;
    std::vector<long> x(d, -h);
    while (true) {
      ++count;
      if (!visit(x)) break;
      std::size_t i = 0;
      while (i < d && x[i] == h) x[i++] = -h;
      if (i == d) break;
      ++x[i];
    }
    return "box [-" + std::to_string(h) + "," + std::to_string(h) + "]^" + std::to_string(d);
  }
  exhaustive = false;
  std::size_t s = 0;
  double total = 0;
  while (s < d) {
    const double next = total + binomial(d, s + 1) * std::pow(2.0 * h, static_cast<double>(s + 1));
    if (next > max_vectors) break;
    total = next;
    ++s;
  }
  bool stop = false;
  for (std::size_t k = 1; k <= s && !stop; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (!stop) {
      std::vector<long> val(k, -h);
      while (true) {
        std::fill(c.begin(), c.end(), 0);
        for (std::size_t t = 0; t < k; ++t) c[idx[t]] = val[t];
        ++count;
        if (!visit(c)) {
          stop = true;
          break;
        }
        std::size_t t = 0;
        while (t < k) {
          ++val[t];
          if (val[t] == 0) ++val[t];
          if (val[t] <= h) break;
          val[t] = -h;
          ++t;
        }
        if (t == k) break;
      }
      // next combination
      std::size_t t = k;
      while (t > 0 && idx[t - 1] == d - k + t - 1) --t;
      if (t == 0) break;
      ++idx[t - 1];
      for (std::size_t r = t; r < k; ++r) idx[r] = idx[r - 1] + 1;
    }
  }
  return "support <= " + std::to_string(s) + " in [-" + std::to_string(h) + "," + std::to_string(h) + "]^" +
         std::to_string(d);
}

QVec to_qvec(const std::vector<long>& c) {
  QVec v;
  for (long x : c) v.emplace_back(x);
  return v;
}

bool proportional(const QVec& x, const QVec& y) {
  // x, y linearly dependent
  std::size_t p = 0;
  while (p < x.size() && x[p] == 0) ++p;
  if (p == x.size()) return true;
  const Rational r = y[p] / x[p];
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] != r * x[i]) return false;
  return true;
}

}  // namespace

bool is_integral_unit(const StructureAlgebra& a, const std::vector<long>& coords) {
  return integral_unit(integral_form(a), coords);
}

RefuteReport refute_search(const StructureAlgebra& a, int height, int exp_bound, const RefuteLimits& limits) {
  RefuteReport rep;
  const IntAlgebra ia = integral_form(a);
  AlgebraAnalysis an;
  try {
    an = analyze_algebra(a);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::FactorizationOverflow && e.code() != ErrorCode::NotSimple &&
        e.code() != ErrorCode::NonAssociativeUnsupported)
      throw;
    rep.search_space = std::string("not searched: ") + e.what();
    return rep;
  }
  const auto fields = field_coordinates(an);

  std::vector<std::vector<long>> units;
  rep.search_space = for_each_vector(ia.d, height, limits.max_vectors, rep.exhaustive_box, rep.vectors_examined,
                                     [&](const std::vector<long>& x) {
                                       if (integral_unit(ia, x)) units.push_back(x);
                                       return true;
                                     });
  rep.units_found = units.size();
  auto key = [](const std::vector<long>& x) {
    long mx = 0, l1 = 0;
    for (long v : x) {
      mx = std::max(mx, std::labs(v));
      l1 += std::labs(v);
    }
    return std::tuple(mx, l1, x);
  };
  std::sort(units.begin(), units.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });

  std::vector<UnitData> inf;
  for (const auto& x : units) {
    UnitData ud{x, to_qvec(x), {}, {}};
    const QPoly m = minimal_polynomial(a, ud.u, a.unity);
    if (divides_power_minus_one(m)) continue;
    ++rep.infinite_order_units;
    if (inf.size() >= limits.max_pair_units) {
      rep.pair_cap_hit = true;
      continue;
    }
    ud.unipotent_log = unipotent_log(a, ud.u, m);
    ud.log_embedding = log_embedding(an, fields, ud.u);
    inf.push_back(std::move(ud));
  }

  for (std::size_t i = 0; i < inf.size(); ++i)
    for (std::size_t j = i + 1; j < inf.size(); ++j) {
      const auto& u = inf[i];
      const auto& v = inf[j];
      Z2Witness w;
      if (!proportional(u.unipotent_log, v.unipotent_log)) {
        w.exact = true;
        w.coordinates = "unipotent logarithms";
        w.minor = 1;
      } else {
        // Numeric log-embedding coordinates, together with the exact ones.
        std::vector<long double> fu, fv;
        for (const auto& x : u.unipotent_log) fu.push_back(x.get_d());
        for (const auto& x : v.unipotent_log) fv.push_back(x.get_d());
        fu.insert(fu.end(), u.log_embedding.begin(), u.log_embedding.end());
        fv.insert(fv.end(), v.log_embedding.begin(), v.log_embedding.end());
        long double best = 0;
        for (std::size_t p = 0; p < fu.size(); ++p)
          for (std::size_t q = p + 1; q < fu.size(); ++q)
            best = std::max(best, std::abs(fu[p] * fv[q] - fu[q] * fv[p]));
        if (best <= limits.margin) continue;
        w.minor = static_cast<double>(best);
        w.coordinates = "log embedding of field components (numeric, margin " + std::to_string(limits.margin) + ")";
      }
      if (a.mul(u.u, v.u) != a.mul(v.u, u.u)) continue;
      // No relation u^p v^q = 1 with |p|, |q| <= exp_bound, (p, q) != (0, 0).
      const QVec ui = inverse_of(a, u.u), vi = inverse_of(a, v.u);
      std::vector<QVec> up, vp;  // index k <-> exponent k - exp_bound
      for (int k = -exp_bound; k <= exp_bound; ++k) {
        up.push_back(a.power(k < 0 ? ui : u.u, static_cast<unsigned>(std::abs(k))));
        vp.push_back(a.power(k < 0 ? vi : v.u, static_cast<unsigned>(std::abs(k))));
      }
      bool relation = false;
      for (int p = -exp_bound; p <= exp_bound && !relation; ++p)
        for (int q = -exp_bound; q <= exp_bound && !relation; ++q) {
          if (p == 0 && q == 0) continue;
          relation = a.mul(up[static_cast<std::size_t>(p + exp_bound)], vp[static_cast<std::size_t>(q + exp_bound)]) ==
                     a.unity;
        }
      if (relation) continue;
      w.u = u.u;
      w.v = v.u;
      rep.witness = std::move(w);
      return rep;
    }
  return rep;
}

NormalizedUnitReport normalized_unit_search(const StructureAlgebra& a, int height, double max_vectors) {
  NormalizedUnitReport rep;
  const IntAlgebra ia = integral_form(a);
  bool exhaustive = false;
  rep.search_space = for_each_vector(ia.d, height, max_vectors, exhaustive, rep.vectors_examined,
                                     [&](const std::vector<long>& x) {
                                       long aug = 0, nonzero = 0;
                                       for (long v : x) {
                                         aug += v;
                                         nonzero += v != 0;
                                       }
                                       if (aug != 1 || nonzero == 1) return true;
                                       if (!integral_unit(ia, x)) return true;
                                       rep.unit = to_qvec(x);
                                       return false;
                                     });
  return rep;
}

}  // namespace hypunits
