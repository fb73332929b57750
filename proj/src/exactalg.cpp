#include "hypunits/exactalg.hpp"

#include <algorithm>
#include <random>

#include "hypunits/error.hpp"

namespace hypunits {

namespace {

SparseVec to_sparse(const QVec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

Rational coeff_of(const SparseVec& s, std::size_t k) {
  for (const auto& [i, v] : s)
    if (i == k) return v;
  return 0;
}

// out += s * (x e_k), x sparse
void acc_times_basis(const StructureAlgebra& a, QVec& out, const SparseVec& x, std::size_t k,
                     const Rational& s) {
  for (const auto& [l, v] : x)
    for (const auto& [m, w] : a.product[l][k]) out[m] += s * v * w;
}

// out += s * (e_i x), x sparse
void acc_basis_times(const StructureAlgebra& a, QVec& out, std::size_t i, const SparseVec& x,
                     const Rational& s) {
  for (const auto& [l, v] : x)
    for (const auto& [m, w] : a.product[i][l]) out[m] += s * v * w;
}

// (e_i e_j) e_k - e_i (e_j e_k)
QVec basis_associator(const StructureAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
  QVec out(a.dim);
  acc_times_basis(a, out, a.product[i][j], k, 1);
  acc_basis_times(a, out, i, a.product[j][k], -1);
  return out;
}

bool basis_associative(const StructureAlgebra& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        if (!is_zero(basis_associator(a, i, j, k))) return false;
  return true;
}

QVec associator(const StructureAlgebra& a, const QVec& x, const QVec& y, const QVec& z) {
  return sub(a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z)));
}

// Kernel of the span of constraint rows.
std::vector<QVec> null_space(const Subspace& rows) {
  const std::size_t n = rows.ambient();
  std::vector<bool> is_pivot(n);
  for (auto p : rows.pivots()) is_pivot[p] = true;
  std::vector<QVec> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVec v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < rows.dim(); ++i) v[rows.pivots()[i]] = -rows.basis()[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

// Horner evaluation with an explicit unity.
QVec evaluate(const StructureAlgebra& a, const QPoly& p, const QVec& x, const QVec& one) {
  QVec acc(a.dim);
  for (int k = p.degree(); k >= 0; --k) {
    acc = a.mul(acc, x);
    axpy(acc, p.coeffs()[static_cast<std::size_t>(k)], one);
  }
  return acc;
}

std::size_t span_dim(const std::vector<QVec>& vs, std::size_t n) {
  Subspace s(n);
  for (const auto& v : vs) s.insert(v);
  return s.dim();
}

// Size key for choosing a readable field generator.
std::pair<std::size_t, std::string> poly_height(const QPoly& p) {
  std::size_t bits = 0;
  for (const auto& c : p.coeffs())
    bits = std::max({bits, mpz_sizeinbase(c.get_num_mpz_t(), 2), mpz_sizeinbase(c.get_den_mpz_t(), 2)});
  return {bits, p.to_string()};
}

struct FieldPiece {
  QVec idempotent;
  std::size_t center_dim;
};

StructureAlgebra restrict_to_ideal(const StructureAlgebra& ss, const QVec& e, Subspace& basis) {
  for (std::size_t k = 0; k < ss.dim; ++k) basis.insert(ss.mul(e, ss.basis(k)));
  const auto& b = basis.basis();
  std::vector<std::vector<QVec>> prod(b.size(), std::vector<QVec>(b.size()));
  for (std::size_t p = 0; p < b.size(); ++p)
    for (std::size_t q = 0; q < b.size(); ++q) prod[p][q] = basis.coordinates(ss.mul(b[p], b[q]));
  StructureAlgebra c =
      make_algebra(prod, basis.coordinates(e), Provenance::Component, !ss.associative);
  for (const auto& x : ss.named_elements) c.named_elements.push_back(basis.coordinates(ss.mul(e, x)));
  for (std::size_t p = 0; p < b.size(); ++p) c.basis_names.push_back("b" + std::to_string(p + 1));
  return c;
}

Integer squarefree_class(const Rational& r) {
  Integer v = r.get_num() * r.get_den();
  return v;
}

// Odd primes dividing v (v != 0).
std::vector<Integer> odd_prime_divisors(Integer v) {
  std::vector<Integer> out;
  v = abs(v);
  while (mpz_even_p(v.get_mpz_t())) v /= 2;
  for (Integer p = 3; p * p <= v; p += 2) {
    if (p > 1000000) {
      if (mpz_probab_prime_p(v.get_mpz_t(), 30) == 0)
        throw Error(ErrorCode::FactorizationOverflow, "integer too large to factor by trial division");
      break;
    }
    if (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
      out.push_back(p);
      while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

int valuation(Integer& v, const Integer& p) {
  int k = 0;
  while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
    v /= p;
    ++k;
  }
  return k;
}

long mod8(const Integer& u) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
  return r.get_si();
}

// Positive definiteness of a symmetric rational matrix (pivots of LDL^T).
bool positive_definite(QMatrix g) {
  const std::size_t n = g.rows();
  for (std::size_t c = 0; c < n; ++c) {
    if (g(c, c) <= 0) return false;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (g(i, c) == 0) continue;
      const Rational f = g(i, c) / g(c, c);
      for (std::size_t j = c; j < n; ++j) g(i, j) -= f * g(c, j);
    }
  }
  return true;
}

}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Semigroup: return "semigroup";
    case Provenance::Loop: return "loop";
    case Provenance::Quotient: return "quotient";
    case Provenance::Component: return "component";
  }
  return "?";
}

QPoly minimal_polynomial(const StructureAlgebra& a, const QVec& w, const QVec& one) {
  const std::size_t n = a.dim;
  const std::size_t cap = n + 1;
  Subspace s(n + cap + 1);
  QVec p = one;
  for (std::size_t k = 0; k <= cap; ++k) {
    QVec ext(n + cap + 1);
    std::copy(p.begin(), p.end(), ext.begin());
    ext[n + k] = 1;
    ext = s.reduce(std::move(ext));
    if (std::all_of(ext.begin(), ext.begin() + static_cast<std::ptrdiff_t>(n),
                    [](const Rational& x) { return x == 0; })) {
      std::vector<Rational> c(ext.begin() + static_cast<std::ptrdiff_t>(n),
                              ext.begin() + static_cast<std::ptrdiff_t>(n + k + 1));
      return QPoly(std::move(c)).monic();
    }
    s.insert(std::move(ext));
    p = a.mul(p, w);
  }
  throw Error(ErrorCode::NotSimple, "element is not algebraic of bounded degree");
}

QVec StructureAlgebra::basis(std::size_t i) const {
  QVec v(dim);
  v[i] = 1;
  return v;
}

QVec StructureAlgebra::mul(const QVec& x, const QVec& y) const {
  QVec out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Rational s = x[i] * y[j];
      for (const auto& [k, v] : product[i][j]) out[k] += s * v;
    }
  }
  return out;
}

QMatrix StructureAlgebra::left(const QVec& x) const {
  QMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t l = 0; l < dim; ++l)
      for (const auto& [k, v] : product[i][l]) m(k, l) += x[i] * v;
  }
  return m;
}

Rational StructureAlgebra::trace_left(const QVec& x) const {
  Rational t = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t l = 0; l < dim; ++l) t += x[i] * coeff_of(product[i][l], l);
  }
  return t;
}

QVec StructureAlgebra::power(const QVec& x, unsigned k) const {
  QVec p = unity;
  for (unsigned i = 0; i < k; ++i) p = mul(p, x);
  return p;
}

QVec StructureAlgebra::eval(const QPoly& p, const QVec& x, const QVec& one) const {
  return evaluate(*this, p, x, one);
}

StructureAlgebra make_algebra(const std::vector<std::vector<QVec>>& products, QVec unity,
                              Provenance provenance, bool check_associative) {
  StructureAlgebra a;
  a.dim = products.size();
  a.product.resize(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) a.product[i].push_back(to_sparse(products[i][j]));
  a.unity = std::move(unity);
  a.provenance = provenance;
  a.associative = !check_associative || basis_associative(a);
  return a;
}

StructureAlgebra build_algebra(const CayleyTable& t) {
  StructureAlgebra a;
  const std::size_t n = t.order();
  a.unity_adjoined = !t.identity().has_value();
  a.dim = n + (a.unity_adjoined ? 1 : 0);
  a.provenance = t.kind() == TableKind::Loop ? Provenance::Loop : Provenance::Semigroup;
  a.product.assign(a.dim, std::vector<SparseVec>(a.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      std::uint32_t k;
      if (i == n) k = static_cast<std::uint32_t>(j);
      else if (j == n) k = static_cast<std::uint32_t>(i);
      else k = t(i, j);
      a.product[i][j] = {{k, Rational(1)}};
    }
  a.unity = a.basis(a.unity_adjoined ? n : *t.identity());
  for (std::size_t i = 0; i < n; ++i) {
    a.basis_names.push_back(t.label(i));
    a.named_elements.push_back(a.basis(i));
  }
  if (a.unity_adjoined) a.basis_names.push_back("1");
  a.associative = !t.associativity_witness().has_value();
  return a;
}

AlternativeCheck alternative_check(const StructureAlgebra& a) {
  AlternativeCheck r;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        const QVec ijk = basis_associator(a, i, j, k);
        if (is_zero(ijk)) continue;
        r.associative = false;
        // Alternating: swapping either adjacent pair negates the associator.
        if (!is_zero(add(ijk, basis_associator(a, j, i, k))) ||
            !is_zero(add(ijk, basis_associator(a, i, k, j)))) {
          r.alternative = false;
          r.witness = std::array<std::size_t, 3>{i, j, k};
          return r;
        }
      }
  // Diagonal terms (x, x, y) and (x, y, y) are covered: if ijk with i == j is
  // nonzero, the first swap test compares it with itself and fails.
  return r;
}

QVec RadicalSplit::embed(const QVec& q) const {
  QVec v(semisimple_quotient.dim + radical_dim);
  for (std::size_t k = 0; k < complement.size(); ++k) v[complement[k]] = q[k];
  return v;
}

QVec RadicalSplit::project(const QVec& x) const {
  Subspace j(x.size());
  for (const auto& r : radical_basis) j.insert(r);
  const QVec red = j.reduce(x);
  QVec q(complement.size());
  for (std::size_t k = 0; k < complement.size(); ++k) q[k] = red[complement[k]];
  return q;
}

RadicalSplit radical_split(const StructureAlgebra& a) {
  RadicalSplit r;
  if (!a.associative) {
    const auto alt = alternative_check(a);
    if (!alt.alternative)
      throw Error(ErrorCode::NonAssociativeUnsupported, "algebra is neither associative nor alternative");
    r.reduced_confidence = true;
  }
  const std::size_t n = a.dim;
  // Gram matrix of (x, y) -> tr(L_x L_y) on the basis.
  QMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      for (std::size_t l = 0; l < n; ++l)
        for (const auto& [k, v] : a.product[i][l]) t += v * coeff_of(a.product[j][k], l);
      g(i, j) = t;
      g(j, i) = t;
    }
  Subspace rad(n);
  for (auto& v : kernel(g)) rad.insert(std::move(v));
  r.radical_basis = rad.basis();
  r.radical_dim = rad.dim();

  for (const auto& x : r.radical_basis)
    for (std::size_t i = 0; i < n && r.radical_central; ++i)
      if (a.mul(x, a.basis(i)) != a.mul(a.basis(i), x)) r.radical_central = false;

  if (r.radical_dim > 0) {
    std::vector<QVec> power = r.radical_basis;
    r.nilpotency_index = 1;
    while (!power.empty()) {
      Subspace next(n);
      for (const auto& x : power)
        for (const auto& y : r.radical_basis) next.insert(a.mul(x, y));
      power = next.basis();
      ++r.nilpotency_index;
      if (r.nilpotency_index > static_cast<int>(n) + 1) break;
    }
  }

  std::vector<bool> is_pivot(n);
  for (auto p : rad.pivots()) is_pivot[p] = true;
  for (std::size_t k = 0; k < n; ++k)
    if (!is_pivot[k]) r.complement.push_back(k);

  if (r.radical_dim == 0) {
    r.semisimple_quotient = a;
  } else {
    const std::size_t q = r.complement.size();
    auto proj = [&](const QVec& x) {
      const QVec red = rad.reduce(x);
      QVec c(q);
      for (std::size_t k = 0; k < q; ++k) c[k] = red[r.complement[k]];
      return c;
    };
    std::vector<std::vector<QVec>> prod(q, std::vector<QVec>(q));
    for (std::size_t s = 0; s < q; ++s)
      for (std::size_t t = 0; t < q; ++t)
        prod[s][t] = proj(a.mul(a.basis(r.complement[s]), a.basis(r.complement[t])));
    r.semisimple_quotient = make_algebra(prod, proj(a.unity), Provenance::Quotient, !a.associative);
    for (const auto& x : a.named_elements) r.semisimple_quotient.named_elements.push_back(proj(x));
    for (auto k : r.complement) r.semisimple_quotient.basis_names.push_back(a.basis_names[k]);
  }
  r.semisimple_quotient.provenance = Provenance::Quotient;
  r.semisimple_quotient.unity_adjoined = a.unity_adjoined;
  return r;
}

std::vector<QVec> center_basis(const StructureAlgebra& a) {
  const std::size_t n = a.dim;
  Subspace rows(n);
  // Row k of the constraint for e_i: coefficient of e_k in z e_i - e_i z.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<QVec> m(n, QVec(n));
    for (std::size_t l = 0; l < n; ++l) {
      for (const auto& [k, v] : a.product[l][i]) m[k][l] += v;
      for (const auto& [k, v] : a.product[i][l]) m[k][l] -= v;
    }
    for (auto& row : m)
      if (!is_zero(row)) rows.insert(std::move(row));
  }
  std::vector<QVec> comm = null_space(rows);
  if (!a.associative && !comm.empty()) {
    const std::size_t c = comm.size();
    Subspace cons(c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const QVec ei = a.basis(i), ej = a.basis(j);
        std::vector<QVec> cols;
        for (const auto& z : comm) {
          cols.push_back(associator(a, z, ei, ej));
          cols.push_back(associator(a, ei, z, ej));
          cols.push_back(associator(a, ei, ej, z));
        }
        for (std::size_t pos = 0; pos < 3; ++pos)
          for (std::size_t k = 0; k < n; ++k) {
            QVec row(c);
            for (std::size_t t = 0; t < c; ++t) row[t] = cols[3 * t + pos][k];
            if (!is_zero(row)) cons.insert(std::move(row));
          }
        if (cons.dim() == c) return {};
      }
    std::vector<QVec> out;
    for (const auto& coef : null_space(cons)) {
      QVec z(n);
      for (std::size_t t = 0; t < c; ++t) axpy(z, coef[t], comm[t]);
      out.push_back(std::move(z));
    }
    comm = std::move(out);
  }
  Subspace s(n);
  for (auto& z : comm) s.insert(std::move(z));
  return s.basis();
}

CentralDecomposition central_decomposition(const StructureAlgebra& ss) {
  const auto z = center_basis(ss);
  std::mt19937_64 rng(0x5eed);
  std::vector<QVec> central_named;
  {
    Subspace zs(ss.dim);
    for (const auto& v : z) zs.insert(v);
    for (const auto& x : ss.named_elements)
      if (zs.contains(x)) central_named.push_back(x);
  }

  std::vector<FieldPiece> done;
  std::vector<QVec> pending{ss.unity};
  while (!pending.empty()) {
    const QVec e = pending.back();
    pending.pop_back();
    std::vector<QVec> ez;
    for (const auto& v : z) ez.push_back(ss.mul(e, v));
    const std::size_t d = span_dim(ez, ss.dim);
    if (d == 1) {
      done.push_back({e, 1});
      continue;
    }
    std::vector<QVec> candidates;
    for (const auto& x : central_named) candidates.push_back(ss.mul(e, x));
    for (const auto& v : ez) candidates.push_back(v);
    bool resolved = false;
    for (std::size_t attempt = 0; attempt < candidates.size() + 200 && !resolved; ++attempt) {
      QVec w;
      if (attempt < candidates.size()) {
        w = candidates[attempt];
      } else {
        std::uniform_int_distribution<int> coef(-3 - static_cast<int>(attempt / 20),
                                                3 + static_cast<int>(attempt / 20));
        w = QVec(ss.dim);
        for (const auto& v : ez) axpy(w, coef(rng), v);
      }
      const QPoly m = minimal_polynomial(ss, w, e);
      const auto fs = factor(m);
      if (fs.size() == 1 && fs[0].multiplicity == 1) {
        if (m.degree() == static_cast<int>(d)) {
          done.push_back({e, d});
          resolved = true;
        }
        continue;
      }
      for (const auto& f : fs)
        if (f.multiplicity > 1)
          throw Error(ErrorCode::NotSimple, "center is not semisimple (repeated factor)");
      for (const auto& f : fs) {
        const QPoly cof = divmod(m, f.poly).quot;
        const auto eg = extended_gcd(cof, f.poly);
        const QPoly idem_poly = (eg.s * cof) % m;
        pending.push_back(evaluate(ss, idem_poly, w, e));
      }
      resolved = true;
    }
    if (!resolved) throw Error(ErrorCode::NotSimple, "could not split the center");
  }

  // Deterministic order: by component dimension, then center dimension, then idempotent.
  std::vector<std::pair<std::size_t, FieldPiece>> keyed;
  for (auto& p : done) {
    std::vector<QVec> im;
    for (std::size_t k = 0; k < ss.dim; ++k) im.push_back(ss.mul(p.idempotent, ss.basis(k)));
    keyed.emplace_back(span_dim(im, ss.dim), std::move(p));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    if (x.second.center_dim != y.second.center_dim) return x.second.center_dim < y.second.center_dim;
    return x.second.idempotent > y.second.idempotent;
  });

  CentralDecomposition cd;
  for (auto& [dim, p] : keyed) {
    Subspace basis(ss.dim);
    cd.components.push_back(restrict_to_ideal(ss, p.idempotent, basis));
    cd.component_bases.push_back(basis.basis());
    cd.idempotents.push_back(std::move(p.idempotent));
  }
  return cd;
}

const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::Field: return "Field";
    case ComponentKind::QuaternionDefinite: return "QuaternionDefinite";
    case ComponentKind::QuaternionIndefiniteDivision: return "QuaternionIndefiniteDivision";
    case ComponentKind::MatrixTwoOverQ: return "MatrixTwoOverQ";
    case ComponentKind::MatrixOther: return "MatrixOther";
    case ComponentKind::OctonionDefinite: return "OctonionDefinite";
    case ComponentKind::Other: return "Other";
  }
  return "?";
}

const char* to_string(UnitTag t) {
  switch (t) {
    case UnitTag::Finite: return "Finite";
    case UnitTag::VirtuallyZ: return "VirtuallyZ";
    case UnitTag::VirtuallyFree: return "VirtuallyFree";
    case UnitTag::FuchsianLike: return "FuchsianLike";
    case UnitTag::ContainsZ2: return "ContainsZ2";
    case UnitTag::Indeterminate: return "Indeterminate";
  }
  return "?";
}

bool is_infinite(UnitTag t) {
  return t == UnitTag::VirtuallyZ || t == UnitTag::VirtuallyFree || t == UnitTag::FuchsianLike;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p) {
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  Integer u = squarefree_class(a), v = squarefree_class(b);
  const int alpha = valuation(u, p), beta = valuation(v, p);
  if (p == 2) {
    const long um = mod8(u), vm = mod8(v);
    const long eps_u = ((um - 1) / 2) % 2, eps_v = ((vm - 1) / 2) % 2;
    const long om_u = ((um * um - 1) / 8) % 2, om_v = ((vm * vm - 1) / 8) % 2;
    const long e = eps_u * eps_v + alpha * om_v + beta * om_u;
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  const Integer half = (p - 1) / 2;
  if (alpha % 2 && beta % 2 && mpz_odd_p(half.get_mpz_t())) s = -s;
  Integer um = u % p, vm = v % p;
  if (um < 0) um += p;
  if (vm < 0) vm += p;
  if (beta % 2) s *= mpz_legendre(um.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2) s *= mpz_legendre(vm.get_mpz_t(), p.get_mpz_t());
  return s;
}

namespace {

struct QuaternionData {
  Rational a, b;
  bool split;
};

// Scalar s with x = s * 1 in a central simple algebra of dimension `dim` over Q.
Rational scalar_part(const StructureAlgebra& b, const QVec& x) {
  return b.trace_left(x) / Rational(static_cast<long>(b.dim));
}

QuaternionData analyze_quaternion(const StructureAlgebra& b) {
  // Pure (reduced-trace-zero) part of each basis element spans a 3-space.
  Subspace pure_span(b.dim);
  for (std::size_t k = 0; k < b.dim; ++k) {
    QVec x = b.basis(k);
    axpy(x, -scalar_part(b, x), b.unity);
    pure_span.insert(x);
  }
  std::vector<QVec> v = pure_span.basis();
  auto bil = [&](const QVec& x, const QVec& y) -> Rational {
    return scalar_part(b, add(b.mul(x, y), b.mul(y, x))) / 2;
  };
  // Symmetric Gram-Schmidt diagonalization of q(x) = x^2.
  std::vector<Rational> diag;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (bil(v[i], v[i]) == 0) {
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (bil(v[j], v[j]) != 0) {
          std::swap(v[i], v[j]);
          break;
        }
    }
    if (bil(v[i], v[i]) == 0) {
      // Remaining vectors are all isotropic; a non-orthogonal pair sums to a
      // non-isotropic vector.
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (bil(v[i], v[j]) != 0) {
          v[i] = add(v[i], v[j]);
          break;
        }
    }
    const Rational qi = bil(v[i], v[i]);
    if (qi == 0) throw Error(ErrorCode::NotSimple, "degenerate reduced norm form");
    for (std::size_t j = i + 1; j < v.size(); ++j) axpy(v[j], -bil(v[i], v[j]) / qi, v[i]);
    diag.push_back(qi);
  }
  QuaternionData d{diag.at(0), diag.at(1), true};
  if (d.a < 0 && d.b < 0) {
    d.split = false;
    return d;
  }
  std::vector<Integer> primes{2};
  for (const auto& r : {d.a, d.b})
    for (auto& p : odd_prime_divisors(squarefree_class(r))) primes.push_back(p);
  for (const auto& p : primes)
    if (hilbert_symbol(d.a, d.b, p) == -1) d.split = false;
  return d;
}

bool octonion_norm_definite(const StructureAlgebra& b) {
  if (!alternative_check(b).alternative) return false;
  // x^2 - t(x) x + n(x) = 0 with t(x) = tr(L_x)/4 on an 8-dimensional algebra.
  auto norm = [&](const QVec& x) -> std::optional<Rational> {
    const Rational t = b.trace_left(x) / 4;
    QVec r = scale(t, x);
    r = sub(r, b.mul(x, x));
    const Rational s = scalar_part(b, r);
    if (r != scale(s, b.unity)) return std::nullopt;
    return s;
  };
  QMatrix g(b.dim, b.dim);
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) {
      const auto nij = norm(add(b.basis(i), b.basis(j)));
      const auto ni = norm(b.basis(i)), nj = norm(b.basis(j));
      if (!nij || !ni || !nj) return false;
      g(i, j) = *nij - *ni - *nj;
    }
  return positive_definite(g);
}

}  // namespace

ComponentDescriptor component_descriptor(const StructureAlgebra& b) {
  ComponentDescriptor d;
  d.dim = b.dim;
  const auto z = center_basis(b);
  const std::size_t f = z.size();
  if (f == 0) throw Error(ErrorCode::NotSimple, "trivial center");
  if (f == 1) {
    d.center_minpoly = QPoly(std::vector<Rational>{-1, 1});
    d.center_generator = b.unity;
  } else {
    Subspace zs(b.dim);
    for (const auto& v : z) zs.insert(v);
    std::vector<QVec> candidates;
    for (const auto& x : b.named_elements)
      if (zs.contains(x)) candidates.push_back(x);
    for (const auto& v : z) candidates.push_back(v);
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = i + 1; j < z.size(); ++j) candidates.push_back(add(z[i], z[j]));
    std::optional<std::pair<std::size_t, std::string>> best;
    auto consider = [&](const QVec& w) {
      const QPoly m = minimal_polynomial(b, w, b.unity);
      const auto fs = factor(m);
      if (fs.size() != 1 || fs[0].multiplicity != 1)
        throw Error(ErrorCode::NotSimple, "center minimal polynomial is reducible");
      if (m.degree() != static_cast<int>(f)) return;
      const auto h = poly_height(m);
      if (!best || h < *best) {
        best = h;
        d.center_minpoly = m;
        d.center_generator = w;
      }
    };
    for (const auto& w : candidates) consider(w);
    std::mt19937_64 rng(0x5eed);
    for (int attempt = 0; !best && attempt < 200; ++attempt) {
      std::uniform_int_distribution<int> coef(-3 - attempt / 20, 3 + attempt / 20);
      QVec w(b.dim);
      for (const auto& v : z) axpy(w, coef(rng), v);
      consider(w);
    }
    if (!best) throw Error(ErrorCode::NotSimple, "no generator found for the center");
  }
  d.r1 = real_root_count(d.center_minpoly);
  d.r2 = (d.center_minpoly.degree() - d.r1) / 2;
  d.dim_over_center = b.dim / f;
  std::size_t m = 0;
  while ((m + 1) * (m + 1) <= d.dim_over_center) ++m;
  const bool square = m * m == d.dim_over_center && b.dim % f == 0;

  if (!b.associative) {
    if (f == 1 && b.dim == 8 && octonion_norm_definite(b)) {
      d.kind = ComponentKind::OctonionDefinite;
    } else {
      d.kind = ComponentKind::Other;
      d.note = "non-associative component outside the definite octonion case";
    }
  } else if (!square) {
    d.kind = ComponentKind::Other;
    d.note = "dimension over the center is not a square";
  } else if (m == 1) {
    d.kind = ComponentKind::Field;
  } else if (m == 2 && f == 1) {
    const auto q = analyze_quaternion(b);
    d.quaternion_invariants = std::make_pair(q.a, q.b);
    if (q.a < 0 && q.b < 0) d.kind = ComponentKind::QuaternionDefinite;
    else d.kind = q.split ? ComponentKind::MatrixTwoOverQ : ComponentKind::QuaternionIndefiniteDivision;
  } else if (m == 2) {
    d.kind = ComponentKind::Other;
    d.note = "quaternion algebra over a non-rational center";
  } else {
    d.kind = ComponentKind::MatrixOther;
  }
  d.unit_class = unit_class(d);
  return d;
}

UnitClass unit_class(const ComponentDescriptor& d) {
  switch (d.kind) {
    case ComponentKind::Field: {
      const int rank = d.r1 + d.r2 - 1;
      const std::string why = "Dirichlet rank " + std::to_string(d.r1) + "+" + std::to_string(d.r2) +
                              "-1 = " + std::to_string(rank);
      if (rank == 0) return {UnitTag::Finite, why};
      if (rank == 1) return {UnitTag::VirtuallyZ, why};
      return {UnitTag::ContainsZ2, why};
    }
    case ComponentKind::QuaternionDefinite:
      return {UnitTag::Finite, "totally definite quaternion algebra over Q"};
    case ComponentKind::MatrixTwoOverQ:
      return {UnitTag::VirtuallyFree, "M2(Q): SL2(Z) is virtually free"};
    case ComponentKind::QuaternionIndefiniteDivision:
      return {UnitTag::FuchsianLike, "indefinite division quaternion algebra over Q: cocompact Fuchsian"};
    case ComponentKind::MatrixOther:
      return {UnitTag::ContainsZ2, "matrix degree at least 3"};
    case ComponentKind::OctonionDefinite:
      return {UnitTag::Finite, "definite octonion algebra over Q"};
    case ComponentKind::Other:
      return {UnitTag::Indeterminate, d.note.empty() ? "unidentified component" : d.note};
  }
  return {UnitTag::Indeterminate, ""};
}

std::optional<QVec> nilpotent_search(const StructureAlgebra& b, int height) {
  const std::size_t n = b.dim;
  double space = 1;
  for (std::size_t i = 0; i < n; ++i) space *= 2.0 * height + 1;
  if (space > 5e6) throw Error(ErrorCode::CapExceeded, "nilpotent search box too large");
  std::vector<int> c(n, -height);
  while (true) {
    if (std::any_of(c.begin(), c.end(), [](int x) { return x != 0; })) {
      QVec x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = c[i];
      if (is_zero(b.mul(x, x))) return x;
    }
    std::size_t i = 0;
    while (i < n && c[i] == height) c[i++] = -height;
    if (i == n) return std::nullopt;
    ++c[i];
  }
}

std::vector<QVec> lift_idempotents(const StructureAlgebra& a, const RadicalSplit& split,
                                   const CentralDecomposition& cd) {
  std::vector<QVec> lifted;
  QVec rest = a.unity;
  for (std::size_t k = 0; k < cd.idempotents.size(); ++k) {
    if (k + 1 == cd.idempotents.size()) {
      lifted.push_back(rest);
      break;
    }
    QVec y = a.mul(a.mul(rest, split.embed(cd.idempotents[k])), rest);
    for (int it = 0; it < 64; ++it) {
      const QVec y2 = a.mul(y, y);
      if (y2 == y) break;
      const QVec y3 = a.mul(y2, y);
      y = sub(scale(3, y2), scale(2, y3));
    }
    if (a.mul(y, y) != y) throw Error(ErrorCode::NotSimple, "idempotent lifting did not converge");
    rest = sub(rest, y);
    lifted.push_back(std::move(y));
  }
  return lifted;
}

AlgebraAnalysis analyze_algebra(const StructureAlgebra& a) {
  AlgebraAnalysis r;
  r.algebra = a;
  r.alt = a.associative ? AlternativeCheck{} : alternative_check(a);
  if (!r.alt.alternative)
    throw Error(ErrorCode::NonAssociativeUnsupported, "algebra is neither associative nor alternative");
  r.split = radical_split(a);
  r.decomposition = central_decomposition(r.split.semisimple_quotient);
  for (const auto& c : r.decomposition.components) r.descriptors.push_back(component_descriptor(c));
  return r;
}

}  // namespace hypunits
