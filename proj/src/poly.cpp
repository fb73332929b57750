#include "hypunits/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

#include "hypunits/error.hpp"

namespace hypunits {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(const Rational& c) { return QPoly({c}); }
QPoly QPoly::x() { return QPoly({0, 1}); }
QPoly QPoly::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  const Rational lc = leading();
  std::vector<Rational> v(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) v[k] = c_[k] / lc;
  return QPoly(std::move(v));
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<long>(k);
  return QPoly(std::move(v));
}

Rational QPoly::operator()(const Rational& v) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(v));
}

QPoly operator*(const Rational& s, const QPoly& a) {
  std::vector<Rational> v(a.c_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = s * a.c_[k];
  return QPoly(std::move(v));
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      out << mag.get_str();
      if (k > 0) out << "*";
    }
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

QDivMod divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {QPoly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lc = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = r[static_cast<std::size_t>(k)] / lc;
    q[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).rem; }

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

QExtGcd extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b, s0 = QPoly::constant(1), s1, t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

QPoly squarefree_part(const QPoly& f) {
  if (f.degree() <= 0) return f.monic();
  return divmod(f, gcd(f, f.derivative())).quot.monic();
}

FactorLimits factor_limits() {
  FactorLimits lim;
  if (const char* env = std::getenv("HYPUNITS_MAX_DEGREE")) {
    const int v = std::atoi(env);
    if (v > 0) lim.max_degree = v;
  }
  return lim;
}

namespace {

// ---- integer polynomials ----

using ZPoly = std::vector<Integer>;  // constant term first, no trailing zeros

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

Integer zcontent(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Primitive integer polynomial with positive leading coefficient.
ZPoly primitive_of(const QPoly& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : f.coeffs()) z.push_back(Integer(c * den));
  const Integer g = zcontent(z);
  for (auto& c : z) c /= g;
  if (z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

QPoly to_qpoly(const ZPoly& z) {
  std::vector<Rational> v(z.begin(), z.end());
  return QPoly(std::move(v));
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

// Exact division over Z; returns false when b does not divide a.
bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
  ZPoly r = a;
  const int db = zdeg(b);
  if (zdeg(a) < db) return false;
  quot.assign(static_cast<std::size_t>(zdeg(a) - db + 1), 0);
  for (int k = zdeg(a); k >= db; --k) {
    auto& rk = r[static_cast<std::size_t>(k)];
    if (rk == 0) continue;
    if (!mpz_divisible_p(rk.get_mpz_t(), b.back().get_mpz_t())) return false;
    const Integer c = rk / b.back();
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  for (int k = 0; k < db; ++k)
    if (r[static_cast<std::size_t>(k)] != 0) return false;
  ztrim(quot);
  return true;
}

// ---- polynomials over F_p, p < 2^31 ----

using u64 = std::uint64_t;
using PPoly = std::vector<u64>;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    for (a %= p; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  void trim(PPoly& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  PPoly reduce(const ZPoly& z) const {
    PPoly f;
    for (const auto& c : z) {
      Integer m = c % static_cast<unsigned long>(p);
      if (m < 0) m += static_cast<unsigned long>(p);
      f.push_back(m.get_ui());
    }
    trim(f);
    return f;
  }
  PPoly add(const PPoly& a, const PPoly& b) const {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < r.size(); ++k)
      r[k] = add(k < a.size() ? a[k] : 0, k < b.size() ? b[k] : 0);
    trim(r);
    return r;
  }
  PPoly sub(const PPoly& a, const PPoly& b) const {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < r.size(); ++k)
      r[k] = sub(k < a.size() ? a[k] : 0, k < b.size() ? b[k] : 0);
    trim(r);
    return r;
  }
  PPoly mul(const PPoly& a, const PPoly& b) const {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
  }
  void divmod(const PPoly& a, const PPoly& b, PPoly& q, PPoly& r) const {
    r = a;
    q.clear();
    if (r.size() < b.size()) return;
    const std::size_t db = b.size() - 1;
    q.assign(r.size() - db, 0);
    const u64 il = inv(b.back());
    for (std::size_t k = r.size(); k-- > db;) {
      const u64 c = mul(r[k], il);
      q[k - db] = c;
      if (c)
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = sub(r[k - db + j], mul(c, b[j]));
    }
    r.resize(db);
    trim(r);
    trim(q);
  }
  PPoly rem(const PPoly& a, const PPoly& b) const {
    PPoly q, r;
    divmod(a, b, q, r);
    return r;
  }
  PPoly quo(const PPoly& a, const PPoly& b) const {
    PPoly q, r;
    divmod(a, b, q, r);
    return q;
  }
  PPoly monic(PPoly f) const {
    const u64 il = inv(f.back());
    for (auto& c : f) c = mul(c, il);
    return f;
  }
  PPoly gcd(PPoly a, PPoly b) const {
    while (!b.empty()) {
      PPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return a.empty() ? a : monic(a);
  }
  // s*a + t*b = 1 given coprime a, b.
  void bezout(const PPoly& a, const PPoly& b, PPoly& s, PPoly& t) const {
    PPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      PPoly q, r;
      divmod(r0, r1, q, r);
      r0 = std::move(r1);
      r1 = std::move(r);
      PPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const u64 il = inv(r0.front());
    s = s0;
    t = t0;
    for (auto& c : s) c = mul(c, il);
    for (auto& c : t) c = mul(c, il);
  }
  PPoly powmod(PPoly base, const Integer& e, const PPoly& m) const {
    PPoly r{1};
    base = rem(base, m);
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t k = bits; k-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), k)) r = rem(mul(r, base), m);
    }
    return r;
  }
  PPoly derivative(const PPoly& f) const {
    PPoly d;
    for (std::size_t k = 1; k < f.size(); ++k) d.push_back(mul(f[k], k % p));
    trim(d);
    return d;
  }
};

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Equal-degree splitting of a monic squarefree product of degree-d irreducibles.
void equal_degree_split(const Fp& F, const PPoly& g, std::size_t d, std::mt19937_64& rng,
                        std::vector<PPoly>& out) {
  if (g.size() - 1 == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  while (true) {
    PPoly a(g.size() - 1);
    for (auto& c : a) c = rng() % F.p;
    F.trim(a);
    if (a.size() < 2) continue;
    PPoly b = F.powmod(a, e, g);
    b = F.sub(b, PPoly{1});
    PPoly h = F.gcd(b, g);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree_split(F, h, d, rng, out);
      equal_degree_split(F, F.monic(F.quo(g, h)), d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial over F_p (p odd).
std::vector<PPoly> factor_mod_p(const Fp& F, PPoly f) {
  std::vector<PPoly> out;
  std::mt19937_64 rng(0x5eed);
  PPoly h{0, 1};
  const PPoly x{0, 1};
  for (std::size_t d = 1; f.size() > 1 && 2 * d <= f.size() - 1; ++d) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
    PPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      equal_degree_split(F, g, d, rng, out);
      f = F.monic(F.quo(f, g));
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

// ---- Hensel lifting over Z/p^k ----

Integer smod(const Integer& v, const Integer& m) {
  Integer r = v % m;
  if (r < 0) r += m;
  return r;
}

ZPoly zreduce(const ZPoly& f, const Integer& m) {
  ZPoly r;
  for (const auto& c : f) r.push_back(smod(c, m));
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = (k < a.size() ? a[k] : Integer(0)) - (k < b.size() ? b[k] : Integer(0));
  ztrim(r);
  return r;
}

ZPoly from_ppoly(const PPoly& f) { return ZPoly(f.begin(), f.end()); }

// Lifts monic f = g*h (mod p) to (mod p^k); f must be monic modulo p^k.
void hensel_lift(const Fp& F, const ZPoly& f, ZPoly& g, ZPoly& h, std::size_t k) {
  PPoly s, t;
  const PPoly gp = F.reduce(g), hp = F.reduce(h);
  F.bezout(gp, hp, s, t);
  const Integer p(static_cast<unsigned long>(F.p));
  Integer pj = p;
  for (std::size_t j = 1; j < k; ++j) {
    const Integer next = pj * p;
    ZPoly diff = zsub(zreduce(f, next), zmul(g, h));
    for (auto& c : diff) c /= pj;  // exact: f == g*h mod p^j
    const PPoly e = F.reduce(diff);
    PPoly q, tau;
    F.divmod(F.mul(t, e), gp, q, tau);
    const PPoly sigma = F.add(F.mul(s, e), F.mul(q, hp));
    ZPoly gg = g, hh = h;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      if (gg.size() <= i) gg.resize(i + 1);
      gg[i] += pj * tau[i];
    }
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (hh.size() <= i) hh.resize(i + 1);
      hh[i] += pj * sigma[i];
    }
    g = zreduce(gg, next);
    h = zreduce(hh, next);
    pj = next;
  }
}

std::size_t bit_size(const Integer& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

// Irreducible factors over Z of a primitive squarefree polynomial with
// positive leading coefficient, degree >= 1.
std::vector<ZPoly> zassenhaus(const ZPoly& f, const FactorLimits& lim) {
  const int n = zdeg(f);
  if (n == 1) return {f};
  const Integer lc = f.back();
  // Pick, among a few good primes, the one giving the fewest modular factors.
  Fp best{0};
  std::vector<PPoly> best_factors;
  int good = 0;
  for (u64 p = 3; good < 6 && p < 100000; p += 2) {
    if (!is_prime_small(p)) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    const Fp F{p};
    const PPoly fp = F.reduce(f);
    if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
    ++good;
    auto facs = factor_mod_p(F, F.monic(fp));
    if (best.p == 0 || facs.size() < best_factors.size()) {
      best = F;
      best_factors = std::move(facs);
    }
    if (best_factors.size() == 1) break;
  }
  if (best.p == 0) throw Error(ErrorCode::FactorizationOverflow, "no good prime found");
  if (best_factors.size() == 1) return {f};

  // Coefficient bound for factors of lc * f: lc * 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound = (bound + 1) * lc;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  bound = 2 * bound + 1;
  if (bit_size(bound) > lim.max_coefficient_bits)
    throw Error(ErrorCode::FactorizationOverflow, "coefficient bound exceeds the configured cap");
  const Integer p(static_cast<unsigned long>(best.p));
  std::size_t k = 1;
  Integer pk = p;
  while (pk <= bound) pk *= p, ++k;

  // Monic image of f modulo p^k.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  ZPoly fm;
  for (const auto& c : f) fm.push_back(smod(c * lc_inv, pk));
  ztrim(fm);

  std::vector<ZPoly> lifted;
  ZPoly rest = fm;
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    ZPoly g = from_ppoly(best_factors[i]);
    PPoly hp{1};
    for (std::size_t j = i + 1; j < best_factors.size(); ++j) hp = best.mul(hp, best_factors[j]);
    ZPoly h = from_ppoly(hp);
    hensel_lift(best, rest, g, h, k);
    lifted.push_back(g);
    rest = h;
  }
  lifted.push_back(rest);

  // Recombination by subsets of increasing size.
  std::vector<ZPoly> result;
  ZPoly remaining = f;
  std::vector<std::size_t> active(lifted.size());
  std::iota(active.begin(), active.end(), 0);
  const Integer half = pk / 2;
  std::size_t tried = 0;
  for (std::size_t size = 1; 2 * size <= active.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (++tried > lim.max_subsets)
        throw Error(ErrorCode::FactorizationOverflow, "recombination subset cap exceeded");
      const Integer rlc = remaining.back();
      ZPoly cand{rlc};
      for (auto i : idx) cand = zreduce(zmul(cand, lifted[active[i]]), pk);
      for (auto& c : cand)
        if (c > half) c -= pk;
      ztrim(cand);
      const Integer cc = zcontent(cand);
      for (auto& c : cand) c /= cc;
      ZPoly quot;
      if (zdivide(remaining, cand, quot)) {
        result.push_back(cand);
        remaining = quot;
        std::vector<std::size_t> next;
        for (std::size_t j = 0; j < active.size(); ++j)
          if (std::find(idx.begin(), idx.end(), j) == idx.end()) next.push_back(active[j]);
        active = std::move(next);
        found = true;
        break;
      }
      // Next combination.
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == active.size() - size + static_cast<std::size_t>(pos)) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (zdeg(remaining) > 0) {
    if (remaining.back() < 0)
      for (auto& c : remaining) c = -c;
    result.push_back(remaining);
  }
  return result;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    const auto& x = a.coeffs()[static_cast<std::size_t>(k)];
    const auto& y = b.coeffs()[static_cast<std::size_t>(k)];
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

std::vector<Factor> factor(const QPoly& f) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  const auto lim = factor_limits();
  if (f.degree() > lim.max_degree)
    throw Error(ErrorCode::FactorizationOverflow,
                "degree " + std::to_string(f.degree()) + " exceeds cap " + std::to_string(lim.max_degree));
  std::vector<Factor> out;
  if (f.degree() == 0) return out;
  // Yun's squarefree decomposition.
  QPoly a = f.monic();
  QPoly b = a.derivative();
  QPoly c = gcd(a, b);
  QPoly w = divmod(a, c).quot;
  QPoly y = divmod(b, c).quot;
  QPoly z = y - w.derivative();
  int mult = 1;
  while (w.degree() > 0) {
    QPoly g = gcd(w, z);
    if (g.degree() > 0) {
      for (const auto& zf : zassenhaus(primitive_of(g), lim)) out.push_back({to_qpoly(zf).monic(), mult});
    }
    w = divmod(w, g).quot;
    y = divmod(z, g).quot;
    z = y - w.derivative();
    ++mult;
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
    return poly_less(x.poly, y.poly) || (x.poly == y.poly && x.multiplicity < y.multiplicity);
  });
  return out;
}

int real_root_count(const QPoly& f) {
  if (f.degree() <= 0) return 0;
  const QPoly sf = squarefree_part(f);
  std::vector<QPoly> chain{sf, sf.derivative()};
  while (chain.back().degree() > 0) {
    QPoly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(Rational(-1) * r);
  }
  const auto variations = [&](bool plus_inf) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
      int s = sgn(p.leading());
      if (!plus_inf && p.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

QPoly cyclotomic(std::size_t n) {
  QPoly p = QPoly::monomial(n) - QPoly::constant(1);
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0) p = divmod(p, cyclotomic(d)).quot;
  return p;
}

namespace {
std::size_t euler_phi(std::size_t n) {
  std::size_t r = n;
  for (std::size_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      r -= r / q;
    }
  if (n > 1) r -= r / n;
  return r;
}
}  // namespace

bool is_cyclotomic(const QPoly& f) {
  if (f.degree() < 1 || f.leading() != 1) return false;
  const auto d = static_cast<std::size_t>(f.degree());
  // phi(n) >= sqrt(n / 2), so n <= 2 d^2.
  for (std::size_t n = 1; n <= 2 * d * d + 2; ++n)
    if (euler_phi(n) == d && cyclotomic(n) == f) return true;
  return false;
}

bool divides_power_minus_one(const QPoly& f) {
  if (f.degree() < 1) return false;
  for (const auto& fac : factor(f))
    if (fac.multiplicity != 1 || !is_cyclotomic(fac.poly)) return false;
  return true;
}

}  // namespace hypunits
