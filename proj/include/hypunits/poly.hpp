#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace hypunits {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense univariate polynomial over Q, coefficients from the constant term up.
// The zero polynomial has no coefficients and degree -1.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly x();
  static QPoly monomial(std::size_t k, const Rational& c = 1);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  QPoly monic() const;
  QPoly derivative() const;
  Rational operator()(const Rational& v) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& s, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct QDivMod {
  QPoly quot, rem;
};
QDivMod divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
QPoly gcd(const QPoly& a, const QPoly& b);  // monic, or zero

struct QExtGcd {
  QPoly g, s, t;  // s*a + t*b = g, g monic
};
QExtGcd extended_gcd(const QPoly& a, const QPoly& b);

QPoly squarefree_part(const QPoly& f);  // monic

// Monic irreducible factors of a nonzero polynomial over Q, each listed with
// its multiplicity, sorted by (degree, coefficients). Throws
// FactorizationOverflow when a configured cap is exceeded.
struct Factor {
  QPoly poly;
  int multiplicity;
};
std::vector<Factor> factor(const QPoly& f);

struct FactorLimits {
  int max_degree = 64;
  std::size_t max_coefficient_bits = 8192;
  std::size_t max_subsets = 1u << 20;
};
// Defaults, with max_degree overridable through HYPUNITS_MAX_DEGREE.
FactorLimits factor_limits();

// Number of distinct real roots (Sturm chain).
int real_root_count(const QPoly& f);

QPoly cyclotomic(std::size_t n);
// True when f is monic irreducible and equal to some cyclotomic polynomial.
bool is_cyclotomic(const QPoly& f);
// True when every root of f is a simple root of unity (f divides x^N - 1 for some N).
bool divides_power_minus_one(const QPoly& f);

}  // namespace hypunits
