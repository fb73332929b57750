#include "hypunits/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "hypunits/error.hpp"

namespace hypunits {

namespace {

constexpr Elem kUnset = 0xFFFF;

class Search {
 public:
  explicit Search(std::size_t n) : n_(n), t_(n * n, kUnset) {}

  template <class Emit>
  void run(std::size_t cell, Emit&& emit) {
    if (cell == n_ * n_) {
      emit(t_);
      return;
    }
    const std::size_t x = cell / n_, y = cell % n_;
    for (std::size_t v = 0; v < n_; ++v) {
      t_[cell] = static_cast<Elem>(v);
      if (consistent(x, y)) run(cell + 1, emit);
    }
    t_[cell] = kUnset;
  }

 private:
  Elem at(std::size_t a, std::size_t b) const { return t_[a * n_ + b]; }

  // Checks every fully defined triple that uses the cell (x, y).
  bool consistent(std::size_t x, std::size_t y) const {
    const Elem v = at(x, y);
    for (std::size_t c = 0; c < n_; ++c) {  // (x y) c = x (y c)
      const Elem l = at(v, c), yc = at(y, c);
      if (l == kUnset || yc == kUnset) continue;
      const Elem r = at(x, yc);
      if (r != kUnset && l != r) return false;
    }
    for (std::size_t a = 0; a < n_; ++a) {  // (a x) y = a (x y)
      const Elem ax = at(a, x), r = at(a, v);
      if (ax == kUnset || r == kUnset) continue;
      const Elem l = at(ax, y);
      if (l != kUnset && l != r) return false;
    }
    for (std::size_t a = 0; a < n_; ++a)  // (a b) y with a b = x
      for (std::size_t b = 0; b < n_; ++b) {
        if (at(a, b) != x) continue;
        const Elem by = at(b, y);
        if (by == kUnset) continue;
        const Elem r = at(a, by);
        if (r != kUnset && r != v) return false;
      }
    for (std::size_t b = 0; b < n_; ++b)  // x (b c) with b c = y
      for (std::size_t c = 0; c < n_; ++c) {
        if (at(b, c) != y) continue;
        const Elem xb = at(x, b);
        if (xb == kUnset) continue;
        const Elem l = at(xb, c);
        if (l != kUnset && l != v) return false;
      }
    return true;
  }

  std::size_t n_;
  std::vector<Elem> t_;
};

std::vector<Elem> permuted(const std::vector<Elem>& t, std::size_t n, const std::vector<Elem>& p, bool transpose) {
  std::vector<Elem> out(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem v = transpose ? t[y * n + x] : t[x * n + y];
      out[p[x] * n + p[y]] = p[v];
    }
  return out;
}

std::vector<Elem> canonical(const std::vector<Elem>& t, std::size_t n, Dedup dedup) {
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  std::vector<Elem> best = t;
  do {
    best = std::min(best, permuted(t, n, p, false));
    if (dedup == Dedup::Equivalence) best = std::min(best, permuted(t, n, p, true));
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

bool has_identity(const std::vector<Elem>& t, std::size_t n) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[e * n + x] == x && t[x * n + e] == x;
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::vector<Elem> canonical_form(const CayleyTable& t, Dedup dedup) {
  return canonical(t.entries(), t.order(), dedup);
}

std::vector<CayleyTable> enumerate_tables(std::size_t n, const EnumerateOptions& opts) {
  const std::size_t cap = opts.allow_order_six ? 6 : 5;
  if (n < 1 || n > cap)
    throw Error(ErrorCode::CapExceeded, "enumeration order " + std::to_string(n) + " outside 1.." + std::to_string(cap));
  std::set<std::vector<Elem>> forms;
  Search(n).run(0, [&](const std::vector<Elem>& t) {
    if (opts.monoid_only && !has_identity(t, n)) return;
    forms.insert(canonical(t, n, opts.dedup));
  });
  std::vector<CayleyTable> out;
  for (const auto& f : forms) out.emplace_back(n, f, TableKind::Semigroup);
  return out;
}

CensusRow census(std::size_t n, const EnumerateOptions& opts, const std::function<void(const CayleyTable&, const CrosscheckRecord&)>& sink) {
  const auto start = std::chrono::steady_clock::now();
  CensusRow row;
  row.order = n;
  const auto tables = enumerate_tables(n, opts);
  row.count = tables.size();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const auto rec = crosscheck(tables[i], "order" + std::to_string(n) + "#" + std::to_string(i + 1));
    const auto p = static_cast<std::size_t>(rec.paper.verdict);
    const auto o = static_cast<std::size_t>(rec.oracle.hyperbolic);
    ++row.histogram[p][o];
    if (sink) sink(tables[i], rec);
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace hypunits
