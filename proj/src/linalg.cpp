#include "hypunits/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace hypunits {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

QVec QMatrix::row(std::size_t i) const {
  return QVec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  assert(a.cols_ == b.rows_);
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += v * b(k, j);
    }
  return c;
}

QVec QMatrix::apply(const QVec& v) const {
  QVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0 && (*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Echelon rref(QMatrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = QMatrix(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e.reduced(i, j) = m(i, j);
  return e;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::vector<QVec> kernel(const QMatrix& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols());
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(QMatrix m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto e = rref(aug);
  QVec x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, a.cols());
  }
  return x;
}

QVec Subspace::reduce(QVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v[piv_[i]] != 0) axpy(v, -Rational(v[piv_[i]]), rows_[i]);
  return v;
}

bool Subspace::insert(QVec v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < n_ && v[p] == 0) ++p;
  if (p == n_) return false;
  const Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  for (auto& r : rows_)
    if (r[p] != 0) axpy(r, -Rational(r[p]), v);
  const auto at = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
  piv_.insert(piv_.begin() + at, p);
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

bool Subspace::contains(const QVec& v) const { return is_zero(reduce(v)); }

QVec Subspace::coordinates(const QVec& v) const {
  QVec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
  return c;
}

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

QVec add(const QVec& a, const QVec& b) {
  QVec c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

QVec scale(const Rational& s, const QVec& v) {
  QVec c = v;
  for (auto& x : c) x *= s;
  return c;
}

void axpy(QVec& y, const Rational& s, const QVec& x) {
  if (s == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += s * x[i];
}

}  // namespace hypunits
