#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypunits/poly.hpp"

namespace hypunits {

using QVec = std::vector<Rational>;

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVec>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  QVec row(std::size_t i) const;

  QMatrix transpose() const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  QVec apply(const QVec& v) const;
  Rational trace() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

struct Echelon {
  QMatrix reduced;  // reduced row echelon form, zero rows removed
  std::vector<std::size_t> pivots;  // pivot column of each row
};
Echelon rref(QMatrix m);

std::size_t rank(const QMatrix& m);
// Basis of { x : m x = 0 }, each vector with a 1 in one free column.
std::vector<QVec> kernel(const QMatrix& m);
Rational determinant(QMatrix m);
std::optional<QVec> solve(const QMatrix& a, const QVec& b);

// Incrementally maintained reduced echelon basis of a subspace of Q^n.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : n_(ambient) {}
  std::size_t ambient() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  // Returns false when v was already in the span.
  bool insert(QVec v);
  QVec reduce(QVec v) const;  // remainder after eliminating pivots
  bool contains(const QVec& v) const;
  // Coordinates of v (must lie in the span) against basis(): the pivot entries.
  QVec coordinates(const QVec& v) const;
  const std::vector<QVec>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return piv_; }

 private:
  std::size_t n_;
  std::vector<QVec> rows_;  // sorted by pivot, fully reduced
  std::vector<std::size_t> piv_;
};

bool is_zero(const QVec& v);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const Rational& s, const QVec& v);
void axpy(QVec& y, const Rational& s, const QVec& x);  // y += s x

}  // namespace hypunits
