#pragma once

#include <gmpxx.h>

#include <vector>

namespace charcount {

using IntVec = std::vector<long>;

// Dense integer matrix with big-integer entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static IntMatrix from_rows(const std::vector<IntVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const mpz_class& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntMatrix transpose() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> a_;
};

// Invariant factors d1 | d2 | ... of the Smith normal form, length
// min(rows, cols), zeros last.
std::vector<mpz_class> smith_invariants(const IntMatrix& m);

// Order of the torsion subgroup of Z^cols / (row span).
mpz_class torsion_order(const IntMatrix& m);

// Rank over Q.
int rank(const IntMatrix& m);

// Row-style Hermite basis of the Z-span of a set of vectors; supports
// membership tests.
class Lattice {
 public:
  Lattice(const std::vector<IntVec>& generators, int dim);
  bool contains(const IntVec& v) const;
  int rank() const { return static_cast<int>(basis_.size()); }

 private:
  int dim_;
  std::vector<std::vector<mpz_class>> basis_;
  std::vector<int> pivots_;
};

}  // namespace charcount
