#include "charcount/int_matrix.hpp"

#include <algorithm>
#include <utility>

namespace charcount {

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {

void swap_rows(IntMatrix& a, int i, int k) {
  if (i == k) return;
  for (int j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
}

void swap_cols(IntMatrix& a, int j, int k) {
  if (j == k) return;
  for (int i = 0; i < a.rows(); ++i) std::swap(a(i, j), a(i, k));
}

}  // namespace

std::vector<mpz_class> smith_invariants(const IntMatrix& m) {
  IntMatrix a = m;
  const int r = a.rows(), c = a.cols(), k = std::min(r, c);
  std::vector<mpz_class> d;
  for (int t = 0; t < k; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      int pi = -1, pj = -1;
      for (int i = t; i < r; ++i)
        for (int j = t; j < c; ++j)
          if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) pi = i, pj = j;
      if (pi < 0) {
        d.resize(k, 0);
        return d;
      }
      swap_rows(a, t, pi);
      swap_cols(a, t, pj);
      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        mpz_class f = a(i, t) / a(t, t);
        for (int j = t; j < c; ++j) a(i, j) -= f * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        mpz_class f = a(t, j) / a(t, t);
        for (int i = t; i < r; ++i) a(i, j) -= f * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and retry
      int bad = -1;
      for (int i = t + 1; i < r && bad < 0; ++i)
        for (int j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = t; j < c; ++j) a(t, j) += a(bad, j);
    }
    d.push_back(abs(a(t, t)));
  }
  return d;
}

mpz_class torsion_order(const IntMatrix& m) {
  mpz_class prod = 1;
  for (const auto& x : smith_invariants(m))
    if (x != 0) prod *= x;
  return prod;
}

int rank(const IntMatrix& m) {
  int r = 0;
  for (const auto& x : smith_invariants(m))
    if (x != 0) ++r;
  return r;
}

Lattice::Lattice(const std::vector<IntVec>& generators, int dim) : dim_(dim) {
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& g : generators) rows.emplace_back(g.begin(), g.end());
  int row = 0;
  for (int col = 0; col < dim_ && row < static_cast<int>(rows.size()); ++col) {
    // gcd elimination in column col among rows [row, end)
    for (;;) {
      int best = -1;
      for (int i = row; i < static_cast<int>(rows.size()); ++i)
        if (rows[i][col] != 0 && (best < 0 || abs(rows[i][col]) < abs(rows[best][col]))) best = i;
      if (best < 0) break;
      std::swap(rows[row], rows[best]);
      bool done = true;
      for (int i = row + 1; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][col] == 0) continue;
        mpz_class f = rows[i][col] / rows[row][col];
        for (int j = col; j < dim_; ++j) rows[i][j] -= f * rows[row][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) {
        if (rows[row][col] < 0)
          for (auto& x : rows[row]) x = -x;
        basis_.push_back(rows[row]);
        pivots_.push_back(col);
        ++row;
        break;
      }
    }
  }
}

bool Lattice::contains(const IntVec& v) const {
  std::vector<mpz_class> w(v.begin(), v.end());
  for (size_t b = 0; b < basis_.size(); ++b) {
    int col = pivots_[b];
    // entries left of the pivot are already zero
    if (w[col] % basis_[b][col] != 0) return false;
    mpz_class f = w[col] / basis_[b][col];
    if (f != 0)
      for (int j = col; j < dim_; ++j) w[j] -= f * basis_[b][j];
  }
  return std::all_of(w.begin(), w.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace charcount
