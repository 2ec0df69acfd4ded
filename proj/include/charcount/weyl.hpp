#pragma once

#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>
#include <vector>

#include "charcount/qpoly.hpp"
#include "charcount/subsystem.hpp"

namespace charcount {

// Weyl group as integer matrices acting on X (column vectors).
class WeylGroup {
 public:
  using Matrix = std::vector<int>;  // rank x rank, row-major

  const RootDatum& datum() const { return *datum_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Matrix>& elements() const { return elements_; }
  const std::vector<Matrix>& generators() const { return generators_; }
  // Index of w(root i).
  int act(const Matrix& w, int root) const;
  RootSet act(const Matrix& w, const RootSet& s) const;

 private:
  friend WeylGroup generate_weyl(const DatumPtr& datum);
  DatumPtr datum_;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
};

WeylGroup generate_weyl(const DatumPtr& datum);
std::vector<RootSet> subsystem_orbit(const WeylGroup& w, const Subsystem& sub);

// Sum over W of q^length, for the Weyl group of a Cartan matrix
// C[i][j] = <alpha_i, coroot_j>.
QPolynomial poincare_polynomial(const std::vector<IntVec>& cartan);
// Degrees d_i with P(q) = prod [d_i]_q; FactorizationFailed otherwise.
std::vector<int> degrees_from_poincare(const QPolynomial& p);
std::vector<int> reflection_degrees(const Subsystem& sub);
mpz_class weyl_order(const Subsystem& sub);
// |L^F| = q^{N_L} prod (q^{d_i} - 1) (q - 1)^{r - rank L}
QPolynomial order_polynomial(const Subsystem& sub);

// Finite poset of root sets ordered by inclusion.
class Poset {
 public:
  explicit Poset(std::vector<RootSet> elements);

  size_t size() const { return elems_.size(); }
  const std::vector<RootSet>& elements() const { return elems_; }
  int index(const RootSet& s) const;  // -1 when absent
  bool leq(int x, int y) const { return (rel_[x][y >> 6] >> (y & 63)) & 1; }
  long moebius(int x, int y) const;
  long moebius(const RootSet& x, const RootSet& y) const;

 private:
  const std::vector<long>& row(int x) const;

  std::vector<RootSet> elems_;
  std::map<RootSet, int> index_;
  std::vector<std::vector<uint64_t>> rel_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<std::vector<long>>> rows_;
};

}  // namespace charcount
