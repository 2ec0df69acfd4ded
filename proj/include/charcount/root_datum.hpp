#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "charcount/int_matrix.hpp"

namespace charcount {

inline constexpr int kMaxRoots = 256;

// Bit set over root indices; the canonical key of a subsystem.
class RootSet {
 public:
  RootSet() = default;
  static RootSet from_indices(const std::vector<int>& idx);

  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  int count() const;
  bool empty() const { return count() == 0; }
  bool subset_of(const RootSet& o) const;
  RootSet operator|(const RootSet& o) const;
  RootSet operator&(const RootSet& o) const;
  std::vector<int> indices() const;

  friend auto operator<=>(const RootSet&, const RootSet&) = default;
  friend bool operator==(const RootSet&, const RootSet&) = default;

 private:
  std::array<uint64_t, kMaxRoots / 64> w_{};
};

struct CartanComponent {
  char family = 'A';
  int rank = 1;
  bool short_roots = false;  // simply-laced component made of short roots
  friend auto operator<=>(const CartanComponent&, const CartanComponent&) = default;
};

struct CartanType {
  std::vector<CartanComponent> components;
  int torus_extra = 0;

  int semisimple_rank() const;
  // "B2xA1'"; "T" for the empty type.
  std::string label() const;
  // Same without primes; keys into Weyl-type data.
  std::string weyl_label() const;
  static CartanType parse(const std::string& text);
};

// Cartan matrix C[i][j] = <alpha_i, coroot_j> for a single irreducible type
// in Bourbaki numbering.
std::vector<IntVec> cartan_matrix(char family, int rank);
void validate_component(char family, int rank);

// Split reductive group with connected centre, encoded by its root datum.
// Roots are integer vectors in a fixed basis of X, coroots in the dual basis.
// Positive roots come first (by height), the negative of root i is i + N.
class RootDatum {
 public:
  struct Raw {
    int basis_rank = 0;
    std::vector<IntVec> simple_roots;
    std::vector<IntVec> simple_coroots;
    std::vector<IntVec> pairing;  // empty means identity
    int center_dim = -1;          // -1: not checked
    std::string label;
  };

  static std::shared_ptr<const RootDatum> general_linear(int n);
  static std::shared_ptr<const RootDatum> adjoint(const CartanType& type, const std::string& label = "");
  static std::shared_ptr<const RootDatum> from_raw(const Raw& raw);

  int rank() const { return rank_; }
  int semisimple_rank() const { return static_cast<int>(simple_.size()); }
  int center_dim() const { return rank_ - semisimple_rank(); }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }
  int dimension() const { return num_roots() + rank_; }
  const std::string& label() const { return label_; }

  const IntVec& root(int i) const { return roots_[i]; }
  const IntVec& coroot(int i) const { return coroots_[i]; }
  const std::vector<int>& simple() const { return simple_; }
  bool is_positive(int i) const { return i < num_positive(); }
  int negative(int i) const { return i < num_positive() ? i + num_positive() : i - num_positive(); }
  // Coefficients of root i in the simple roots.
  const IntVec& simple_coords(int i) const { return coords_[i]; }
  int height(int i) const;

  // <root_i, coroot_j>
  int cartan(int i, int j) const { return cartan_[static_cast<size_t>(i) * num_roots() + j]; }
  // index of s_{root a}(root b)
  int reflect(int a, int b) const { return reflect_[static_cast<size_t>(a) * num_roots() + b]; }
  const int* reflection_perm(int a) const { return &reflect_[static_cast<size_t>(a) * num_roots()]; }

  // <x, y> for x in X, y in the dual lattice.
  long pair(const IntVec& x, const IntVec& y) const;
  int find_root(const IntVec& v) const;  // -1 when absent
  // W-invariant squared length, up to a global scalar per component.
  long length2(int i) const { return length2_[i]; }
  // Ambient irreducible component of each root and the component count.
  int component_of(int i) const { return component_[i]; }
  int num_components() const { return num_components_; }
  int highest_root(int component) const { return highest_[component]; }
  long max_length2(int component) const { return max_length2_[component]; }

  RootSet all_roots() const;
  CartanType cartan_type() const;

  // Roots and coroots exchanged, same indices.
  std::shared_ptr<const RootDatum> dual() const;

  // |W| from the Poincare polynomial; no enumeration.
  mpz_class weyl_order() const;

 private:
  RootDatum() = default;
  static std::shared_ptr<RootDatum> build(int rank, std::vector<IntVec> simple_roots, std::vector<IntVec> simple_coroots,
                                          std::vector<IntVec> pairing, std::string label);
  void finish();

  int rank_ = 0;
  std::string label_;
  std::vector<IntVec> pairing_;  // empty: identity
  std::vector<IntVec> roots_, coroots_, coords_;
  std::vector<int> simple_;
  std::vector<int> cartan_, reflect_;
  std::vector<long> length2_;
  std::vector<int> component_, highest_;
  std::vector<long> max_length2_;
  int num_components_ = 0;
  std::map<IntVec, int> index_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

// Group specifier grammar: GL<n>, adjoint:<Type><rank>[x...], aliases such as
// SO5 or G2, datum:<path>.
DatumPtr parse_group(const std::string& spec);
RootDatum::Raw load_raw_datum(const std::string& path);

}  // namespace charcount
