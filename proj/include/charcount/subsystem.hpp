#pragma once

#include <set>
#include <string>
#include <vector>

#include "charcount/root_datum.hpp"

namespace charcount {

inline constexpr long kWeylOrderBound = 2000000;

// A set of roots of a datum closed under its own reflections.
class Subsystem {
 public:
  Subsystem(DatumPtr parent, RootSet roots);

  const RootDatum& datum() const { return *parent_; }
  const DatumPtr& parent() const { return parent_; }
  const RootSet& roots() const { return roots_; }
  std::vector<int> indices() const { return roots_.indices(); }
  int size() const { return roots_.count(); }
  int num_positive() const { return size() / 2; }

  std::vector<int> positive_roots() const;
  // Simple system inside the positive roots of the parent.
  const std::vector<int>& base() const { return base_; }
  // Dimension of the rational span.
  int rank() const { return static_cast<int>(base_.size()); }
  bool is_isolated() const { return rank() == datum().semisimple_rank(); }
  bool is_closed() const;
  // Irreducible components, each as a root set.
  std::vector<RootSet> components() const;
  CartanType cartan_type() const;
  // dim of the reductive group with this root system and the parent torus.
  int group_dimension() const { return size() + datum().rank(); }

  friend bool operator==(const Subsystem& a, const Subsystem& b) { return a.roots_ == b.roots_; }
  friend bool operator<(const Subsystem& a, const Subsystem& b) { return a.roots_ < b.roots_; }

 private:
  DatumPtr parent_;
  RootSet roots_;
  std::vector<int> base_;
};

CartanType recognize_cartan_type(const RootDatum& datum, const std::vector<int>& base);
// Canonical component order: rank descending, then family, long before short.
CartanType canonical(CartanType t);

// <seed> = (Z-span of seed) intersected with the roots.
Subsystem subsystem_generated(const DatumPtr& datum, const std::vector<int>& seed);
// The coroots of sub, as a subsystem of the dual datum (same indices).
Subsystem dual_subsystem(const Subsystem& sub, const DatumPtr& dual);

RootSet apply_simple_reflection(const RootDatum& datum, int k, const RootSet& s);
// Orbit of s under the Weyl group (simple reflections), sorted.
std::vector<RootSet> weyl_orbit(const RootDatum& datum, const RootSet& s);
// Partition of a W-stable family into orbits; each orbit sorted, orbits
// ordered by their smallest member.
std::vector<std::vector<RootSet>> weyl_orbits(const RootDatum& datum, const std::set<RootSet>& family);

enum class PseudoLeviMode { OneStep, Fixpoint };

void check_weyl_bound(const RootDatum& datum);
std::set<RootSet> enumerate_levis(const DatumPtr& datum);
std::set<RootSet> enumerate_pseudo_levis(const DatumPtr& datum, PseudoLeviMode mode = PseudoLeviMode::OneStep);
// Duals of the pseudo-Levis of the dual datum.
std::set<RootSet> enumerate_endoscopy(const DatumPtr& datum, PseudoLeviMode mode = PseudoLeviMode::OneStep);

// Cartan types of <extended base minus one node> for an irreducible datum;
// uses no Weyl group enumeration.
std::set<std::string> isolated_pseudo_levi_types(const DatumPtr& datum);

}  // namespace charcount
