#include "charcount/subsystem.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "charcount/errors.hpp"

namespace charcount {

Subsystem::Subsystem(DatumPtr parent, RootSet roots) : parent_(std::move(parent)), roots_(roots) {
  const RootDatum& d = *parent_;
  std::vector<int> pos = positive_roots();
  RootSet posset = RootSet::from_indices(pos);
  for (int b : pos) {
    bool decomposable = false;
    for (int a : pos) {
      if (a == b) continue;
      IntVec diff = d.root(b);
      const IntVec& ra = d.root(a);
      for (size_t i = 0; i < diff.size(); ++i) diff[i] -= ra[i];
      int c = d.find_root(diff);
      if (c >= 0 && posset.test(c)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) base_.push_back(b);
  }
}

std::vector<int> Subsystem::positive_roots() const {
  std::vector<int> out;
  for (int i : roots_.indices())
    if (datum().is_positive(i)) out.push_back(i);
  return out;
}

bool Subsystem::is_closed() const {
  auto idx = indices();
  for (int a : idx)
    for (int b : idx)
      if (!roots_.test(datum().reflect(a, b))) return false;
  return true;
}

std::vector<RootSet> Subsystem::components() const {
  auto idx = indices();
  std::vector<RootSet> out;
  RootSet done;
  for (int start : idx) {
    if (done.test(start)) continue;
    RootSet comp;
    std::vector<int> stack{start};
    comp.set(start);
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : idx)
        if (!comp.test(b) && datum().cartan(a, b) != 0) {
          comp.set(b);
          stack.push_back(b);
        }
    }
    done = done | comp;
    out.push_back(comp);
  }
  return out;
}

CartanType Subsystem::cartan_type() const {
  CartanType t = recognize_cartan_type(datum(), base_);
  t.torus_extra = datum().rank() - rank();
  return t;
}

CartanType canonical(CartanType t) {
  std::sort(t.components.begin(), t.components.end(), [](const CartanComponent& a, const CartanComponent& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    if (a.family != b.family) return a.family < b.family;
    return a.short_roots < b.short_roots;
  });
  return t;
}

CartanType recognize_cartan_type(const RootDatum& d, const std::vector<int>& base) {
  const int k = static_cast<int>(base.size());
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && d.cartan(base[i], base[j]) != 0) adj[i].push_back(j);
  std::vector<int> seen(k, 0);
  CartanType t;
  for (int s = 0; s < k; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t q = 0; q < comp.size(); ++q)
      for (int j : adj[comp[q]])
        if (!seen[j]) seen[j] = 1, comp.push_back(j);
    const int m = static_cast<int>(comp.size());
    int maxprod = 0;
    for (int i : comp)
      for (int j : adj[i]) maxprod = std::max(maxprod, d.cartan(base[i], base[j]) * d.cartan(base[j], base[i]));
    long longest = 0;
    for (int i : comp) longest = std::max(longest, d.length2(base[i]));
    int nshort = 0;
    for (int i : comp)
      if (d.length2(base[i]) < longest) ++nshort;
    bool ambient_short = longest < d.max_length2(d.component_of(base[comp[0]]));
    CartanComponent c;
    c.rank = m;
    if (m == 1) {
      c.family = 'A';
      c.short_roots = ambient_short;
    } else if (maxprod == 3) {
      c.family = 'G';
    } else if (maxprod == 2) {
      if (m == 2) {
        c.family = 'B';
      } else if (m == 4 && nshort == 2) {
        c.family = 'F';
      } else {
        c.family = nshort == 1 ? 'B' : 'C';
        if (nshort != 1 && nshort != m - 1) throw InvalidDatum("unrecognised doubly-laced component");
      }
    } else {
      int branch = -1;
      for (int i : comp)
        if (adj[i].size() == 3) branch = i;
      c.short_roots = ambient_short;
      if (branch < 0) {
        c.family = 'A';
      } else {
        std::vector<int> arms;
        for (int nb : adj[branch]) {
          int len = 1, prev = branch, cur = nb;
          for (;;) {
            int next = -1;
            for (int x : adj[cur])
              if (x != prev) next = x;
            if (next < 0) break;
            prev = cur, cur = next, ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1)
          c.family = 'D';
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
          c.family = 'E';
        else
          throw InvalidDatum("unrecognised simply-laced component");
      }
    }
    t.components.push_back(c);
  }
  return canonical(t);
}

Subsystem subsystem_generated(const DatumPtr& datum, const std::vector<int>& seed) {
  const RootDatum& d = *datum;
  std::vector<IntVec> gens;
  for (int i : seed) gens.push_back(d.simple_coords(i));
  Lattice lat(gens, d.semisimple_rank());
  RootSet s;
  for (int i = 0; i < d.num_roots(); ++i)
    if (lat.contains(d.simple_coords(i))) s.set(i);
  return Subsystem(datum, s);
}

Subsystem dual_subsystem(const Subsystem& sub, const DatumPtr& dual) { return Subsystem(dual, sub.roots()); }

RootSet apply_simple_reflection(const RootDatum& d, int k, const RootSet& s) {
  const int* perm = d.reflection_perm(d.simple()[k]);
  RootSet r;
  for (int i : s.indices()) r.set(perm[i]);
  return r;
}

namespace {

std::vector<RootSet> orbit_under(const RootDatum& d, const RootSet& s, const std::vector<int>& gens) {
  std::set<RootSet> seen{s};
  std::deque<RootSet> queue{s};
  while (!queue.empty()) {
    RootSet cur = queue.front();
    queue.pop_front();
    for (int k : gens) {
      RootSet next = apply_simple_reflection(d, k, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> all_simple(const RootDatum& d) {
  std::vector<int> g(d.semisimple_rank());
  for (int k = 0; k < d.semisimple_rank(); ++k) g[k] = k;
  return g;
}

RootSet span_within(const RootDatum& d, const std::vector<int>& seed, const RootSet& within) {
  std::vector<IntVec> gens;
  for (int i : seed) gens.push_back(d.simple_coords(i));
  Lattice lat(gens, d.semisimple_rank());
  RootSet s;
  for (int i : within.indices())
    if (lat.contains(d.simple_coords(i))) s.set(i);
  return s;
}

// Pseudo-Levis of one ambient component, all W-translates.
std::set<RootSet> component_pseudo_levis(const RootDatum& d, int comp) {
  std::vector<int> ext, gens;
  for (int k = 0; k < d.semisimple_rank(); ++k)
    if (d.component_of(d.simple()[k]) == comp) ext.push_back(d.simple()[k]), gens.push_back(k);
  ext.push_back(d.negative(d.highest_root(comp)));
  RootSet whole;
  for (int i = 0; i < d.num_roots(); ++i)
    if (d.component_of(i) == comp) whole.set(i);
  std::set<RootSet> out;
  for (unsigned mask = 0; mask < (1u << ext.size()); ++mask) {
    std::vector<int> seed;
    for (size_t b = 0; b < ext.size(); ++b)
      if (mask >> b & 1) seed.push_back(ext[b]);
    RootSet s = span_within(d, seed, whole);
    if (out.count(s)) continue;
    for (const auto& x : orbit_under(d, s, gens)) out.insert(x);
  }
  return out;
}

std::set<RootSet> combine(const std::vector<std::set<RootSet>>& per_component) {
  std::set<RootSet> acc{RootSet()};
  for (const auto& fam : per_component) {
    std::set<RootSet> next;
    for (const auto& a : acc)
      for (const auto& b : fam) next.insert(a | b);
    acc.swap(next);
  }
  return acc;
}

}  // namespace

std::vector<RootSet> weyl_orbit(const RootDatum& d, const RootSet& s) { return orbit_under(d, s, all_simple(d)); }

std::vector<std::vector<RootSet>> weyl_orbits(const RootDatum& d, const std::set<RootSet>& family) {
  std::vector<std::vector<RootSet>> out;
  std::set<RootSet> done;
  for (const auto& s : family) {
    if (done.count(s)) continue;
    auto orb = weyl_orbit(d, s);
    for (const auto& x : orb) {
      if (!family.count(x)) throw InvariantViolation("W-stable family", "orbit leaves the family");
      done.insert(x);
    }
    out.push_back(std::move(orb));
  }
  return out;
}

void check_weyl_bound(const RootDatum& d) {
  mpz_class order = d.weyl_order();
  if (order > kWeylOrderBound)
    throw GroupTooLarge("|W| = " + order.get_str() + " exceeds the enumeration bound " + std::to_string(kWeylOrderBound) + " for " +
                        d.label());
}

std::set<RootSet> enumerate_levis(const DatumPtr& datum) {
  const RootDatum& d = *datum;
  check_weyl_bound(d);
  const int l = d.semisimple_rank();
  std::set<RootSet> out;
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    std::vector<int> seed;
    for (int b = 0; b < l; ++b)
      if (mask >> b & 1) seed.push_back(d.simple()[b]);
    RootSet s = subsystem_generated(datum, seed).roots();
    if (out.count(s)) continue;
    for (const auto& x : weyl_orbit(d, s)) out.insert(x);
  }
  return out;
}

std::set<RootSet> enumerate_pseudo_levis(const DatumPtr& datum, PseudoLeviMode mode) {
  const RootDatum& d = *datum;
  check_weyl_bound(d);
  std::vector<std::set<RootSet>> per;
  for (int c = 0; c < d.num_components(); ++c) per.push_back(component_pseudo_levis(d, c));
  std::set<RootSet> out = combine(per);
  if (mode == PseudoLeviMode::OneStep) return out;

  // Re-apply extended-base subsets inside each component of each member.
  std::deque<RootSet> work(out.begin(), out.end());
  while (!work.empty()) {
    RootSet cur = work.front();
    work.pop_front();
    Subsystem sub(datum, cur);
    for (const auto& comp : sub.components()) {
      Subsystem cs(datum, comp);
      std::vector<int> ext = cs.base();
      int top = -1;
      for (int i : cs.positive_roots())
        if (top < 0 || d.height(i) > d.height(top)) top = i;
      ext.push_back(d.negative(top));
      RootSet rest;
      for (int i : cur.indices())
        if (!comp.test(i)) rest.set(i);
      for (unsigned mask = 0; mask < (1u << ext.size()); ++mask) {
        std::vector<int> seed;
        for (size_t b = 0; b < ext.size(); ++b)
          if (mask >> b & 1) seed.push_back(ext[b]);
        RootSet cand = rest | span_within(d, seed, comp);
        if (out.count(cand)) continue;
        for (const auto& x : weyl_orbit(d, cand))
          if (out.insert(x).second) work.push_back(x);
      }
    }
  }
  return out;
}

std::set<RootSet> enumerate_endoscopy(const DatumPtr& datum, PseudoLeviMode mode) {
  // indices are shared with the dual datum, so the sets carry over unchanged
  return enumerate_pseudo_levis(datum->dual(), mode);
}

std::set<std::string> isolated_pseudo_levi_types(const DatumPtr& datum) {
  const RootDatum& d = *datum;
  if (d.num_components() != 1) throw InvalidDatum("isolated_pseudo_levi_types needs an irreducible root system");
  std::vector<int> ext = d.simple();
  ext.push_back(d.negative(d.highest_root(0)));
  std::set<std::string> out;
  for (size_t drop = 0; drop < ext.size(); ++drop) {
    std::vector<int> seed;
    for (size_t b = 0; b < ext.size(); ++b)
      if (b != drop) seed.push_back(ext[b]);
    out.insert(subsystem_generated(datum, seed).cartan_type().label());
  }
  return out;
}

}  // namespace charcount
