#include "charcount/type_engine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "charcount/errors.hpp"

namespace charcount {

namespace {

QPolynomial phi1() { return QPolynomial::from_ints({-1, 1}); }

// Irreducible components of L in the canonical order used for data lookup.
struct LeviShape {
  std::vector<RootSet> comps;
  std::vector<CartanComponent> types;
  CartanType type;
};

LeviShape shape_of(const DatumPtr& datum, const RootSet& l) {
  Subsystem sub(datum, l);
  std::vector<std::pair<CartanComponent, RootSet>> parts;
  for (const auto& c : sub.components()) {
    Subsystem cs(datum, c);
    parts.emplace_back(cs.cartan_type().components.at(0), c);
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    const auto& x = a.first;
    const auto& y = b.first;
    if (x.rank != y.rank) return x.rank > y.rank;
    if (x.family != y.family) return x.family < y.family;
    if (x.short_roots != y.short_roots) return x.short_roots < y.short_roots;
    return a.second < b.second;
  });
  LeviShape s;
  for (auto& [t, c] : parts) {
    s.types.push_back(t);
    s.comps.push_back(c);
  }
  s.type.components = s.types;
  s.type.torus_extra = datum->rank() - sub.rank();
  return s;
}

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm c(b.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

RootSet image(const Perm& p, const RootSet& s) {
  RootSet r;
  for (int i : s.indices()) r.set(p[i]);
  return r;
}

// Schreier generators of the setwise stabilizer of l in W.
std::vector<Perm> stabilizer_generators(const RootDatum& d, const RootSet& l) {
  const int n = d.num_roots();
  std::vector<Perm> simple;
  for (int k : d.simple()) simple.emplace_back(d.reflection_perm(k), d.reflection_perm(k) + n);
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::map<RootSet, Perm> transversal{{l, id}};
  std::deque<RootSet> queue{l};
  while (!queue.empty()) {
    RootSet x = queue.front();
    queue.pop_front();
    for (const auto& s : simple) {
      RootSet y = image(s, x);
      if (!transversal.count(y)) {
        transversal.emplace(y, compose(s, transversal.at(x)));
        queue.push_back(y);
      }
    }
  }
  std::set<Perm> gens;
  for (const auto& [x, tx] : transversal)
    for (const auto& s : simple) {
      RootSet y = image(s, x);
      Perm g = compose(inverse(transversal.at(y)), compose(s, tx));
      if (g != id) gens.insert(g);
    }
  return {gens.begin(), gens.end()};
}

// Diagram permutation induced on a component by a stabilizing element.
std::vector<int> diagram_action(const RootDatum& d, const DatumPtr& datum, const RootSet& comp, const Perm& g) {
  Subsystem cs(datum, comp);
  const auto& base = cs.base();
  std::vector<int> b;
  for (int x : base) b.push_back(g[x]);
  for (;;) {
    auto it = std::find_if(b.begin(), b.end(), [&](int x) { return !d.is_positive(x); });
    if (it == b.end()) break;
    const int* r = d.reflection_perm(*it);
    for (auto& x : b) x = r[x];
  }
  std::vector<int> perm;
  for (int x : b) perm.push_back(static_cast<int>(std::find(base.begin(), base.end(), x) - base.begin()));
  return perm;
}

}  // namespace

mpz_class pi0_dual_center(const RootDatum& d, const RootSet& l) {
  std::vector<IntVec> rows;
  for (int i : l.indices()) rows.push_back(d.coroot(i));
  if (rows.empty()) return 1;
  return torsion_order(IntMatrix::from_rows(rows, d.rank()));
}

std::vector<std::vector<std::string>> fused_labels(const DatumPtr& datum, const RootSet& l, const GroupDataPack& data,
                                                   std::vector<std::string>* notes) {
  LeviShape shape = shape_of(datum, l);
  std::vector<UnipotentDatum> parts;
  for (const auto& c : shape.types) parts.push_back(data.unipotent(unipotent_key(c)));
  UnipotentDatum u = tensor(parts);
  std::vector<size_t> sizes;
  for (const auto& p : parts) sizes.push_back(p.entries.size());
  const size_t total = u.entries.size();
  std::vector<size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

  for (const auto& g : stabilizer_generators(*datum, l)) {
    std::vector<size_t> sigma(shape.comps.size());
    for (size_t i = 0; i < shape.comps.size(); ++i) {
      RootSet img = image(g, shape.comps[i]);
      sigma[i] = std::find(shape.comps.begin(), shape.comps.end(), img) - shape.comps.begin();
      if (notes && sigma[i] == i && shape.types[i].family == 'D' && shape.types[i].rank >= 4) {
        auto dperm = diagram_action(*datum, datum, shape.comps[i], g);
        if (!std::is_sorted(dperm.begin(), dperm.end()))
          notes->push_back("outer automorphism acts on a D" + std::to_string(shape.types[i].rank) +
                           " component of [" + shape.type.label() + "]");
      }
    }
    for (size_t e = 0; e < total; ++e) {
      std::vector<size_t> digits(sizes.size()), moved(sizes.size());
      size_t rest = e;
      for (size_t i = sizes.size(); i-- > 0;) digits[i] = rest % sizes[i], rest /= sizes[i];
      for (size_t i = 0; i < sizes.size(); ++i) moved[sigma[i]] = digits[i];
      size_t f = 0;
      for (size_t i = 0; i < sizes.size(); ++i) f = f * sizes[i] + moved[i];
      parent[find(e)] = find(f);
    }
  }
  std::map<size_t, std::vector<std::string>> classes;
  for (size_t e = 0; e < total; ++e) classes[find(e)].push_back(u.entries[e].rho);
  std::vector<std::vector<std::string>> out;
  for (auto& [root, labels] : classes)
    if (labels.size() > 1) out.push_back(std::move(labels));
  return out;
}

GroupContext::GroupContext(DatumPtr datum, DataPtr data, ContextOptions opts)
    : datum_(std::move(datum)), data_(std::move(data)), opts_(opts) {}

mpz_class GroupContext::weyl_order() const { return datum_->weyl_order(); }

QPolynomial GroupContext::group_order() const { return order_polynomial(Subsystem(datum_, datum_->all_roots())); }
QPolynomial GroupContext::center_order() const { return phi1().pow(datum_->center_dim()); }
QPolynomial GroupContext::torus_order() const { return phi1().pow(datum_->rank()); }

void GroupContext::ensure_levis() const {
  std::call_once(levi_once_, [&] {
    auto fam = enumerate_levis(datum_);
    levi_poset_ = std::make_unique<Poset>(std::vector<RootSet>(fam.begin(), fam.end()));
    levi_orbits_ = weyl_orbits(*datum_, fam);
  });
}

void GroupContext::ensure_endoscopy() const {
  std::call_once(endo_once_, [&] {
    auto fam = enumerate_endoscopy(datum_);
    auto fix = enumerate_endoscopy(datum_, PseudoLeviMode::Fixpoint);
    if (fam != fix) {
      std::lock_guard<std::mutex> lock(diag_mu_);
      diagnostics_.push_back("pseudo-Levi variants differ on the dual of " + datum_->label() + ": one-step " +
                             std::to_string(fam.size()) + " vs fixpoint " + std::to_string(fix.size()) +
                             " subsystems; the one-step family is used");
    }
    endo_poset_ = std::make_unique<Poset>(std::vector<RootSet>(fam.begin(), fam.end()));
    endo_orbits_ = weyl_orbits(*datum_, fam);
  });
}

const Poset& GroupContext::levi_poset() const {
  ensure_levis();
  return *levi_poset_;
}
const Poset& GroupContext::endoscopy_poset() const {
  ensure_endoscopy();
  return *endo_poset_;
}
const std::vector<std::vector<RootSet>>& GroupContext::levi_orbits() const {
  ensure_levis();
  return levi_orbits_;
}
const std::vector<std::vector<RootSet>>& GroupContext::endoscopy_orbits() const {
  ensure_endoscopy();
  return endo_orbits_;
}

RootSet GroupContext::representative(const std::vector<RootSet>& orbit) const {
  switch (opts_.policy) {
    case RepresentativePolicy::Smallest: return orbit.front();
    case RepresentativePolicy::Largest: return orbit.back();
    case RepresentativePolicy::Random: {
      std::mt19937 rng(opts_.seed + static_cast<unsigned>(orbit.size()));
      return orbit[std::uniform_int_distribution<size_t>(0, orbit.size() - 1)(rng)];
    }
  }
  return orbit.front();
}

long GroupContext::pi0_dual_center(const RootSet& l) const { return charcount::pi0_dual_center(*datum_, l).get_si(); }

long GroupContext::nu(const RootSet& l) const {
  const Poset& p = endoscopy_poset();
  int x = p.index(l);
  if (x < 0) throw NotEndoscopy("subsystem is not an endoscopy subsystem of " + datum_->label());
  long total = 0;
  for (size_t y = x; y < p.size(); ++y) {
    if (!p.leq(x, static_cast<int>(y))) continue;
    Subsystem s(datum_, p.elements()[y]);
    if (!s.is_isolated()) continue;
    total += pi0_dual_center(p.elements()[y]) * p.moebius(x, static_cast<int>(y));
  }
  return total;
}

long GroupContext::mu_levi(const RootSet& l) const {
  const Poset& p = levi_poset();
  int x = p.index(l);
  if (x < 0) throw NotLevi("subsystem is not a Levi subsystem of " + datum_->label());
  return p.moebius(x, p.index(datum_->all_roots()));
}

namespace {

template <class F>
void parallel_for(size_t n, int threads, F&& f) {
  if (threads <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (size_t i = t; i < n; i += threads) f(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Orbits ordered by decreasing subsystem size, then by representative.
std::vector<size_t> orbit_order(const std::vector<std::vector<RootSet>>& orbits) {
  std::vector<size_t> idx(orbits.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return orbits[a][0].count() > orbits[b][0].count(); });
  return idx;
}

}  // namespace

const std::vector<GTypeRecord>& GroupContext::g_types() const {
  std::call_once(g_once_, [&] {
    const auto& orbits = endoscopy_orbits();
    const int npos_g = datum_->num_positive();
    std::vector<GTypeRecord> out;
    for (size_t oi : orbit_order(orbits)) {
      const auto& orbit = orbits[oi];
      RootSet l = representative(orbit);
      LeviShape shape = shape_of(datum_, l);
      Subsystem sub(datum_, l);
      std::vector<UnipotentDatum> parts;
      for (const auto& c : shape.types) parts.push_back(data_->unipotent(unipotent_key(c)));
      UnipotentDatum u = tensor(parts);
      QPolynomial lf = order_polynomial(sub);
      long nu_l = nu(l), pi0 = pi0_dual_center(l);
      mpz_class wl = charcount::weyl_order(sub);

      // pair-orbit fusion is reported, never applied
      {
        std::vector<std::string> notes;
        for (const auto& cls : fused_labels(datum_, l, *data_, &notes)) {
          std::string msg = "stabilizer of [" + sub.cartan_type().label() + "] fuses";
          for (const auto& x : cls) msg += " " + x;
          notes.push_back(msg);
        }
        std::lock_guard<std::mutex> lock(diag_mu_);
        diagnostics_.insert(diagnostics_.end(), notes.begin(), notes.end());
      }

      for (const auto& e : u.entries) {
        GTypeRecord r;
        r.levi = l;
        r.levi_label = sub.cartan_type().label();
        r.rho = e.rho;
        r.dim_rho = e.dim;
        r.generic_degree = e.degree;
        r.orbit_size = static_cast<long>(orbit.size());
        r.nu = nu_l;
        r.pi0 = pi0;
        r.weyl_order = wl;
        r.levi_order = lf;
        r.mass = exact_div(lf.shift(npos_g - sub.num_positive()), e.degree);
        out.push_back(std::move(r));
      }
    }
    g_types_ = std::move(out);
  });
  return g_types_;
}

const std::vector<LieTypeRecord>& GroupContext::lie_types() const {
  std::call_once(lie_once_, [&] {
    const auto& orbits = levi_orbits();
    std::vector<LieTypeRecord> out;
    for (size_t oi : orbit_order(orbits)) {
      const auto& orbit = orbits[oi];
      RootSet l = representative(orbit);
      LeviShape shape = shape_of(datum_, l);
      Subsystem sub(datum_, l);
      std::vector<NilpotentDatum> parts;
      for (const auto& c : shape.types) parts.push_back(data_->nilpotent(nilpotent_key(c)));
      NilpotentDatum nd = tensor(parts);
      QPolynomial lf = order_polynomial(sub);
      long mu = mu_levi(l);
      mpz_class wl = charcount::weyl_order(sub);
      for (const auto& e : nd.entries) {
        LieTypeRecord r;
        r.levi = l;
        r.levi_label = sub.cartan_type().label();
        r.orbit_label = e.label;
        r.orbit_size_poly = e.size;
        r.green = e.green;
        r.orbit_dim = e.orbit_dim;
        r.d_tau = sub.group_dimension() - e.orbit_dim;
        r.mu = mu;
        r.orbit_size = static_cast<long>(orbit.size());
        r.weyl_order = wl;
        r.levi_order = lf;
        out.push_back(std::move(r));
      }
    }
    lie_types_ = std::move(out);
  });
  return lie_types_;
}

QPolynomial GroupContext::s_tau(const GTypeRecord& rec, int n) const {
  if (n < 1) throw InvalidDatum("s_tau needs n >= 1");
  mpz_class w = weyl_order();
  if (w % rec.weyl_order != 0) throw NonzeroRemainder("|W(L)| does not divide |W|");
  mpz_class ratio = w / rec.weyl_order;
  mpz_class c = rec.orbit_size * mpz_class(rec.nu);
  mpz_class dimpow, ratiopow;
  mpz_pow_ui(dimpow.get_mpz_t(), mpz_class(rec.dim_rho).get_mpz_t(), n);
  mpz_pow_ui(ratiopow.get_mpz_t(), ratio.get_mpz_t(), n - 1);
  c *= dimpow * ratiopow;
  return center_order() * QPolynomial(c);
}

QPolynomial GroupContext::h_tau(const LieTypeRecord& rec, int n) const {
  if (n < 1) throw InvalidDatum("h_tau needs n >= 1");
  mpz_class w = weyl_order();
  if (w % rec.weyl_order != 0) throw NonzeroRemainder("|W(L)| does not divide |W|");
  mpz_class ratio = w / rec.weyl_order, ratiopow;
  mpz_pow_ui(ratiopow.get_mpz_t(), ratio.get_mpz_t(), n - 1);
  QPolynomial p = exact_div(group_order(), rec.levi_order);
  p = p.shift(n * datum_->num_positive() + datum_->center_dim());
  p *= rec.orbit_size_poly * rec.green.pow(n);
  p *= QPolynomial(mpz_class(ratiopow * rec.orbit_size * rec.mu));
  return p;
}

std::vector<std::string> GroupContext::diagnostics() const {
  std::lock_guard<std::mutex> lock(diag_mu_);
  std::vector<std::string> d = diagnostics_;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

}  // namespace charcount
