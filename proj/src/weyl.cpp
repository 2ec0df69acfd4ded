#include "charcount/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include "charcount/errors.hpp"

namespace charcount {

namespace {

struct MatrixHash {
  size_t operator()(const WeylGroup::Matrix& m) const {
    size_t h = 1469598103934665603ull;
    for (int x : m) h = (h ^ static_cast<size_t>(x + 1000)) * 1099511628211ull;
    return h;
  }
};

WeylGroup::Matrix multiply(const WeylGroup::Matrix& a, const WeylGroup::Matrix& b, int r) {
  WeylGroup::Matrix c(static_cast<size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      int x = a[i * r + k];
      if (!x) continue;
      for (int j = 0; j < r; ++j) c[i * r + j] += x * b[k * r + j];
    }
  return c;
}

IntVec apply(const WeylGroup::Matrix& m, const IntVec& v) {
  const int r = static_cast<int>(v.size());
  IntVec out(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out[i] += m[i * r + j] * v[j];
  return out;
}

}  // namespace

WeylGroup generate_weyl(const DatumPtr& datum) {
  const RootDatum& d = *datum;
  check_weyl_bound(d);
  const int r = d.rank();
  WeylGroup w;
  w.datum_ = datum;
  for (int k : d.simple()) {
    WeylGroup::Matrix m(static_cast<size_t>(r) * r, 0);
    for (int j = 0; j < r; ++j) {
      IntVec e(r, 0);
      e[j] = 1;
      long c = d.pair(e, d.coroot(k));
      for (int i = 0; i < r; ++i) m[i * r + j] = e[i] - static_cast<int>(c * d.root(k)[i]);
    }
    w.generators_.push_back(m);
  }
  WeylGroup::Matrix id(static_cast<size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i) id[i * r + i] = 1;
  std::unordered_map<WeylGroup::Matrix, int, MatrixHash> seen;
  seen.emplace(id, 0);
  w.elements_.push_back(id);
  for (size_t q = 0; q < w.elements_.size(); ++q)
    for (const auto& g : w.generators_) {
      auto next = multiply(g, w.elements_[q], r);
      if (seen.emplace(next, static_cast<int>(w.elements_.size())).second) w.elements_.push_back(std::move(next));
    }
  return w;
}

int WeylGroup::act(const Matrix& m, int root) const { return datum_->find_root(apply(m, datum_->root(root))); }

RootSet WeylGroup::act(const Matrix& m, const RootSet& s) const {
  RootSet out;
  for (int i : s.indices()) out.set(act(m, i));
  return out;
}

std::vector<RootSet> subsystem_orbit(const WeylGroup& w, const Subsystem& sub) {
  std::set<RootSet> orbit;
  for (const auto& m : w.elements()) orbit.insert(w.act(m, sub.roots()));
  return {orbit.begin(), orbit.end()};
}

QPolynomial poincare_polynomial(const std::vector<IntVec>& c) {
  const int l = static_cast<int>(c.size());
  if (l == 0) return QPolynomial(1);
  // positive roots in simple coordinates
  std::set<IntVec> roots;
  std::deque<IntVec> queue;
  for (int i = 0; i < l; ++i) {
    IntVec e(l, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec b = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      long k = 0;
      for (int j = 0; j < l; ++j) k += b[j] * c[j][i];
      IntVec n = b;
      n[i] -= k;
      if (roots.insert(n).second) queue.push_back(n);
    }
  }
  std::vector<IntVec> pos;
  for (const auto& b : roots)
    if (std::all_of(b.begin(), b.end(), [](long x) { return x >= 0; })) pos.push_back(b);

  // P_W = P_{W_J} * sum over the orbit of the k-th fundamental coweight
  const int k = l - 1;
  std::vector<IntVec> sub(k, IntVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub[i][j] = c[i][j];
  IntVec start(l, 0);
  start[k] = 1;
  std::set<IntVec> orbit{start};
  std::deque<IntVec> oq{start};
  while (!oq.empty()) {
    IntVec p = oq.front();
    oq.pop_front();
    for (int j = 0; j < l; ++j) {
      if (p[j] == 0) continue;
      IntVec n = p;
      for (int i = 0; i < l; ++i) n[i] = p[i] - c[i][j] * p[j];
      if (orbit.insert(n).second) oq.push_back(n);
    }
  }
  std::map<int, long> lengths;
  for (const auto& p : orbit) {
    int neg = 0;
    for (const auto& b : pos) {
      long v = 0;
      for (int i = 0; i < l; ++i) v += b[i] * p[i];
      if (v < 0) ++neg;
    }
    ++lengths[neg];
  }
  QPolynomial quotient;
  for (auto [deg, count] : lengths) quotient += QPolynomial::monomial(count, deg);
  return poincare_polynomial(sub) * quotient;
}

std::vector<int> degrees_from_poincare(const QPolynomial& p) {
  std::vector<int> degs;
  QPolynomial rest = p;
  while (rest.degree() > 0) {
    bool found = false;
    for (int d = rest.degree() + 1; d >= 2; --d) {
      std::vector<mpq_class> ones(d, mpq_class(1));
      auto [quot, rem] = divmod(rest, QPolynomial(ones));
      if (rem.is_zero()) {
        degs.push_back(d);
        rest = quot;
        found = true;
        break;
      }
    }
    if (!found) throw FactorizationFailed("length polynomial " + p.to_string() + " is not a product of q-integers");
  }
  if (rest != QPolynomial(1)) throw FactorizationFailed("length polynomial " + p.to_string() + " is not a product of q-integers");
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::vector<int> reflection_degrees(const Subsystem& sub) {
  static std::mutex mu;
  static std::map<std::string, std::vector<int>> cache;
  std::string key = sub.cartan_type().weyl_label();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<int> degs;
  for (const auto& comp : sub.components()) {
    Subsystem cs(sub.parent(), comp);
    const auto& base = cs.base();
    std::vector<IntVec> c(base.size(), IntVec(base.size()));
    for (size_t i = 0; i < base.size(); ++i)
      for (size_t j = 0; j < base.size(); ++j) c[i][j] = sub.datum().cartan(base[i], base[j]);
    auto d = degrees_from_poincare(poincare_polynomial(c));
    degs.insert(degs.end(), d.begin(), d.end());
  }
  std::sort(degs.begin(), degs.end());
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, degs);
  return degs;
}

mpz_class weyl_order(const Subsystem& sub) {
  mpz_class o = 1;
  for (int d : reflection_degrees(sub)) o *= d;
  return o;
}

QPolynomial order_polynomial(const Subsystem& sub) {
  QPolynomial p = QPolynomial::q_power(sub.num_positive());
  for (int d : reflection_degrees(sub)) p *= QPolynomial::q_power(d) - QPolynomial(1);
  QPolynomial phi1 = QPolynomial::from_ints({-1, 1});
  return p * phi1.pow(sub.datum().rank() - sub.rank());
}

Poset::Poset(std::vector<RootSet> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end(), [](const RootSet& a, const RootSet& b) {
    int ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  const size_t n = elems_.size();
  for (size_t i = 0; i < n; ++i) index_.emplace(elems_[i], static_cast<int>(i));
  rel_.assign(n, std::vector<uint64_t>((n + 63) / 64, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      if (elems_[i].subset_of(elems_[j])) rel_[i][j >> 6] |= uint64_t{1} << (j & 63);
  rows_.resize(n);
  if (n <= 1024)
    for (size_t i = 0; i < n; ++i) row(static_cast<int>(i));
}

int Poset::index(const RootSet& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

const std::vector<long>& Poset::row(int x) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (rows_[x]) return *rows_[x];
  const int n = static_cast<int>(elems_.size());
  auto r = std::make_unique<std::vector<long>>(n, 0);
  std::vector<int> up;
  for (int y = x; y < n; ++y)
    if (leq(x, y)) up.push_back(y);
  (*r)[x] = 1;
  for (size_t a = 1; a < up.size(); ++a) {
    int y = up[a];
    long s = 0;
    for (size_t b = 0; b < a; ++b)
      if (leq(up[b], y)) s += (*r)[up[b]];
    (*r)[y] = -s;
  }
  rows_[x] = std::move(r);
  return *rows_[x];
}

long Poset::moebius(int x, int y) const {
  if (!leq(x, y)) throw NotComparable("poset elements " + std::to_string(x) + " and " + std::to_string(y) + " are not comparable");
  return row(x)[y];
}

long Poset::moebius(const RootSet& x, const RootSet& y) const {
  int i = index(x), j = index(y);
  if (i < 0 || j < 0) throw NotComparable("element not in poset");
  return moebius(i, j);
}

}  // namespace charcount
