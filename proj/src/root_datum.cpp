#include "charcount/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <regex>

#include "charcount/errors.hpp"
#include "charcount/subsystem.hpp"
#include "json.hpp"

namespace charcount {

RootSet RootSet::from_indices(const std::vector<int>& idx) {
  RootSet s;
  for (int i : idx) s.set(i);
  return s;
}

int RootSet::count() const {
  int c = 0;
  for (auto w : w_) c += __builtin_popcountll(w);
  return c;
}

bool RootSet::subset_of(const RootSet& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

RootSet RootSet::operator|(const RootSet& o) const {
  RootSet r;
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
  return r;
}

RootSet RootSet::operator&(const RootSet& o) const {
  RootSet r;
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

std::vector<int> RootSet::indices() const {
  std::vector<int> out;
  for (size_t k = 0; k < w_.size(); ++k) {
    uint64_t w = w_[k];
    while (w) {
      int b = __builtin_ctzll(w);
      out.push_back(static_cast<int>(k * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

int CartanType::semisimple_rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string CartanType::label() const {
  if (components.empty()) return "T";
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    s += components[i].family + std::to_string(components[i].rank);
    if (components[i].short_roots) s += "'";
  }
  return s;
}

std::string CartanType::weyl_label() const {
  if (components.empty()) return "T";
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    s += components[i].family + std::to_string(components[i].rank);
  }
  return s;
}

void validate_component(char family, int rank) {
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'G': ok = rank == 2; break;
    case 'F': ok = rank == 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    default: break;
  }
  if (!ok) throw InvalidDatum(std::string("no Cartan type ") + family + std::to_string(rank));
}

CartanType CartanType::parse(const std::string& text) {
  CartanType t;
  static const std::regex comp(R"(([ABCDEFG])(\d+)('?))");
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('x', start);
    std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::smatch m;
    if (!std::regex_match(piece, m, comp)) throw ParseError("bad Cartan type component '" + piece + "' in '" + text + "'");
    CartanComponent c{m[1].str()[0], std::stoi(m[2].str()), !m[3].str().empty()};
    validate_component(c.family, c.rank);
    t.components.push_back(c);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return t;
}

std::vector<IntVec> cartan_matrix(char family, int n) {
  validate_component(family, n);
  std::vector<IntVec> c(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'G':
      link(0, 1);
      c[1][0] = -3;  // alpha_1 short
      break;
    case 'F':
      link(0, 1), link(1, 2), link(2, 3);
      c[1][2] = -2;  // alpha_3 short
      break;
    case 'E':
      link(0, 2), link(2, 3), link(1, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
  }
  return c;
}

namespace {

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

mpz_class component_weyl_order(const CartanComponent& c) {
  switch (c.family) {
    case 'A': return factorial(c.rank + 1);
    case 'B':
    case 'C': return (mpz_class(1) << c.rank) * factorial(c.rank);
    case 'D': return (mpz_class(1) << (c.rank - 1)) * factorial(c.rank);
    case 'G': return 12;
    case 'F': return 1152;
    case 'E': return c.rank == 6 ? mpz_class(51840) : c.rank == 7 ? mpz_class(2903040) : mpz_class(696729600);
  }
  return 1;
}

IntVec add_scaled(IntVec a, const IntVec& b, long s) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

}  // namespace

long RootDatum::pair(const IntVec& x, const IntVec& y) const {
  long s = 0;
  if (pairing_.empty()) {
    for (int i = 0; i < rank_; ++i) s += x[i] * y[i];
  } else {
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) s += x[i] * pairing_[i][j] * y[j];
  }
  return s;
}

int RootDatum::find_root(const IntVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootDatum::height(int i) const {
  long h = 0;
  for (long c : coords_[i]) h += c;
  return static_cast<int>(h);
}

RootSet RootDatum::all_roots() const {
  RootSet s;
  for (int i = 0; i < num_roots(); ++i) s.set(i);
  return s;
}

CartanType RootDatum::cartan_type() const {
  CartanType t = recognize_cartan_type(*this, simple_);
  t.torus_extra = center_dim();
  return t;
}

mpz_class RootDatum::weyl_order() const {
  mpz_class o = 1;
  for (const auto& c : cartan_type().components) o *= component_weyl_order(c);
  return o;
}

std::shared_ptr<RootDatum> RootDatum::build(int rank, std::vector<IntVec> simple_roots, std::vector<IntVec> simple_coroots,
                                            std::vector<IntVec> pairing, std::string label) {
  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->rank_ = rank;
  d->label_ = std::move(label);
  d->pairing_ = std::move(pairing);
  const int l = static_cast<int>(simple_roots.size());
  if (simple_coroots.size() != simple_roots.size()) throw InvalidDatum("simple roots and coroots differ in number");
  for (const auto& v : simple_roots)
    if (static_cast<int>(v.size()) != rank) throw InvalidDatum("simple root of wrong length");
  for (const auto& v : simple_coroots)
    if (static_cast<int>(v.size()) != rank) throw InvalidDatum("simple coroot of wrong length");
  if (!d->pairing_.empty()) {
    if (static_cast<int>(d->pairing_.size()) != rank) throw InvalidDatum("pairing must be rank x rank");
    for (const auto& row : d->pairing_)
      if (static_cast<int>(row.size()) != rank) throw InvalidDatum("pairing must be rank x rank");
    if (torsion_order(IntMatrix::from_rows(d->pairing_, rank)) != 1 || charcount::rank(IntMatrix::from_rows(d->pairing_, rank)) != rank)
      throw InvalidDatum("pairing is not unimodular");
  }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      long a = d->pair(simple_roots[i], simple_coroots[j]);
      long b = d->pair(simple_roots[j], simple_coroots[i]);
      if (i == j && a != 2) throw InvalidDatum("<alpha, alpha^> = " + std::to_string(a) + " for simple root " + std::to_string(i + 1));
      if (i != j && (a > 0 || (a == 0) != (b == 0)))
        throw InvalidDatum("simple roots " + std::to_string(i + 1) + ", " + std::to_string(j + 1) + " do not form a Cartan matrix");
    }
  if (l && charcount::rank(IntMatrix::from_rows(simple_roots, rank)) != l) throw InvalidDatum("simple roots are linearly dependent");
  if (l && charcount::rank(IntMatrix::from_rows(simple_coroots, rank)) != l) throw InvalidDatum("simple coroots are linearly dependent");

  // breadth-first closure under simple reflections
  struct Entry {
    IntVec root, coroot, coords;
  };
  std::vector<Entry> found;
  std::map<IntVec, int> seen;
  std::deque<int> queue;
  for (int i = 0; i < l; ++i) {
    IntVec e(l, 0);
    e[i] = 1;
    seen.emplace(simple_roots[i], static_cast<int>(found.size()));
    queue.push_back(static_cast<int>(found.size()));
    found.push_back({simple_roots[i], simple_coroots[i], e});
  }
  while (!queue.empty()) {
    Entry cur = found[queue.front()];
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      long k = d->pair(cur.root, simple_coroots[i]);
      long m = d->pair(simple_roots[i], cur.coroot);
      IntVec r = add_scaled(cur.root, simple_roots[i], -k);
      if (seen.count(r)) continue;
      IntVec co = add_scaled(cur.coroot, simple_coroots[i], -m);
      IntVec cc = cur.coords;
      cc[i] -= k;
      seen.emplace(r, static_cast<int>(found.size()));
      queue.push_back(static_cast<int>(found.size()));
      found.push_back({r, co, cc});
      if (static_cast<int>(found.size()) > kMaxRoots) throw InvalidDatum("root system is infinite or exceeds " + std::to_string(kMaxRoots) + " roots");
    }
  }
  std::vector<Entry> pos;
  for (auto& e : found) {
    bool p = std::all_of(e.coords.begin(), e.coords.end(), [](long c) { return c >= 0; });
    bool n = std::all_of(e.coords.begin(), e.coords.end(), [](long c) { return c <= 0; });
    if (!p && !n) throw InvalidDatum("root with mixed-sign simple coordinates");
    if (p) pos.push_back(e);
  }
  if (pos.size() * 2 != found.size()) throw InvalidDatum("root system is not symmetric");
  auto ht = [](const Entry& e) { return std::accumulate(e.coords.begin(), e.coords.end(), 0L); };
  std::sort(pos.begin(), pos.end(), [&](const Entry& a, const Entry& b) {
    long ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a.coords > b.coords;
  });
  for (const auto& e : pos) {
    d->roots_.push_back(e.root);
    d->coroots_.push_back(e.coroot);
    d->coords_.push_back(e.coords);
  }
  for (const auto& e : pos) {
    IntVec r = e.root, c = e.coroot, x = e.coords;
    for (auto& v : r) v = -v;
    for (auto& v : c) v = -v;
    for (auto& v : x) v = -v;
    d->roots_.push_back(r);
    d->coroots_.push_back(c);
    d->coords_.push_back(x);
  }
  for (int i = 0; i < l; ++i) d->simple_.push_back(i);
  d->finish();

  // connected centre: X / ZPhi must be torsion-free
  if (l && torsion_order(IntMatrix::from_rows(simple_roots, rank)) != 1)
    throw DisconnectedCentre("X / Z Phi has torsion of order " + torsion_order(IntMatrix::from_rows(simple_roots, rank)).get_str() +
                             " for " + d->label_);
  return d;
}

void RootDatum::finish() {
  const int n = num_roots();
  index_.clear();
  for (int i = 0; i < n; ++i) index_.emplace(roots_[i], i);
  cartan_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_[static_cast<size_t>(i) * n + j] = static_cast<int>(pair(roots_[i], coroots_[j]));
  for (int i = 0; i < n; ++i)
    if (cartan(i, i) != 2) throw InvalidDatum("<alpha, alpha^> != 2 for a generated root");
  reflect_.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int k = cartan(b, a);
      int idx = find_root(add_scaled(roots_[b], roots_[a], -k));
      if (idx < 0) throw InvalidDatum("reflection does not preserve the root set");
      reflect_[static_cast<size_t>(a) * n + b] = idx;
    }
  length2_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) length2_[i] += static_cast<long>(cartan(i, j)) * cartan(i, j);

  const int l = semisimple_rank();
  std::vector<int> parent(l);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (i != j && cartan(simple_[i], simple_[j]) != 0) parent[find(i)] = find(j);
  std::map<int, int> comp_id;
  std::vector<int> simple_comp(l);
  for (int i = 0; i < l; ++i) {
    int r = find(i);
    if (!comp_id.count(r)) comp_id.emplace(r, static_cast<int>(comp_id.size()));
    simple_comp[i] = comp_id[r];
  }
  num_components_ = static_cast<int>(comp_id.size());
  component_.assign(n, -1);
  highest_.assign(num_components_, -1);
  max_length2_.assign(num_components_, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < l; ++k)
      if (coords_[i][k] != 0) {
        component_[i] = simple_comp[k];
        break;
      }
    int c = component_[i];
    max_length2_[c] = std::max(max_length2_[c], length2_[i]);
    if (is_positive(i) && (highest_[c] < 0 || height(i) > height(highest_[c]))) highest_[c] = i;
  }
}

std::shared_ptr<const RootDatum> RootDatum::dual() const {
  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->rank_ = rank_;
  d->label_ = "dual of " + label_;
  if (!pairing_.empty()) {
    d->pairing_.assign(rank_, IntVec(rank_));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) d->pairing_[i][j] = pairing_[j][i];
  }
  d->roots_ = coroots_;
  d->coroots_ = roots_;
  d->simple_ = simple_;
  // beta^ = sum c_i (|alpha_i|^2 / |beta|^2) alpha_i^
  d->coords_.resize(num_roots());
  for (int i = 0; i < num_roots(); ++i) {
    IntVec x(semisimple_rank());
    for (int k = 0; k < semisimple_rank(); ++k) x[k] = coords_[i][k] * length2_[simple_[k]] / length2_[i];
    d->coords_[i] = x;
  }
  d->finish();
  return d;
}

std::shared_ptr<const RootDatum> RootDatum::general_linear(int n) {
  if (n < 1) throw InvalidDatum("GL(n) needs n >= 1");
  std::vector<IntVec> roots, coroots;
  for (int i = 0; i + 1 < n; ++i) {
    IntVec v(n, 0);
    v[i] = 1;
    v[i + 1] = -1;
    roots.push_back(v);
    coroots.push_back(v);
  }
  return build(n, roots, coroots, {}, "GL" + std::to_string(n));
}

std::shared_ptr<const RootDatum> RootDatum::adjoint(const CartanType& type, const std::string& label) {
  const int l = type.semisimple_rank();
  const int r = l + type.torus_extra;
  std::vector<IntVec> roots, coroots;
  int offset = 0;
  for (const auto& comp : type.components) {
    auto c = cartan_matrix(comp.family, comp.rank);
    for (int j = 0; j < comp.rank; ++j) {
      IntVec a(r, 0), co(r, 0);
      a[offset + j] = 1;
      for (int i = 0; i < comp.rank; ++i) co[offset + i] = c[i][j];
      roots.push_back(a);
      coroots.push_back(co);
    }
    offset += comp.rank;
  }
  return build(r, roots, coroots, {}, label.empty() ? type.label() : label);
}

std::shared_ptr<const RootDatum> RootDatum::from_raw(const Raw& raw) {
  auto d = build(raw.basis_rank, raw.simple_roots, raw.simple_coroots, raw.pairing, raw.label.empty() ? "datum" : raw.label);
  if (raw.center_dim >= 0 && raw.center_dim != d->center_dim())
    throw InvalidDatum("declared center_dim " + std::to_string(raw.center_dim) + " but rank - semisimple rank = " +
                       std::to_string(d->center_dim()));
  return d;
}

RootDatum::Raw load_raw_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open datum file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  RootDatum::Raw raw;
  try {
    raw.basis_rank = j.at("basis_rank").get<int>();
    raw.simple_roots = j.at("simple_roots").get<std::vector<IntVec>>();
    raw.simple_coroots = j.at("coroots").get<std::vector<IntVec>>();
    if (j.contains("pairing")) raw.pairing = j.at("pairing").get<std::vector<IntVec>>();
    raw.center_dim = j.value("center_dim", -1);
    raw.label = j.value("label", std::string("datum"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return raw;
}

DatumPtr parse_group(const std::string& spec) {
  std::smatch m;
  static const std::regex gl(R"(GL(\d+))");
  static const std::regex pgl(R"(PGL(\d+))");
  static const std::regex so(R"(SO(\d+))");
  static const std::regex psp(R"(PSp(\d+))");
  static const std::regex pso(R"(PSO(\d+))");
  static const std::regex bare(R"([ABCDEFG]\d+('?)(x[ABCDEFG]\d+'?)*)");
  if (std::regex_match(spec, m, gl)) return RootDatum::general_linear(std::stoi(m[1].str()));
  if (spec.rfind("adjoint:", 0) == 0) return RootDatum::adjoint(CartanType::parse(spec.substr(8)), spec.substr(8));
  if (spec.rfind("datum:", 0) == 0) return RootDatum::from_raw(load_raw_datum(spec.substr(6)));
  auto simple = [&](char fam, int rank) {
    CartanType t;
    validate_component(fam, rank);
    t.components.push_back({fam, rank, false});
    return RootDatum::adjoint(t, spec);
  };
  if (std::regex_match(spec, m, pgl)) return simple('A', std::stoi(m[1].str()) - 1);
  if (std::regex_match(spec, m, so)) {
    int k = std::stoi(m[1].str());
    if (k % 2 == 1 && k >= 5) return simple('B', k / 2);
    if (k == 3) return simple('A', 1);
    throw InvalidDatum("SO" + m[1].str() + " does not have connected centre or is not split-adjoint" + (k >= 6 && k % 2 == 0 ? "; use PSO" + m[1].str() : ""));
  }
  if (std::regex_match(spec, m, psp)) {
    int k = std::stoi(m[1].str());
    if (k % 2 || k < 2) throw InvalidDatum("PSp needs an even degree");
    return k == 2 ? simple('A', 1) : simple('C', k / 2);
  }
  if (std::regex_match(spec, m, pso)) {
    int k = std::stoi(m[1].str());
    if (k % 2 || k < 6) throw InvalidDatum("PSO needs an even degree >= 6");
    return simple('D', k / 2);
  }
  if (std::regex_match(spec, bare)) return RootDatum::adjoint(CartanType::parse(spec), spec);
  throw ParseError("unrecognised group specifier '" + spec + "' (expected GL<n>, adjoint:<Type><rank>[x...], an alias such as SO5 or G2, or datum:<path>)");
}

}  // namespace charcount
