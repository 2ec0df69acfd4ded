#include "charcount/group_data.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "charcount/errors.hpp"
#include "charcount/weyl.hpp"

namespace charcount {

const std::map<std::string, std::string>& embedded_files();

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::Bundled: return "bundled";
    case Provenance::UserFile: return "user-file";
  }
  return "?";
}

std::string unipotent_key(const CartanComponent& c) {
  char f = c.family == 'C' ? 'B' : c.family;
  return std::string(1, f) + std::to_string(c.rank);
}

std::string nilpotent_key(const CartanComponent& c) {
  char f = (c.family == 'C' && c.rank == 2) ? 'B' : c.family;
  return std::string(1, f) + std::to_string(c.rank);
}

namespace {

CartanType parse_type(const std::string& s) {
  if (s == "T" || s.empty()) return {};
  return CartanType::parse(s);
}

std::vector<int> type_degrees(const CartanType& t) {
  std::vector<int> degs;
  for (const auto& c : t.components) {
    auto d = degrees_from_poincare(poincare_polynomial(cartan_matrix(c.family, c.rank)));
    degs.insert(degs.end(), d.begin(), d.end());
  }
  return degs;
}

QPolynomial flag_count(const std::vector<int>& degs) {
  QPolynomial p(1);
  for (int d : degs) p *= QPolynomial(std::vector<mpq_class>(d, mpq_class(1)));
  return p;
}

}  // namespace

void validate(const UnipotentDatum& d) {
  CartanType t = parse_type(d.weyl_type);
  auto degs = type_degrees(t);
  mpz_class order = 1;
  int npos = 0;
  for (int x : degs) order *= x, npos += x - 1;
  if (d.entries.empty()) throw InvariantViolation("nonempty", d.weyl_type + " has no unipotent entries");
  mpz_class sumsq = 0;
  QPolynomial sum;
  QPolynomial ambient = QPolynomial::q_power(npos);
  for (int x : degs) ambient *= QPolynomial::q_power(x) - QPolynomial(1);
  std::set<std::string> labels;
  for (const auto& e : d.entries) {
    if (!labels.insert(e.rho).second) throw InvariantViolation("distinct labels", "repeated rho label " + e.rho);
    if (e.dim <= 0) throw InvariantViolation("positive dim", e.rho);
    if (e.degree.is_zero() || !divides(e.degree, ambient))
      throw InvariantViolation("degree divides order polynomial", e.rho + " has generic degree " + e.degree.to_string());
    sumsq += mpz_class(e.dim) * e.dim;
    sum += e.degree * QPolynomial(e.dim);
  }
  if (sumsq != order)
    throw InvariantViolation("sum dim^2 = |W|", d.weyl_type + ": " + sumsq.get_str() + " != " + order.get_str());
  QPolynomial flags = flag_count(degs);
  if (sum != flags)
    throw InvariantViolation("flag identity", d.weyl_type + ": sum dim*degree = " + sum.to_string() + ", expected " + flags.to_string());
  for (const auto& [gen, perm] : d.outer_action) {
    std::set<std::string> image;
    for (const auto& [a, b] : perm) {
      if (!labels.count(a) || !labels.count(b)) throw InvariantViolation("outer action labels", gen + " maps " + a + " to " + b);
      image.insert(b);
    }
    if (image.size() != perm.size()) throw InvariantViolation("outer action is a permutation", gen);
  }
}

void validate(const NilpotentDatum& d) {
  CartanType t = parse_type(d.cartan_type);
  auto degs = type_degrees(t);
  int npos = 0;
  for (int x : degs) npos += x - 1;
  QPolynomial sum;
  bool zero_seen = false;
  std::set<std::string> labels;
  for (const auto& e : d.entries) {
    if (!labels.insert(e.label).second) throw InvariantViolation("distinct labels", "repeated orbit label " + e.label);
    if (!e.green.is_integral() || !e.green.nonnegative())
      throw InvariantViolation("green has nonnegative integer coefficients", e.label + ": " + e.green.to_string());
    if (e.orbit_dim < 0 || e.orbit_dim > 2 * npos || e.orbit_dim % 2)
      throw InvariantViolation("orbit dimension", e.label + " has dimension " + std::to_string(e.orbit_dim));
    if (e.orbit_dim == 0) {
      zero_seen = true;
      if (e.size != QPolynomial(1)) throw InvariantViolation("zero orbit size 1", e.label);
      if (e.green != flag_count(degs))
        throw InvariantViolation("zero orbit green = flag count", e.label + ": " + e.green.to_string());
    }
    sum += e.size;
  }
  if (!zero_seen) throw InvariantViolation("zero orbit present", d.cartan_type);
  if (sum != QPolynomial::q_power(2 * npos))
    throw InvariantViolation("nilpotent cone count", d.cartan_type + ": sum of sizes = " + sum.to_string() + ", expected q^" +
                                                         std::to_string(2 * npos));
}

UnipotentDatum tensor(const std::vector<UnipotentDatum>& parts) {
  UnipotentDatum out;
  out.weyl_type = "T";
  out.entries.push_back({"1^1", 1, QPolynomial(1)});
  bool first = true;
  for (const auto& p : parts) {
    std::vector<UnipotentEntry> next;
    for (const auto& a : out.entries)
      for (const auto& b : p.entries)
        next.push_back({first ? b.rho : a.rho + "⊗" + b.rho, a.dim * b.dim, a.degree * b.degree});
    out.entries = std::move(next);
    out.weyl_type = first ? p.weyl_type : out.weyl_type + "x" + p.weyl_type;
    first = false;
  }
  return out;
}

NilpotentDatum tensor(const std::vector<NilpotentDatum>& parts) {
  NilpotentDatum out;
  out.cartan_type = "T";
  out.entries.push_back({"0", 0, QPolynomial(1), QPolynomial(1)});
  bool first = true;
  for (const auto& p : parts) {
    std::vector<NilpotentEntry> next;
    for (const auto& a : out.entries)
      for (const auto& b : p.entries)
        next.push_back({first ? b.label : a.label + "⊗" + b.label, a.orbit_dim + b.orbit_dim, a.size * b.size, a.green * b.green});
    out.entries = std::move(next);
    out.cartan_type = first ? p.cartan_type : out.cartan_type + "x" + p.cartan_type;
    first = false;
  }
  return out;
}

namespace {

bool same(const UnipotentDatum& a, const UnipotentDatum& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i].rho != b.entries[i].rho || a.entries[i].dim != b.entries[i].dim || a.entries[i].degree != b.entries[i].degree)
      return false;
  return a.outer_action == b.outer_action;
}

bool same(const NilpotentDatum& a, const NilpotentDatum& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    const auto &x = a.entries[i], &y = b.entries[i];
    if (x.label != y.label || x.orbit_dim != y.orbit_dim || x.size != y.size || x.green != y.green) return false;
  }
  return true;
}

std::string registry_key(const std::string& type, bool unipotent) {
  CartanType t = CartanType::parse(type);
  if (t.components.size() != 1) throw ParseError("data files describe one irreducible type, got " + type);
  return unipotent ? unipotent_key(t.components[0]) : nilpotent_key(t.components[0]);
}

}  // namespace

void GroupDataPack::add(const UnipotentDatum& d, Provenance p, const std::string& source) {
  validate(d);
  std::string key = "W:" + registry_key(d.weyl_type, true);
  auto it = unipotent_.find(key);
  if (it != unipotent_.end()) {
    if (same(it->second, d)) return;
    throw DuplicateType("unipotent data for " + d.weyl_type + " from " + source + " conflicts with " + source_[key]);
  }
  unipotent_.emplace(key, d);
  provenance_[key] = p;
  source_[key] = source;
}

void GroupDataPack::add(const NilpotentDatum& d, Provenance p, const std::string& source) {
  validate(d);
  std::string key = "N:" + registry_key(d.cartan_type, false);
  auto it = nilpotent_.find(key);
  if (it != nilpotent_.end()) {
    if (same(it->second, d)) return;
    throw DuplicateType("nilpotent data for " + d.cartan_type + " from " + source + " conflicts with " + source_[key]);
  }
  nilpotent_.emplace(key, d);
  provenance_[key] = p;
  source_[key] = source;
}

std::vector<std::string> GroupDataPack::load_json(const nlohmann::json& j, Provenance p, const std::string& source) {
  std::vector<std::string> added;
  try {
    std::string type = j.at("cartan_type").get<std::string>();
    CartanType t = CartanType::parse(type);
    if (t.components.size() != 1) throw ParseError(source + ": expected a single irreducible cartan_type");
    if (j.contains("unipotent")) {
      UnipotentDatum u;
      u.weyl_type = type;
      for (const auto& e : j.at("unipotent"))
        u.entries.push_back({e.at("rho").get<std::string>(), e.at("dim").get<long>(), polynomial_from_json(e.at("generic_degree"))});
      if (j.contains("outer_action"))
        for (const auto& [gen, perm] : j.at("outer_action").items())
          u.outer_action[gen] = perm.get<std::map<std::string, std::string>>();
      add(u, p, source);
      added.push_back("W:" + unipotent_key(t.components[0]));
    }
    if (j.contains("nilpotent")) {
      NilpotentDatum n;
      n.cartan_type = type;
      for (const auto& e : j.at("nilpotent"))
        n.entries.push_back({e.at("label").get<std::string>(), e.at("orbit_dim").get<int>(), polynomial_from_json(e.at("size")),
                             polynomial_from_json(e.at("green"))});
      add(n, p, source);
      added.push_back("N:" + nilpotent_key(t.components[0]));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source + ": " + e.what());
  }
  return added;
}

std::vector<std::string> GroupDataPack::load_file(const std::string& path, Provenance p) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open data file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return load_json(j, p, path);
}

void GroupDataPack::load_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("cartan_type")) continue;
    load_json(j, Provenance::UserFile, f.string());
  }
}

std::vector<std::string> GroupDataPack::search_paths() {
  std::vector<std::string> out;
  if (const char* env = std::getenv("CHARCOUNT_DATA_DIR")) {
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ':'))
      if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::shared_ptr<const GroupDataPack> GroupDataPack::standard(const std::vector<std::string>& extra_dirs) {
  auto pack = std::make_shared<GroupDataPack>();
  for (int n = 2; n <= 8; ++n) {
    pack->add(typeA_unipotent_data(n), Provenance::Computed, "type A formulas");
    pack->add(typeA_nilpotent_data(n), Provenance::Computed, "type A formulas");
  }
  for (const auto& [name, text] : embedded_files())
    if (name.rfind("data/", 0) == 0 && name.find("golden") == std::string::npos)
      pack->load_json(nlohmann::json::parse(text), Provenance::Bundled, name);
  for (const auto& dir : search_paths()) pack->load_directory(dir);
  for (const auto& dir : extra_dirs) pack->load_directory(dir);
  return pack;
}

const UnipotentDatum& GroupDataPack::unipotent(const std::string& key) const {
  auto it = unipotent_.find("W:" + key);
  if (it == unipotent_.end()) throw MissingData("no unipotent data for Weyl type " + key);
  return it->second;
}

const NilpotentDatum& GroupDataPack::nilpotent(const std::string& key) const {
  auto it = nilpotent_.find("N:" + key);
  if (it == nilpotent_.end()) throw MissingData("no nilpotent data for type " + key);
  return it->second;
}

Provenance GroupDataPack::provenance(const std::string& key) const {
  auto it = provenance_.find(key);
  if (it == provenance_.end()) throw MissingData("no data registered under " + key);
  return it->second;
}

std::vector<std::string> GroupDataPack::unipotent_keys() const {
  std::vector<std::string> k;
  for (const auto& [key, v] : unipotent_) k.push_back(key.substr(2));
  return k;
}

std::vector<std::string> GroupDataPack::nilpotent_keys() const {
  std::vector<std::string> k;
  for (const auto& [key, v] : nilpotent_) k.push_back(key.substr(2));
  return k;
}

UnipotentDatum GroupDataPack::unipotent_for(const CartanType& t) const {
  std::vector<UnipotentDatum> parts;
  for (const auto& c : t.components) parts.push_back(unipotent(unipotent_key(c)));
  return tensor(parts);
}

NilpotentDatum GroupDataPack::nilpotent_for(const CartanType& t) const {
  std::vector<NilpotentDatum> parts;
  for (const auto& c : t.components) parts.push_back(nilpotent(nilpotent_key(c)));
  return tensor(parts);
}

nlohmann::json to_json(const UnipotentDatum& u, const NilpotentDatum* n) {
  nlohmann::json j;
  j["cartan_type"] = u.weyl_type;
  for (const auto& e : u.entries) j["unipotent"].push_back({{"rho", e.rho}, {"dim", e.dim}, {"generic_degree", to_json(e.degree)}});
  if (n)
    for (const auto& e : n->entries)
      j["nilpotent"].push_back({{"label", e.label}, {"orbit_dim", e.orbit_dim}, {"size", to_json(e.size)}, {"green", to_json(e.green)}});
  if (!u.outer_action.empty()) j["outer_action"] = u.outer_action;
  return j;
}

}  // namespace charcount
