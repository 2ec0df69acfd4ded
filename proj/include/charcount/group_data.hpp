#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "charcount/qpoly.hpp"
#include "charcount/root_datum.hpp"

namespace charcount {

using Partition = std::vector<int>;

std::vector<Partition> partitions(int n);  // reverse lexicographic, (n) first
Partition conjugate(const Partition& p);
long n_statistic(const Partition& p);  // sum (i-1) lambda_i
long standard_tableaux(const Partition& p);
std::string partition_label(const Partition& p);  // "2^1 1^1"
// Sum over semistandard tableaux of shape lambda, content mu, of q^charge.
QPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu);
// Charge of a word with partition content (letters 1..k).
long charge(const std::vector<int>& word);

struct UnipotentEntry {
  std::string rho;
  long dim = 1;
  QPolynomial degree;  // generic degree
};

struct UnipotentDatum {
  std::string weyl_type;  // "B3", "A2xA1", "T"
  std::vector<UnipotentEntry> entries;
  // generator -> (rho -> rho)
  std::map<std::string, std::map<std::string, std::string>> outer_action;
};

struct NilpotentEntry {
  std::string label;
  int orbit_dim = 0;
  QPolynomial size;
  QPolynomial green;
};

struct NilpotentDatum {
  std::string cartan_type;
  std::vector<NilpotentEntry> entries;
};

enum class Provenance { Computed, Bundled, UserFile };
const char* provenance_name(Provenance p);

UnipotentDatum typeA_unipotent_data(int n);
NilpotentDatum typeA_nilpotent_data(int n);

// Componentwise tensor product: labels joined by "⊗", dims and polynomials
// multiply, orbit dimensions add.
UnipotentDatum tensor(const std::vector<UnipotentDatum>& parts);
NilpotentDatum tensor(const std::vector<NilpotentDatum>& parts);

// Invariants checked at load time; InvariantViolation names the failing one.
void validate(const UnipotentDatum& d);
void validate(const NilpotentDatum& d);

// Registry keys: unipotent data by Weyl type of one irreducible component
// (C_n shares B_n), nilpotent data by Cartan type (A_k means gl_{k+1}).
std::string unipotent_key(const CartanComponent& c);
std::string nilpotent_key(const CartanComponent& c);

class GroupDataPack {
 public:
  GroupDataPack() = default;

  // Computed type A (gl_2 .. gl_8), bundled B2 and G2, then every data file
  // in CHARCOUNT_DATA_DIR (colon separated), then extra_dirs.
  static std::shared_ptr<const GroupDataPack> standard(const std::vector<std::string>& extra_dirs = {});
  static std::vector<std::string> search_paths();

  void add(const UnipotentDatum& d, Provenance p, const std::string& source);
  void add(const NilpotentDatum& d, Provenance p, const std::string& source);
  // Returns the registry keys added.
  std::vector<std::string> load_json(const nlohmann::json& j, Provenance p, const std::string& source);
  std::vector<std::string> load_file(const std::string& path, Provenance p = Provenance::UserFile);
  void load_directory(const std::string& dir);

  bool has_unipotent(const std::string& key) const { return unipotent_.count(key) > 0; }
  bool has_nilpotent(const std::string& key) const { return nilpotent_.count(key) > 0; }
  const UnipotentDatum& unipotent(const std::string& key) const;
  const NilpotentDatum& nilpotent(const std::string& key) const;
  Provenance provenance(const std::string& key) const;
  std::vector<std::string> unipotent_keys() const;
  std::vector<std::string> nilpotent_keys() const;
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Data for a (possibly reducible, possibly empty) type; MissingData when a
  // component is not registered.
  UnipotentDatum unipotent_for(const CartanType& t) const;
  NilpotentDatum nilpotent_for(const CartanType& t) const;

 private:
  std::map<std::string, UnipotentDatum> unipotent_;
  std::map<std::string, NilpotentDatum> nilpotent_;
  std::map<std::string, Provenance> provenance_;
  std::map<std::string, std::string> source_;
  std::vector<std::string> warnings_;
};

using DataPtr = std::shared_ptr<const GroupDataPack>;

nlohmann::json to_json(const UnipotentDatum& u, const NilpotentDatum* n = nullptr);

}  // namespace charcount
