#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "charcount/group_data.hpp"
#include "charcount/weyl.hpp"

namespace charcount {

// G-type [L, rho]
struct GTypeRecord {
  RootSet levi;
  std::string levi_label;
  std::string rho;
  long dim_rho = 1;
  QPolynomial generic_degree;
  long orbit_size = 1;  // |[L]|
  long nu = 0;
  long pi0 = 1;
  mpz_class weyl_order;  // |W(L)|
  QPolynomial levi_order;  // |L^F|
  QPolynomial mass;  // m_tau
};

// g-type [L, N]
struct LieTypeRecord {
  RootSet levi;
  std::string levi_label;
  std::string orbit_label;
  QPolynomial orbit_size_poly;  // |N^F|
  QPolynomial green;
  int orbit_dim = 0;
  int d_tau = 0;
  long mu = 0;
  long orbit_size = 1;
  mpz_class weyl_order;
  QPolynomial levi_order;
};

enum class RepresentativePolicy { Smallest, Largest, Random };

struct ContextOptions {
  RepresentativePolicy policy = RepresentativePolicy::Smallest;
  unsigned seed = 0;
  int threads = 1;
};

// Shared immutable context for one group: datum, subsystem families and
// posets, and the data pack. Type tables are built on first use.
class GroupContext {
 public:
  GroupContext(DatumPtr datum, DataPtr data, ContextOptions opts = {});

  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }
  const GroupDataPack& data() const { return *data_; }
  const ContextOptions& options() const { return opts_; }

  mpz_class weyl_order() const;
  QPolynomial group_order() const;   // |G^F|
  QPolynomial center_order() const;  // |Z^F|
  QPolynomial torus_order() const;   // |T^F|

  const Poset& levi_poset() const;
  const Poset& endoscopy_poset() const;
  const std::vector<std::vector<RootSet>>& levi_orbits() const;
  const std::vector<std::vector<RootSet>>& endoscopy_orbits() const;
  RootSet representative(const std::vector<RootSet>& orbit) const;

  long pi0_dual_center(const RootSet& l) const;
  long nu(const RootSet& l) const;
  long mu_levi(const RootSet& l) const;

  const std::vector<GTypeRecord>& g_types() const;
  const std::vector<LieTypeRecord>& lie_types() const;

  QPolynomial s_tau(const GTypeRecord& rec, int n) const;
  QPolynomial h_tau(const LieTypeRecord& rec, int n) const;

  // Non-fatal findings: pair-orbit fusion, pseudo-Levi variant mismatch.
  std::vector<std::string> diagnostics() const;

 private:
  void ensure_levis() const;
  void ensure_endoscopy() const;

  DatumPtr datum_;
  DataPtr data_;
  ContextOptions opts_;

  mutable std::once_flag levi_once_, endo_once_, g_once_, lie_once_;
  mutable std::unique_ptr<Poset> levi_poset_, endo_poset_;
  mutable std::vector<std::vector<RootSet>> levi_orbits_, endo_orbits_;
  mutable std::vector<GTypeRecord> g_types_;
  mutable std::vector<LieTypeRecord> lie_types_;
  mutable std::mutex diag_mu_;
  mutable std::vector<std::string> diagnostics_;
};

mpz_class pi0_dual_center(const RootDatum& datum, const RootSet& l);
// Labels of W(L)-irreducibles fused by the setwise stabilizer of L through
// component permutations; empty when fusion is trivial.
std::vector<std::vector<std::string>> fused_labels(const DatumPtr& datum, const RootSet& l, const GroupDataPack& data,
                                                   std::vector<std::string>* notes = nullptr);

}  // namespace charcount
