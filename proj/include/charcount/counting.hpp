#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "charcount/type_engine.hpp"

namespace charcount {

enum class Variant { Multiplicative, Additive };

const char* variant_name(Variant v);  // "mult" / "add"
Variant parse_variant(const std::string& s);

struct CountSpec {
  int g = 0;
  int n = 3;
  Variant variant = Variant::Multiplicative;
};

struct CountProperties {
  bool palindromic = false;
  bool monic = false;
  bool nonnegative = false;
  mpq_class leading;
  mpq_class value_at_1;
};

struct CountResult {
  QPolynomial polynomial;
  int dimension = 0;
  long validity_modulus = 1;
  CountProperties properties;
};

// (2g-2+n) dim G + 2 dim Z - n dim T
int expected_dimension(const RootDatum& d, int g, int n);

// Throws EmptyVariety unless n >= 1 and 2g + n >= 3.
void check_spec(const CountSpec& spec);

CountResult count_multiplicative(const GroupContext& ctx, int g, int n);
CountResult count_additive(const GroupContext& ctx, int g, int n);
CountResult count(const GroupContext& ctx, const CountSpec& spec);

mpz_class euler_characteristic(const GroupContext& ctx, const CountSpec& spec);

// Leading coefficient of |X| at (0,3) next to |pi0(Z(G dual))|.
std::pair<mpz_class, mpz_class> component_and_leading_check(const GroupContext& ctx);

long validity_modulus(const GroupContext& ctx);

struct CheckRow {
  int g = 0, n = 0;
  int dimension = 0;
  int degree_x = -1, degree_y = -1;
  bool palindromic_x = false;
  bool monic_y = false;
  bool nonnegative_y = false;  // reported only
  mpz_class leading_x;
  bool leading_matches = false;
  mpz_class euler_x, euler_y;
  bool euler_vanishing_ok = true;
  std::string error;

  bool asserted_ok() const;
};

struct CheckReport {
  std::string group;
  mpz_class pi0_dual;
  long validity_modulus = 1;
  std::vector<CheckRow> rows;

  bool asserted_ok() const;
  bool all_nonnegative() const;
};

std::vector<std::pair<int, int>> valid_grid(int gmax, int nmax);
CheckReport check_report(const GroupContext& ctx, const std::vector<std::pair<int, int>>& grid);

nlohmann::json to_json(const GroupContext& ctx, const CountSpec& spec, const CountResult& r);
nlohmann::json to_json(const CheckReport& r);

}  // namespace charcount
