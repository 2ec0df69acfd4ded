#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "../oracles.hpp"
#include "charcount/errors.hpp"
#include "charcount/group_data.hpp"
#include "charcount/weyl.hpp"

using namespace charcount;

namespace {

QPolynomial P(const std::string& s) { return parse_polynomial(s); }

const UnipotentEntry& entry(const UnipotentDatum& d, const std::string& rho) {
  for (const auto& e : d.entries)
    if (e.rho == rho) return e;
  FAIL("no entry " << rho);
  return d.entries.front();
}

const NilpotentEntry& orbit(const NilpotentDatum& d, const std::string& label) {
  for (const auto& e : d.entries)
    if (e.label == label) return e;
  FAIL("no orbit " << label);
  return d.entries.front();
}

// prod (q^{d_i}-1)/(q-1)^rank for the Weyl type named by a registry key
QPolynomial flag_count(const std::string& type) {
  auto d = RootDatum::adjoint(CartanType::parse(type));
  QPolynomial num(1);
  for (int deg : reflection_degrees(Subsystem(d, d->all_roots()))) num *= QPolynomial::q_power(deg) - QPolynomial(1);
  return exact_div(num, cyclotomic(1).pow(d->semisimple_rank()));
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("type A unipotent data") {
  auto a1 = typeA_unipotent_data(2);
  CHECK(entry(a1, "2^1").dim == 1);
  CHECK(entry(a1, "2^1").degree == QPolynomial(1));
  CHECK(entry(a1, "1^2").degree == P("q"));
  auto a2 = typeA_unipotent_data(3);
  CHECK(entry(a2, "2^1 1^1").dim == 2);
  CHECK(entry(a2, "2^1 1^1").degree == P("q") * cyclotomic(2));
  CHECK(entry(a2, "1^3").degree == P("q^3"));
}

TEST_CASE("Kostka-Foulkes polynomials") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions(n)) CHECK(kostka_foulkes(l, l) == QPolynomial(1));
  CHECK(kostka_foulkes({2}, {1, 1}) == P("q"));
  CHECK(kostka_foulkes({2, 1}, {1, 1, 1}) == P("q^2+q"));
  CHECK(kostka_foulkes({3}, {1, 1, 1}) == P("q^3"));
  // K(1) is the Kostka number; sum over lambda of f^lambda K_{lambda,1^n}(1) = n!
  for (int n = 1; n <= 5; ++n) {
    Partition ones(n, 1);
    long total = 0, fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const auto& l : partitions(n)) {
      mpq_class k = kostka_foulkes(l, ones)(1);
      CHECK(k == standard_tableaux(l));
      total += standard_tableaux(l) * k.get_num().get_si();
    }
    CHECK(total == fact);
  }
  // row tableau 1 2 has charge 1, column tableau (reading word 21) charge 0
  CHECK(charge({1, 2}) == 1);
  CHECK(charge({2, 1}) == 0);
}

TEST_CASE("type A nilpotent data") {
  auto gl2 = typeA_nilpotent_data(2);
  CHECK(orbit(gl2, "1^2").green == P("q+1"));
  CHECK(orbit(gl2, "1^2").size == QPolynomial(1));
  CHECK(orbit(gl2, "2^1").green == QPolynomial(1));
  CHECK(orbit(gl2, "2^1").size == P("q^2-1"));
  CHECK(orbit(typeA_nilpotent_data(3), "2^1 1^1").green == P("2q+1"));
}

TEST_CASE("type A Green values equal Springer fibre counts over F2 and F3") {
  for (int n = 2; n <= 3; ++n) {
    auto data = typeA_nilpotent_data(n);
    for (const auto& lambda : partitions(n)) {
      const auto& e = orbit(data, partition_label(lambda));
      for (int p : {2, 3}) {
        CAPTURE(n);
        CAPTURE(p);
        CHECK(e.green(p) == oracle::springer_fibre_points(lambda, p));
        CHECK(e.size(p) == oracle::nilpotent_class_size(lambda, p));
      }
    }
  }
}

TEST_CASE("bundled data files") {
  auto pack = GroupDataPack::standard();
  CHECK(pack->unipotent("B2").entries.size() == 5);
  CHECK(pack->nilpotent("B2").entries.size() == 5);
  CHECK(pack->unipotent("G2").entries.size() == 6);
  CHECK(pack->nilpotent("G2").entries.size() == 7);
  CHECK(pack->provenance("W:B2") == Provenance::Bundled);
  for (const char* key : {"B3", "D4"}) CHECK(pack->has_unipotent("W:" + std::string(key)));
  for (const char* key : {"B3", "C3", "D4"}) CHECK(pack->has_nilpotent("N:" + std::string(key)));
}

TEST_CASE("nilpotent cone and flag identities for every registered datum") {
  auto pack = GroupDataPack::standard();
  for (const auto& key : pack->nilpotent_keys()) {
    CAPTURE(key);
    const auto& d = pack->nilpotent(key);
    auto datum = parse_group(key[0] == 'A' ? "GL" + std::to_string(std::stoi(key.substr(1)) + 1) : "adjoint:" + key);
    QPolynomial total;
    for (const auto& e : d.entries) {
      total += e.size;
      CHECK(e.green.nonnegative());
      CHECK(e.green.is_integral());
    }
    CHECK(total == QPolynomial::q_power(2 * datum->num_positive()));
  }
  for (const auto& key : pack->unipotent_keys()) {
    CAPTURE(key);
    const auto& d = pack->unipotent(key);
    QPolynomial sum;
    long dims = 0;
    for (const auto& e : d.entries) {
      sum += QPolynomial(e.dim) * e.degree;
      dims += e.dim * e.dim;
    }
    CHECK(sum == flag_count(key));
    CHECK(mpz_class(dims) == RootDatum::adjoint(CartanType::parse(key))->weyl_order());
  }
  QPolynomial so5;
  for (const auto& e : pack->nilpotent("B2").entries) so5 += e.size;
  CHECK(so5(2) == 256);
}

TEST_CASE("tensor products of data") {
  auto a = typeA_nilpotent_data(2), b = typeA_nilpotent_data(3);
  auto t = tensor(std::vector<NilpotentDatum>{a, b});
  CHECK(t.entries.size() == a.entries.size() * b.entries.size());
  const auto& z = t.entries.front();
  CHECK(z.green == a.entries.front().green * b.entries.front().green);
  CHECK(z.orbit_dim == a.entries.front().orbit_dim + b.entries.front().orbit_dim);
}

TEST_CASE("loading user files") {
  GroupDataPack pack;
  std::string good = temp_file("cc_good.json", R"({"cartan_type": "A1",
    "unipotent": [{"rho": "a", "dim": 1, "generic_degree": [1]}, {"rho": "b", "dim": 1, "generic_degree": [0, 1]}],
    "nilpotent": [{"label": "0", "orbit_dim": 0, "size": [1], "green": [1, 1]},
                  {"label": "reg", "orbit_dim": 2, "size": [-1, 0, 1], "green": [1]}]})");
  auto keys = pack.load_file(good);
  CHECK(keys.size() == 2);

  std::string negative = temp_file("cc_negative.json", R"({"cartan_type": "A1",
    "nilpotent": [{"label": "0", "orbit_dim": 0, "size": [1], "green": [1, 1]},
                  {"label": "reg", "orbit_dim": 2, "size": [-1, 0, 1], "green": [-1]}]})");
  GroupDataPack p2;
  CHECK_THROWS_AS(p2.load_file(negative), InvariantViolation);

  std::string broken = temp_file("cc_broken.json", "{ not json");
  CHECK_THROWS_AS(p2.load_file(broken), ParseError);

  std::string wrong_sum = temp_file("cc_sum.json", R"({"cartan_type": "A1",
    "unipotent": [{"rho": "a", "dim": 1, "generic_degree": [1]}]})");
  CHECK_THROWS_AS(p2.load_file(wrong_sum), InvariantViolation);
}
