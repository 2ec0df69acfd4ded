#include <numeric>
#include <random>

#include "doctest.h"

#include "charcount/errors.hpp"
#include "charcount/int_matrix.hpp"
#include "charcount/qpoly.hpp"

using namespace charcount;

namespace {

QPolynomial P(const std::string& s) { return parse_polynomial(s); }

std::vector<mpz_class> ints(std::initializer_list<long> xs) {
  std::vector<mpz_class> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

QPolynomial random_poly(std::mt19937& rng, int maxdeg) {
  std::uniform_int_distribution<int> deg(0, maxdeg), coef(-5, 5);
  std::vector<long> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return QPolynomial::from_ints(c);
}

}  // namespace

TEST_CASE("smith invariants of small matrices") {
  CHECK(smith_invariants(IntMatrix::from_rows({{1, 0}, {0, 1}}, 2)) == ints({1, 1}));
  CHECK(smith_invariants(IntMatrix::from_rows({{2, 0}, {0, 3}}, 2)) == ints({1, 6}));
  IntMatrix coroots = IntMatrix::from_rows({{2, 0}, {0, 2}}, 2);
  CHECK(smith_invariants(coroots) == ints({2, 2}));
  CHECK(torsion_order(coroots) == 4);
  CHECK(smith_invariants(IntMatrix(0, 0)).empty());
  CHECK(smith_invariants(IntMatrix::from_rows({{2, 4}, {1, 2}}, 2)) == ints({1, 0}));
}

TEST_CASE("smith invariants: divisibility chain and permutation invariance") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> e(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    std::vector<IntVec> rows(r, IntVec(c));
    for (auto& row : rows)
      for (auto& x : row) x = e(rng);
    auto inv = smith_invariants(IntMatrix::from_rows(rows, c));
    REQUIRE(static_cast<int>(inv.size()) == std::min(r, c));
    for (size_t i = 0; i + 1 < inv.size(); ++i) {
      if (inv[i + 1] == 0) continue;
      CHECK(inv[i] != 0);
      CHECK(inv[i + 1] % inv[i] == 0);
    }
    std::shuffle(rows.begin(), rows.end(), rng);
    std::vector<int> perm(c);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<IntVec> permuted(r, IntVec(c));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) permuted[i][j] = rows[i][perm[j]];
    CHECK(smith_invariants(IntMatrix::from_rows(permuted, c)) == inv);
    // 2x2 determinant agrees with the product of invariants
    if (r == 2 && c == 2) {
      mpz_class det = mpz_class(rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]);
      CHECK(abs(det) == inv[0] * inv[1]);
    }
  }
}

TEST_CASE("exact division") {
  CHECK(exact_div(P("q^2-1"), P("q-1")) == P("q+1"));
  CHECK(exact_div(P("q^4+2q^3-6q^2+2q+1"), P("q-1").pow(2)) == P("q^2+4q+1"));
  QPolynomial lf = QPolynomial::q_power(4) * cyclotomic(1).pow(2) * cyclotomic(2).pow(2) * cyclotomic(4);
  CHECK(exact_div(lf, cyclotomic(1).pow(2)) == QPolynomial::q_power(4) * cyclotomic(2).pow(2) * cyclotomic(4));
  CHECK_THROWS_AS(exact_div(P("q^2+1"), P("q-1")), NonzeroRemainder);
  CHECK_THROWS_AS(exact_div(P("q"), QPolynomial()), DivisionByZero);
}

TEST_CASE("exact division round trip") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    QPolynomial a = random_poly(rng, 6), b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("palindromic test") {
  CHECK(is_palindromic(P("2q^4+12q^3+48q^2+12q+2"), 4));
  CHECK(is_palindromic(P("q^2+4q+1"), 2));
  CHECK_FALSE(is_palindromic(P("q^4+6q^3+20q^2"), 4));
  CHECK(is_palindromic(P("q^3+q"), 4));
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    QPolynomial p = random_poly(rng, 5);
    int d = std::max(p.degree(), 0) + static_cast<int>(rng() % 3);
    std::vector<mpq_class> padded(d + 1);
    for (int k = 0; k <= d; ++k) padded[k] = p.coeff(k);
    bool mirror = std::equal(padded.begin(), padded.end(), padded.rbegin());
    CHECK(is_palindromic(p, d) == mirror);
  }
}

TEST_CASE("cyclotomic factorization") {
  auto f = cyclotomic_factor(P("q^3-q"));
  CHECK(f.q_power == 1);
  CHECK(f.phi == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK(f.residual == QPolynomial(1));

  QPolynomial lf = P("q-1").pow(2) * P("q+1").pow(2) * P("q^2+1");
  lf = lf.shift(4);
  f = cyclotomic_factor(lf);
  CHECK(f.q_power == 4);
  CHECK(f.phi == std::map<int, int>{{1, 2}, {2, 2}, {4, 1}});
  CHECK(f.to_string() == "q^4 * Phi1^2 * Phi2^2 * Phi4");

  f = cyclotomic_factor(P("q^2+q+2"));
  CHECK(f.phi.empty());
  CHECK(f.residual == P("q^2+q+2"));

  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    QPolynomial p = random_poly(rng, 4) * cyclotomic(1 + rng() % 12) * cyclotomic(1 + rng() % 6);
    if (p.is_zero()) continue;
    auto g = cyclotomic_factor(p);
    CHECK(g.expand() == p);
    CHECK(parse_polynomial(g.to_string()) == p);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == P("q-1"));
  CHECK(cyclotomic(6) == P("q^2-q+1"));
  QPolynomial prod(1);
  for (int d : {1, 2, 3, 4, 6, 12}) prod *= cyclotomic(d);
  CHECK(prod == P("q^12-1"));
}

TEST_CASE("serialization round trips") {
  QPolynomial p = P("1/2q^3-q+7");
  CHECK(polynomial_from_json(to_json(p)) == p);
  CHECK(to_json(P("q^2+2")) == nlohmann::json::array({2, 0, 1}));
  CHECK(parse_polynomial(p.to_string()) == p);
  CHECK(parse_polynomial("2 * q * Phi1 * Phi2^2") == QPolynomial(2) * P("q") * cyclotomic(1) * cyclotomic(2).pow(2));
  CHECK(parse_expression("3*8^(n-1)*q^2", {{"n", 2}}) == P("24q^2"));
  CHECK(parse_expression("2^(n-2)", {{"n", 1}}) == QPolynomial(mpq_class(1, 2)));
  CHECK_THROWS_AS(parse_polynomial("q^^2"), ParseError);
}

TEST_CASE("evaluation and predicates") {
  QPolynomial p = P("q^4+6q^3+20q^2");
  CHECK(p(1) == 27);
  CHECK(p.is_monic());
  CHECK(p.nonnegative());
  CHECK(p.valuation() == 2);
  CHECK(P("1/2q").is_integral() == false);
}
