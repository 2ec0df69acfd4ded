#include "doctest.h"

#include "../oracles.hpp"
#include "charcount/errors.hpp"
#include "charcount/weyl.hpp"

using namespace charcount;

namespace {

RootSet with_negatives(const RootDatum& d, std::initializer_list<int> idx) {
  RootSet s;
  for (int i : idx) {
    s.set(i);
    s.set(d.negative(i));
  }
  return s;
}

QPolynomial phi(int k) { return cyclotomic(k); }
QPolynomial qp(int k) { return QPolynomial::q_power(k); }

void check_moebius_axiom(const Poset& p) {
  for (size_t x = 0; x < p.size(); ++x)
    for (size_t y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) continue;
      long sum = 0;
      for (size_t z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(z, y)) sum += p.moebius(x, z);
      CHECK(sum == (x == y ? 1 : 0));
    }
}

}  // namespace

TEST_CASE("Weyl group orders") {
  CHECK(generate_weyl(parse_group("GL2")).order() == 2);
  CHECK(generate_weyl(parse_group("SO5")).order() == 8);
  CHECK(generate_weyl(parse_group("G2")).order() == 12);
  for (const char* spec : {"GL4", "SO7", "adjoint:C3", "adjoint:D4", "adjoint:F4", "adjoint:A2xG2"}) {
    auto d = parse_group(spec);
    auto w = generate_weyl(d);
    Subsystem full(d, d->all_roots());
    mpz_class prod = 1;
    for (int deg : reflection_degrees(full)) prod *= deg;
    CHECK(mpz_class(static_cast<unsigned long>(w.order())) == prod);
    CHECK(d->weyl_order() == prod);
  }
}

TEST_CASE("subsystem orbits") {
  auto d = parse_group("SO5");
  auto w = generate_weyl(d);
  int lng = oracle::root_by_coords(*d, {1, 0});
  CHECK(subsystem_orbit(w, Subsystem(d, with_negatives(*d, {lng}))).size() == 2);
  CHECK(subsystem_orbit(w, Subsystem(d, d->all_roots())).size() == 1);

  auto g = parse_group("G2");
  auto wg = generate_weyl(g);
  // a short root and the long root orthogonal to it
  int s = oracle::root_by_coords(*g, {1, 0});
  int l = -1;
  for (int i = 0; i < g->num_roots(); ++i)
    if (g->cartan(i, s) == 0 && g->length2(i) > g->length2(s)) l = i;
  REQUIRE(l >= 0);
  CHECK(subsystem_orbit(wg, Subsystem(g, with_negatives(*g, {s, l}))).size() == 3);

  for (const char* spec : {"SO5", "G2", "GL4", "adjoint:C3"}) {
    auto dd = parse_group(spec);
    auto ww = generate_weyl(dd);
    size_t covered = 0;
    auto levis = enumerate_levis(dd);
    for (const auto& orbit : weyl_orbits(*dd, levis)) {
      auto o = subsystem_orbit(ww, Subsystem(dd, orbit.front()));
      CHECK(ww.order() % o.size() == 0);
      CHECK(o == orbit);
      covered += o.size();
    }
    CHECK(covered == levis.size());
  }
}

TEST_CASE("reflection degrees") {
  auto a1 = parse_group("adjoint:A1");
  CHECK(reflection_degrees(Subsystem(a1, a1->all_roots())) == std::vector<int>{2});
  auto b = parse_group("SO5");
  CHECK(reflection_degrees(Subsystem(b, b->all_roots())) == std::vector<int>{2, 4});
  auto g = parse_group("G2");
  CHECK(reflection_degrees(Subsystem(g, g->all_roots())) == std::vector<int>{2, 6});
  auto e6 = parse_group("adjoint:E6");
  CHECK(degrees_from_poincare(poincare_polynomial(cartan_matrix('E', 6))) == std::vector<int>{2, 5, 6, 8, 9, 12});
  CHECK_THROWS_AS(degrees_from_poincare(parse_polynomial("q^2+3q+1")), FactorizationFailed);
}

TEST_CASE("order polynomials") {
  auto b = parse_group("SO5");
  CHECK(order_polynomial(Subsystem(b, b->all_roots())) == qp(4) * phi(1).pow(2) * phi(2).pow(2) * phi(4));
  int e1 = oracle::root_by_coords(*b, {1, 1}), e2 = oracle::root_by_coords(*b, {0, 1});
  CHECK(order_polynomial(Subsystem(b, with_negatives(*b, {e1, e2}))) == qp(2) * phi(1).pow(2) * phi(2).pow(2));
  CHECK(order_polynomial(Subsystem(b, RootSet())) == phi(1).pow(2));
  for (const char* spec : {"GL3", "G2", "SO7", "adjoint:D4"}) {
    auto d = parse_group(spec);
    CHECK(order_polynomial(Subsystem(d, d->all_roots())).degree() == d->dimension());
    CHECK(order_polynomial(Subsystem(d, RootSet())) == phi(1).pow(d->rank()));
  }
}

TEST_CASE("Moebius function") {
  RootSet a, b;
  b.set(0);
  Poset chain({a, b});
  CHECK(chain.moebius(0, 1) == -1);
  CHECK_THROWS_AS(chain.moebius(1, 0), NotComparable);

  auto so5 = parse_group("SO5");
  auto levis = enumerate_levis(so5);
  Poset p(std::vector<RootSet>(levis.begin(), levis.end()));
  CHECK(p.moebius(RootSet(), so5->all_roots()) == 3);

  auto g2 = parse_group("G2");
  auto gl = enumerate_levis(g2);
  Poset pg(std::vector<RootSet>(gl.begin(), gl.end()));
  CHECK(pg.moebius(RootSet(), g2->all_roots()) == 5);

  for (const char* spec : {"SO5", "G2", "GL4", "adjoint:C3", "SO7"}) {
    auto d = parse_group(spec);
    for (auto fam : {enumerate_levis(d), enumerate_endoscopy(d), enumerate_pseudo_levis(d)})
      check_moebius_axiom(Poset(std::vector<RootSet>(fam.begin(), fam.end())));
  }
}
