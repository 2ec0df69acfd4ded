#include "charcount/counting.hpp"

#include <numeric>
#include <thread>

#include "charcount/errors.hpp"

namespace charcount {

const char* variant_name(Variant v) { return v == Variant::Multiplicative ? "mult" : "add"; }

Variant parse_variant(const std::string& s) {
  if (s == "mult" || s == "multiplicative" || s == "X") return Variant::Multiplicative;
  if (s == "add" || s == "additive" || s == "Y") return Variant::Additive;
  throw ParseError("unknown variant '" + s + "' (expected mult or add)");
}

int expected_dimension(const RootDatum& d, int g, int n) {
  return (2 * g - 2 + n) * d.dimension() + 2 * d.center_dim() - n * d.rank();
}

void check_spec(const CountSpec& spec) {
  if (spec.g < 0) throw EmptyVariety("genus must be nonnegative");
  if (spec.n < 1) throw EmptyVariety("at least one puncture is required (n >= 1)");
  if (2 * spec.g + spec.n < 3)
    throw EmptyVariety("2g+n = " + std::to_string(2 * spec.g + spec.n) + " < 3, the generic variety is empty");
}

namespace {

// Terms are computed in parallel and summed in the fixed type order.
template <class Rec, class F>
QPolynomial ordered_sum(const std::vector<Rec>& recs, int threads, F&& term) {
  std::vector<QPolynomial> terms(recs.size());
  const size_t n = recs.size();
  if (threads <= 1 || n < 4) {
    for (size_t i = 0; i < n; ++i) terms[i] = term(recs[i]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (size_t i = t; i < n; i += threads) terms[i] = term(recs[i]);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  QPolynomial sum;
  for (const auto& t : terms) sum += t;
  return sum;
}

CountResult finish(const GroupContext& ctx, QPolynomial p, int g, int n, const char* what) {
  if (!p.is_integral()) throw InvariantViolation("integrality", std::string(what) + " has non-integer coefficients: " + p.to_string());
  CountResult r;
  r.dimension = expected_dimension(ctx.datum(), g, n);
  if (p.degree() != r.dimension)
    throw InvariantViolation("dimension", std::string(what) + " has degree " + std::to_string(p.degree()) +
                                              ", expected " + std::to_string(r.dimension));
  r.properties.palindromic = is_palindromic(p, r.dimension);
  r.properties.monic = p.is_monic();
  r.properties.nonnegative = p.nonnegative();
  r.properties.leading = p.leading();
  r.properties.value_at_1 = p(mpq_class(1));
  r.polynomial = std::move(p);
  r.validity_modulus = validity_modulus(ctx);
  return r;
}

}  // namespace

CountResult count_multiplicative(const GroupContext& ctx, int g, int n) {
  check_spec({g, n, Variant::Multiplicative});
  const int e = 2 * g - 2 + n;
  QPolynomial sum = ordered_sum(ctx.g_types(), ctx.options().threads,
                                [&](const GTypeRecord& r) { return ctx.s_tau(r, n) * r.mass.pow(e); });
  QPolynomial p = exact_div(ctx.center_order() * sum, ctx.torus_order().pow(n));
  return finish(ctx, std::move(p), g, n, "|X|");
}

CountResult count_additive(const GroupContext& ctx, int g, int n) {
  check_spec({g, n, Variant::Additive});
  QPolynomial sum = ordered_sum(ctx.lie_types(), ctx.options().threads,
                                [&](const LieTypeRecord& r) { return ctx.h_tau(r, n).shift(g * r.d_tau); });
  QPolynomial p = exact_div(ctx.center_order() * sum, ctx.group_order());
  p = p.shift(ctx.datum().dimension() * (g - 1));
  return finish(ctx, std::move(p), g, n, "|Y|");
}

CountResult count(const GroupContext& ctx, const CountSpec& spec) {
  return spec.variant == Variant::Multiplicative ? count_multiplicative(ctx, spec.g, spec.n)
                                                 : count_additive(ctx, spec.g, spec.n);
}

mpz_class euler_characteristic(const GroupContext& ctx, const CountSpec& spec) {
  mpq_class v = count(ctx, spec).properties.value_at_1;
  if (v.get_den() != 1) throw InvariantViolation("integrality", "value at q = 1 is not an integer");
  return v.get_num();
}

std::pair<mpz_class, mpz_class> component_and_leading_check(const GroupContext& ctx) {
  CountResult r = count_multiplicative(ctx, 0, 3);
  mpq_class lead = r.properties.leading;
  return {lead.get_num(), pi0_dual_center(ctx.datum(), ctx.datum().all_roots())};
}

long validity_modulus(const GroupContext& ctx) {
  long m = 1;
  for (const auto& orbit : ctx.endoscopy_orbits()) {
    Subsystem s(ctx.datum_ptr(), orbit.front());
    if (s.is_isolated()) m = std::lcm(m, ctx.pi0_dual_center(orbit.front()));
  }
  return m;
}

bool CheckRow::asserted_ok() const {
  return error.empty() && palindromic_x && monic_y && degree_x == dimension && degree_y == dimension &&
         leading_matches && euler_vanishing_ok;
}

bool CheckReport::asserted_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.asserted_ok(); });
}

bool CheckReport::all_nonnegative() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.error.empty() && r.nonnegative_y; });
}

std::vector<std::pair<int, int>> valid_grid(int gmax, int nmax) {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g <= gmax; ++g)
    for (int n = 1; n <= nmax; ++n)
      if (2 * g + n >= 3) out.emplace_back(g, n);
  return out;
}

CheckReport check_report(const GroupContext& ctx, const std::vector<std::pair<int, int>>& grid) {
  CheckReport rep;
  rep.group = ctx.datum().label();
  rep.pi0_dual = pi0_dual_center(ctx.datum(), ctx.datum().all_roots());
  rep.validity_modulus = validity_modulus(ctx);
  for (auto [g, n] : grid) {
    CheckRow row;
    row.g = g;
    row.n = n;
    row.dimension = expected_dimension(ctx.datum(), g, n);
    try {
      CountResult x = count_multiplicative(ctx, g, n);
      CountResult y = count_additive(ctx, g, n);
      row.degree_x = x.polynomial.degree();
      row.degree_y = y.polynomial.degree();
      row.palindromic_x = x.properties.palindromic;
      row.monic_y = y.properties.monic;
      row.nonnegative_y = y.properties.nonnegative;
      row.leading_x = x.properties.leading.get_num();
      row.leading_matches = row.leading_x == rep.pi0_dual;
      row.euler_x = x.properties.value_at_1.get_num();
      row.euler_y = y.properties.value_at_1.get_num();
      if (g >= 2 || (g == 1 && ctx.datum().center_dim() > 0)) row.euler_vanishing_ok = row.euler_x == 0;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

nlohmann::json to_json(const GroupContext& ctx, const CountSpec& spec, const CountResult& r) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : r.polynomial.coeffs()) coeffs.push_back(rational_to_json(c));
  return {
      {"group", ctx.datum().label()},
      {"g", spec.g},
      {"n", spec.n},
      {"variant", variant_name(spec.variant)},
      {"dimension", r.dimension},
      {"validity_modulus", r.validity_modulus},
      {"coefficients", coeffs},
      {"factored", cyclotomic_factor(r.polynomial).to_string()},
      {"properties",
       {{"palindromic", r.properties.palindromic},
        {"monic", r.properties.monic},
        {"nonnegative", r.properties.nonnegative},
        {"leading", rational_to_json(r.properties.leading)},
        {"value_at_1", rational_to_json(r.properties.value_at_1)}}},
  };
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j = {{"g", row.g}, {"n", row.n}, {"dimension", row.dimension}};
    if (!row.error.empty()) {
      j["error"] = row.error;
    } else {
      j["degree_x"] = row.degree_x;
      j["degree_y"] = row.degree_y;
      j["palindromic_x"] = row.palindromic_x;
      j["monic_y"] = row.monic_y;
      j["connected_y"] = row.monic_y;
      j["nonnegative_y"] = row.nonnegative_y;
      j["leading_x"] = row.leading_x.get_str();
      j["leading_matches_pi0"] = row.leading_matches;
      j["euler_x"] = row.euler_x.get_str();
      j["euler_y"] = row.euler_y.get_str();
    }
    j["ok"] = row.asserted_ok();
    rows.push_back(j);
  }
  return {{"group", r.group},
          {"pi0_dual_center", r.pi0_dual.get_str()},
          {"validity_modulus", r.validity_modulus},
          {"asserted_ok", r.asserted_ok()},
          {"nonnegative_y", r.all_nonnegative()},
          {"rows", rows}};
}

}  // namespace charcount
