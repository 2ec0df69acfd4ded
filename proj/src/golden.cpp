#include "charcount/golden.hpp"

#include <map>
#include <regex>
#include <sstream>

#include "charcount/counting.hpp"
#include "charcount/errors.hpp"
#include "charcount/subsystem.hpp"

namespace charcount {

const std::map<std::string, std::string>& embedded_files();

int GoldenReport::count(CellStatus s) const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [&](const GoldenCell& c) { return c.status == s; }));
}

namespace {

const char* status_name(CellStatus s) {
  switch (s) {
    case CellStatus::Pass: return "pass";
    case CellStatus::Fail: return "FAIL";
    case CellStatus::Skip: return "skipped";
    case CellStatus::Erratum: return "erratum";
  }
  return "?";
}

}  // namespace

std::string GoldenReport::to_text() const {
  std::ostringstream os;
  os << "figure " << figure << ": " << title << "\n";
  for (const auto& c : cells) {
    os << "  " << status_name(c.status) << "  " << c.id;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
    if (c.status == CellStatus::Fail || c.status == CellStatus::Erratum) {
      os << "      expected: " << c.expected << "\n";
      os << "      actual:   " << c.actual << "\n";
    }
  }
  os << (ok() ? "pass" : "FAIL") << ": " << count(CellStatus::Pass) << " matched, " << count(CellStatus::Fail)
     << " mismatched, " << count(CellStatus::Skip) << " skipped";
  if (count(CellStatus::Erratum))
    os << ", " << count(CellStatus::Erratum) << " disagree with the printed value but match its documented correction";
  os << "\n";
  return os.str();
}

nlohmann::json GoldenReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cells)
    cs.push_back({{"id", c.id}, {"status", status_name(c.status)}, {"expected", c.expected}, {"actual", c.actual},
                  {"detail", c.detail}});
  return {{"figure", figure},
          {"title", title},
          {"ok", ok()},
          {"matched", count(CellStatus::Pass)},
          {"mismatched", count(CellStatus::Fail)},
          {"skipped", count(CellStatus::Skip)},
          {"errata", count(CellStatus::Erratum)},
          {"cells", cs}};
}

std::vector<int> golden_figures() { return {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}; }

nlohmann::json golden_fixture(int figure) {
  char name[64];
  std::snprintf(name, sizeof name, "data/golden/figure%02d.json", figure);
  const auto& files = embedded_files();
  auto it = files.find(name);
  if (it == files.end()) throw MissingData("no golden fixture for figure " + std::to_string(figure));
  return nlohmann::json::parse(it->second);
}

void require_pass(const GoldenReport& r) {
  if (r.ok()) return;
  std::ostringstream os;
  os << "figure " << r.figure << ":";
  for (const auto& c : r.cells)
    if (c.status == CellStatus::Fail || c.status == CellStatus::Erratum) os << "\n  " << c.id << ": expected " << c.expected << ", got " << c.actual;
  throw GoldenMismatch(os.str());
}

bool matches_printed(const QPolynomial& p, const std::string& printed, std::string* why) {
  auto fail = [&](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  size_t dots = printed.find("...");
  if (dots == std::string::npos) {
    QPolynomial e = parse_polynomial(printed);
    if (e == p) return true;
    return fail("polynomials differ");
  }
  std::string head = printed.substr(0, dots), tail = printed.substr(dots + 3);
  auto trim_plus = [](std::string s, bool at_end) {
    auto edge = [&]() -> char& { return at_end ? s.back() : s.front(); };
    auto drop = [&]() {
      if (at_end) s.pop_back();
      else s.erase(s.begin());
    };
    while (!s.empty() && std::isspace(static_cast<unsigned char>(edge()))) drop();
    if (!s.empty() && edge() == '+') drop();
    return s;
  };
  QPolynomial h = parse_polynomial(trim_plus(head, true));
  QPolynomial t = parse_polynomial(trim_plus(tail, false));
  if (p.degree() != h.degree())
    return fail("degree " + std::to_string(p.degree()) + ", printed " + std::to_string(h.degree()));
  for (int d = h.valuation(); d <= h.degree(); ++d)
    if (p.coeff(d) != h.coeff(d)) return fail("coefficient of q^" + std::to_string(d));
  for (int d = 0; d <= t.degree(); ++d)
    if (p.coeff(d) != t.coeff(d)) return fail("coefficient of q^" + std::to_string(d));
  if (t.degree() >= h.valuation()) return fail("printed head and tail overlap");
  return true;
}

std::string canonical_type_label(const std::string& label) {
  if (label == "T" || label.empty()) return "T";
  CartanType t;
  static const std::regex comp(R"(([ABCDEFG])(\d+)('?))");
  std::stringstream ss(label);
  std::string piece;
  while (std::getline(ss, piece, 'x')) {
    std::smatch m;
    if (!std::regex_match(piece, m, comp)) throw ParseError("bad type label '" + label + "'");
    char f = m[1].str()[0];
    int r = std::stoi(m[2].str());
    bool shrt = !m[3].str().empty();
    if (r == 0) continue;
    if (f == 'D' && r == 1) continue;
    if (f == 'D' && r == 2) {
      t.components.push_back({'A', 1, shrt});
      t.components.push_back({'A', 1, shrt});
    } else if (f == 'D' && r == 3) {
      t.components.push_back({'A', 3, shrt});
    } else if (f == 'B' && r == 1) {
      t.components.push_back({'A', 1, true});
    } else if (f == 'C' && r == 1) {
      t.components.push_back({'A', 1, false});
    } else if (f == 'C' && r == 2) {
      t.components.push_back({'B', 2, false});
    } else {
      t.components.push_back({f, r, shrt});
    }
  }
  return canonical(t).label();
}

namespace {

long eval_int(const std::string& e, const std::map<std::string, long>& vars) {
  QPolynomial p = parse_expression(e, vars);
  if (p.degree() > 0) throw ParseError("expected an integer expression: " + e);
  mpq_class v = p.is_zero() ? mpq_class(0) : p.leading();
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return f.get_si();
}

std::string substitute(const std::string& tmpl, const std::map<std::string, long>& vars) {
  std::string out;
  size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      size_t j = tmpl.find('}', i);
      out += std::to_string(eval_int(tmpl.substr(i + 1, j - i - 1), vars));
      i = j + 1;
    } else {
      out += tmpl[i++];
    }
  }
  return out;
}

}  // namespace

std::set<std::string> expand_isolated_row(const nlohmann::json& items, int n) {
  std::set<std::string> out;
  static const std::regex range(R"((.*) for (\w+)=(.+)\.\.(.+))");
  for (const auto& it : items) {
    std::string s = it.get<std::string>();
    std::smatch m;
    std::map<std::string, long> vars{{"n", n}};
    if (std::regex_match(s, m, range)) {
      long lo = eval_int(m[3].str(), vars), hi = eval_int(m[4].str(), vars);
      for (long r = lo; r <= hi; ++r) {
        vars[m[2].str()] = r;
        out.insert(canonical_type_label(substitute(m[1].str(), vars)));
      }
    } else {
      out.insert(canonical_type_label(substitute(s, vars)));
    }
  }
  return out;
}

namespace {

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ", ") + x;
  return "{" + out + "}";
}

GoldenReport figure1(const nlohmann::json& fx) {
  GoldenReport r;
  for (const auto& row : fx.at("rows")) {
    std::string fam = row.at("family");
    for (int n : row.at("ranks")) {
      GoldenCell c;
      c.id = fam + std::to_string(n);
      std::set<std::string> expected = expand_isolated_row(row.at("items"), n);
      CartanType t;
      t.components.push_back({fam[0], n, false});
      auto got = isolated_pseudo_levi_types(RootDatum::adjoint(t, c.id));
      c.expected = join(expected);
      c.actual = join(got);
      c.status = expected == got ? CellStatus::Pass : CellStatus::Fail;
      r.cells.push_back(c);
    }
  }
  return r;
}

class ContextCache {
 public:
  ContextCache(DataPtr data, ContextOptions opts) : data_(std::move(data)), opts_(opts) {}
  const GroupContext& get(const std::string& group) {
    auto it = ctx_.find(group);
    if (it == ctx_.end()) it = ctx_.emplace(group, std::make_unique<GroupContext>(parse_group(group), data_, opts_)).first;
    return *it->second;
  }

 private:
  DataPtr data_;
  ContextOptions opts_;
  std::map<std::string, std::unique_ptr<GroupContext>> ctx_;
};

// An erratum is honoured only if the printed formula contradicts every piece
// of evidence and the corrected formula agrees with all of it.
bool erratum_supported(const nlohmann::json& erratum, const std::string& printed, std::string* why) {
  for (const auto& ev : erratum.at("evidence")) {
    int g = ev.at("g"), n = ev.at("n");
    mpz_class value;
    if (ev.contains("figure")) {
      nlohmann::json other = golden_fixture(ev.at("figure"));
      bool found = false;
      for (const auto& row : other.at("rows"))
        if (row.at("g") == g && row.at("n") == n) {
          mpq_class v = parse_polynomial(row.at("polynomial"))(1);
          value = v.get_num();
          found = true;
        }
      if (!found) throw ParseError("erratum evidence row missing");
    } else {
      value = mpz_class(ev.at("value").get<long>());
    }
    std::map<std::string, long> vars{{"g", g}, {"n", n}};
    QPolynomial want(value);
    if (parse_expression(printed, vars) == want) {
      *why = "printed formula agrees with evidence at (" + std::to_string(g) + "," + std::to_string(n) + ")";
      return false;
    }
    if (!(parse_expression(erratum.at("formula"), vars) == want)) {
      *why = "corrected formula disagrees with evidence";
      return false;
    }
  }
  return true;
}

GoldenReport euler_figure(const nlohmann::json& fx, ContextCache& cache) {
  GoldenReport r;
  Variant v = parse_variant(fx.at("variant"));
  for (const auto& row : fx.at("rows")) {
    std::string group = row.at("group");
    std::string printed = row.at("formula");
    const GroupContext& ctx = cache.get(group);
    std::string erratum_why;
    bool erratum = row.contains("erratum") && erratum_supported(row.at("erratum"), printed, &erratum_why);
    for (int g : fx.at("points").at("g"))
      for (int n : fx.at("points").at("n")) {
        if (2 * g + n < 3) continue;
        GoldenCell c;
        c.id = group + " (g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")";
        std::map<std::string, long> vars{{"n", n}, {"g", g}};
        QPolynomial f = parse_expression(printed, vars);
        c.expected = f.to_string();
        try {
          c.actual = euler_characteristic(ctx, {g, n, v}).get_str();
          QPolynomial got{mpz_class(c.actual)};
          if (got == f) {
            c.status = CellStatus::Pass;
          } else if (erratum && got == parse_expression(row.at("erratum").at("formula"), vars)) {
            c.status = CellStatus::Erratum;
            c.detail = row.at("erratum").value("note", "corrected formula");
          } else {
            c.status = CellStatus::Fail;
            if (!erratum_why.empty()) c.detail = "erratum rejected: " + erratum_why;
          }
        } catch (const Error& e) {
          c.actual = e.what();
          c.status = CellStatus::Fail;
        }
        r.cells.push_back(c);
      }
  }
  return r;
}

using Row = std::vector<std::string>;

std::string poly_key(const QPolynomial& p) { return p.to_string(); }

// Columns that depend on n are compared at n = 1..4.
std::string n_key(const std::function<QPolynomial(int)>& f) {
  std::string s;
  for (int n = 1; n <= 4; ++n) s += (n > 1 ? " | " : "") + f(n).to_string();
  return s;
}

Row expected_row(const std::vector<std::string>& cols, const nlohmann::json& row) {
  Row out;
  for (size_t i = 0; i < cols.size(); ++i) {
    std::string cell = row.at(i).get<std::string>();
    if (cols[i] == "levi") {
      out.push_back(cell);
    } else if (cols[i] == "S" || cols[i] == "H") {
      out.push_back(n_key([&](int n) { return parse_expression(cell, {{"n", n}}); }));
    } else {
      out.push_back(poly_key(parse_expression(cell, {})));
    }
  }
  return out;
}

Row computed_row(const std::vector<std::string>& cols, const GroupContext& ctx, const GTypeRecord& r) {
  const QPolynomial phi1sq = cyclotomic(1).pow(2);
  Row out;
  for (const auto& c : cols) {
    if (c == "levi") out.push_back(Subsystem(ctx.datum_ptr(), r.levi).cartan_type().weyl_label());
    else if (c == "m") out.push_back(poly_key(r.mass));
    else if (c == "S") out.push_back(n_key([&](int n) { return ctx.s_tau(r, n) * phi1sq; }));
    else if (c == "LF") out.push_back(poly_key(r.levi_order));
    else if (c == "rho_tilde") out.push_back(poly_key(r.generic_degree));
    else if (c == "rho") out.push_back(poly_key(QPolynomial(r.dim_rho)));
    else if (c == "WL") out.push_back(poly_key(QPolynomial(r.weyl_order)));
    else if (c == "orbit") out.push_back(poly_key(QPolynomial(r.orbit_size)));
    else if (c == "pi0") out.push_back(poly_key(QPolynomial(r.pi0)));
    else if (c == "nu") out.push_back(poly_key(QPolynomial(r.nu)));
    else throw ParseError("unknown column " + c);
  }
  return out;
}

Row computed_row(const std::vector<std::string>& cols, const GroupContext& ctx, const LieTypeRecord& r) {
  Row out;
  for (const auto& c : cols) {
    if (c == "levi") out.push_back(Subsystem(ctx.datum_ptr(), r.levi).cartan_type().weyl_label());
    else if (c == "qd") out.push_back(poly_key(QPolynomial::q_power(r.d_tau)));
    else if (c == "H") out.push_back(n_key([&](int n) { return ctx.h_tau(r, n); }));
    else if (c == "LF") out.push_back(poly_key(r.levi_order));
    else if (c == "N") out.push_back(poly_key(r.orbit_size_poly));
    else if (c == "Q") out.push_back(poly_key(r.green));
    else if (c == "WL") out.push_back(poly_key(QPolynomial(r.weyl_order)));
    else if (c == "orbit") out.push_back(poly_key(QPolynomial(r.orbit_size)));
    else if (c == "mu") out.push_back(poly_key(QPolynomial(r.mu)));
    else throw ParseError("unknown column " + c);
  }
  return out;
}

std::string row_text(const std::vector<std::string>& cols, const Row& r) {
  std::string s;
  for (size_t i = 0; i < cols.size(); ++i) s += (i ? "; " : "") + cols[i] + "=" + r[i];
  return s;
}

GoldenReport type_table(const nlohmann::json& fx, ContextCache& cache) {
  GoldenReport r;
  const GroupContext& ctx = cache.get(fx.at("group"));
  std::vector<std::string> cols = fx.at("columns");
  std::multiset<Row> computed;
  if (fx.at("kind") == "g_types") {
    for (const auto& rec : ctx.g_types()) computed.insert(computed_row(cols, ctx, rec));
  } else {
    for (const auto& rec : ctx.lie_types()) computed.insert(computed_row(cols, ctx, rec));
  }
  GoldenCell count;
  count.id = "number of types";
  count.expected = std::to_string(fx.at("rows").size());
  count.actual = std::to_string(computed.size());
  count.status = count.expected == count.actual ? CellStatus::Pass : CellStatus::Fail;
  r.cells.push_back(count);
  int i = 0;
  for (const auto& row : fx.at("rows")) {
    ++i;
    Row e = expected_row(cols, row);
    GoldenCell c;
    c.id = "row " + std::to_string(i) + " [" + e[0] + "]";
    c.expected = row_text(cols, e);
    auto it = computed.find(e);
    if (it != computed.end()) {
      computed.erase(it);
      c.status = CellStatus::Pass;
      c.actual = c.expected;
    } else {
      c.status = CellStatus::Fail;
      c.actual = "no computed row with these values";
    }
    r.cells.push_back(c);
  }
  for (const auto& left : computed) {
    GoldenCell c;
    c.id = "unmatched computed row [" + left[0] + "]";
    c.status = CellStatus::Fail;
    c.expected = "-";
    c.actual = row_text(cols, left);
    r.cells.push_back(c);
  }
  return r;
}

GoldenReport polynomial_figure(const nlohmann::json& fx, ContextCache& cache) {
  GoldenReport r;
  Variant v = parse_variant(fx.at("variant"));
  for (const auto& row : fx.at("rows")) {
    std::string group = row.contains("group") ? row.at("group").get<std::string>() : fx.at("group").get<std::string>();
    int g = row.at("g"), n = row.at("n");
    GoldenCell c;
    c.id = group + " (g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")";
    c.expected = row.at("polynomial");
    try {
      const GroupContext& ctx = cache.get(group);
      CountResult res = count(ctx, {g, n, v});
      c.actual = res.polynomial.to_string();
      std::string why;
      bool ok = matches_printed(res.polynomial, c.expected, &why);
      if (ok && v == Variant::Multiplicative && !res.properties.palindromic) ok = false, why = "not palindromic";
      if (ok && v == Variant::Additive && !res.properties.monic) ok = false, why = "not monic";
      c.status = ok ? CellStatus::Pass : CellStatus::Fail;
      c.detail = why;
    } catch (const MissingData& e) {
      if (!row.value("optional", false)) throw;
      c.status = CellStatus::Skip;
      c.detail = std::string("skipped: data pack not installed; ") + e.detail();
    } catch (const GroupTooLarge& e) {
      if (!row.value("optional", false)) throw;
      c.status = CellStatus::Skip;
      c.detail = std::string("skipped: ") + e.detail();
    }
    r.cells.push_back(c);
  }
  return r;
}

}  // namespace

GoldenReport reproduce(int figure, const DataPtr& data, const ContextOptions& opts) {
  nlohmann::json fx = golden_fixture(figure);
  ContextCache cache(data, opts);
  GoldenReport r;
  if (figure == 1) r = figure1(fx);
  else if (figure == 3 || figure == 4) r = euler_figure(fx, cache);
  else if (fx.contains("kind")) r = type_table(fx, cache);
  else r = polynomial_figure(fx, cache);
  r.figure = figure;
  r.title = fx.value("title", "");
  return r;
}

}  // namespace charcount
