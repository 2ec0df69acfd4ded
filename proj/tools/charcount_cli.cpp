#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "charcount/counting.hpp"
#include "charcount/errors.hpp"
#include "charcount/golden.hpp"

using namespace charcount;
using nlohmann::json;

namespace {

struct Common {
  std::string group = "GL2";
  int g = 0;
  int n = 3;
  std::string variant = "mult";
  std::string format = "text";
  std::vector<std::string> data_dirs;
  int threads = 1;
};

std::string factored(const QPolynomial& p) { return cyclotomic_factor(p).to_string(); }
std::string latex(const QPolynomial& p) { return cyclotomic_factor(p).to_latex(); }

std::unique_ptr<GroupContext> make_context(const Common& c) {
  ContextOptions opts;
  opts.threads = c.threads;
  return std::make_unique<GroupContext>(parse_group(c.group), GroupDataPack::standard(c.data_dirs), opts);
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

// A table is a header plus rows of already-rendered cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit_table(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : t.rows) {
      json o;
      for (size_t i = 0; i < t.header.size(); ++i) o[t.header[i]] = r[i];
      arr.push_back(o);
    }
    os << arr.dump(1) << "\n";
  } else if (format == "csv") {
    for (size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_cell(t.header[i]);
    os << "\n";
    for (const auto& r : t.rows) {
      for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
      os << "\n";
    }
  } else if (format == "latex") {
    os << "\\begin{tabular}{|" << std::string(t.header.size(), 'c') << "|}\n\\hline\n";
    for (size_t i = 0; i < t.header.size(); ++i) os << (i ? " & " : "") << t.header[i];
    os << " \\\\\n\\hline\n";
    for (const auto& r : t.rows) {
      for (size_t i = 0; i < r.size(); ++i) os << (i ? " & " : "") << "$" << r[i] << "$";
      os << " \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
  } else {
    std::vector<size_t> w(t.header.size());
    for (size_t i = 0; i < w.size(); ++i) w[i] = t.header[i].size();
    for (const auto& r : t.rows)
      for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      for (size_t i = 0; i < r.size(); ++i) {
        os << r[i];
        if (i + 1 < r.size()) os << std::string(w[i] - r[i].size() + 2, ' ');
      }
      os << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
  }
}

int do_count(const Common& c) {
  auto ctx = make_context(c);
  CountSpec spec{c.g, c.n, parse_variant(c.variant)};
  CountResult r = count(*ctx, spec);
  const QPolynomial& p = r.polynomial;
  if (c.format == "json") {
    std::cout << to_json(*ctx, spec, r).dump() << "\n";
  } else if (c.format == "factored") {
    std::cout << factored(p) << "\n";
  } else if (c.format == "latex") {
    std::cout << latex(p) << "\n";
  } else if (c.format == "csv") {
    std::cout << "degree,coefficient\n";
    for (int d = 0; d <= p.degree(); ++d) std::cout << d << "," << rational_to_string(p.coeff(d)) << "\n";
  } else {
    std::cout << p.to_string() << "\n";
  }
  return 0;
}

int do_types(const Common& c) {
  auto ctx = make_context(c);
  bool latex_cells = c.format == "latex";
  auto poly = [&](const QPolynomial& p) { return latex_cells ? latex(p) : factored(p); };
  Table t;
  std::string s_name = "S(n=" + std::to_string(c.n) + ")";
  std::string h_name = "H(n=" + std::to_string(c.n) + ")";
  if (parse_variant(c.variant) == Variant::Multiplicative) {
    t.header = {"levi", "rho", "m", s_name, "LF", "rho_tilde", "rho_dim", "WL", "orbit", "pi0", "nu"};
    for (const auto& r : ctx->g_types())
      t.rows.push_back({r.levi_label, r.rho, poly(r.mass), poly(ctx->s_tau(r, c.n)), poly(r.levi_order),
                        poly(r.generic_degree), std::to_string(r.dim_rho), r.weyl_order.get_str(),
                        std::to_string(r.orbit_size), std::to_string(r.pi0), std::to_string(r.nu)});
  } else {
    t.header = {"levi", "nilpotent", "qd", h_name, "LF", "N", "Q", "WL", "orbit", "mu"};
    for (const auto& r : ctx->lie_types())
      t.rows.push_back({r.levi_label, r.orbit_label, poly(QPolynomial::q_power(r.d_tau)), poly(ctx->h_tau(r, c.n)),
                        poly(r.levi_order), poly(r.orbit_size_poly), poly(r.green), r.weyl_order.get_str(),
                        std::to_string(r.orbit_size), std::to_string(r.mu)});
  }
  emit_table(t, c.format, std::cout);
  if (c.format == "text") {
    std::cout << t.rows.size() << " types\n";
    for (const auto& d : ctx->diagnostics()) std::cout << "note: " << d << "\n";
  }
  return 0;
}

int do_euler(const Common& c) {
  auto ctx = make_context(c);
  CountSpec spec{c.g, c.n, parse_variant(c.variant)};
  mpz_class e = euler_characteristic(*ctx, spec);
  if (c.format == "json")
    std::cout << json{{"group", c.group}, {"g", c.g}, {"n", c.n}, {"variant", variant_name(spec.variant)},
                      {"euler", e.get_str()}}.dump()
              << "\n";
  else
    std::cout << e.get_str() << "\n";
  return 0;
}

int do_check(const Common& c, int gmax, int nmax) {
  auto ctx = make_context(c);
  CheckReport rep = check_report(*ctx, valid_grid(gmax, nmax));
  if (c.format == "json") {
    std::cout << to_json(rep).dump(1) << "\n";
  } else {
    Table t;
    t.header = {"g", "n", "dim", "deg X", "deg Y", "X palindromic", "Y monic", "Y nonneg", "lead X", "chi X", "chi Y",
                "error"};
    auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
    for (const auto& r : rep.rows)
      t.rows.push_back({std::to_string(r.g), std::to_string(r.n), std::to_string(r.dimension),
                        std::to_string(r.degree_x), std::to_string(r.degree_y), yn(r.palindromic_x), yn(r.monic_y),
                        yn(r.nonnegative_y), r.leading_x.get_str() + (r.leading_matches ? "" : " (!)"),
                        r.euler_x.get_str(), r.euler_y.get_str(), r.error});
    emit_table(t, c.format, std::cout);
    if (c.format == "text") {
      std::cout << "pi0(Z(G dual)) = " << rep.pi0_dual << ", counts valid for q = 1 mod " << rep.validity_modulus
                << "\n";
      std::cout << (rep.asserted_ok() ? "all asserted properties hold" : "ASSERTED PROPERTY VIOLATED") << "\n";
      std::cout << (rep.all_nonnegative() ? "|Y| coefficients nonnegative on the grid (conjecture consistent)"
                                          : "NEGATIVE |Y| COEFFICIENT FOUND")
                << "\n";
    }
  }
  return rep.asserted_ok() && rep.all_nonnegative() ? 0 : 1;
}

int do_reproduce(const Common& c, const std::vector<int>& figures) {
  auto data = GroupDataPack::standard(c.data_dirs);
  ContextOptions opts;
  opts.threads = c.threads;
  bool ok = true;
  json all = json::array();
  for (int f : figures) {
    GoldenReport r = reproduce(f, data, opts);
    ok = ok && r.ok();
    if (c.format == "json") all.push_back(r.to_json());
    else std::cout << r.to_text();
  }
  if (c.format == "json") std::cout << (figures.size() == 1 ? all[0] : all).dump(1) << "\n";
  return ok ? 0 : 1;
}

int do_validate(const Common& c, const std::string& file) {
  GroupDataPack pack;
  std::vector<std::string> keys = pack.load_file(file);
  if (c.format == "json") {
    std::cout << json{{"file", file}, {"valid", true}, {"keys", keys}, {"warnings", pack.warnings()}}.dump() << "\n";
  } else {
    std::cout << file << ": valid\n";
    for (const auto& k : keys) std::cout << "  " << k << "\n";
    for (const auto& w : pack.warnings()) std::cout << "warning: " << w << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point counts of character varieties over finite fields"};
  app.require_subcommand(1);
  Common c;
  const std::vector<std::string> formats{"text", "factored", "json", "latex", "csv"};

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", c.group, "GL<n>, SO5, G2, adjoint:<type>, datum:<file>")->required();
    sub->add_option("--data-dir", c.data_dirs, "extra data pack directory (repeatable)");
    sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
  };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", c.variant, "mult (X) or add (Y)")
        ->check(CLI::IsMember({"mult", "multiplicative", "X", "add", "additive", "Y"}));
  };
  auto add_gn = [&](CLI::App* sub) {
    sub->add_option("-g,--genus", c.g, "genus")->check(CLI::NonNegativeNumber);
    sub->add_option("-n,--punctures", c.n, "number of punctures")->check(CLI::NonNegativeNumber);
  };

  auto* count_cmd = app.add_subcommand("count", "E-polynomial of X or Y");
  add_group(count_cmd), add_gn(count_cmd), add_variant(count_cmd), add_format(count_cmd);

  auto* types_cmd = app.add_subcommand("types", "type table of the group (mult) or its Lie algebra (add)");
  add_group(types_cmd), add_variant(types_cmd), add_format(types_cmd);
  types_cmd->add_option("-n,--punctures", c.n, "n used for the S and H columns")->check(CLI::PositiveNumber);

  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic");
  add_group(euler_cmd), add_gn(euler_cmd), add_variant(euler_cmd), add_format(euler_cmd);

  int gmax = 2, nmax = 4;
  auto* check_cmd = app.add_subcommand("check", "structural property report over a (g,n) grid");
  add_group(check_cmd), add_format(check_cmd);
  check_cmd->add_option("--gmax", gmax)->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--nmax", nmax)->check(CLI::PositiveNumber);

  std::vector<int> figures;
  bool all_figures = false;
  auto* repro_cmd = app.add_subcommand("reproduce", "recompute a golden figure and diff it");
  auto* fig_opt = repro_cmd->add_option("--figure", figures, "figure number (repeatable)");
  repro_cmd->add_flag("--all", all_figures, "every golden figure")->excludes(fig_opt);
  repro_cmd->add_option("--data-dir", c.data_dirs, "extra data pack directory (repeatable)");
  repro_cmd->add_option("--threads", c.threads)->check(CLI::PositiveNumber);
  add_format(repro_cmd);

  std::string file;
  auto* data_cmd = app.add_subcommand("data", "data pack utilities");
  data_cmd->require_subcommand(1);
  auto* validate_cmd = data_cmd->add_subcommand("validate", "load and validate a data file");
  validate_cmd->add_option("file", file)->required();
  add_format(validate_cmd);

  try {
    app.parse(argc, argv);
    if (repro_cmd->parsed()) {
      if (all_figures) figures = golden_figures();
      if (figures.empty()) throw CLI::RequiredError("--figure or --all");
      auto known = golden_figures();
      for (int f : figures)
        if (std::find(known.begin(), known.end(), f) == known.end())
          throw CLI::ValidationError("--figure", "no golden data for figure " + std::to_string(f));
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count_cmd->parsed()) return do_count(c);
    if (types_cmd->parsed()) return do_types(c);
    if (euler_cmd->parsed()) return do_euler(c);
    if (check_cmd->parsed()) return do_check(c, gmax, nmax);
    if (repro_cmd->parsed()) return do_reproduce(c, figures);
    if (validate_cmd->parsed()) return do_validate(c, file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
