#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charcount/counting.hpp"
#include "charcount/errors.hpp"
#include "charcount/golden.hpp"

namespace py = pybind11;
using namespace charcount;

namespace {

// Coefficients low to high as decimal strings ("3", "-1/2"); the Python
// layer turns them into int or Fraction.
std::vector<std::string> coeffs(const QPolynomial& p) {
  std::vector<std::string> out;
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k).get_str());
  return out;
}

GroupContext make_context(const std::string& group, int threads, const std::vector<std::string>& data_dirs) {
  ContextOptions opts;
  opts.threads = threads;
  return GroupContext(parse_group(group), GroupDataPack::standard(data_dirs), opts);
}

py::dict count_py(const std::string& group, int g, int n, const std::string& variant, int threads,
                  const std::vector<std::string>& data_dirs) {
  auto ctx = make_context(group, threads, data_dirs);
  CountResult r;
  {
    py::gil_scoped_release release;
    r = count(ctx, {g, n, parse_variant(variant)});
  }
  py::dict d;
  d["coefficients"] = coeffs(r.polynomial);
  d["dimension"] = r.dimension;
  d["validity_modulus"] = r.validity_modulus;
  d["palindromic"] = r.properties.palindromic;
  d["monic"] = r.properties.monic;
  d["nonnegative"] = r.properties.nonnegative;
  d["factored"] = cyclotomic_factor(r.polynomial).to_string();
  return d;
}

std::string euler_py(const std::string& group, int g, int n, const std::string& variant,
                     const std::vector<std::string>& data_dirs) {
  auto ctx = make_context(group, 1, data_dirs);
  return euler_characteristic(ctx, {g, n, parse_variant(variant)}).get_str();
}

py::list g_types_py(const std::string& group, const std::vector<std::string>& data_dirs) {
  auto ctx = make_context(group, 1, data_dirs);
  py::list out;
  for (const auto& t : ctx.g_types()) {
    py::dict d;
    d["levi"] = t.levi_label;
    d["rho"] = t.rho;
    d["dim_rho"] = t.dim_rho;
    d["generic_degree"] = coeffs(t.generic_degree);
    d["mass"] = coeffs(t.mass);
    d["levi_order"] = coeffs(t.levi_order);
    d["orbit_size"] = t.orbit_size;
    d["weyl_order"] = t.weyl_order.get_str();
    d["pi0"] = t.pi0;
    d["nu"] = t.nu;
    out.append(d);
  }
  return out;
}

py::list lie_types_py(const std::string& group, const std::vector<std::string>& data_dirs) {
  auto ctx = make_context(group, 1, data_dirs);
  py::list out;
  for (const auto& t : ctx.lie_types()) {
    py::dict d;
    d["levi"] = t.levi_label;
    d["orbit"] = t.orbit_label;
    d["orbit_size"] = coeffs(t.orbit_size_poly);
    d["green"] = coeffs(t.green);
    d["levi_order"] = coeffs(t.levi_order);
    d["d_tau"] = t.d_tau;
    d["mu"] = t.mu;
    d["class_size"] = t.orbit_size;
    d["weyl_order"] = t.weyl_order.get_str();
    out.append(d);
  }
  return out;
}

std::string check_py(const std::string& group, int gmax, int nmax, const std::vector<std::string>& data_dirs) {
  auto ctx = make_context(group, 1, data_dirs);
  return to_json(check_report(ctx, valid_grid(gmax, nmax))).dump();
}

std::string reproduce_py(int figure) { return reproduce(figure, GroupDataPack::standard()).to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_charcount, m) {
  m.doc() = "E-polynomials of character varieties of punctured surfaces";

  static py::exception<Error> error(m, "CharcountError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(py::str(e.what()));
      exc.attr("kind") = error_kind_name(e.kind());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  const std::vector<std::string> none;
  m.def("count", &count_py, py::arg("group"), py::arg("g"), py::arg("n"), py::arg("variant") = "mult",
        py::arg("threads") = 1, py::arg("data_dirs") = none);
  m.def("euler", &euler_py, py::arg("group"), py::arg("g"), py::arg("n"), py::arg("variant") = "mult",
        py::arg("data_dirs") = none);
  m.def("g_types", &g_types_py, py::arg("group"), py::arg("data_dirs") = none);
  m.def("lie_types", &lie_types_py, py::arg("group"), py::arg("data_dirs") = none);
  m.def("check", &check_py, py::arg("group"), py::arg("gmax") = 2, py::arg("nmax") = 4, py::arg("data_dirs") = none);
  m.def("reproduce", &reproduce_py, py::arg("figure"));
  m.def("figures", &golden_figures);
}
