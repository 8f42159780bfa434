#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mockm11/class_numbers.hpp"
#include "mockm11/congruent.hpp"
#include "mockm11/moonshine.hpp"
#include "mockm11/umbral.hpp"
#include "mockm11/verify.hpp"

namespace py = pybind11;
using namespace mockm11;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

py::dict table_dict(const JacobiCoeffTable& t) {
  py::dict d;
  for (std::int64_t D = 0; D >= t.d_min(); --D)
    if (is_discriminant(D)) d[py::int_(D)] = fraction(t.at(D));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact class numbers, mock Jacobi forms and M11 moonshine tables";

  m.def("hurwitz_H", [](std::int64_t D) { return fraction(hurwitz_H(D)); }, py::arg("D"));
  m.def("generalized_H", [](std::int64_t N, std::int64_t D) { return fraction(generalized_H(N, D)); }, py::arg("N"),
        py::arg("D"));
  m.def("cohen_eisenstein", [](std::int64_t N, std::int64_t D) { return fraction(cohen_eisenstein_coeff(N, D)); },
        py::arg("N"), py::arg("D"));
  m.def("R", [](std::int64_t N, std::int64_t D) { return fraction(r_coefficient(N, D)); }, py::arg("N"),
        py::arg("D"));
  m.def("tunnell_a", [](std::int64_t n) { return py::int_(py::str(tunnell_a(n).get_str())); }, py::arg("n"));

  m.def("series", [](const std::string& sel, std::int64_t d_min) { return table_dict(series_by_selector(sel, d_min)); },
        py::arg("selector"), py::arg("d_min") = -108);
  m.def("psi1_finite_part",
        [](std::int64_t q_order) {
          const Box box = bridge_box(q_order);
          return table_dict(finite_part_index1(psi1_expansion(box).series, box));
        },
        py::arg("q_order") = 20);

  m.def("table_diff", [](int which) {
    const TableDiff d = table_diff(which);
    py::list mism;
    for (const auto& c : d.mismatches)
      mism.append(py::make_tuple(c.abs_d, c.column, c.expected, c.got));
    py::dict out;
    out["cells"] = d.cells_checked;
    out["mismatches"] = mism;
    out["failed_checks"] = d.failed_checks;
    out["ok"] = d.ok();
    return out;
  });

  m.def("gram", [](const std::string& variant) {
    py::list rows;
    for (const auto& r : lattice_generators(parse_variant(variant)).gram) {
      py::list row;
      for (const auto& x : r) row.append(fraction(x));
      rows.append(row);
    }
    return rows;
  });

  m.def("certify_congruent",
        [](std::int64_t n, std::int64_t re_lambda) {
          const VerdictRecord r = certify_congruent(n, re_lambda);
          py::dict out;
          out["n"] = r.n;
          out["squarefree"] = r.squarefree;
          out["residueOk"] = r.residue_ok;
          out["c84"] = fraction(r.c84);
          out["m55"] = r.m55 ? fraction(*r.m55) : py::none();
          out["verdict"] = std::string(verdict_name(r.verdict));
          return out;
        },
        py::arg("n"), py::arg("re_lambda") = -4);

  m.def("verify", [](const std::string& suite) {
    py::list out;
    for (const auto& r : run_verify(suite)) {
      py::dict d;
      d["suite"] = r.suite;
      d["check"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("suite") = "all");
}
