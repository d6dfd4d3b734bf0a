#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "orbhc/acceptance.hpp"
#include "orbhc/crossprod.hpp"
#include "orbhc/errors.hpp"
#include "orbhc/findim.hpp"
#include "orbhc/hochschild.hpp"
#include "orbhc/koszul.hpp"
#include "orbhc/polyforms.hpp"
#include "orbhc/weyl.hpp"

namespace py = pybind11;
using namespace orbhc;

namespace {

// Accepts int, str ("-3/4") or fractions.Fraction.
Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    return parse_rational(py::str(h.attr("numerator")).cast<std::string>() + "/" +
                          py::str(h.attr("denominator")).cast<std::string>());
  }
  throw InvalidArgument("expected an int, a Fraction or a rational string");
}

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

RationalMatrix to_matrix(const py::sequence& rows) {
  if (rows.size() == 0) return RationalMatrix();
  const std::size_t cols = py::len(rows[0]);
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const py::sequence row = rows[i];
    if (row.size() != cols) throw InvalidArgument("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = to_rational(row[j]);
  }
  return m;
}

py::list from_vector(const RationalVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_fraction(x));
  return out;
}

py::dict from_table(const GradedTable& t) {
  py::dict out;
  for (const auto& [key, v] : t) out[py::make_tuple(key.first, key.second)] = v;
  return out;
}

FiniteGroup linear_group(const std::vector<py::sequence>& generators) {
  std::vector<GroupElement> gens;
  for (const auto& g : generators) gens.push_back(LinearElement{to_matrix(g)});
  return close_group(gens);
}

FiniteGroup torus_group(const std::vector<std::pair<std::vector<std::size_t>, py::sequence>>& generators) {
  std::vector<GroupElement> gens;
  for (const auto& [perm, shift] : generators) {
    RationalVector s;
    for (const auto& x : shift) s.push_back(to_rational(x));
    gens.push_back(MonomialElement(perm, s));
  }
  return close_group(gens);
}

py::dict report_dict(const HomologyReport& r) {
  py::list classes;
  for (const auto& c : r.per_class) {
    py::dict d;
    d["representative"] = c.representative;
    d["element"] = c.element;
    d["class_size"] = c.class_size;
    d["centralizer_size"] = c.centralizer_size;
    d["fixed_set"] = describe_fixed_set(c.fixed);
    d["table"] = from_table(c.table);
    d["hp"] = py::make_tuple(c.hp[0], c.hp[1]);
    if (c.oracle) d["oracle"] = from_table(*c.oracle);
    classes.append(d);
  }
  py::dict out;
  out["theory"] = r.theory;
  out["per_class"] = classes;
  out["totals"] = from_table(r.totals);
  out["hp"] = py::make_tuple(r.hp_totals[0], r.hp_totals[1]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_orbhc, m) {
  m.doc() = "Exact homology of crossed products by finite groups";

  py::register_exception<Error>(m, "Error");
  py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded");
  py::register_exception<InvariantViolation>(m, "InvariantViolation");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  m.def("rank", [](const py::sequence& a) { return rank(to_matrix(a)); });
  m.def("kernel_basis", [](const py::sequence& a) {
    py::list out;
    for (const auto& v : kernel_basis(to_matrix(a))) out.append(from_vector(v));
    return out;
  });
  m.def("form_space_dim", &form_space_dim, py::arg("m"), py::arg("c"), py::arg("q"));

  m.def(
      "koszul_homology_dims",
      [](std::size_t n, const py::sequence& f, std::size_t d_max) {
        RationalMatrix fm = f.size() == 0 ? RationalMatrix(0, n) : to_matrix(f);
        return from_table(koszul_homology_dims(build_koszul(n, fm, d_max), d_max));
      },
      py::arg("n"), py::arg("f"), py::arg("d_max"));
  m.def(
      "hh_twisted_dims", [](const py::sequence& g, std::size_t q_max, std::size_t d_max) {
        return from_table(hh_twisted_dims(to_matrix(g), q_max, d_max));
      },
      py::arg("g"), py::arg("q_max"), py::arg("d_max"));
  m.def(
      "hc_twisted_dims", [](const py::sequence& g, std::size_t n_max, std::size_t d_max) {
        return from_table(hc_twisted_dims(to_matrix(g), n_max, d_max));
      },
      py::arg("g"), py::arg("n_max"), py::arg("d_max"));

  m.def(
      "hh_report", [](const std::vector<py::sequence>& gens, std::size_t q_max, std::size_t d_max, bool oracle) {
        return report_dict(hh_graded_report(linear_group(gens), q_max, d_max, oracle));
      },
      py::arg("generators"), py::arg("q_max") = 3, py::arg("d_max") = 4, py::arg("oracle") = false);
  m.def(
      "hc_report", [](const std::vector<py::sequence>& gens, std::size_t n_max, std::size_t d_max, bool oracle) {
        return report_dict(hc_graded_report(linear_group(gens), n_max, d_max, oracle));
      },
      py::arg("generators"), py::arg("n_max") = 3, py::arg("d_max") = 4, py::arg("oracle") = false);
  m.def("hp_report_linear", [](const std::vector<py::sequence>& gens) { return report_dict(hp_report(linear_group(gens))); },
        py::arg("generators"));
  m.def(
      "hp_report_torus",
      [](const std::vector<std::pair<std::vector<std::size_t>, py::sequence>>& gens) {
        return report_dict(hp_report(torus_group(gens)));
      },
      py::arg("generators"), "generators are (perm, shift) pairs, perm 0-based, shift in Q/Z");

  m.def("partitions", &partitions, py::arg("n"));
  m.def("sigma_lambda", &sigma_lambda, py::arg("partition"));
  m.def("t_of_lambda", &t_of_lambda, py::arg("partition"));
  m.def(
      "hp_weyl_formula",
      [](std::size_t n) {
        const WeylReport w = hp_weyl_formula(n);
        py::list per;
        for (const auto& c : w.per_lambda) {
          py::dict d;
          d["partition"] = c.lambda;
          d["t"] = c.t;
          d["hp"] = py::make_tuple(c.hp0, c.hp1);
          per.append(d);
        }
        py::dict out;
        out["hp"] = py::make_tuple(w.hp0, w.hp1);
        out["per_lambda"] = per;
        return out;
      },
      py::arg("n"));
  m.def("weyl_cross_check", &weyl_cross_check, py::arg("n"), py::arg("bound") = kDefaultWeylBound);

  m.def(
      "azumaya_hh", [](std::size_t q_max) {
        const FinDimAlgebra a = matrix_algebra(2);
        auto klein = std::make_shared<const FiniteGroup>(
            close_group({AlgebraAutomorphism{inner_automorphism(a, {0, 1, 1, 0})},
                         AlgebraAutomorphism{inner_automorphism(a, {1, 0, 0, -1})}}));
        const FindimHHResult r = findim_hh_dims(findim_crossed_product(a, klein), q_max);
        py::list per;
        for (const auto& c : r.per_class) per.append(py::make_tuple(c.representative, c.dims));
        py::dict out;
        out["total"] = r.total;
        out["per_class"] = per;
        return out;
      },
      py::arg("q_max") = 2, "HH of M_2 x| (Z/2)^2 from its structure constants");

  m.def("run_acceptance", [] {
    py::list out;
    for (const auto& r : run_acceptance()) {
      py::dict d;
      d["id"] = r.id;
      d["title"] = r.title;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  });
}
