#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "blindsat/arith.hpp"
#include "blindsat/census.hpp"
#include "blindsat/dnf.hpp"
#include "blindsat/error.hpp"
#include "blindsat/logic.hpp"
#include "blindsat/search.hpp"
#include "blindsat/truth_table.hpp"

namespace py = pybind11;
using namespace blindsat;

namespace {

// Hexadecimal keeps large values clear of Python's decimal digit limit.
py::int_ to_py(const BigInt& value) {
  const BigInt magnitude = abs(value);
  std::ostringstream hex;
  hex << std::hex << magnitude;
  auto* object = PyLong_FromString(hex.str().c_str(), nullptr, 16);
  if (!object) throw py::error_already_set();
  py::int_ result = py::reinterpret_steal<py::int_>(object);
  return value < 0 ? py::int_(-result) : result;
}

BigInt from_py(const py::int_& value) {
  const auto text = py::str(py::module_::import("builtins").attr("hex")(value)).cast<std::string>();
  const bool negative = text.front() == '-';
  BigInt result(text.substr(negative ? 1 : 0));  // "0x..." parses as hex
  return negative ? BigInt(-result) : result;
}

py::object to_fraction(const Rational& value) {
  static const auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(value)), to_py(denominator(value)));
}

Rational from_number(const py::handle& value) {
  if (py::isinstance<py::int_>(value)) return Rational(from_py(value.cast<py::int_>()));
  const auto num = value.attr("numerator").cast<py::int_>();
  const auto den = value.attr("denominator").cast<py::int_>();
  return Rational(from_py(num), from_py(den));
}

std::vector<Rational> from_numbers(const py::sequence& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(from_number(v));
  return out;
}

Assignment to_assignment(const std::map<AtomIndex, bool>& values) {
  Assignment a;
  for (const auto& [atom, value] : values) a.set(atom, value);
  return a;
}

py::tuple solve_result(const SolveResult& r) {
  if (const auto* s = std::get_if<SolvedValue>(&r)) return py::make_tuple("solved", to_fraction(s->value));
  if (std::holds_alternative<Inconsistent>(r)) return py::make_tuple("inconsistent", py::none());
  return py::make_tuple("indeterminate", py::none());
}

py::dict poly_terms(const MultilinearPoly& p) {
  py::dict out;
  for (const auto& t : p.terms()) {
    py::list vars;
    for (unsigned v = 1; v <= p.dimension(); ++v)
      if ((t.monomial >> (v - 1)) & 1U) vars.append(v);
    out[py::tuple(vars)] = to_py(t.coefficient);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(blindsat, m) {
  m.doc() = "Propositional formulas, their arithmetization, blind search adversaries and census tables.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", error.ptr());

  py::class_<Formula>(m, "Formula")
      .def_property_readonly("atoms", &Formula::atoms)
      .def("__str__", &Formula::to_string)
      .def("__repr__", [](const Formula& f) { return "Formula('" + f.to_string() + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__invert__", [](const Formula& f) { return ~f; })
      .def("__and__", [](const Formula& a, const Formula& b) { return a & b; })
      .def("__or__", [](const Formula& a, const Formula& b) { return a | b; });

  m.def("parse_formula", [](const std::string& text) { return parse_formula(text); }, py::arg("text"));
  m.def(
      "evaluate",
      [](const Formula& f, const std::map<AtomIndex, bool>& values) {
        return evaluate(f, to_assignment(values));
      },
      py::arg("formula"), py::arg("assignment"), "Truth value under a {atom: bool} assignment.");
  m.def(
      "truth_table",
      [](const Formula& f) {
        const auto table = truth_table(f);
        std::vector<bool> rows;
        for (std::uint64_t k = 1; k <= table.row_count(); ++k) rows.push_back(table.row(k));
        return rows;
      },
      py::arg("formula"), "Rows 1..2^n over the formula's atoms, first atom most significant.");
  m.def("quasinorm", &quasinorm, py::arg("formula"));
  m.def("equivalent", [](const Formula& a, const Formula& b) { return equivalent(a, b); });
  m.def("essential_atoms", [](const Formula& f) { return essential_atoms(f); });
  m.def("class_quasinorm", [](const Formula& f) { return class_quasinorm(f); });
  m.def("is_irreducible", [](const Formula& f) { return is_irreducible(f); });
  m.def("irreducible_representative", [](const Formula& f) { return irreducible_representative(f); });

  py::class_<MultilinearPoly>(m, "Poly")
      .def_property_readonly("dimension", &MultilinearPoly::dimension)
      .def_property_readonly("terms", &poly_terms, "{(variables...): coefficient}")
      .def("__call__",
           [](const MultilinearPoly& p, const py::sequence& point) {
             const auto coords = from_numbers(point);
             return to_fraction(eval_poly(p, coords));
           })
      .def("__str__", &MultilinearPoly::to_string)
      .def("__eq__", [](const MultilinearPoly& a, const MultilinearPoly& b) { return a == b; });

  m.def("arithmetize", [](const Formula& f, unsigned n) { return arithmetize(f, n); },
        py::arg("formula"), py::arg("dimension") = 0);
  m.def("characteristic", [](const Formula& f, unsigned n) { return characteristic(f, n); },
        py::arg("formula"), py::arg("dimension") = 0);
  m.def("binary_roots", [](const MultilinearPoly& p) { return binary_roots(p); }, py::arg("poly"));
  m.def(
      "solve_for_variable",
      [](const MultilinearPoly& p, unsigned var, const py::sequence& others) {
        const auto values = from_numbers(others);
        return solve_result(solve_for_variable(p, var, values));
      },
      py::arg("poly"), py::arg("var"), py::arg("others"),
      "Returns ('solved', Fraction), ('inconsistent', None) or ('indeterminate', None).");
  m.def("substitute_equal", &substitute_equal, py::arg("poly"), py::arg("source"), py::arg("target"));

  py::class_<SearchOrder>(m, "SearchOrder")
      .def(py::init<std::vector<AtomIndex>, std::vector<std::uint8_t>>(), py::arg("permutation"),
           py::arg("first_values"))
      .def_static("natural", &SearchOrder::natural, py::arg("n"))
      .def_static("parse", [](const std::string& text) { return SearchOrder::parse(text); })
      .def_property_readonly("atom_count", &SearchOrder::atom_count)
      .def_property_readonly("position_count", &SearchOrder::position_count)
      .def("__str__", &SearchOrder::to_string)
      .def("__eq__", [](const SearchOrder& a, const SearchOrder& b) { return a == b; });

  m.def(
      "explored_assignment",
      [](const SearchOrder& o, Position t) { return explored_assignment(o, t).values(); },
      py::arg("order"), py::arg("t"));
  m.def(
      "run_search",
      [](const SearchOrder& o, const Formula& f) { return run_search(o, f).first_success; },
      py::arg("order"), py::arg("formula"), "Position of the first success, or None.");
  m.def("adversary_single_row", &adversary_single_row, py::arg("order"), py::arg("t"));
  m.def("adversary_rows", &adversary_rows, py::arg("order"), py::arg("positions"));
  m.def("worst_case_formula", &worst_case_formula, py::arg("order"));
  m.def("count_orders", [](std::uint64_t n) { return to_py(count_orders(n)); }, py::arg("n"));

  m.def(
      "blowup_dimacs",
      [](unsigned n, unsigned k, unsigned width, std::uint64_t seed) {
        return to_dimacs(blowup_instance(n, k, width, seed));
      },
      py::arg("n"), py::arg("k"), py::arg("m"), py::arg("seed") = 0,
      "DIMACS text of a random CNF with k clauses of m distinct atoms each.");
  m.def(
      "disjunct_count",
      [](const std::string& dimacs) { return to_py(disjunct_count(parse_dimacs(dimacs))); },
      py::arg("dimacs"));
  m.def(
      "dnf_solve",
      [](const std::string& dimacs) -> std::optional<std::map<AtomIndex, bool>> {
        const auto a = dnf_satisfying_assignment(distribute(parse_dimacs(dimacs)));
        if (!a) return std::nullopt;
        return a->values();
      },
      py::arg("dimacs"), "Distributes the CNF and returns a satisfying assignment, or None.");

  m.def("class_count", [](std::uint64_t n) { return to_py(class_count(n)); }, py::arg("n"));
  m.def("first_true_count", [](std::uint64_t n, std::uint64_t k) { return to_py(first_true_count(n, k)); },
        py::arg("n"), py::arg("m"));
  m.def("lucky_ratio", [](std::uint64_t n, std::uint64_t k) { return to_fraction(lucky_ratio(n, k)); },
        py::arg("n"), py::arg("m"));
  m.def(
      "r_poly",
      [](std::uint64_t n, std::uint64_t s, unsigned decimals) {
        const auto r = r_poly(n, s);
        return py::make_tuple(r.applicable, r.fraction_fixed(decimals));
      },
      py::arg("n"), py::arg("s"), py::arg("decimals") = 9,
      "(applicable, ratio rounded to `decimals` places).");
}
