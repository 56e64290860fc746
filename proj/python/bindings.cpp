#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "premon/cli.hpp"
#include "premon/finite_monoid.hpp"
#include "premon/poly_domain.hpp"
#include "premon/presented.hpp"
#include "premon/puiseux.hpp"
#include "premon/records.hpp"

namespace py = pybind11;
using namespace premon;

namespace {

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::string> show_all(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::vector<std::vector<bool>> to_matrix(const finite::Relation& r) {
  std::vector<std::vector<bool>> out(r.size(), std::vector<bool>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) out[i][j] = r(i, j);
  return out;
}

finite::Relation from_matrix(const std::vector<std::vector<bool>>& m) {
  finite::Relation r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw ValidationError("preorder matrix is not square");
    for (std::size_t j = 0; j < m.size(); ++j) r.set(i, j, m[i][j]);
  }
  return r;
}

SearchBudget budget(std::size_t chain_depth, std::size_t factor_cap, std::size_t node_cap,
                    std::size_t relation_budget) {
  SearchBudget b{chain_depth, factor_cap, node_cap, relation_budget};
  b.validate();
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Premons: factorization theory for monoids with a preorder";

  py::register_exception<Error>(m, "PremonError", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);
  py::register_exception<NotANonUnit>(m, "NotANonUnit", PyExc_ValueError);

  py::enum_<Tri>(m, "Tri")
      .value("FALSE", Tri::False)
      .value("TRUE", Tri::True)
      .value("UNKNOWN", Tri::Unknown);

  // Finite monoids.
  py::class_<finite::FiniteMonoid>(m, "FiniteMonoid")
      .def(py::init([](const finite::Table& t, finite::Element e) {
             return finite::FiniteMonoid::validate(t, e);
           }),
           py::arg("table"), py::arg("identity") = 0)
      .def_property_readonly("size", &finite::FiniteMonoid::size)
      .def_property_readonly("identity", &finite::FiniteMonoid::identity)
      .def("table", &finite::FiniteMonoid::table)
      .def("__call__", &finite::FiniteMonoid::operator())
      .def("units", [](const finite::FiniteMonoid& fm) { return finite::units(fm); })
      .def("atoms", [](const finite::FiniteMonoid& fm) { return finite::atoms(fm); })
      .def("is_acyclic", [](const finite::FiniteMonoid& fm) { return finite::is_acyclic(fm); })
      .def("is_group", [](const finite::FiniteMonoid& fm) { return finite::is_group(fm); })
      .def("is_atomic", [](const finite::FiniteMonoid& fm) { return finite::is_atomic(fm); })
      .def("is_cancellative", [](const finite::FiniteMonoid& fm) { return finite::is_cancellative(fm); })
      .def("divisibility",
           [](const finite::FiniteMonoid& fm) { return to_matrix(finite::divisibility(fm)); })
      .def("__eq__", [](const finite::FiniteMonoid& a, const finite::FiniteMonoid& b) { return a == b; });

  m.def("enumerate_monoids", &finite::enumerate_monoids, py::arg("n"));
  m.def("boolean_and", &finite::boolean_and);
  m.def("zmod_mult", &finite::zmod_mult, py::arg("n"));
  m.def("zmod_add", &finite::zmod_add, py::arg("n"));
  m.def("transitive_closure",
        [](const std::vector<std::vector<bool>>& rel) { return to_matrix(from_matrix(rel).closure()); });

  m.def(
      "classify_finite",
      [](const finite::FiniteMonoid& fm, finite::Element x,
         const std::optional<std::vector<std::vector<bool>>>& preorder, std::size_t chain_depth,
         std::size_t factor_cap, std::size_t node_cap) {
        if (x >= fm.size()) throw ValidationError("element out of range");
        const auto p = preorder ? finite::matrix_premon(fm, from_matrix(*preorder))
                                : finite::divisibility_premon(fm);
        const auto b = budget(chain_depth, factor_cap, node_cap, 8);
        return to_py(to_json(make_record(p, classify(p, x, b), "finite")));
      },
      py::arg("monoid"), py::arg("element"), py::arg("preorder") = py::none(),
      py::arg("chain_depth") = 30, py::arg("factor_cap") = 6, py::arg("node_cap") = 1'000'000);

  m.def(
      "factor_finite",
      [](const finite::FiniteMonoid& fm, finite::Element x,
         const std::optional<std::vector<std::vector<bool>>>& preorder, std::size_t s) {
        if (x >= fm.size()) throw ValidationError("element out of range");
        const auto p = preorder ? finite::matrix_premon(fm, from_matrix(*preorder))
                                : finite::divisibility_premon(fm);
        const SearchBudget b;
        return to_py(to_json(make_record(p, factor_into_irreducibles(p, x, Degree::finite(s), b))));
      },
      py::arg("monoid"), py::arg("element"), py::arg("preorder") = py::none(), py::arg("s") = 2);

  // Puiseux monoids; rationals cross the boundary as strings "p/q".
  py::class_<puiseux::PuiseuxMonoid>(m, "PuiseuxMonoid")
      .def(py::init([](long a, long b) { return puiseux::PuiseuxMonoid(Integer(a), Integer(b)); }),
           py::arg("a"), py::arg("b"))
      .def_property_readonly("r", [](const puiseux::PuiseuxMonoid& h) { return to_string(h.r()); })
      .def("contains",
           [](const puiseux::PuiseuxMonoid& h, const std::string& q) { return h.contains(parse_rational(q)); })
      .def("divides",
           [](const puiseux::PuiseuxMonoid& h, const std::string& x, const std::string& y) {
             return h.divides(parse_rational(x), parse_rational(y));
           })
      .def("canonical",
           [](const puiseux::PuiseuxMonoid& h, const std::string& q) -> py::object {
             auto rep = h.canonical(parse_rational(q));
             if (!rep) return py::none();
             return to_py(puiseux::to_json(*rep));
           })
      .def("length_set_bounded",
           [](const puiseux::PuiseuxMonoid& h, const std::string& q, std::size_t cap) {
             return h.length_set_bounded(parse_rational(q), cap);
           })
      .def("decreasing_chain",
           [](const puiseux::PuiseuxMonoid& h, std::size_t len) { return show_all(h.decreasing_chain(len)); })
      .def("is_atom",
           [](const puiseux::PuiseuxMonoid& h, const std::string& q) { return h.is_atom(parse_rational(q)); })
      .def(
          "satisfies_accp_element",
          [](const puiseux::PuiseuxMonoid& h, const std::string& q, std::size_t cap) {
            auto v = h.satisfies_accp_element(parse_rational(q), cap);
            return std::make_tuple(v.verdict, v.witness_index);
          },
          py::arg("x"), py::arg("cap") = 8);

  // Presented monoids; words are strings like "y1 y2 y3".
  py::class_<presented::PresentedMonoid>(m, "PresentedMonoid")
      .def(py::init([](std::size_t h, std::size_t k, const std::string& sigma) {
             if (sigma == "identity") return presented::PresentedMonoid(h, k);
             if (sigma == "square") return presented::PresentedMonoid(h, k, presented::Sigma::square());
             throw ValidationError("sigma must be 'identity' or 'square'");
           }),
           py::arg("h"), py::arg("k"), py::arg("sigma") = "identity")
      .def("rules",
           [](const presented::PresentedMonoid& pm, std::size_t r) {
             auto rp = pm.rules(r);
             using presented::to_string;
             return std::make_tuple(to_string(rp.x_rule.lhs), to_string(rp.x_rule.rhs),
                                    to_string(rp.y_rule.lhs), to_string(rp.y_rule.rhs));
           })
      .def(
          "equivalent_bounded",
          [](const presented::PresentedMonoid& pm, const std::string& u, const std::string& w,
             std::size_t radius) {
            return pm.equivalent_bounded(presented::parse_word(u), presented::parse_word(w), radius).verdict;
          },
          py::arg("u"), py::arg("w"), py::arg("radius") = 6)
      .def(
          "divides_bounded",
          [](const presented::PresentedMonoid& pm, const std::string& u, const std::string& w,
             std::size_t radius) {
            return pm.divides_bounded(presented::parse_word(u), presented::parse_word(w), radius).verdict;
          },
          py::arg("u"), py::arg("w"), py::arg("radius") = 6)
      .def(
          "is_quark_bounded",
          [](const presented::PresentedMonoid& pm, const std::string& w, std::size_t radius) {
            return pm.is_quark_bounded(presented::parse_word(w), radius).verdict;
          },
          py::arg("w"), py::arg("radius") = 6)
      .def(
          "descending_chain_x",
          [](const presented::PresentedMonoid& pm, std::size_t r, std::size_t len, std::size_t radius) {
            auto c = pm.descending_chain_x(r, len, radius);
            std::vector<std::string> words;
            for (const auto& w : c.words) words.push_back(presented::to_string(w));
            return std::make_tuple(words, c.forward_certified(), c.strictness_proved());
          },
          py::arg("r"), py::arg("len"), py::arg("radius") = 6)
      .def(
          "k_local_artinian_witness_valid",
          [](const presented::PresentedMonoid& pm, std::size_t r, std::size_t radius) {
            return pm.k_local_artinian_witness(r, radius).valid();
          },
          py::arg("r"), py::arg("radius") = 3);

  // The polynomial domain Z + X Q[X]; polynomials as "c0,c1,...".
  m.def("poly_divides", [](const std::string& f, const std::string& g) {
    return poly::divides(poly::parse_poly(f), poly::parse_poly(g));
  });
  m.def("poly_is_atom", [](const std::string& f) { return poly::is_atom(poly::parse_poly(f)); });
  m.def("qX_is_never_atom", [](const std::string& q) { return poly::qX_is_never_atom(parse_rational(q)).valid(); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
