#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgen/arbitration.hpp"
#include "qgen/classical.hpp"
#include "qgen/identities.hpp"
#include "qgen/qfamilies.hpp"
#include "qgen/render.hpp"

namespace py = pybind11;
using namespace qgen;

namespace {

// Rationals cross the boundary as "a/b" strings; the Python package turns
// them into fractions.Fraction.
std::string rat_out(const Rat& r) { return rat_json_string(r); }

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

GenocchiForm genocchi_form(const std::string& variant) {
  if (variant == "corrected") return GenocchiForm::with_q_two;
  if (variant == "printed") return GenocchiForm::without_q_two;
  throw std::invalid_argument("variant must be printed or corrected");
}

}  // namespace

PYBIND11_MODULE(_qgenocchi, m) {
  m.doc() = "Exact q-Euler, q-Genocchi and q-Bernoulli numbers";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  py::class_<RatFn>(m, "RatFn")
      .def(py::init([](const std::string& text) { return parse_ratfn(text); }), py::arg("text"))
      .def_static("q", &RatFn::q)
      .def("eval", [](const RatFn& f, const std::string& q0) { return rat_out(f.eval(Rat::parse(q0))); })
      .def("eval_at_one", [](const RatFn& f) { return rat_out(f.eval_at_one()); })
      .def("subst_qpow", &RatFn::subst_qpow, py::arg("m"))
      .def("latex", [](const RatFn& f) { return to_latex(f); })
      .def("to_json", [](const RatFn& f) { return json_to_py(to_json(f)); })
      .def("is_zero", &RatFn::is_zero)
      .def("__pow__", [](const RatFn& f, long e) { return f.pow(e); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const RatFn& f) { return to_plain(f); })
      .def("__repr__", [](const RatFn& f) { return "RatFn('" + to_plain(f) + "')"; });

  py::class_<PolyX>(m, "PolyX")
      .def("eval_int", &PolyX::eval_int, py::arg("j"))
      .def("coefficients", [](const PolyX& p) { return std::vector<RatFn>(p.coefficients().begin(), p.coefficients().end()); })
      .def("latex", [](const PolyX& p) { return to_latex(p); })
      .def(py::self == py::self)
      .def("__str__", [](const PolyX& p) { return to_plain(p); });

  m.def("euler_number", [](std::size_t n) { return rat_out(euler_number(n)); });
  m.def("genocchi_number", [](std::size_t n) { return rat_out(genocchi_number(n)); });
  m.def("bernoulli_number", [](std::size_t n) { return rat_out(bernoulli_number(n)); });
  m.def("alt_power_sum", [](std::size_t mm, std::size_t n) { return rat_out(alt_power_sum(mm, n)); });

  m.def("q_int", &q_int);
  m.def("q_int_signed", &q_int_signed);
  m.def("q_euler_number", &q_euler_number);
  m.def("q_euler_poly", &q_euler_poly);
  m.def("q_genocchi_number",
        [](std::size_t n, const std::string& variant) { return q_genocchi_number(n, genocchi_form(variant)); },
        py::arg("n"), py::arg("variant") = "corrected");
  m.def("q_genocchi_poly",
        [](std::size_t n, const std::string& variant) { return q_genocchi_poly(n, genocchi_form(variant)); },
        py::arg("n"), py::arg("variant") = "corrected");
  m.def("q_bernoulli_number", &q_bernoulli_number);

  m.def(
      "oracle_check",
      [](const std::string& family, std::size_t n, std::size_t x, const std::string& q0, const std::string& tol,
         const std::string& variant) {
        const auto f = qfamily_from_name(family);
        if (!f) throw std::invalid_argument("unknown family '" + family + "'");
        return json_to_py(to_json(check_closed_form(*f, n, x, Rat::parse(q0), Rat::parse(tol), genocchi_form(variant))));
      },
      py::arg("family"), py::arg("n"), py::arg("x") = 0, py::arg("q"), py::arg("tol"),
      py::arg("variant") = "corrected");

  m.def(
      "verify",
      [](const std::string& id, const std::string& variant, const std::map<std::string, long>& params) {
        const auto ident = identity_from_name(id);
        if (!ident) throw std::invalid_argument("unknown identity id '" + id + "'");
        const auto& spec = identity_spec(*ident);
        ParamTuple tuple;
        for (const auto& ps : spec.params) {
          if (auto it = params.find(ps.name); it != params.end()) tuple.push_back({ps.name, it->second});
        }
        if (tuple.size() != params.size()) throw std::invalid_argument("unknown parameter for " + id);
        return json_to_py(to_json(verify(*ident, variant, tuple), false));
      },
      py::arg("id"), py::arg("variant"), py::arg("params"));

  m.def(
      "run_suite",
      [](const std::string& config_text) {
        return json_to_py(to_json(run_suite(parse_suite_config(config_text)), false));
      },
      py::arg("config"));

  m.def("identity_ids", [] {
    std::vector<std::string> ids;
    for (const auto& spec : catalog()) ids.emplace_back(identity_name(spec.id));
    return ids;
  });
}
