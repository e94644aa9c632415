#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hesscell/cli.hpp"
#include "hesscell/sweep.hpp"

namespace py = pybind11;
using namespace hesscell;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::vector<Polynomial>> rows(const PolyMatrix& m) {
  std::vector<std::vector<Polynomial>> out(m.size());
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) out[i - 1].push_back(m(i, j));
  return out;
}

CoefficientDomain domain_for(unsigned long p) {
  return p ? CoefficientDomain::prime_field(p) : CoefficientDomain::integers();
}

}  // namespace

PYBIND11_MODULE(_hesscell, m) {
  m.doc() = "Ideals of regular nilpotent Hessenberg Schubert cells";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<DomainMismatch>(m, "DomainMismatch", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& s) { return Permutation::parse(s); }))
      .def(py::init<std::vector<int>>())
      .def_static("longest", &Permutation::longest)
      .def_static("identity", &Permutation::identity)
      .def_property_readonly("images", &Permutation::images)
      .def_property_readonly("n", &Permutation::size)
      .def("length", &Permutation::length)
      .def("inverse", &Permutation::inverse)
      .def("compose", &Permutation::compose)
      .def("__call__", [](const Permutation& w, int j) {
        if (j < 1 || j > w.size()) throw py::index_error("argument out of range");
        return w(j);
      })
      .def(py::self == py::self)
      .def("__hash__", [](const Permutation& w) { return py::hash(py::tuple(py::cast(w.images()))); })
      .def("__str__", &Permutation::str)
      .def("__repr__", [](const Permutation& w) { return "Permutation('" + w.str() + "')"; });
  py::implicitly_convertible<std::string, Permutation>();

  py::class_<HessenbergFunction>(m, "HessenbergFunction")
      .def(py::init([](const std::string& s) { return HessenbergFunction::parse(s); }))
      .def(py::init<std::vector<int>>())
      .def_property_readonly("values", &HessenbergFunction::values)
      .def_property_readonly("indecomposable", &HessenbergFunction::indecomposable)
      .def(py::self == py::self)
      .def("__str__", &HessenbergFunction::str)
      .def("__repr__", [](const HessenbergFunction& h) { return "HessenbergFunction('" + h.str() + "')"; });
  py::implicitly_convertible<std::string, HessenbergFunction>();

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& s, unsigned long p) { return Polynomial::parse(s, domain_for(p)); }),
           py::arg("text"), py::arg("p") = 0)
      .def_property_readonly("p", [](const Polynomial& f) { return f.domain().modulus(); })
      .def("is_zero", &Polynomial::is_zero)
      .def("total_degree", &Polynomial::total_degree)
      .def("variables", [](const Polynomial& f) {
        std::vector<std::string> out;
        for (const auto& v : f.variables()) out.push_back(v.name());
        return out;
      })
      .def("to_json", [](const Polynomial& f) { return to_py(to_json(f)); })
      .def_static("from_json", [](py::object obj) {
        return polynomial_from_json(json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>()));
      })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def("__pow__", [](const Polynomial& f, unsigned e) { return f.pow(e); })
      .def(py::self == py::self)
      .def("__str__", &Polynomial::str)
      .def("__repr__", [](const Polynomial& f) { return "Polynomial('" + f.str() + "')"; });

  m.def("patch_generators", [](const Permutation& w) { return rows(patch_generators(w)); },
        "Matrix of f^w_{k,l}, as a list of rows.");
  m.def("cell_generators", [](const Permutation& w) { return rows(cell_generators(w)); },
        "Matrix of g^w_{k,l}, as a list of rows.");
  m.def("v_of_w", &v_of_w);
  m.def("fixed_points", &fixed_points);
  m.def("is_fixed_point", &is_fixed_point);
  m.def("enumerate_hessenberg", &enumerate_hessenberg, py::arg("n"), py::arg("indecomposable_only") = true);
  m.def("ideal", [](const Permutation& w, const HessenbergFunction& h, const std::string& kind) {
    return to_py(to_json(build_ideal(w, h, ideal_kind_from_string(kind))));
  }, py::arg("w"), py::arg("h"), py::arg("kind") = "cell");
  m.def("triangular_analysis", [](const Permutation& w, const HessenbergFunction& h) {
    return to_py(to_json(triangular_analysis(build_ideal(w, h, IdealKind::Cell), order_n_w(w))));
  });
  m.def("buchberger_check", [](const Permutation& w, const HessenbergFunction& h) {
    return buchberger_check(build_ideal(w, h, IdealKind::Cell), order_n_w(w)).is_groebner;
  });
  m.def("reduced_groebner_basis", [](const Permutation& w, const HessenbergFunction& h, std::size_t budget) {
    const auto ideal = build_ideal(w, h, IdealKind::Cell);
    return reduced_gb_oracle(ideal.nonzero_polynomials(), order_n_w(w), budget);
  }, py::arg("w"), py::arg("h"), py::arg("budget") = 100000);
  m.def("hilbert_series", [](const Permutation& w, const HessenbergFunction& h, int trunc) {
    json j = to_json(hilbert_formula(w, h));
    j["coefficients"] = to_json(hilbert_formula(w, h).expand(trunc));
    return to_py(j);
  }, py::arg("w"), py::arg("h"), py::arg("trunc") = 20);
  m.def("paving", [](const HessenbergFunction& h) { return to_py(to_json(paving(h))); });
  m.def("frobenius_check", [](const Permutation& w, const HessenbergFunction& h, unsigned long p) {
    return to_py(to_json(compatibility_check(make_cell_splitting_context(w, h, p))));
  });
  m.def("sweep", [](int max_n, std::vector<unsigned long> primes, unsigned jobs, std::uint64_t seed, int trunc,
                    bool oracle_nonfixed) {
    SweepOptions opt;
    opt.max_n = max_n;
    opt.frobenius_primes = std::move(primes);
    opt.jobs = jobs;
    opt.seed = seed;
    opt.trunc = trunc;
    opt.oracle_all_n = oracle_nonfixed;
    SweepReport rep;
    {
      py::gil_scoped_release release;
      rep = sweep(opt);
    }
    return to_py(to_json(rep));
  }, py::arg("max_n"), py::arg("frobenius") = std::vector<unsigned long>{}, py::arg("jobs") = 1,
     py::arg("seed") = 1, py::arg("trunc") = 20, py::arg("oracle_nonfixed") = false);
  m.def("run_command", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs a CLI command; returns (exit_code, stdout, stderr).");
}
