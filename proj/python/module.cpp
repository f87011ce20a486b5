// Python bindings for the main operations: exact sequence values, catalog
// evaluation, and the verification entry points. Exact values cross the
// boundary as strings (or python ints for the integer sequences); nothing
// is ever rounded on the C++ side except the explicit decimal renderings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibsum/catalog.hpp"
#include "fibsum/identities.hpp"
#include "fibsum/verifier.hpp"

namespace py = pybind11;
using namespace fibsum;

namespace {

py::int_ to_py_int(const BigInt& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Params make_params(long long m, long long n, long long q, long long p) {
  return Params{m, n, q, p};
}

py::dict report_dict(const VerificationReport& report) {
  py::dict d;
  d["entry_id"] = report.entry_id;
  d["params"] = py::dict(py::arg("m") = report.params.m, py::arg("n") = report.params.n,
                         py::arg("q") = report.params.q, py::arg("p") = report.params.p,
                         py::arg("N") = report.N);
  d["status"] = report.status;
  d["lhs"] = report.lhs;
  d["rhs"] = report.rhs;
  d["tail"] = report.tail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_fibsum, m) {
  m.doc() = "Exact arithmetic over Q(sqrt5) and a verified catalog of "
            "Fibonacci-Lucas reciprocal series identities";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "FibsumParseError", PyExc_ValueError);
  py::register_exception<UnknownIdError>(m, "UnknownIdError", PyExc_KeyError);

  py::class_<QuadRat>(m, "Quadratic")
      .def(py::init([](const std::string& text) { return QuadRat::parse(text); }))
      .def(py::init([](long long v) { return QuadRat(BigRational(v)); }))
      .def_static("phi", &QuadRat::phi)
      .def_static("sqrt5", &QuadRat::sqrt5)
      .def("__add__", [](const QuadRat& a, const QuadRat& b) { return a + b; })
      .def("__sub__", [](const QuadRat& a, const QuadRat& b) { return a - b; })
      .def("__mul__", [](const QuadRat& a, const QuadRat& b) { return a * b; })
      .def("__truediv__", [](const QuadRat& a, const QuadRat& b) { return a / b; })
      .def("__neg__", [](const QuadRat& a) { return -a; })
      .def("__eq__", [](const QuadRat& a, const QuadRat& b) { return a == b; })
      .def("__lt__", [](const QuadRat& a, const QuadRat& b) { return a < b; })
      .def("__str__", &QuadRat::str)
      .def("__repr__", [](const QuadRat& v) { return "Quadratic('" + v.str() + "')"; })
      .def("conj", &QuadRat::conj)
      .def("sign", &QuadRat::sign)
      .def("is_rational", &QuadRat::is_rational)
      .def("to_decimal", &QuadRat::to_decimal, py::arg("digits") = 40);

  m.def("fib", [](std::uint64_t n) { return to_py_int(shared_sequences().fib(n)); },
        py::arg("n"), "Exact Fibonacci number F_n");
  m.def("lucas", [](std::uint64_t n) { return to_py_int(shared_sequences().lucas(n)); },
        py::arg("n"), "Exact Lucas number L_n");
  m.def("phi_pow", [](std::uint64_t n) { return shared_sequences().phi_pow(n); }, py::arg("n"));
  m.def("sqrt5_pow", [](std::uint64_t n) { return Sequences::sqrt5_pow(n); }, py::arg("n"));

  m.def("catalog_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : catalog()) ids.push_back(e.id);
    return ids;
  });
  m.def("entry_info", [](const std::string& id) {
    const CatalogEntry& e = catalog_entry(id);
    py::dict d;
    d["id"] = e.id;
    d["source"] = e.source;
    d["parity"] = e.parity_text;
    d["rhs"] = e.rhs_text;
    d["uses_p"] = e.lhs.uses_p;
    d["summation"] = e.summation == Summation::Direct ? "direct" : "mean-of-partials";
    d["notes"] = e.notes;
    return d;
  });
  m.def("validate_params",
        [](const std::string& id, long long mm, long long n, long long q, long long p) {
          return validate_params(catalog_entry(id), make_params(mm, n, q, p));
        },
        py::arg("entry"), py::arg("m"), py::arg("n"), py::arg("q"), py::arg("p") = 0);
  m.def("term_at",
        [](const std::string& id, long long mm, long long n, long long q, long long p,
           long long k) {
          return term_at(shared_sequences(), catalog_entry(id), make_params(mm, n, q, p), k).str();
        },
        py::arg("entry"), py::arg("m"), py::arg("n"), py::arg("q"), py::arg("p"), py::arg("k"));
  m.def("partial_sum",
        [](const std::string& id, long long mm, long long n, long long q, long long p,
           long long N) {
          return partial_sum(shared_sequences(), catalog_entry(id), make_params(mm, n, q, p), N)
              .str();
        },
        py::arg("entry"), py::arg("m"), py::arg("n"), py::arg("q"), py::arg("p"), py::arg("N"));
  m.def("closed_form",
        [](const std::string& id, long long mm, long long n, long long q, long long p) {
          return closed_form(shared_sequences(), catalog_entry(id), make_params(mm, n, q, p));
        },
        py::arg("entry"), py::arg("m"), py::arg("n"), py::arg("q"), py::arg("p") = 0);

  m.def("check_identity",
        [](const std::string& id, long long a, long long b, long long c) {
          return check_identity(shared_sequences(), id, {a, b, c});
        },
        py::arg("identity"), py::arg("u"), py::arg("v"), py::arg("w") = 0);
  m.def("identity_ids", [] {
    std::vector<std::string> ids;
    for (const auto& ident : identities()) ids.push_back(ident.id);
    return ids;
  });
  m.def("sweep_identities",
        [](std::uint64_t range, std::uint64_t trials, std::uint64_t seed) {
          SweepReport r = sweep_identities(shared_sequences(), range, trials, seed);
          py::dict d;
          d["range"] = r.range;
          d["trials"] = r.trials;
          d["seed"] = r.seed;
          d["pass"] = r.pass();
          py::list failures;
          for (const auto& f : r.failures) {
            failures.append(py::make_tuple(f.id, f.params[0], f.params[1], f.params[2]));
          }
          d["failures"] = failures;
          return d;
        },
        py::arg("range"), py::arg("trials"), py::arg("seed"));

  m.def("verify_finite",
        [](const std::string& id, long long mm, long long n, long long q, long long p,
           long long N) {
          return report_dict(verify_finite(shared_sequences(), id, make_params(mm, n, q, p), N));
        },
        py::arg("identity"), py::arg("m"), py::arg("n"), py::arg("q"), py::arg("p"), py::arg("N"));
  m.def("verify_infinite",
        [](const std::string& id, long long mm, long long n, long long q, long long p,
           long long n_probe, const std::string& threshold) {
          return report_dict(verify_infinite(shared_sequences(), id, make_params(mm, n, q, p),
                                             n_probe, BigRational::parse(threshold)));
        },
        py::arg("entry"), py::arg("m"), py::arg("n"), py::arg("q"), py::arg("p") = 0,
        py::arg("n_probe") = 96, py::arg("threshold") = "1/1000000000000000");
  m.def("reference_examples", [] {
    py::list out;
    for (const auto& report : reproduce_reference_examples(shared_sequences())) {
      out.append(report_dict(report));
    }
    return out;
  });
}
