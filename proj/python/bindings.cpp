#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jobs.hpp"
#include "sprod/dwpf.hpp"
#include "sprod/parallel.hpp"
#include "sprod/scalarprod_su2.hpp"
#include "sprod/scalarprod_su3.hpp"

namespace py = pybind11;
using namespace sprod;

namespace {

// Anything whose str() is an integer or "p/q": int, str, fractions.Fraction.
std::vector<Rat> to_rats(const py::iterable& xs) {
    std::vector<Rat> out;
    for (auto x : xs) out.push_back(Rat::parse(py::str(x)));
    return out;
}

py::object to_fraction(const Rat& x) { return py::module_::import("fractions").attr("Fraction")(x.str()); }

py::object from_json(const cli::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

} // namespace

PYBIND11_MODULE(sprod, m) {
    m.doc() = "Exact scalar products and partition functions for XXX spin chains";

    static py::exception<Error> exc(m, "SprodError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc(e.what());
        }
    });

    m.def("set_threads", &set_threads, py::arg("n"));
    m.def("weight_f", [](py::object l, py::object mu) { return to_fraction(weight_f(Rat::parse(py::str(l)), Rat::parse(py::str(mu)))); });
    m.def("dwpf", [](py::iterable l, py::iterable w) { return to_fraction(dwpf_izergin(to_rats(l), to_rats(w))); }, py::arg("lambdas"),
          py::arg("ws"));
    m.def("z_su3", [](py::iterable l, py::iterable mu, py::iterable w, py::iterable v) {
        return to_fraction(z_su3_sum(to_rats(l), to_rats(mu), to_rats(w), to_rats(v)));
    });
    m.def("z_su3_lattice", [](py::iterable l, py::iterable mu, py::iterable w, py::iterable v) {
        return to_fraction(z_su3_oracle(to_rats(l), to_rats(mu), to_rats(w), to_rats(v)));
    });
    m.def("slavnov_det", [](py::iterable lc, py::iterable lb, py::iterable r) {
        return to_fraction(slavnov_det_values(to_rats(lc), to_rats(lb), to_rats(r)));
    });
    m.def("su3_chain_product", [](py::iterable muC, py::iterable lC, py::iterable lB, py::iterable muB, py::iterable ws, py::iterable vs) {
        return to_fraction(su3_scalar_product_direct(to_rats(muC), to_rats(lC), to_rats(lB), to_rats(muB), {to_rats(ws), to_rats(vs)}));
    });

    m.def("run_job", [](py::object job) {
        auto text = py::module_::import("json").attr("dumps")(job).cast<std::string>();
        return from_json(cli::run_job(cli::json::parse(text)));
    }, "Run one JSON job (a dict) and return the report dict.");
    m.def("run_suite", [](const std::string& name, std::uint64_t seed) { return from_json(cli::suite_report(name, seed)); },
          py::arg("name"), py::arg("seed") = 7);
}
