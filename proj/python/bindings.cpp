#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hiveflow/enumerate.hpp"
#include "hiveflow/errors.hpp"
#include "hiveflow/io.hpp"
#include "hiveflow/lr_oracle.hpp"
#include "hiveflow/solver.hpp"

namespace py = pybind11;
using namespace hiveflow;

namespace {

using Parts = std::vector<std::int64_t>;

Instance instance(const Parts& l, const Parts& m, const Parts& n)
{
    return Instance::make(Partition(l), Partition(m), Partition(n));
}

Algorithm algorithm(const std::string& name)
{
    if (name == "scaling")
        return Algorithm::Scaling;
    if (name == "plain")
        return Algorithm::Plain;
    throw InvalidInstance("unknown algorithm '" + name + "'");
}

std::string render(const FlowClass& f, const std::string& format)
{
    if (format == "dot")
        return render_dot(f);
    if (format == "tikz")
        return render_tikz(f);
    throw InvalidInstance("unknown format '" + format + "'");
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    m.def(
        "decide_json",
        [](const Parts& l, const Parts& mu, const Parts& n, const std::string& algo) {
            return report_to_json(decide(instance(l, mu, n), algorithm(algo))).dump();
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("algorithm") = "scaling");
    m.def(
        "lr_count", [](const Parts& l, const Parts& mu, const Parts& n) { return lr_count(Partition(l), Partition(mu), Partition(n)); },
        py::arg("lam"), py::arg("mu"), py::arg("nu"));
    m.def(
        "count",
        [](const Parts& l, const Parts& mu, const Parts& n, std::size_t limit) {
            return count_P(instance(l, mu, n), limit);
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("limit") = default_enumeration_limit);
    m.def(
        "multiplicity_free",
        [](const Parts& l, const Parts& mu, const Parts& n) { return multiplicity_free(instance(l, mu, n)); },
        py::arg("lam"), py::arg("mu"), py::arg("nu"));
    m.def(
        "render",
        [](const Parts& l, const Parts& mu, const Parts& n, const std::string& format) {
            return render(decide_scaling(instance(l, mu, n)).final_flow, format);
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("format") = "dot");
    m.def(
        "render_flow_json",
        [](const std::string& doc, const std::string& format) {
            return render(flow_from_json(ordered_json::parse(doc)), format);
        },
        py::arg("doc"), py::arg("format") = "dot");
}
