#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "poincare/format.hpp"
#include "poincare/series.hpp"
#include "poincare/verify.hpp"

namespace py = pybind11;
using namespace poincare;

namespace {

py::int_ to_python(const Integer& v)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_python(const nlohmann::json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

PipelineOptions options(bool omit_order_factor)
{
    PipelineOptions o;
    o.include_order_factor = !omit_order_factor;
    return o;
}

DimensionQuery query(const std::vector<int>& d, const std::vector<int>& m, int i)
{
    return DimensionQuery(Multidegree(d), m, i);
}

py::dict report(const OracleReport& r)
{
    py::dict out;
    out["checked"] = r.checked;
    out["mismatches"] = r.mismatches;
    out["first_mismatch"] = r.first_mismatch;
    out["passed"] = r.passed();
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Poincare series of joint covariants and invariants of binary forms";

    m.def(
        "covariants",
        [](const std::vector<int>& d, bool omit_order_factor) {
            std::optional<RationalSeriesForm> r;
            {
                py::gil_scoped_release release;
                r = poincare_covariants(Multidegree(d), options(omit_order_factor));
            }
            return to_python(result_json(*r));
        },
        py::arg("d"), py::arg("omit_order_factor") = false,
        "Series in z1..zn, t as a dict with numerator, denominator, text and latex.");
    m.def(
        "invariants",
        [](const std::vector<int>& d, bool omit_order_factor) {
            std::optional<RationalSeriesForm> r;
            {
                py::gil_scoped_release release;
                r = poincare_invariants(Multidegree(d), options(omit_order_factor));
            }
            return to_python(result_json(*r));
        },
        py::arg("d"), py::arg("omit_order_factor") = false);

    m.def(
        "omega_count", [](const std::vector<int>& d, const std::vector<int>& mm, int i) {
            return to_python(omega_count(query(d, mm, i)));
        },
        py::arg("d"), py::arg("m"), py::arg("i"));
    m.def(
        "dimension", [](const std::vector<int>& d, const std::vector<int>& mm, int i) {
            return to_python(dim_covariants(query(d, mm, i)));
        },
        py::arg("d"), py::arg("m"), py::arg("i"), "omega(m;i) - omega(m;i+2).");
    m.def(
        "dimension_by_extraction", [](const std::vector<int>& d, const std::vector<int>& mm, int i) {
            return to_python(dim_via_extraction(query(d, mm, i)));
        },
        py::arg("d"), py::arg("m"), py::arg("i"));

    m.def(
        "expand",
        [](const std::string& text, std::size_t num_z, int order) {
            const TruncatedSeries series = expand(parse_form(text, num_z), order);
            py::dict out;
            for (const auto& [mono, c] : series.terms()) {
                std::vector<int> e = mono.z_exponents();
                e.push_back(mono.t());
                out[py::tuple(py::cast(e))] = to_python(c);
            }
            return out;
        },
        py::arg("text"), py::arg("num_z"), py::arg("order"),
        "Coefficients up to total z-degree `order`, keyed by (z1..zn, t) exponents.");
    m.def(
        "series_equal",
        [](const std::string& a, const std::string& b, std::size_t num_z, int order) {
            return series_equal(parse_form(a, num_z), parse_form(b, num_z), order);
        },
        py::arg("a"), py::arg("b"), py::arg("num_z"), py::arg("order"));
    m.def(
        "normalize",
        [](const std::string& text, std::size_t num_z) { return to_python(result_json(normalize(parse_form(text, num_z)))); },
        py::arg("text"), py::arg("num_z"));

    m.def(
        "verify",
        [](const std::vector<int>& d, int order, bool covariants) {
            const Multidegree md(d);
            const auto ms = multidegrees_of_total_degree(md.size(), order);
            return report(covariants ? verify_covariants(md, poincare_covariants(md), ms)
                                     : verify_invariants(md, poincare_invariants(md), ms));
        },
        py::arg("d"), py::arg("order"), py::arg("covariants") = true,
        "Compare with the dimension oracle for all multidegrees of total degree <= order.");
}
