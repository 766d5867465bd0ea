#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jacring/certify.hpp"
#include "jacring/errors.hpp"
#include "jacring/logforms.hpp"
#include "jacring/oracles.hpp"

namespace py = pybind11;
using namespace jacring;

namespace {

// The python layer works with JSON strings for instances and structured
// results; keeps the binding surface small and versionable.

Instance parse(const std::string& text) { return instance_from_json(text); }

std::shared_ptr<Ring> make_ring(const std::string& text) {
    return std::make_shared<Ring>(parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "generalized Jacobian ring core";

    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<TraceUndefined>(m, "TraceUndefined", PyExc_RuntimeError);
    py::register_exception<DimensionOverflow>(m, "DimensionOverflow", PyExc_RuntimeError);

    py::class_<Ring, std::shared_ptr<Ring>>(m, "Ring")
        .def(py::init(&make_ring), py::arg("instance_json"))
        .def("dim_piece",
             [](const Ring& r, int q, int l) { return r.dim_piece({q, l}); },
             py::arg("q"), py::arg("l"))
        .def("dim_quotient",
             [](const Ring& r, int q, int l) { return r.dim_B({q, l}); },
             py::arg("q"), py::arg("l"))
        .def("euler_identity_check", &Ring::euler_identity_check)
        .def("top_bidegree",
             [](const Ring& r) {
                 BiDegree bd = r.top_bidegree();
                 return std::make_pair(bd.q, bd.l);
             })
        .def("trace_defined", [](const Ring& r) {
            try {
                r.trace();
                return true;
            } catch (const TraceUndefined&) {
                return false;
            }
        });

    m.def("instance_digest",
          [](const std::string& text) { return instance_digest(parse(text)); },
          py::arg("instance_json"));
    m.def(
        "random_instance",
        [](int n, const std::vector<int>& d, const std::vector<int>& e, uint64_t seed) {
            return instance_to_json(random_instance(n, d, e, FieldSpec::rationals(), seed));
        },
        py::arg("n"), py::arg("d"), py::arg("e"), py::arg("seed"));
    m.def(
        "certify_transversality",
        [](const std::string& text, int degree_cap) {
            return certify_transversality(parse(text), degree_cap).status_str();
        },
        py::arg("instance_json"), py::arg("degree_cap") = 0);

    m.def(
        "duality_check",
        [](const Ring& r, int p, int l) {
            DualityReport d = duality_check(r, p, l);
            py::dict out;
            out["left_dim"] = d.left_dim;
            out["right_dim"] = d.right_dim;
            out["rank"] = d.rank;
            out["condition"] = d.condition.str();
            out["verdict"] = verdict_str(d.verdict);
            return out;
        },
        py::arg("ring"), py::arg("p"), py::arg("l"));
    m.def(
        "koszul_exactness_check",
        [](const Ring& r, int codim, int p, int q, int l, uint64_t seed) {
            Subspace v = random_subspace(r, codim, seed);
            KoszulReport k = koszul_exactness_check(r, v, p, q, l);
            py::dict out;
            out["middle_homology"] = k.middle_homology;
            out["condition"] = k.condition.str();
            out["verdict"] = verdict_str(k.verdict);
            return out;
        },
        py::arg("ring"), py::arg("codim"), py::arg("p"), py::arg("q"), py::arg("l"),
        py::arg("seed") = 1);
    m.def(
        "multiplication_kernel",
        [](const Ring& r, int codim, int q, uint64_t seed) {
            Subspace v = random_subspace(r, codim, seed);
            MultKernelReport k = multiplication_kernel(r, v, q);
            py::dict out;
            out["kernel_dim"] = k.kernel_dim;
            if (k.expected) out["expected"] = *k.expected;
            out["verdict"] = verdict_str(k.verdict);
            return out;
        },
        py::arg("ring"), py::arg("codim"), py::arg("q"), py::arg("seed") = 1);
    m.def(
        "residue_matrix_check",
        [](const std::vector<int>& e, int m_sub) {
            auto rep = residue_matrix_check(e, m_sub);
            py::dict out;
            out["j_size"] = rep.j_size;
            out["identity"] = rep.identity;
            out["verdict"] = verdict_str(rep.verdict);
            return out;
        },
        py::arg("e"), py::arg("m"));
    m.def("griffiths_hypersurface", &griffiths_hypersurface, py::arg("n"), py::arg("d"),
          py::arg("q"));
}
