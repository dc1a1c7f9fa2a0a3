#include "poslab/decide.hpp"
#include "poslab/errors.hpp"
#include "poslab/linalg.hpp"
#include "poslab/montecarlo.hpp"
#include "poslab/rational.hpp"
#include "poslab/report.hpp"
#include "poslab/rng.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace poslab;

namespace {

Rational rational_from_ints(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Probability that a random subspace of R^n contains a positive vector: "
              "exact values, Haar subspace sampling, LP positivity decisions, and "
              "Monte Carlo verification.";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<RankDeficient>(m, "RankDeficientError", PyExc_ArithmeticError);
    py::register_exception<SamplerFailure>(m, "SamplerFailureError", PyExc_RuntimeError);
    py::register_exception<NumericalFailure>(m, "NumericalFailureError", PyExc_RuntimeError);

    py::class_<Rational>(m, "Rational")
        .def(py::init(&rational_from_ints), py::arg("num"), py::arg("den") = 1)
        .def_property_readonly("num", [](const Rational& r) { return py::int_(py::str(r.num().str())); })
        .def_property_readonly("den", [](const Rational& r) { return py::int_(py::str(r.den().str())); })
        .def("__float__", &Rational::to_double)
        .def("__str__", &Rational::to_string)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.to_string() + ")"; })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__add__", [](const Rational& a, const Rational& b) { return a + b; });

    m.def("binomial",
          [](int n, int j) { return py::int_(py::str(binomial(n, j).str())); },
          py::arg("n"), py::arg("j"));
    m.def("p_exact", &p_exact, py::arg("n"), py::arg("k"));
    m.def("wendel_halfspace_prob", &wendel_halfspace_prob, py::arg("n"), py::arg("d"));
    m.def("to_decimal", &to_decimal, py::arg("r"), py::arg("digits"));
    m.def("p_table", [](int n_max) {
        py::list out;
        for (const auto& row : p_table(n_max)) {
            out.append(py::make_tuple(row.n, row.k, row.p, row.p_decimal));
        }
        return out;
    }, py::arg("n_max"));

    py::class_<RngStream>(m, "RngStream")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("next_u64", &RngStream::next_u64)
        .def("uniform", &RngStream::uniform)
        .def("normal", &RngStream::normal)
        .def("derive", &RngStream::derive, py::arg("i"));

    py::enum_<SubspaceMethod>(m, "SubspaceMethod")
        .value("KERNEL", SubspaceMethod::kKernel)
        .value("SPAN", SubspaceMethod::kSpan);

    py::class_<SubspaceBasis>(m, "SubspaceBasis")
        .def_static("make", &SubspaceBasis::make, py::arg("basis"))
        .def_readonly("n", &SubspaceBasis::n)
        .def_readonly("k", &SubspaceBasis::k)
        .def_readonly("basis", &SubspaceBasis::basis)
        .def("projector", &SubspaceBasis::projector);

    m.def("gaussian_matrix", &gaussian_matrix, py::arg("rows"), py::arg("cols"), py::arg("rng"));
    m.def("orthonormal_columns", &orthonormal_columns, py::arg("m"));
    m.def("kernel_basis", &kernel_basis, py::arg("a"));
    m.def("complement", &complement, py::arg("b"));
    m.def("random_orthogonal", &random_orthogonal, py::arg("n"), py::arg("rng"));
    m.def("haar_subspace", &haar_subspace,
          py::arg("n"), py::arg("k"), py::arg("rng"), py::arg("method"));

    py::class_<PointCloud>(m, "PointCloud")
        .def_static("make", &PointCloud::make, py::arg("points"))
        .def_readonly("count", &PointCloud::count)
        .def_readonly("dim", &PointCloud::dim)
        .def_readonly("points", &PointCloud::points);

    py::class_<Decision>(m, "Decision")
        .def_readonly("feasible", &Decision::feasible)
        .def_readonly("certificate", &Decision::certificate)
        .def_readonly("margin", &Decision::margin)
        .def_readonly("boundary", &Decision::boundary);

    m.def("contains_positive", &contains_positive,
          py::arg("b"), py::arg("tol") = kDefaultTol);
    m.def("contains_strictly_positive", &contains_strictly_positive,
          py::arg("b"), py::arg("tol") = kDefaultTol);
    m.def("hull_contains_origin", &hull_contains_origin,
          py::arg("p"), py::arg("tol") = kDefaultTol);
    m.def("sign_oracle_line", &sign_oracle_line, py::arg("v"));
    m.def("sign_oracle_hyperplane", &sign_oracle_hyperplane, py::arg("a"));

    py::enum_<EstimateMethod>(m, "EstimateMethod")
        .value("KERNEL", EstimateMethod::kKernel)
        .value("SPAN", EstimateMethod::kSpan)
        .value("HULL", EstimateMethod::kHull);

    py::class_<Estimate>(m, "Estimate")
        .def_readonly("n", &Estimate::n)
        .def_readonly("k", &Estimate::k)
        .def_property_readonly("method", [](const Estimate& e) { return method_name(e.method); })
        .def_readonly("trials", &Estimate::trials)
        .def_readonly("successes", &Estimate::successes)
        .def_readonly("p_hat", &Estimate::p_hat)
        .def_readonly("ci_low", &Estimate::ci_low)
        .def_readonly("ci_high", &Estimate::ci_high)
        .def_readonly("exact", &Estimate::exact)
        .def_readonly("z_score", &Estimate::z_score)
        .def_readonly("seed", &Estimate::seed)
        .def_readonly("boundary_count", &Estimate::boundary_count)
        .def("to_json", [](const Estimate& e) { return estimate_json(e); });

    py::class_<DualityReport>(m, "DualityReport")
        .def_readonly("n", &DualityReport::n)
        .def_readonly("k", &DualityReport::k)
        .def_readonly("trials", &DualityReport::trials)
        .def_readonly("seed", &DualityReport::seed)
        .def_readonly("xor_holds", &DualityReport::xor_holds)
        .def_readonly("xor_fails", &DualityReport::xor_fails)
        .def_readonly("boundary", &DualityReport::boundary)
        .def_readonly("strict_dual_holds", &DualityReport::strict_dual_holds)
        .def_readonly("strict_dual_fails", &DualityReport::strict_dual_fails)
        .def("to_json", [](const DualityReport& r) { return duality_json(r); });

    m.def("wilson_interval", &wilson_interval,
          py::arg("successes"), py::arg("trials"), py::arg("z") = 1.96);
    m.def("estimate",
          [](int n, int k, std::int64_t trials, std::uint64_t seed,
             const std::string& method, double z, int threads) {
              py::gil_scoped_release release;
              return estimate(n, k, trials, seed, parse_method(method), z, threads);
          },
          py::arg("n"), py::arg("k"), py::arg("trials"), py::arg("seed") = 0,
          py::arg("method") = "kernel", py::arg("z") = 1.96, py::arg("threads") = 0);
    m.def("duality_audit",
          [](int n, int k, std::int64_t trials, std::uint64_t seed, int threads) {
              py::gil_scoped_release release;
              return duality_audit(n, k, trials, seed, threads);
          },
          py::arg("n"), py::arg("k"), py::arg("trials"), py::arg("seed") = 0,
          py::arg("threads") = 0);
}
