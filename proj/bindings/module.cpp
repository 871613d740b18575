#include <pybind11/pybind11.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>

#include "hupstab/json_io.hpp"

namespace py = pybind11;
using namespace hupstab;

namespace {

py::dict energy_dict(const EnergyVector& e) {
    py::dict d;
    d["l2"] = e.l2;
    d["grad"] = e.grad;
    d["lap"] = e.lap;
    d["x2_l2"] = e.x2_l2;
    d["x2_grad"] = e.x2_grad;
    d["dim"] = e.dim;
    return d;
}

py::dict deficit_dict(const DeficitReport& r) {
    py::dict d = energy_dict(r.energies);
    d["theta1"] = r.theta1;
    d["theta2"] = r.theta2;
    d["theta3"] = r.theta3;
    d["delta1"] = r.delta1;
    d["delta2"] = r.delta2;
    d["lambda_first"] = r.lambda_first;
    d["lambda_second"] = r.lambda_second;
    return d;
}

py::dict distance_dict(const DistanceResult& r) {
    py::dict d;
    d["value_sq"] = r.value_sq;
    d["alpha_star"] = r.alpha_star;
    d["beta_star"] = r.beta_star;
    d["metric"] = metric_name(r.metric);
    d["converged"] = r.converged;
    d["evaluations"] = r.evaluations;
    return d;
}

py::dict estimate_dict(const StabilityEstimate& e) {
    py::dict d;
    d["N"] = e.N;
    d["k"] = e.k;
    d["basis_size"] = e.basis_size;
    d["scale"] = e.scale;
    d["value"] = e.value;
    d["lower"] = e.lower;
    d["upper"] = e.upper;
    d["gaussian_quotient"] = e.gaussian_quotient;
    d["reference"] = e.reference;
    d["converged"] = e.converged;
    d["diagnostics"] = e.diagnostics;
    if (!e.certificate.empty()) {
        d["certificate"] = e.certificate;
        d["certificate_ok"] = e.certificate_ok;
    }
    return d;
}

py::dict check_dict(const CheckResult& c) {
    py::dict d;
    d["name"] = c.name;
    d["kind"] = check_kind_name(c.kind);
    d["residual"] = c.residual;
    d["tolerance"] = c.tolerance;
    d["passed"] = c.passed;
    d["paper_tag"] = c.paper_tag;
    if (c.witness) d["witness"] = *c.witness;
    return d;
}

py::list report_list(const VerifyReport& r) {
    py::list out;
    for (const auto& c : r.checks) out.append(check_dict(c));
    return out;
}

} // namespace

PYBIND11_MODULE(_hupstab, m) {
    m.doc() = "stability laboratory for the second-order uncertainty principle";

    py::class_<PolyGaussFn>(m, "PolyGaussFn")
        .def_static("from_json", &pg_from_json, py::arg("spec"))
        .def_static("gaussian", &PolyGaussFn::gaussian, py::arg("alpha"), py::arg("beta"),
                    "alpha * exp(-beta/2 |x|^2)")
        .def("to_json", &pg_to_json)
        .def("__call__", &PolyGaussFn::evaluate, py::arg("r"))
        .def("is_zero", &PolyGaussFn::is_zero);

    m.def("energies",
          [](const PolyGaussFn& u, int N) { return energy_dict(energies(u, N)); },
          py::arg("u"), py::arg("N"));
    m.def("deficits",
          [](const PolyGaussFn& u, int N) { return deficit_dict(deficits(u, N)); },
          py::arg("u"), py::arg("N"));
    m.def("hup_identity_rhs", &hup_identity_rhs, py::arg("u"), py::arg("N"));
    m.def("hessian_gaussian_energy", &hessian_gaussian_energy, py::arg("v"), py::arg("N"));
    m.def("radial_gaussian_poincare_gap", &radial_gaussian_poincare_gap,
          py::arg("v"), py::arg("N"));

    m.def("sphere_area", &sphere_area, py::arg("d"));
    m.def("eigenvalue_ck", &eigenvalue_ck, py::arg("k"), py::arg("N"));
    m.def("lower_bound", &lower_bound, py::arg("N"), py::arg("k"));
    m.def("k_of_n", &k_of_n, py::arg("N"));
    m.def("gaussian_quotient", &gaussian_quotient, py::arg("N"), py::arg("k"));

    m.def("dist_l2_to_hup",
          [](const PolyGaussFn& u, int N) { return distance_dict(dist_l2_to_hup(u, N)); },
          py::arg("u"), py::arg("N"));
    m.def("dist_grad_to_shup",
          [](const PolyGaussFn& u, int N) { return distance_dict(dist_grad_to_shup(u, N)); },
          py::arg("u"), py::arg("N"));
    m.def("dist_grad_norm_matched",
          [](const PolyGaussFn& u, int N) {
              return distance_dict(dist_grad_norm_matched(u, N));
          },
          py::arg("u"), py::arg("N"));
    m.def("dist_vector_cfhup",
          [](const PolyGaussFn& u, int N, bool match_norm) {
              return distance_dict(dist_vector_cfhup(
                  u, N, match_norm ? VectorMetric::norm_matched : VectorMetric::l2));
          },
          py::arg("potential"), py::arg("N"), py::arg("match_norm") = false);
    m.def("dist_d2_partial",
          [](const std::string& separable_json) {
              return distance_dict(dist_d2_partial(separable_from_json(separable_json)));
          },
          py::arg("separable_json"));

    m.def("estimate_C",
          [](int N, int k) { return estimate_dict(estimate_C(N, k)); },
          py::arg("N"), py::arg("k"));
    m.def("estimate_C_N",
          [](int N, int kmax) { return estimate_dict(estimate_C_N(N, kmax)); },
          py::arg("N"), py::arg("kmax"));

    m.def("run_identity_suite",
          [](int N, std::uint64_t seed, int corpus_size, double tol) {
              IdentityOptions o;
              o.corpus_size = corpus_size;
              o.tol = tol;
              return report_list(run_identity_suite(N, seed, o));
          },
          py::arg("N"), py::arg("seed") = 0, py::arg("corpus_size") = 100,
          py::arg("tol") = 1e-9);
    m.def("run_inequality_suite",
          [](int N, std::uint64_t seed, int trials, double tol) {
              InequalityOptions o;
              o.trials = trials;
              o.tol = tol;
              return report_list(run_inequality_suite(N, seed, o));
          },
          py::arg("N"), py::arg("seed") = 0, py::arg("trials") = 200, py::arg("tol") = 1e-9);
    m.def("sharpness_probe",
          [](int N) { return check_dict(sharpness_probe(N)); }, py::arg("N"));
}
