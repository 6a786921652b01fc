// Copyright 2026 The noisyot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "noisyot/bounds.hpp"
#include "noisyot/entstat.hpp"
#include "noisyot/protocol.hpp"
#include "noisyot/uncertainty.hpp"

namespace py = pybind11;
using namespace noisyot;

namespace {

CMat mat_from_rows(const std::vector<std::vector<cplx>>& rows) {
  return CMat::from_rows(rows);
}

std::vector<std::vector<cplx>> mat_to_rows(const CMat& m) {
  std::vector<std::vector<cplx>> rows(m.dim(), std::vector<cplx>(m.dim()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

QubitBasis basis_from_str(const std::string& s) {
  return qubit_basis_from_string(s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "oblivious transfer under noisy quantum storage";

  py::register_exception<parameter_error>(m, "ParameterError",
                                          PyExc_ValueError);
  py::register_exception<validation_error>(m, "ValidationError",
                                           PyExc_ValueError);
  py::register_exception<unsupported_error>(m, "UnsupportedError",
                                            PyExc_RuntimeError);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](const std::vector<std::vector<cplx>>& rows) {
             return DensityMatrix(mat_from_rows(rows));
           }),
           py::arg("entries"))
      .def_static("pure", &DensityMatrix::pure, py::arg("amplitudes"))
      .def_static("diagonal", &DensityMatrix::diagonal, py::arg("probs"))
      .def_static("maximally_mixed", &DensityMatrix::maximally_mixed,
                  py::arg("dim"))
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def("entries",
           [](const DensityMatrix& rho) { return mat_to_rows(rho.mat()); });

  m.def(
      "bb84_state",
      [](int x, const std::string& basis) {
        return bb84_state(x, basis_from_str(basis));
      },
      py::arg("x"), py::arg("basis"));
  m.def("depolarize", &depolarize, py::arg("rho"), py::arg("r"));
  m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"));
  m.def("trace_distance", &trace_distance, py::arg("rho"), py::arg("sigma"));
  m.def("fidelity", &fidelity, py::arg("rho"), py::arg("sigma"));
  m.def("c_distance", &c_distance, py::arg("rho"), py::arg("sigma"));
  m.def("binary_entropy", &binary_entropy, py::arg("p"));
  m.def(
      "binary_entropy_inv",
      [](double y, const std::string& branch) {
        if (branch == "lower") return binary_entropy_inv(y, EntropyBranch::lower);
        if (branch == "upper") return binary_entropy_inv(y, EntropyBranch::upper);
        throw parameter_error("branch must be lower or upper");
      },
      py::arg("y"), py::arg("branch"));

  py::class_<CqState>(m, "CqState")
      .def(py::init<std::vector<double>, std::vector<DensityMatrix>>(),
           py::arg("probs"), py::arg("conditionals"))
      .def_property_readonly("arity", &CqState::arity)
      .def_property_readonly("dim_e", &CqState::dim_e);

  m.def("helstrom_guess_prob", &helstrom_guess_prob, py::arg("p0"),
        py::arg("rho0"), py::arg("p1"), py::arg("rho1"));
  m.def("guess_prob_cq", &guess_prob_cq, py::arg("state"));
  m.def("guess_prob_dual_sdp", &guess_prob_dual_sdp, py::arg("state"));
  m.def("min_entropy_cq", &min_entropy_cq, py::arg("state"));
  m.def("non_uniformity", &non_uniformity, py::arg("state"));
  m.def("pa_bound", &pa_bound, py::arg("hmin"), py::arg("ell"), py::arg("eps"));
  m.def(
      "aep_lower_bound",
      [](long long n, double eps, int dim_x,
         const std::vector<double>& entropies) {
        return aep_lower_bound(BoundParams(n, eps, dim_x), entropies);
      },
      py::arg("n"), py::arg("eps"), py::arg("dim_x"), py::arg("entropies"));
  m.def(
      "split_index",
      [](const std::vector<double>& entropies) {
        const SplitResult res = split_index(entropies);
        return py::make_tuple(res.index, res.guaranteed_bits);
      },
      py::arg("branch_entropies"));
  m.def("chernoff_tail", &chernoff_tail, py::arg("n"), py::arg("eps"));

  py::class_<MeasurementOperator>(m, "MeasurementOperator")
      .def(py::init<double, double, double>(), py::arg("alpha"),
           py::arg("axis_x"), py::arg("axis_z"))
      .def_property_readonly("alpha", &MeasurementOperator::alpha)
      .def_property_readonly("beta", &MeasurementOperator::beta)
      .def("matrix", [](const MeasurementOperator& f) {
        return mat_to_rows(f.matrix());
      });

  m.def(
      "cost_C",
      [](double alpha, double axis_x, double axis_z, double r) {
        return cost_C(MeasurementOperator(alpha, axis_x, axis_z), r);
      },
      py::arg("alpha"), py::arg("axis_x"), py::arg("axis_z"), py::arg("r"));
  m.def(
      "cost_B_orbit",
      [](double alpha, double axis_x, double axis_z, double r) {
        return cost_B(OrbitMeasurement(MeasurementOperator(alpha, axis_x,
                                                           axis_z)),
                      r);
      },
      py::arg("alpha"), py::arg("axis_x"), py::arg("axis_z"), py::arg("r"));
  m.def("r_hat", &r_hat);
  m.def("t_closed_form", &t_closed_form, py::arg("r"));
  m.def(
      "t_numeric",
      [](double r) {
        const NumericMin res = t_numeric(r);
        return py::make_tuple(res.min_bits, res.argmin_alpha,
                              py::make_tuple(res.argmin_axis_x,
                                             res.argmin_axis_z));
      },
      py::arg("r"));

  auto report_to_dict = [](const SecurityReport& rep) {
    py::dict d;
    d["ell_max"] = rep.ell_max;
    d["delta"] = rep.delta;
    d["secure"] = rep.secure;
    d["margin_bits"] = rep.margin_bits;
    d["regime"] = to_string(rep.regime);
    return d;
  };
  m.def(
      "ell_ideal",
      [report_to_dict](long long n, double eps, double t) {
        return report_to_dict(ell_ideal(n, eps, t));
      },
      py::arg("n"), py::arg("eps"), py::arg("t"));
  m.def(
      "ell_robust",
      [report_to_dict](long long n, double eps, double t, double p_error,
                       double p_erase) {
        return report_to_dict(ell_robust(n, eps, t, p_error, p_erase));
      },
      py::arg("n"), py::arg("eps"), py::arg("t"), py::arg("p_error"),
      py::arg("p_erase"));
  m.def(
      "secure_predicate",
      [](double r, double p_error) {
        const SecureVerdict v = secure_predicate(r, p_error);
        return py::make_tuple(v.secure, to_string(v.regime));
      },
      py::arg("r"), py::arg("p_error"));
  m.def("qber_threshold", &qber_threshold);
  m.def(
      "ident_security",
      [](double t, long long d, long long m_words, long long ell) {
        const IdentReport rep = ident_security(t, d, m_words, ell);
        py::dict out;
        out["eps_prime"] = rep.eps_prime;
        out["exponent"] = rep.exponent;
        out["secure"] = rep.secure;
        return out;
      },
      py::arg("t"), py::arg("d"), py::arg("m"), py::arg("ell"));
  m.def(
      "abort_interval",
      [](long long n, double p_erase, double eps) {
        const AbortInterval iv = abort_interval(n, p_erase, eps);
        return py::make_tuple(iv.lo, iv.hi);
      },
      py::arg("n"), py::arg("p_erase"), py::arg("eps"));

  m.def(
      "toeplitz_hash",
      [](const std::vector<int>& seed, const std::vector<int>& x, int n_out) {
        Bits seed_bits(seed.begin(), seed.end());
        Bits x_bits(x.begin(), x.end());
        const ToeplitzHash h(static_cast<int>(x.size()), n_out, seed_bits);
        const Bits out = h.apply(x_bits);
        return std::vector<int>(out.begin(), out.end());
      },
      py::arg("seed"), py::arg("x"), py::arg("n_out"));

  m.def(
      "simulate",
      [](int n, int ell, double eps, double p_error, double p_erase, double r,
         const std::string& strategy, int trials, std::uint64_t seed,
         bool exact) {
        ProtocolParams params;
        params.n = n;
        params.ell = ell;
        params.eps = eps;
        params.channel = {p_error, p_erase};
        params.storage_r = r;
        params.rng_seed = seed;
        const SimReport rep = simulate(
            params, AttackStrategy::from_name(strategy, r), trials, exact);
        py::dict out;
        out["correctness_rate"] = rep.correctness_rate;
        out["abort_rate"] = rep.abort_rate;
        out["per_bit_guess_analytic"] = rep.per_bit_guess_analytic;
        out["per_bit_guess_empirical"] = rep.per_bit_guess_empirical;
        out["ell_certified"] = rep.ell_certified;
        if (rep.has_exact) {
          py::dict d;
          d["mean"] = rep.exact.mean;
          d["ci95"] = rep.exact.ci95;
          d["samples"] = rep.exact.samples;
          out["d_estimate"] = d;
        }
        return out;
      },
      py::arg("n"), py::arg("ell"), py::arg("eps"), py::arg("p_error") = 0.0,
      py::arg("p_erase") = 0.0, py::arg("r") = 1.0,
      py::arg("strategy") = "store", py::arg("trials") = 100,
      py::arg("seed") = 0, py::arg("exact") = false);
}
