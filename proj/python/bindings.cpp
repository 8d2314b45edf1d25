#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "entmeas/entanglement_matrix.hpp"
#include "entmeas/errors.hpp"
#include "entmeas/info_metrics.hpp"
#include "entmeas/measurement_superop.hpp"
#include "entmeas/operator_core.hpp"
#include "entmeas/quantum_state.hpp"
#include "entmeas/spectral_analysis.hpp"
#include "entmeas/transfer_experiment.hpp"

namespace py = pybind11;
using namespace entmeas;

namespace {

DensityMatrix density(const ComplexMatrix& m, std::vector<std::size_t> dims = {}) {
  if (dims.empty()) return DensityMatrix::from_matrix(m);
  return DensityMatrix::from_matrix(m, std::move(dims));
}

py::dict spectral_dict(const SpectralReport& r) {
  py::list eigenvalues;
  for (const auto& c : r.spectrum.eigenvalues) {
    eigenvalues.append(py::dict(py::arg("value") = c.value, py::arg("algebraic") = c.algebraic,
                                py::arg("geometric") = c.geometric));
  }
  py::list witnesses;
  for (const auto& w : r.jordan_chain_witnesses) witnesses.append(py::make_tuple(w.vector, w.image));
  return py::dict(py::arg("eigenvalues") = eigenvalues,
                  py::arg("unit_eigenspace_dim") = r.unit_eigenspace_dim,
                  py::arg("zero_geometric_dim") = r.zero_geometric_dim,
                  py::arg("zero_algebraic_dim") = r.zero_algebraic_dim,
                  py::arg("defective") = r.defective,
                  py::arg("jordan_chain_witnesses") = witnesses);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entangling quantum measurement superoperators";

  auto base = py::register_exception<std::invalid_argument>(m, "EntmeasError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());

  py::class_<Superoperator>(m, "Superoperator")
      .def_property_readonly("matrix", &Superoperator::matrix)
      .def_property_readonly("input_dims", &Superoperator::input_dims)
      .def_property_readonly("output_dims", &Superoperator::output_dims)
      .def("__call__", &Superoperator::operator(), py::arg("operator"))
      .def("__repr__", [](const Superoperator& s) {
        return "<Superoperator " + std::to_string(s.input_dim()) + " -> " +
               std::to_string(s.output_dim()) + ">";
      });

  // operator core
  m.def("tensor", py::overload_cast<const ComplexMatrix&, const ComplexMatrix&>(&tensor));
  m.def("partial_trace",
        [](const ComplexMatrix& x, std::size_t d1, std::size_t d2, const std::string& keep) {
          return partial_trace(x, d1, d2, keep == "second" ? Keep::kSecond : Keep::kFirst);
        },
        py::arg("matrix"), py::arg("d_first"), py::arg("d_second"), py::arg("keep") = "first");
  m.def("eig_hermitian", [](const ComplexMatrix& x) {
    auto e = eig_hermitian(x);
    return py::make_tuple(e.eigenvalues, e.eigenvectors);
  });
  m.def("hs_inner", &hs_inner);

  // entanglement matrix
  m.def("validate_entanglement_matrix",
        [](const ComplexMatrix& r) { return validate_entanglement_matrix(r).matrix(); },
        "Returns the matrix if it is a valid entanglement matrix, raises ValidationError otherwise");
  m.def("qubit_family", [](Complex q) { return qubit_family(q).matrix(); }, py::arg("q"));
  m.def("normalized_spectrum",
        [](const ComplexMatrix& r) { return normalized_spectrum(EntanglementMatrix(r)); });

  // superoperators
  m.def("entangling_measurement",
        [](const ComplexMatrix& r, bool validate) {
          return entangling_measurement(validate ? EntanglementMatrix(r)
                                                 : EntanglementMatrix::unchecked(r));
        },
        py::arg("r"), py::arg("validate") = true);
  m.def("standard_measurement",
        [](std::size_t d) { return standard_measurement(ProjectorPartition::complete(d), d); },
        py::arg("d"));
  m.def("duplication_measurement", &duplication_measurement, py::arg("d"));
  m.def("compose", &compose);
  m.def("choi_matrix", &choi_matrix);
  m.def("is_completely_positive", &is_completely_positive);
  m.def("measure_product",
        [](const ComplexMatrix& r, const ComplexMatrix& object, const ComplexMatrix& pointer) {
          return measure_product(EntanglementMatrix(r), density(object), density(pointer)).matrix();
        },
        py::arg("r"), py::arg("rho_a"), py::arg("rho_m"));
  m.def("joint_output_decomposition",
        [](const ComplexMatrix& r, const ComplexVector& psi) {
          py::list out;
          for (const auto& c : joint_output_decomposition(EntanglementMatrix(r), PureState(psi))) {
            out.append(py::make_tuple(c.weight, c.coefficients, c.joint));
          }
          return out;
        },
        py::arg("r"), py::arg("psi"));

  // spectral analysis
  m.def("spectral_report", [](const Superoperator& s) { return spectral_dict(spectral_report(s)); });
  m.def("canonical_qubit_basis", &canonical_qubit_basis);
  m.def("matrix_in_eigen_basis", &matrix_in_eigen_basis, py::arg("superoperator"),
        py::arg("basis"));

  // information metrics
  m.def("von_neumann_entropy", [](const ComplexMatrix& rho) {
    return von_neumann_entropy(density(rho));
  });
  m.def("entanglement_after_measurement", [](const ComplexMatrix& r, const ComplexMatrix& rho) {
    return entanglement_after_measurement(EntanglementMatrix(r), density(rho));
  });
  m.def("two_time_channel", [](const ComplexMatrix& r, const ComplexMatrix& pointer) {
    return two_time_channel(EntanglementMatrix(r), density(pointer));
  });
  m.def("coherent_information", [](const Superoperator& n, const ComplexMatrix& rho) {
    return coherent_information(n, density(rho));
  });
  m.def("mutual_information",
        [](const ComplexMatrix& rho, std::vector<std::size_t> dims) {
          return mutual_information(density(rho, std::move(dims)));
        },
        py::arg("rho"), py::arg("dims"));
  m.def("negativity",
        [](const ComplexMatrix& rho, std::vector<std::size_t> dims) {
          return negativity(density(rho, std::move(dims)));
        },
        py::arg("rho"), py::arg("dims"));

  // transfer experiment
  m.def("run_transfer",
        [](const ComplexMatrix& joint, std::vector<std::size_t> dims, const ComplexMatrix& r_a,
           const ComplexMatrix& r_b, const ComplexMatrix& pointer_m,
           const ComplexMatrix& pointer_n, const std::string& convention) {
          const auto c = parse_convention(convention);
          if (!c) throw std::invalid_argument("convention must be 'prose' or 'printed'");
          TransferScenario s{density(joint, std::move(dims)), EntanglementMatrix(r_a),
                             EntanglementMatrix(r_b), density(pointer_m), density(pointer_n), *c};
          const auto r = run_transfer(s);
          return py::dict(py::arg("rho_mn") = r.rho_mn.matrix(),
                          py::arg("negativity") = r.negativity,
                          py::arg("mutual_information") = r.mutual_information,
                          py::arg("is_product") = r.is_product,
                          py::arg("is_diagonal") = r.is_diagonal);
        },
        py::arg("rho_ab"), py::arg("dims"), py::arg("r_a"), py::arg("r_b"), py::arg("rho_m"),
        py::arg("rho_n"), py::arg("convention") = "prose");

  m.attr("__version__") = "0.1.0";
}
