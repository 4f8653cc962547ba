// Copyright 2026 The qpke-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPKE_QSIM_DENSITY_HPP_
#define QPKE_QSIM_DENSITY_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <utility>

#include "qpke/errors.hpp"
#include "qpke/qsim/state.hpp"

namespace qpke::qsim {

using ComplexMatrix = Eigen::MatrixXcd;

inline void require_density_capacity(int qubits, const char* what) {
  if (qubits < 1 || qubits > max_density_qubits()) {
    throw CapacityError(std::string(what) + ": " + std::to_string(qubits) +
                        " qubits exceed the density-matrix limit of " +
                        std::to_string(max_density_qubits()));
  }
}

// Eigenvalues of a Hermitian matrix, ascending.
inline Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// Sum of absolute eigenvalues of a Hermitian matrix.
inline double trace_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  return hermitian_eigenvalues(m).cwiseAbs().sum();
}

// Hermitian, unit-trace, positive semidefinite matrix on q qubits.
class DensityMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  static DensityMatrix from_matrix(int qubits, ComplexMatrix m) {
    require_density_capacity(qubits, "density matrix");
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    if (m.rows() != dim || m.cols() != dim) {
      throw DimensionError("density matrix must be 2^q x 2^q");
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kTolerance) {
      throw DimensionError("density matrix is not Hermitian");
    }
    if (std::abs(m.trace() - std::complex<double>(1.0)) > kTolerance) {
      throw DimensionError("density matrix trace is not 1");
    }
    if (hermitian_eigenvalues(m).minCoeff() < -kTolerance) {
      throw DimensionError("density matrix has a negative eigenvalue");
    }
    return DensityMatrix(qubits, std::move(m));
  }

  static DensityMatrix from_pure(const PureState& s) {
    require_density_capacity(s.qubit_count(), "density matrix");
    const auto a = s.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> v(a.data(),
                                         static_cast<Eigen::Index>(a.size()));
    return DensityMatrix(s.qubit_count(), v * v.adjoint());
  }

  // I / 2^q.
  static DensityMatrix maximally_mixed(int qubits) {
    require_density_capacity(qubits, "density matrix");
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
    m /= static_cast<double>(dim);
    return DensityMatrix(qubits, std::move(m));
  }

  int qubit_count() const { return qubits_; }
  Eigen::Index dimension() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

  // <psi| rho |psi>.
  double expectation(const PureState& s) const {
    if (s.qubit_count() != qubits_) {
      throw DimensionError("state and density matrix dimensions differ");
    }
    const auto a = s.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> v(a.data(),
                                         static_cast<Eigen::Index>(a.size()));
    return (v.adjoint() * matrix_ * v)(0, 0).real();
  }

 private:
  DensityMatrix(int qubits, ComplexMatrix m)
      : qubits_(qubits), matrix_(std::move(m)) {}

  int qubits_ = 0;
  ComplexMatrix matrix_;
};

}  // namespace qpke::qsim

#endif  // QPKE_QSIM_DENSITY_HPP_
