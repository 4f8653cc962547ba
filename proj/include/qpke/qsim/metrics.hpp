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

#ifndef QPKE_QSIM_METRICS_HPP_
#define QPKE_QSIM_METRICS_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <variant>

#include "qpke/errors.hpp"
#include "qpke/qsim/density.hpp"
#include "qpke/qsim/state.hpp"

namespace qpke::qsim {

// Either kind of quantum object a ciphertext or a tester may carry.
using QuantumState = std::variant<PureState, DensityMatrix>;

inline int qubit_count(const QuantumState& s) {
  return std::visit([](const auto& v) { return v.qubit_count(); }, s);
}

namespace detail {

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

inline ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  Eigen::VectorXd ev = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * ev.asDiagonal() *
         solver.eigenvectors().adjoint();
}

}  // namespace detail

// |<a|b>|^2.
inline double fidelity(const PureState& a, const PureState& b) {
  return detail::clamp01(std::norm(inner_product(a, b)));
}

// <a| rho |a>.
inline double fidelity(const PureState& a, const DensityMatrix& rho) {
  if (a.qubit_count() != rho.qubit_count()) {
    throw DimensionError("fidelity of states with different dimensions");
  }
  return detail::clamp01(rho.expectation(a));
}

inline double fidelity(const DensityMatrix& rho, const PureState& a) {
  return fidelity(a, rho);
}

// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
inline double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.qubit_count() != sigma.qubit_count()) {
    throw DimensionError("fidelity of states with different dimensions");
  }
  const ComplexMatrix s = detail::psd_sqrt(rho.matrix());
  const ComplexMatrix inner = s * sigma.matrix() * s;
  const ComplexMatrix h = 0.5 * (inner + inner.adjoint());
  const double t = hermitian_eigenvalues(h).cwiseMax(0.0).cwiseSqrt().sum();
  return detail::clamp01(t * t);
}

inline double fidelity(const QuantumState& a, const QuantumState& b) {
  return std::visit([](const auto& x, const auto& y) { return fidelity(x, y); },
                    a, b);
}

// sqrt(1 - |<a|b>|^2) for pure states, taken as the norm of the part of b
// orthogonal to a so that nearly equal states keep full precision.
inline double trace_distance(const PureState& a, const PureState& b) {
  require_same_dimension(a, b);
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  const std::complex<double> c = inner_product(a, b) / na;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r += std::norm(y[i] - c * x[i]);
  return std::sqrt(detail::clamp01(r / nb));
}

// Half the trace norm of the difference.
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw DimensionError("trace distance of states with different dimensions");
  }
  return detail::clamp01(0.5 * trace_norm(a.matrix() - b.matrix()));
}

inline double trace_distance(const PureState& a, const DensityMatrix& b) {
  return trace_distance(DensityMatrix::from_pure(a), b);
}

inline double trace_distance(const DensityMatrix& a, const PureState& b) {
  return trace_distance(a, DensityMatrix::from_pure(b));
}

inline double trace_distance(const QuantumState& a, const QuantumState& b) {
  return std::visit(
      [](const auto& x, const auto& y) { return trace_distance(x, y); }, a, b);
}

}  // namespace qpke::qsim

#endif  // QPKE_QSIM_METRICS_HPP_
