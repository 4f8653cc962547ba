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

#ifndef QPKE_QSIM_STATE_HPP_
#define QPKE_QSIM_STATE_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpke/bits.hpp"
#include "qpke/errors.hpp"

namespace qpke::qsim {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr int kDefaultMaxQubits = 20;
inline constexpr int kDefaultMaxDensityQubits = 10;

namespace detail {

inline int env_int(const char* name, int fallback) {
  if (const char* v = std::getenv(name); v != nullptr && *v != '\0') {
    char* end = nullptr;
    const long parsed = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && parsed > 0 && parsed <= 30) {
      return static_cast<int>(parsed);
    }
  }
  return fallback;
}

}  // namespace detail

// Largest pure state the simulator will allocate. QPKE_QMAX overrides.
inline int max_qubits() {
  static const int q = detail::env_int("QPKE_QMAX", kDefaultMaxQubits);
  return q;
}

// Largest density matrix (in qubits) the exact oracles will build.
// QPKE_DM_QMAX overrides.
inline int max_density_qubits() {
  static const int q =
      detail::env_int("QPKE_DM_QMAX", kDefaultMaxDensityQubits);
  return q;
}

inline void require_capacity(int qubits, const char* what) {
  if (qubits < 1 || qubits > max_qubits()) {
    throw CapacityError(std::string(what) + ": " + std::to_string(qubits) +
                        " qubits outside [1, " + std::to_string(max_qubits()) +
                        "]");
  }
}

// Contiguous register [offset, offset + width) inside a state.
struct WireRange {
  int offset = 0;
  int width = 0;

  constexpr int end() const { return offset + width; }

  constexpr std::uint64_t mask() const { return Bits::mask(width) << offset; }

  constexpr std::uint64_t extract(std::uint64_t index) const {
    return (index >> offset) & Bits::mask(width);
  }

  constexpr std::uint64_t with(std::uint64_t index, std::uint64_t v) const {
    return (index & ~mask()) | ((v & Bits::mask(width)) << offset);
  }

  void validate(int qubit_count) const {
    if (offset < 0 || width < 0 || end() > qubit_count) {
      throw RangeError("wire range [" + std::to_string(offset) + ", " +
                       std::to_string(end()) + ") outside a " +
                       std::to_string(qubit_count) + "-qubit state");
    }
  }

  constexpr bool overlaps(const WireRange& other) const {
    return width > 0 && other.width > 0 && offset < other.end() &&
           other.offset < end();
  }

  friend constexpr bool operator==(const WireRange&,
                                   const WireRange&) = default;
};

// Normalized pure state over q qubits; qubit 0 is the least significant bit of
// the basis index. Values are immutable once built: operations return new
// states.
class PureState {
 public:
  static PureState basis(int qubits, std::uint64_t index) {
    require_capacity(qubits, "basis state");
    std::vector<Amplitude> amps(std::size_t{1} << qubits);
    if (index >= amps.size()) throw RangeError("basis index out of range");
    amps[index] = 1.0;
    return PureState(qubits, std::move(amps));
  }

  static PureState basis(const Bits& b) { return basis(b.width(), b.value()); }

  // Takes ownership of `amps`. With normalize=false the vector must already
  // have unit norm.
  static PureState from_amplitudes(int qubits, std::vector<Amplitude> amps,
                                   bool normalize = false) {
    require_capacity(qubits, "state");
    if (amps.size() != (std::size_t{1} << qubits)) {
      throw DimensionError("amplitude vector length " +
                           std::to_string(amps.size()) + " is not 2^" +
                           std::to_string(qubits));
    }
    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    if (normalize) {
      if (n2 <= 0.0) throw EmptyProjectionError("zero vector");
      const double s = 1.0 / std::sqrt(n2);
      for (auto& a : amps) a *= s;
    } else if (std::abs(n2 - 1.0) > kNormTolerance) {
      throw DimensionError("amplitudes are not normalized (norm^2 = " +
                           std::to_string(n2) + ")");
    }
    return PureState(qubits, std::move(amps));
  }

  int qubit_count() const { return qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude& amplitude(std::uint64_t index) const { return amps_[index]; }

  double norm_squared() const {
    double n2 = 0.0;
    for (const auto& a : amps_) n2 += std::norm(a);
    return n2;
  }

  WireRange all_wires() const { return {0, qubits_}; }

 private:
  PureState(int qubits, std::vector<Amplitude> amps)
      : qubits_(qubits), amps_(std::move(amps)) {}

  int qubits_ = 0;
  std::vector<Amplitude> amps_;
};

inline void require_same_dimension(const PureState& a, const PureState& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw DimensionError("states have " + std::to_string(a.qubit_count()) +
                         " and " + std::to_string(b.qubit_count()) + " qubits");
  }
}

inline Amplitude inner_product(const PureState& a, const PureState& b) {
  require_same_dimension(a, b);
  Amplitude acc = 0.0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

}  // namespace qpke::qsim

#endif  // QPKE_QSIM_STATE_HPP_
