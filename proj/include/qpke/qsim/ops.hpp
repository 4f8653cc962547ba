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

#ifndef QPKE_QSIM_OPS_HPP_
#define QPKE_QSIM_OPS_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpke/bits.hpp"
#include "qpke/errors.hpp"
#include "qpke/qsim/state.hpp"
#include "qpke/rng.hpp"

namespace qpke::qsim {

// 2^{-q/2} sum_x |x>.
inline PureState uniform_superposition(int qubits) {
  require_capacity(qubits, "uniform superposition");
  const std::size_t dim = std::size_t{1} << qubits;
  return PureState::from_amplitudes(
      qubits,
      std::vector<Amplitude>(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
}

// a on the low wires, b on the wires above it.
inline PureState tensor(const PureState& a, const PureState& b) {
  const int q = a.qubit_count() + b.qubit_count();
  require_capacity(q, "tensor product");
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  std::vector<Amplitude> out(std::size_t{1} << q);
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] == Amplitude{}) continue;
    const std::size_t base = j << a.qubit_count();
    for (std::size_t i = 0; i < x.size(); ++i) out[base + i] = x[i] * y[j];
  }
  return PureState::from_amplitudes(q, std::move(out));
}

// s^{(x) copies}.
inline PureState tensor_power(const PureState& s, int copies) {
  if (copies < 1) throw RangeError("tensor power needs at least one copy");
  PureState out = s;
  for (int i = 1; i < copies; ++i) out = tensor(out, s);
  return out;
}

// |x>|z> -> |x>|z xor f(x)> with x read from `in` and z from `out`.
// `f` maps Bits of width in.width to Bits of width out.width.
template <class Function>
PureState apply_function_oracle(const PureState& state, Function&& f,
                                WireRange in, WireRange out) {
  in.validate(state.qubit_count());
  out.validate(state.qubit_count());
  if (in.overlaps(out)) throw RangeError("oracle input and output overlap");
  const auto src = state.amplitudes();
  std::vector<Amplitude> dst(src.size());
  for (std::uint64_t idx = 0; idx < src.size(); ++idx) {
    if (src[idx] == Amplitude{}) continue;
    const Bits fx = f(Bits(in.extract(idx), in.width));
    if (fx.width() != out.width) {
      throw WidthError("oracle output has " + std::to_string(fx.width()) +
                       " bits, register has " + std::to_string(out.width));
    }
    dst[out.with(idx, out.extract(idx) ^ fx.value())] = src[idx];
  }
  return PureState::from_amplitudes(state.qubit_count(), std::move(dst));
}

// Multiplies the amplitude of |y> by (-1)^{g(y)}; g sees the `wires` register.
template <class Predicate>
PureState apply_phase_oracle(const PureState& state, Predicate&& g,
                             WireRange wires) {
  wires.validate(state.qubit_count());
  const auto src = state.amplitudes();
  std::vector<Amplitude> dst(src.begin(), src.end());
  for (std::uint64_t idx = 0; idx < dst.size(); ++idx) {
    if (dst[idx] == Amplitude{}) continue;
    if (g(Bits(wires.extract(idx), wires.width))) dst[idx] = -dst[idx];
  }
  return PureState::from_amplitudes(state.qubit_count(), std::move(dst));
}

template <class Predicate>
PureState apply_phase_oracle(const PureState& state, Predicate&& g) {
  return apply_phase_oracle(state, std::forward<Predicate>(g),
                            state.all_wires());
}

// sum_x a_x |x>  ->  sum_x a_x |x> (x) generate(x), with the generated
// register placed above the input. Every generated state must have the same
// width.
template <class Generator>
PureState controlled_generation(const PureState& input, Generator&& generate,
                                int output_qubits) {
  const int q = input.qubit_count() + output_qubits;
  require_capacity(q, "controlled generation");
  const auto src = input.amplitudes();
  std::vector<Amplitude> dst(std::size_t{1} << q);
  for (std::uint64_t x = 0; x < src.size(); ++x) {
    if (src[x] == Amplitude{}) continue;
    const PureState g = generate(Bits(x, input.qubit_count()));
    if (g.qubit_count() != output_qubits) {
      throw WidthError("generated state has the wrong number of qubits");
    }
    const auto ga = g.amplitudes();
    for (std::uint64_t y = 0; y < ga.size(); ++y) {
      dst[x | (y << input.qubit_count())] = src[x] * ga[y];
    }
  }
  return PureState::from_amplitudes(q, std::move(dst));
}

namespace detail {

inline std::vector<double> register_probabilities(const PureState& state,
                                                  WireRange wires) {
  std::vector<double> p(std::size_t{1} << wires.width, 0.0);
  const auto a = state.amplitudes();
  for (std::uint64_t idx = 0; idx < a.size(); ++idx) {
    p[wires.extract(idx)] += std::norm(a[idx]);
  }
  return p;
}

inline PureState project(const PureState& state, WireRange wires,
                         std::uint64_t outcome, double probability) {
  const auto a = state.amplitudes();
  std::vector<Amplitude> dst(a.size());
  const double s = 1.0 / std::sqrt(probability);
  for (std::uint64_t idx = 0; idx < a.size(); ++idx) {
    if (wires.extract(idx) == outcome) dst[idx] = a[idx] * s;
  }
  return PureState::from_amplitudes(state.qubit_count(), std::move(dst), true);
}

inline std::uint64_t sample_index(const std::vector<double>& p, Rng& rng) {
  double total = 0.0;
  for (double v : p) total += v;
  const double u = rng.uniform() * total;
  double acc = 0.0;
  std::uint64_t last_nonzero = 0;
  for (std::uint64_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    acc += p[i];
    last_nonzero = i;
    if (u < acc) return i;
  }
  return last_nonzero;
}

// Amplitudes of the wires outside `wires`, given that `wires` holds `outcome`.
inline std::vector<Amplitude> remainder_amplitudes(const PureState& state,
                                                   WireRange wires,
                                                   std::uint64_t outcome) {
  const int rest = state.qubit_count() - wires.width;
  std::vector<Amplitude> dst(std::size_t{1} << rest);
  const auto a = state.amplitudes();
  const std::uint64_t low_mask = Bits::mask(wires.offset);
  for (std::uint64_t r = 0; r < dst.size(); ++r) {
    const std::uint64_t low = r & low_mask;
    const std::uint64_t high = r >> wires.offset;
    const std::uint64_t idx =
        low | (outcome << wires.offset) | (high << wires.end());
    dst[r] = a[idx];
  }
  return dst;
}

}  // namespace detail

struct Measurement {
  Bits outcome;
  PureState post;
};

// Born-rule measurement of `wires` in the computational basis.
inline Measurement measure_computational(const PureState& state,
                                         WireRange wires, Rng& rng) {
  wires.validate(state.qubit_count());
  if (wires.offset == 0 && wires.width == state.qubit_count()) {
    // Whole register: the post-measurement state is a basis state.
    const auto a = state.amplitudes();
    const double u = rng.uniform();
    double acc = 0.0;
    std::uint64_t k = 0;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
      const double pi = std::norm(a[i]);
      if (pi <= 0.0) continue;
      k = i;
      acc += pi;
      if (u < acc) break;
    }
    return {Bits(k, wires.width), PureState::basis(wires.width, k)};
  }
  const auto p = detail::register_probabilities(state, wires);
  const std::uint64_t k = detail::sample_index(p, rng);
  if (!(p[k] > 0.0)) throw EmptyProjectionError("measurement on a zero state");
  return {Bits(k, wires.width), detail::project(state, wires, k, p[k])};
}

inline Measurement measure_computational(const PureState& state, Rng& rng) {
  return measure_computational(state, state.all_wires(), rng);
}

struct MeasurementBranch {
  Bits outcome;
  double probability = 0.0;
  PureState post;
};

// Every outcome of measuring `wires` with nonzero probability, in ascending
// order, with its exact probability and post-measurement state.
inline std::vector<MeasurementBranch> measurement_distribution(
    const PureState& state, WireRange wires) {
  wires.validate(state.qubit_count());
  const auto p = detail::register_probabilities(state, wires);
  std::vector<MeasurementBranch> out;
  for (std::uint64_t k = 0; k < p.size(); ++k) {
    if (p[k] > 0.0) {
      out.push_back(
          {Bits(k, wires.width), p[k], detail::project(state, wires, k, p[k])});
    }
  }
  return out;
}

// Exact outcome probabilities of measuring `wires`, indexed by outcome value.
inline std::vector<double> outcome_probabilities(const PureState& state,
                                                 WireRange wires) {
  wires.validate(state.qubit_count());
  return detail::register_probabilities(state, wires);
}

struct SplitMeasurement {
  Bits outcome;
  // State of the unmeasured wires (lower wires keep their order, higher ones
  // shift down). Empty when every wire was measured.
  std::optional<PureState> remainder;
};

// Measures `wires` and detaches them: the post-measurement state is always
// |outcome> (x) remainder.
inline SplitMeasurement measure_and_split(const PureState& state,
                                          WireRange wires, Rng& rng) {
  wires.validate(state.qubit_count());
  const auto p = detail::register_probabilities(state, wires);
  const std::uint64_t k = detail::sample_index(p, rng);
  if (!(p[k] > 0.0)) throw EmptyProjectionError("measurement on a zero state");
  SplitMeasurement out{Bits(k, wires.width), std::nullopt};
  const int rest = state.qubit_count() - wires.width;
  if (rest > 0) {
    out.remainder = PureState::from_amplitudes(
        rest, detail::remainder_amplitudes(state, wires, k), true);
  }
  return out;
}

// Zeroes every amplitude whose `wires` register equals `marked`, then
// renormalizes.
inline PureState puncture(const PureState& state, const Bits& marked,
                          WireRange wires) {
  wires.validate(state.qubit_count());
  marked.require_width(wires.width, "puncture");
  const auto a = state.amplitudes();
  std::vector<Amplitude> dst(a.begin(), a.end());
  double kept = 0.0;
  for (std::uint64_t idx = 0; idx < dst.size(); ++idx) {
    if (wires.extract(idx) == marked.value()) {
      dst[idx] = 0.0;
    } else {
      kept += std::norm(dst[idx]);
    }
  }
  if (!(kept > 0.0)) {
    throw EmptyProjectionError("empty projection: all amplitude on " +
                               marked.to_string());
  }
  return PureState::from_amplitudes(state.qubit_count(), std::move(dst), true);
}

// Normalized complex Gaussian vector; Haar distributed.
inline PureState haar_random_state(int qubits, Rng& rng) {
  require_capacity(qubits, "Haar state");
  std::vector<Amplitude> amps(std::size_t{1} << qubits);
  for (auto& a : amps) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = Amplitude(re, im);
  }
  return PureState::from_amplitudes(qubits, std::move(amps), true);
}

// Closed form acceptance probability of the swap test: (1 + |<a|b>|^2) / 2.
inline double swap_test_acceptance(const PureState& a, const PureState& b) {
  return 0.5 * (1.0 + std::norm(inner_product(a, b)));
}

// Runs the swap-test circuit on a (x) b: Hadamard on an ancilla, controlled
// swap of the two registers, Hadamard, measure. The ancilla-0 branch has
// amplitude (|a>|b> + |b>|a>) / 2; returns true ("same") on ancilla 0.
inline bool swap_test(const PureState& a, const PureState& b, Rng& rng) {
  require_same_dimension(a, b);
  require_capacity(2 * a.qubit_count() + 1, "swap test");
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  const std::size_t d = x.size();
  double p0 = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      p0 += std::norm(0.5 * (x[i] * y[j] + y[i] * x[j]));
    }
  }
  return rng.bernoulli(p0);
}

}  // namespace qpke::qsim

#endif  // QPKE_QSIM_OPS_HPP_
