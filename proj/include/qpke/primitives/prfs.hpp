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

#ifndef QPKE_PRIMITIVES_PRFS_HPP_
#define QPKE_PRIMITIVES_PRFS_HPP_

#include <cmath>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qpke/bits.hpp"
#include "qpke/errors.hpp"
#include "qpke/primitives/prf.hpp"
#include "qpke/qsim.hpp"
#include "qpke/rng.hpp"

namespace qpke::primitives {

struct PrfsParams {
  int key_width = 0;
  int input_width = 0;    // d
  int output_qubits = 0;  // n
  // Whether d was declared to grow super-logarithmically in the security
  // parameter. Recorded only; nothing asymptotic can be checked at a fixed
  // size.
  bool super_logarithmic_input = true;

  void validate() const {
    if (key_width < 1 || input_width < 1 || output_qubits < 1) {
      throw WidthError("PRFS widths must be positive");
    }
    if (input_width + output_qubits > Bits::kMaxWidth) {
      throw WidthError("PRFS input plus output exceeds 64 bits");
    }
  }
};

// Keyed family of n-qubit states |psi_{k,x}>.
class PrfsGenerator {
 public:
  explicit PrfsGenerator(PrfsParams params) : params_(params) {
    params_.validate();
  }
  virtual ~PrfsGenerator() = default;

  qsim::PureState operator()(const Bits& key, const Bits& x) const {
    key.require_width(params_.key_width, "PRFS key");
    x.require_width(params_.input_width, "PRFS input");
    return generate(key, x);
  }

  const PrfsParams& params() const { return params_; }
  virtual std::string name() const = 0;

 protected:
  virtual qsim::PureState generate(const Bits& key, const Bits& x) const = 0;

 private:
  PrfsParams params_;
};

// Binary phase states 2^{-n/2} sum_y (-1)^{f_k(x || y)} |y>.
class PhaseStatePrfs final : public PrfsGenerator {
 public:
  PhaseStatePrfs(PrfsParams params, std::shared_ptr<const KeyedFunction> f)
      : PrfsGenerator(params), f_(std::move(f)) {
    if (f_->shape() != phase_function_shape(params)) {
      throw WidthError("phase function must map (d + n) bits to one bit");
    }
  }

  static FunctionShape phase_function_shape(const PrfsParams& p) {
    return {p.key_width, p.input_width + p.output_qubits, 1};
  }

  std::string name() const override { return "phase"; }
  const KeyedFunction& phase_function() const { return *f_; }

 protected:
  qsim::PureState generate(const Bits& key, const Bits& x) const override {
    const int n = params().output_qubits;
    const std::size_t dim = std::size_t{1} << n;
    const double a = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<qsim::Amplitude> amps(dim);
    for (std::uint64_t y = 0; y < dim; ++y) {
      const bool odd = (*f_)(key, x.concat(Bits(y, n))).bit(0);
      amps[y] = odd ? -a : a;
    }
    return qsim::PureState::from_amplitudes(n, std::move(amps));
  }

 private:
  std::shared_ptr<const KeyedFunction> f_;
};

// Mutation: the same state |+>^n for every key and input.
class ConstantStatePrfs final : public PrfsGenerator {
 public:
  explicit ConstantStatePrfs(PrfsParams params) : PrfsGenerator(params) {}
  std::string name() const override { return "constant"; }

 protected:
  qsim::PureState generate(const Bits&, const Bits&) const override {
    return qsim::uniform_superposition(params().output_qubits);
  }
};

inline std::shared_ptr<const PrfsGenerator> make_phase_prfs(PrfsParams p) {
  return std::make_shared<PhaseStatePrfs>(
      p, make_counter_prf(PhaseStatePrfs::phase_function_shape(p)));
}

// sum_x a_x |x>  ->  sum_x a_x |x>|psi_{k,x}>.
inline qsim::PureState prfs_oracle_isometry(const PrfsGenerator& gen,
                                            const Bits& key,
                                            const qsim::PureState& input) {
  if (input.qubit_count() != gen.params().input_width) {
    throw DimensionError("PRFS oracle input register has the wrong width");
  }
  return qsim::controlled_generation(
      input, [&](const Bits& x) { return gen(key, x); },
      gen.params().output_qubits);
}

// Acceptance probability of the tester: projective measurement onto
// |psi_{k,x}>, so this equals the fidelity and the tester slack is zero.
inline double prfs_test_exact(const PrfsGenerator& gen, const Bits& key,
                              const Bits& x,
                              const qsim::QuantumState& candidate) {
  if (qsim::qubit_count(candidate) != gen.params().output_qubits) {
    throw DimensionError("tester candidate has the wrong number of qubits");
  }
  return std::visit(
      [&](const auto& c) { return qsim::fidelity(gen(key, x), c); }, candidate);
}

// One run of the tester; true means "this is psi_{k,x}".
inline bool prfs_test(const PrfsGenerator& gen, const Bits& key, const Bits& x,
                      const qsim::QuantumState& candidate, Rng& rng) {
  return rng.bernoulli(prfs_test_exact(gen, key, x, candidate));
}

}  // namespace qpke::primitives

#endif  // QPKE_PRIMITIVES_PRFS_HPP_
