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

#ifndef QPKE_PRIMITIVES_PRFSPD_HPP_
#define QPKE_PRIMITIVES_PRFSPD_HPP_

#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "qpke/bits.hpp"
#include "qpke/errors.hpp"
#include "qpke/primitives/prf.hpp"
#include "qpke/qsim.hpp"
#include "qpke/rng.hpp"

namespace qpke::primitives {

struct PrfspdParams {
  int key_width = 0;       // w
  int input_width = 0;     // d
  int measured_width = 0;  // m: width of the superposed index register
  int tag_width = 0;       // width of the PRF tag register

  int output_qubits() const { return measured_width + tag_width; }  // n
  int proof_width() const { return measured_width + tag_width; }    // c

  // Fraction of c-bit strings that Ver accepts for a fixed (k, x).
  double accepting_density() const { return std::ldexp(1.0, -tag_width); }

  void validate() const {
    if (key_width < 1 || input_width < 1 || measured_width < 1 ||
        tag_width < 1) {
      throw WidthError("PRFSPD widths must be positive");
    }
    if (input_width + measured_width > Bits::kMaxWidth) {
      throw WidthError("PRFSPD input plus index exceeds 64 bits");
    }
  }
};

// Classical proof of destruction, exactly c bits.
class PrfspdProof {
 public:
  explicit PrfspdProof(Bits bits) : bits_(bits) {}
  const Bits& bits() const { return bits_; }
  friend bool operator==(const PrfspdProof&, const PrfspdProof&) = default;
  friend auto operator<=>(const PrfspdProof& a, const PrfspdProof& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  Bits bits_;
};

// Gen / Del / Ver triple.
class Prfspd {
 public:
  explicit Prfspd(PrfspdParams params) : params_(params) { params_.validate(); }
  virtual ~Prfspd() = default;

  qsim::PureState gen(const Bits& key, const Bits& x) const {
    key.require_width(params_.key_width, "PRFSPD key");
    x.require_width(params_.input_width, "PRFSPD input");
    return generate(key, x);
  }

  PrfspdProof del(const qsim::PureState& state, Rng& rng) const {
    if (state.qubit_count() != params_.output_qubits()) {
      throw DimensionError("Del expects an n-qubit state");
    }
    PrfspdProof p = destroy(state, rng);
    p.bits().require_width(params_.proof_width(), "PRFSPD proof");
    return p;
  }

  bool ver(const Bits& key, const Bits& x, const PrfspdProof& p) const {
    key.require_width(params_.key_width, "PRFSPD key");
    x.require_width(params_.input_width, "PRFSPD input");
    p.bits().require_width(params_.proof_width(), "PRFSPD proof");
    return verify(key, x, p);
  }

  const PrfspdParams& params() const { return params_; }
  virtual std::string name() const = 0;

 protected:
  virtual qsim::PureState generate(const Bits& key, const Bits& x) const = 0;
  virtual PrfspdProof destroy(const qsim::PureState& state, Rng& rng) const = 0;
  virtual bool verify(const Bits& key, const Bits& x,
                      const PrfspdProof& p) const = 0;

 private:
  PrfspdParams params_;
};

// Toy instantiation:
//   Gen(k, x) = 2^{-m/2} sum_y |y>|f_k(x || y)>
//   Del       = measure everything, proof (y, z) with y in the low m bits
//   Ver       = [z == f_k(x || y)]
// Correctness is exact; forging a proof for a fresh y means predicting f.
class TaggedSuperpositionPrfspd final : public Prfspd {
 public:
  TaggedSuperpositionPrfspd(PrfspdParams params,
                            std::shared_ptr<const KeyedFunction> f)
      : Prfspd(params), f_(std::move(f)) {
    if (f_->shape() != tag_function_shape(params)) {
      throw WidthError("tag function must map (d + m) bits to the tag width");
    }
  }

  static FunctionShape tag_function_shape(const PrfspdParams& p) {
    return {p.key_width, p.input_width + p.measured_width, p.tag_width};
  }

  std::string name() const override { return "tagged-superposition"; }
  const KeyedFunction& tag_function() const { return *f_; }

 protected:
  qsim::PureState generate(const Bits& key, const Bits& x) const override {
    const int m = params().measured_width;
    const int t = params().tag_width;
    const qsim::PureState start = qsim::tensor(qsim::uniform_superposition(m),
                                               qsim::PureState::basis(t, 0));
    return qsim::apply_function_oracle(
        start, [&](const Bits& y) { return (*f_)(key, x.concat(y)); },
        qsim::WireRange{0, m}, qsim::WireRange{m, t});
  }

  PrfspdProof destroy(const qsim::PureState& state, Rng& rng) const override {
    return PrfspdProof(qsim::measure_computational(state, rng).outcome);
  }

  bool verify(const Bits& key, const Bits& x,
              const PrfspdProof& p) const override {
    const int m = params().measured_width;
    const Bits y = p.bits().slice(0, m);
    const Bits z = p.bits().slice(m, params().tag_width);
    return (*f_)(key, x.concat(y)) == z;
  }

 private:
  std::shared_ptr<const KeyedFunction> f_;
};

inline std::shared_ptr<const Prfspd> make_tagged_prfspd(PrfspdParams p) {
  return std::make_shared<TaggedSuperpositionPrfspd>(
      p, make_counter_prf(TaggedSuperpositionPrfspd::tag_function_shape(p)));
}

}  // namespace qpke::primitives

#endif  // QPKE_PRIMITIVES_PRFSPD_HPP_
