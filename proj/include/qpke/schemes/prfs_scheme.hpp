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

#ifndef QPKE_SCHEMES_PRFS_SCHEME_HPP_
#define QPKE_SCHEMES_PRFS_SCHEME_HPP_

#include <memory>
#include <optional>
#include <utility>

#include "qpke/schemes/scheme.hpp"

namespace qpke::schemes {

// How the maximally mixed payload of an encryption of 1 is represented.
enum class MixedPayload {
  kSampledBasisState,  // uniform |j>, ensemble-equal to I/2^n; keeps games pure
  kDensityMatrix,      // explicit I/2^n for exact computations
};

// Public key 2^{-d/2} sum_x |x>|psi_{dk,x}> over a PRFS. Single shot: the
// encryptor measures x and sends (x, psi_{dk,x}) for m = 0 or (x, I/2^n) for
// m = 1; the decryptor runs the tester.
class PrfsScheme final : public Scheme {
 public:
  explicit PrfsScheme(primitives::PrimitiveConfig config,
                      std::uint64_t function_seed = 0,
                      MixedPayload mixed = MixedPayload::kSampledBasisState)
      : Scheme(config), mixed_(mixed) {
    const primitives::PrfsParams p = params(config);
    if (config.mutation == primitives::Mutation::kPrfsConstant) {
      prfs_ = std::make_shared<primitives::ConstantStatePrfs>(p);
    } else {
      prfs_ = std::make_shared<primitives::PhaseStatePrfs>(
          p, select_function(
                 config, primitives::PhaseStatePrfs::phase_function_shape(p),
                 function_seed, std::nullopt));
    }
  }

  static primitives::PrfsParams params(const primitives::PrimitiveConfig& c) {
    return {c.lambda, c.d(), c.prfs_qubits, true};
  }

  SchemeKind kind() const override { return SchemeKind::kPrfs; }
  bool recycles_keys() const override { return false; }

  const primitives::PrfsGenerator& prfs() const { return *prfs_; }
  MixedPayload mixed_payload() const { return mixed_; }
  int payload_qubits() const { return prfs_->params().output_qubits; }

  QuantumPublicKey qpk_gen(const DecryptionKey& dk) const override {
    require_key(dk);
    return QuantumPublicKey(
        kind(),
        {primitives::prfs_oracle_isometry(
            *prfs_, dk.bits(), qsim::uniform_superposition(config().d()))});
  }

  EncryptResult encrypt(QuantumPublicKey qpk, const Bits& message,
                        Rng& rng) const override {
    require_public_key(qpk);
    check_message(message);
    if (qpk.consumed()) throw KeyConsumedError("key consumed");
    auto split =
        qsim::measure_and_split(qpk.single_state(), {0, config().d()}, rng);
    qpk.consume();
    qsim::QuantumState payload = *split.remainder;
    if (message.bit(0)) {
      const int n = payload_qubits();
      if (mixed_ == MixedPayload::kDensityMatrix) {
        payload = qsim::DensityMatrix::maximally_mixed(n);
      } else {
        payload = qsim::PureState::basis(n, rng.below(std::uint64_t{1} << n));
      }
    }
    return {std::move(qpk), PrfsCiphertext{split.outcome, std::move(payload)}};
  }

  // Probability that decrypt() returns 0.
  double zero_probability(const DecryptionKey& dk, const Ciphertext& ct) const {
    require_key(dk);
    const auto& c = unpack(ct);
    return primitives::prfs_test_exact(*prfs_, dk.bits(), c.x, c.payload);
  }

  Bits decrypt(const DecryptionKey& dk, const Ciphertext& ct,
               Rng& rng) const override {
    require_key(dk);
    const auto& c = unpack(ct);
    const bool accept =
        primitives::prfs_test(*prfs_, dk.bits(), c.x, c.payload, rng);
    return Bits(accept ? 0 : 1, 1);
  }

  void check_message(const Bits& m) const override {
    if (m.width() != 1) {
      throw MessageDomainError("the PRFS scheme encrypts single bits");
    }
  }

 private:
  const PrfsCiphertext& unpack(const Ciphertext& ct) const {
    const auto* c = std::get_if<PrfsCiphertext>(&ct);
    if (c == nullptr) {
      throw MalformedCiphertextError("not a PRFS-scheme ciphertext");
    }
    if (c->x.width() != config().d() ||
        qsim::qubit_count(c->payload) != payload_qubits()) {
      throw MalformedCiphertextError("PRFS ciphertext has the wrong widths");
    }
    return *c;
  }

  MixedPayload mixed_;
  std::shared_ptr<const primitives::PrfsGenerator> prfs_;
};

}  // namespace qpke::schemes

#endif  // QPKE_SCHEMES_PRFS_SCHEME_HPP_
