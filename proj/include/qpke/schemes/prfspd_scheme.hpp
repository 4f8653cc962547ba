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

#ifndef QPKE_SCHEMES_PRFSPD_SCHEME_HPP_
#define QPKE_SCHEMES_PRFSPD_SCHEME_HPP_

#include <memory>
#include <utility>
#include <vector>

#include "qpke/schemes/scheme.hpp"

namespace qpke::schemes {

// Public key: lambda independent slots, each 2^{-d/2} sum_x |x>|psi_{dk,x}>
// with psi a PRFSPD state. The first encryption measures every slot's input
// register and runs Del on what is left; later encryptions reuse those proofs.
// Each call samples a fresh SKE key k and hides bit k_i in slot i: the real
// proof when k_i = 1, a random c-bit string when k_i = 0.
class PrfspdScheme final : public Scheme {
 public:
  explicit PrfspdScheme(primitives::PrimitiveConfig config,
                        std::uint64_t function_seed = 0)
      : Scheme(config),
        prfspd_(std::make_shared<primitives::TaggedSuperpositionPrfspd>(
            params(config),
            select_function(
                config,
                primitives::TaggedSuperpositionPrfspd::tag_function_shape(
                    params(config)),
                function_seed, primitives::Mutation::kPrfspdKeyIndependent))),
        ske_(lambda(), config.mutation == primitives::Mutation::kSkeFixedNonce
                           ? primitives::SkeMode::kFixedNonce
                           : config.ske) {}

  static primitives::PrfspdParams params(const primitives::PrimitiveConfig& c) {
    return {c.lambda, c.d(), c.pd_measured, c.pd_tag};
  }

  SchemeKind kind() const override { return SchemeKind::kPrfspd; }
  bool recycles_keys() const override { return true; }

  const primitives::Prfspd& prfspd() const { return *prfspd_; }
  const primitives::SymmetricCipher& cipher() const { return ske_; }
  int slot_count() const { return lambda(); }
  int slot_qubits() const {
    return config().d() + prfspd_->params().output_qubits();
  }

  qsim::PureState slot_state(const DecryptionKey& dk) const {
    return qsim::controlled_generation(
        qsim::uniform_superposition(config().d()),
        [&](const Bits& x) { return prfspd_->gen(dk.bits(), x); },
        prfspd_->params().output_qubits());
  }

  QuantumPublicKey qpk_gen(const DecryptionKey& dk) const override {
    require_key(dk);
    return QuantumPublicKey(
        kind(), std::vector<qsim::PureState>(
                    static_cast<std::size_t>(slot_count()), slot_state(dk)));
  }

  EncryptResult encrypt(QuantumPublicKey qpk, const Bits& message,
                        Rng& rng) const override {
    require_public_key(qpk);
    check_message(message);
    if (!qpk.has_residue()) {
      if (qpk.factors().size() != static_cast<std::size_t>(slot_count())) {
        throw DimensionError("PRFSPD public key needs one factor per slot");
      }
      PrfspdResidue residue;
      for (const auto& slot : qpk.factors()) {
        auto split = qsim::measure_and_split(slot, {0, config().d()}, rng);
        residue.slots.push_back(
            {split.outcome, prfspd_->del(*split.remainder, rng)});
      }
      qpk.set_residue(std::move(residue), {});
    }
    const auto& residue = std::get<PrfspdResidue>(qpk.recycle_slot());
    const Bits k = rng.bits(lambda());
    PrfspdCiphertext ct;
    ct.slots.reserve(residue.slots.size());
    for (std::size_t i = 0; i < residue.slots.size(); ++i) {
      const Bits r = rng.bits(prfspd_->params().proof_width());
      const bool ki = k.bit(static_cast<int>(i));
      ct.slots.push_back(
          {residue.slots[i].x, ki ? residue.slots[i].proof.bits() : r});
    }
    ct.ske_part = ske_.encrypt(k, message, rng);
    return {std::move(qpk), Ciphertext(std::move(ct))};
  }

  // k' with k'_i = Ver(dk, x^(i), y~^(i)).
  Bits recover_key(const DecryptionKey& dk, const PrfspdCiphertext& c) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < c.slots.size(); ++i) {
      if (prfspd_->ver(dk.bits(), c.slots[i].x,
                       primitives::PrfspdProof(c.slots[i].tag))) {
        k |= std::uint64_t{1} << i;
      }
    }
    return Bits(k, lambda());
  }

  Bits decrypt(const DecryptionKey& dk, const Ciphertext& ct,
               Rng&) const override {
    require_key(dk);
    const auto* c = std::get_if<PrfspdCiphertext>(&ct);
    if (c == nullptr) {
      throw MalformedCiphertextError("not a PRFSPD-scheme ciphertext");
    }
    if (c->slots.size() != static_cast<std::size_t>(slot_count())) {
      throw MalformedCiphertextError("PRFSPD ciphertext needs λ slots");
    }
    for (const auto& s : c->slots) {
      if (s.x.width() != config().d() ||
          s.tag.width() != prfspd_->params().proof_width()) {
        throw MalformedCiphertextError("PRFSPD slot has the wrong widths");
      }
    }
    if (c->ske_part.nonce.width() != ske_.nonce_width()) {
      throw MalformedCiphertextError("SKE nonce has the wrong width");
    }
    return ske_.decrypt(recover_key(dk, *c), c->ske_part);
  }

  void check_message(const Bits& m) const override {
    Scheme::check_message(m);
    if (ske_.mode() == primitives::SkeMode::kOneTimePad &&
        m.width() > lambda()) {
      throw MessageDomainError("one-time pad messages are at most λ bits");
    }
  }

 private:
  std::shared_ptr<const primitives::Prfspd> prfspd_;
  primitives::SymmetricCipher ske_;
};

}  // namespace qpke::schemes

#endif  // QPKE_SCHEMES_PRFSPD_SCHEME_HPP_
