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

#ifndef QPKE_SCHEMES_OWF_SCHEME_HPP_
#define QPKE_SCHEMES_OWF_SCHEME_HPP_

#include <memory>
#include <utility>
#include <vector>

#include "qpke/schemes/scheme.hpp"

namespace qpke::schemes {

// Public key 2^{-lambda/2} sum_x |x>|f_dk(x)>. The first encryption measures
// both registers and caches (x*, y*); every ciphertext is (x*, SE.Enc(y*, m))
// and decryption recomputes y* = f_dk(x*).
class OwfScheme final : public Scheme {
 public:
  explicit OwfScheme(primitives::PrimitiveConfig config,
                     std::uint64_t function_seed = 0)
      : Scheme(config),
        f_(select_function(config, {lambda(), lambda(), lambda()},
                           function_seed,
                           primitives::Mutation::kPrfKeyIndependent)),
        ske_(lambda(), config.mutation == primitives::Mutation::kSkeFixedNonce
                           ? primitives::SkeMode::kFixedNonce
                           : config.ske) {}

  SchemeKind kind() const override { return SchemeKind::kOwf; }
  bool recycles_keys() const override { return true; }

  const primitives::KeyedFunction& function() const { return *f_; }
  const primitives::SymmetricCipher& cipher() const { return ske_; }

  // Left register: wires [0, lambda). Right register: [lambda, 2 lambda).
  qsim::WireRange left() const { return {0, lambda()}; }
  qsim::WireRange right() const { return {lambda(), lambda()}; }

  QuantumPublicKey qpk_gen(const DecryptionKey& dk) const override {
    require_key(dk);
    if (config().mutation == primitives::Mutation::kCollapsedPublicKey) {
      const Bits x0 = dk.bits();
      return QuantumPublicKey(
          kind(), {qsim::PureState::basis(x0.concat((*f_)(dk.bits(), x0)))});
    }
    const int l = lambda();
    const qsim::PureState start = qsim::tensor(qsim::uniform_superposition(l),
                                               qsim::PureState::basis(l, 0));
    return QuantumPublicKey(
        kind(), {qsim::apply_function_oracle(
                    start, [&](const Bits& x) { return (*f_)(dk.bits(), x); },
                    left(), right())});
  }

  EncryptResult encrypt(QuantumPublicKey qpk, const Bits& message,
                        Rng& rng) const override {
    require_public_key(qpk);
    check_message(message);
    if (!qpk.has_residue()) {
      const auto m = qsim::measure_computational(qpk.single_state(), rng);
      const OwfResidue r{m.outcome.slice(0, lambda()),
                         m.outcome.slice(lambda(), lambda())};
      qpk.set_residue(r, {m.post});
    }
    const auto& r = std::get<OwfResidue>(qpk.recycle_slot());
    Ciphertext ct = OwfCiphertext{r.x, ske_.encrypt(r.y, message, rng)};
    return {std::move(qpk), std::move(ct)};
  }

  // Ciphertext for a given measurement outcome and nonce; encrypt() draws
  // both and then does exactly this.
  OwfCiphertext seal(const OwfResidue& r, const Bits& message,
                     const Bits& nonce) const {
    check_message(message);
    return {r.x, ske_.encrypt_with_nonce(r.y, message, nonce)};
  }

  Bits decrypt(const DecryptionKey& dk, const Ciphertext& ct,
               Rng&) const override {
    require_key(dk);
    const auto* c = std::get_if<OwfCiphertext>(&ct);
    if (c == nullptr) {
      throw MalformedCiphertextError("not an OWF-scheme ciphertext");
    }
    if (c->x.width() != lambda() ||
        c->body.nonce.width() != ske_.nonce_width()) {
      throw MalformedCiphertextError("OWF ciphertext has the wrong widths");
    }
    return ske_.decrypt((*f_)(dk.bits(), c->x), c->body);
  }

  void check_message(const Bits& m) const override {
    Scheme::check_message(m);
    if (ske_.mode() == primitives::SkeMode::kOneTimePad &&
        m.width() > lambda()) {
      throw MessageDomainError("one-time pad messages are at most λ bits");
    }
  }

 private:
  std::shared_ptr<const primitives::KeyedFunction> f_;
  primitives::SymmetricCipher ske_;
};

}  // namespace qpke::schemes

#endif  // QPKE_SCHEMES_OWF_SCHEME_HPP_
