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

#ifndef QPKE_SCHEMES_SCHEME_HPP_
#define QPKE_SCHEMES_SCHEME_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "qpke/bits.hpp"
#include "qpke/errors.hpp"
#include "qpke/primitives.hpp"
#include "qpke/rng.hpp"
#include "qpke/schemes/types.hpp"

namespace qpke::schemes {

struct EncryptResult {
  QuantumPublicKey recycled;  // qpk'
  Ciphertext ciphertext;
};

// Gen / QPKGen / Enc / Dec of a public-key scheme with quantum public keys.
class Scheme {
 public:
  explicit Scheme(primitives::PrimitiveConfig config) : config_(config) {
    config_.validate();
  }
  virtual ~Scheme() = default;

  virtual SchemeKind kind() const = 0;

  // Whether Enc returns a reusable qpk' (required by the encryption-oracle
  // games).
  virtual bool recycles_keys() const = 0;

  int lambda() const { return config_.lambda; }
  const primitives::PrimitiveConfig& config() const { return config_; }

  // dk <- {0,1}^lambda.
  DecryptionKey gen(Rng& rng) const {
    return DecryptionKey(rng.bits(lambda()));
  }

  virtual QuantumPublicKey qpk_gen(const DecryptionKey& dk) const = 0;

  virtual EncryptResult encrypt(QuantumPublicKey qpk, const Bits& message,
                                Rng& rng) const = 0;

  // The generator is only consumed by schemes with a probabilistic decryptor.
  virtual Bits decrypt(const DecryptionKey& dk, const Ciphertext& ct,
                       Rng& rng) const = 0;

  // Throws MessageDomainError when `m` is not a valid plaintext.
  virtual void check_message(const Bits& m) const {
    if (m.width() < 1) throw MessageDomainError("empty message");
  }

 protected:
  void require_key(const DecryptionKey& dk) const {
    dk.bits().require_width(lambda(), "decryption key");
  }

  void require_public_key(const QuantumPublicKey& qpk) const {
    if (qpk.scheme() != kind()) {
      throw MalformedCiphertextError("public key belongs to another scheme");
    }
  }

 private:
  primitives::PrimitiveConfig config_;
};

// Picks the keyed function behind a scheme according to the config: the
// counter PRF, one random function (seeded by `seed`), or, when the config
// carries `broken_when`, the key-independent mutation.
inline std::shared_ptr<const primitives::KeyedFunction> select_function(
    const primitives::PrimitiveConfig& c, primitives::FunctionShape shape,
    std::uint64_t seed, std::optional<primitives::Mutation> broken_when) {
  std::shared_ptr<const primitives::KeyedFunction> f;
  if (c.function == primitives::FunctionMode::kRandomFunction) {
    f = std::make_shared<primitives::RandomFunctionFamily>(shape, seed);
  } else {
    f = primitives::make_counter_prf(shape);
  }
  if (c.mutation == broken_when) {
    f = std::make_shared<primitives::KeyIndependentFunction>(std::move(f));
  }
  return f;
}

}  // namespace qpke::schemes

#endif  // QPKE_SCHEMES_SCHEME_HPP_
