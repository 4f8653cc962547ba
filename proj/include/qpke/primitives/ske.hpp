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

#ifndef QPKE_PRIMITIVES_SKE_HPP_
#define QPKE_PRIMITIVES_SKE_HPP_

#include <string>
#include <string_view>

#include "qpke/bits.hpp"
#include "qpke/errors.hpp"
#include "qpke/primitives/prf.hpp"
#include "qpke/rng.hpp"

namespace qpke::primitives {

enum class SkeMode {
  kNoncePad,    // (r, F_k(r) xor m) with r fresh and uniform
  kOneTimePad,  // (empty, k xor m); |m| <= |k|, information-theoretic model
  kFixedNonce,  // mutation: r pinned to 0, so pads repeat
};

inline std::string_view to_string(SkeMode m) {
  switch (m) {
    case SkeMode::kNoncePad:
      return "nonce-pad";
    case SkeMode::kOneTimePad:
      return "one-time-pad";
    case SkeMode::kFixedNonce:
      return "fixed-nonce";
  }
  return "?";
}

inline SkeMode parse_ske_mode(std::string_view s) {
  if (s == "nonce-pad") return SkeMode::kNoncePad;
  if (s == "one-time-pad") return SkeMode::kOneTimePad;
  if (s == "fixed-nonce") return SkeMode::kFixedNonce;
  throw ConfigError("unknown SKE mode '" + std::string(s) + "'");
}

struct SkeCiphertext {
  Bits nonce;
  Bits body;
  friend bool operator==(const SkeCiphertext&, const SkeCiphertext&) = default;
};

// Symmetric encryption of messages up to 64 bits under a key_width-bit key.
class SymmetricCipher {
 public:
  explicit SymmetricCipher(int key_width, SkeMode mode = SkeMode::kNoncePad)
      : key_width_(key_width), mode_(mode) {}

  int key_width() const { return key_width_; }
  int nonce_width() const {
    return mode_ == SkeMode::kOneTimePad ? 0 : key_width_;
  }
  SkeMode mode() const { return mode_; }

  SkeCiphertext encrypt(const Bits& key, const Bits& message, Rng& rng) const {
    switch (mode_) {
      case SkeMode::kNoncePad:
        return encrypt_with_nonce(key, message, rng.bits(key_width_));
      case SkeMode::kFixedNonce:
        return encrypt_with_nonce(key, message, Bits::zeros(key_width_));
      case SkeMode::kOneTimePad:
        return encrypt_with_nonce(key, message, Bits());
    }
    return {};
  }

  SkeCiphertext encrypt_with_nonce(const Bits& key, const Bits& message,
                                   const Bits& nonce) const {
    key.require_width(key_width_, "SKE key");
    nonce.require_width(nonce_width(), "SKE nonce");
    return {nonce, message ^ pad(key, nonce, message.width())};
  }

  Bits decrypt(const Bits& key, const SkeCiphertext& ct) const {
    key.require_width(key_width_, "SKE key");
    ct.nonce.require_width(nonce_width(), "SKE nonce");
    return ct.body ^ pad(key, ct.nonce, ct.body.width());
  }

  Bits pad(const Bits& key, const Bits& nonce, int width) const {
    if (mode_ == SkeMode::kOneTimePad) {
      if (width > key_width_) {
        throw WidthError("one-time pad message longer than the key");
      }
      return key.slice(0, width);
    }
    return prf_stream(PrfDomain::kSymmetricPad, key, nonce, width);
  }

 private:
  int key_width_;
  SkeMode mode_;
};

// Free-function forms with the default nonce-pad instantiation.
inline SkeCiphertext ske_encrypt(const Bits& key, const Bits& message,
                                 Rng& rng) {
  return SymmetricCipher(key.width()).encrypt(key, message, rng);
}

inline Bits ske_decrypt(const Bits& key, const SkeCiphertext& ct) {
  return SymmetricCipher(key.width()).decrypt(key, ct);
}

}  // namespace qpke::primitives

#endif  // QPKE_PRIMITIVES_SKE_HPP_
