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

#ifndef QPKE_SCHEMES_TYPES_HPP_
#define QPKE_SCHEMES_TYPES_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qpke/bits.hpp"
#include "qpke/errors.hpp"
#include "qpke/primitives.hpp"
#include "qpke/qsim.hpp"

namespace qpke::schemes {

enum class SchemeKind {
  kOwf,     // PRF-based key, classical ciphertexts
  kPrfspd,  // lambda PRFSPD slots, classical ciphertexts
  kPrfs,    // PRFS key, quantum ciphertexts, single shot
};

inline std::string_view to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::kOwf:
      return "owf";
    case SchemeKind::kPrfspd:
      return "prfspd";
    case SchemeKind::kPrfs:
      return "prfs";
  }
  return "?";
}

inline SchemeKind parse_scheme_kind(std::string_view s) {
  if (s == "owf") return SchemeKind::kOwf;
  if (s == "prfspd") return SchemeKind::kPrfspd;
  if (s == "prfs") return SchemeKind::kPrfs;
  throw ConfigError("unknown scheme '" + std::string(s) + "'");
}

class DecryptionKey {
 public:
  explicit DecryptionKey(Bits bits) : bits_(bits) {}
  const Bits& bits() const { return bits_; }
  int width() const { return bits_.width(); }
  friend bool operator==(const DecryptionKey&, const DecryptionKey&) = default;

 private:
  Bits bits_;
};

// OWF scheme: the measured pair (x*, f_dk(x*)).
struct OwfResidue {
  Bits x;
  Bits y;
  friend bool operator==(const OwfResidue&, const OwfResidue&) = default;
};

// PRFSPD scheme: per slot, the measured input and the proof Del produced from
// the destroyed state.
struct PrfspdSlotResidue {
  Bits x;
  primitives::PrfspdProof proof;
};

struct PrfspdResidue {
  std::vector<PrfspdSlotResidue> slots;
};

using RecycleSlot = std::variant<std::monostate, OwfResidue, PrfspdResidue>;

// A quantum public key together with what encryption left behind.
//
// The key is stored as a list of tensor factors: one for the OWF and PRFS
// schemes, lambda (one per slot) for the PRFSPD scheme, whose full state would
// not fit in memory. state() materializes the product when it fits.
class QuantumPublicKey {
 public:
  QuantumPublicKey(SchemeKind scheme, std::vector<qsim::PureState> factors)
      : scheme_(scheme), factors_(std::move(factors)) {}

  SchemeKind scheme() const { return scheme_; }
  const std::vector<qsim::PureState>& factors() const { return factors_; }
  bool consumed() const { return consumed_; }
  const RecycleSlot& recycle_slot() const { return recycle_; }
  bool has_residue() const {
    return !std::holds_alternative<std::monostate>(recycle_);
  }

  int qubit_count() const {
    int q = 0;
    for (const auto& f : factors_) q += f.qubit_count();
    return q;
  }

  // The key state without copying; only for single-factor keys.
  const qsim::PureState& single_state() const {
    if (factors_.size() != 1) {
      throw DimensionError("public key is not a single state");
    }
    return factors_.front();
  }

  qsim::PureState state() const {
    if (factors_.empty()) {
      throw KeyConsumedError("public key holds no quantum state");
    }
    qsim::require_capacity(qubit_count(), "public key state");
    qsim::PureState s = factors_.front();
    for (std::size_t i = 1; i < factors_.size(); ++i) {
      s = qsim::tensor(s, factors_[i]);
    }
    return s;
  }

  // Used by schemes to produce the recycled key.
  void set_residue(RecycleSlot r, std::vector<qsim::PureState> remaining) {
    recycle_ = std::move(r);
    factors_ = std::move(remaining);
  }

  void consume() {
    consumed_ = true;
    factors_.clear();
  }

 private:
  SchemeKind scheme_;
  std::vector<qsim::PureState> factors_;
  RecycleSlot recycle_;
  bool consumed_ = false;
};

struct OwfCiphertext {
  Bits x;
  primitives::SkeCiphertext body;
  friend bool operator==(const OwfCiphertext&, const OwfCiphertext&) = default;
};

struct PrfspdSlot {
  Bits x;
  Bits tag;  // y~: either Del's proof or a random c-bit string
  friend bool operator==(const PrfspdSlot&, const PrfspdSlot&) = default;
};

struct PrfspdCiphertext {
  primitives::SkeCiphertext ske_part;
  std::vector<PrfspdSlot> slots;
  friend bool operator==(const PrfspdCiphertext&,
                         const PrfspdCiphertext&) = default;
};

struct PrfsCiphertext {
  Bits x;
  qsim::QuantumState payload;
};

using Ciphertext =
    std::variant<OwfCiphertext, PrfspdCiphertext, PrfsCiphertext>;

inline SchemeKind kind_of(const Ciphertext& ct) {
  switch (ct.index()) {
    case 0:
      return SchemeKind::kOwf;
    case 1:
      return SchemeKind::kPrfspd;
    default:
      return SchemeKind::kPrfs;
  }
}

inline bool is_classical(const Ciphertext& ct) {
  return !std::holds_alternative<PrfsCiphertext>(ct);
}

}  // namespace qpke::schemes

#endif  // QPKE_SCHEMES_TYPES_HPP_
