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

#ifndef QPKE_GAMES_ADVERSARY_HPP_
#define QPKE_GAMES_ADVERSARY_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "qpke/bits.hpp"
#include "qpke/errors.hpp"
#include "qpke/rng.hpp"
#include "qpke/schemes.hpp"

namespace qpke::games {

enum class GameKind {
  kCpa,         // IND-CPA with a QPKGen oracle
  kCpaEo,       // IND-CPA with an encryption oracle, one challenge
  kCpaEoMulti,  // repeated challenges and key chains, one hidden bit
  kCloning,     // unclonability of PRFSPD proofs
};

inline std::string_view to_string(GameKind g) {
  switch (g) {
    case GameKind::kCpa:
      return "cpa";
    case GameKind::kCpaEo:
      return "cpa-eo";
    case GameKind::kCpaEoMulti:
      return "cpa-eo-multi";
    case GameKind::kCloning:
      return "cloning";
  }
  return "?";
}

inline GameKind parse_game_kind(std::string_view s) {
  if (s == "cpa") return GameKind::kCpa;
  if (s == "cpa-eo") return GameKind::kCpaEo;
  if (s == "cpa-eo-multi") return GameKind::kCpaEoMulti;
  if (s == "cloning") return GameKind::kCloning;
  throw ConfigError("unknown game '" + std::string(s) + "'");
}

// Hard caps standing in for "polynomially many".
struct Budget {
  int key_copies = 16;  // QPKGen oracle calls
  int queries_per_phase =
      16;          // encryption-oracle calls before or after a challenge
  int rounds = 4;  // challenges per key chain (multi-challenge game)
  int chains = 4;  // key chains (multi-challenge game)
};

struct ChallengePair {
  Bits m0;
  Bits m1;
};

// What an adversary knows when a game starts: the game, the public scheme
// description and its own random coins.
struct AdversaryContext {
  GameKind game;
  const schemes::Scheme* scheme;
  Budget budget;
};

// Synchronous callbacks driven by the challenger. One object plays one game.
//
// Encryption queries and extra rounds are pulled: the challenger keeps asking
// until the adversary returns nullopt / false or the budget runs out. Asking
// for more than the budget is a protocol violation and loses the game.
class Adversary {
 public:
  virtual ~Adversary() = default;

  virtual std::string name() const = 0;

  virtual void start(const AdversaryContext& ctx, Rng rng) {
    ctx_ = ctx;
    rng_ = rng;
  }

  // How many qpk copies to request from the QPKGen oracle.
  virtual int key_copies_wanted() { return 0; }
  virtual void receive_public_key_copy(const schemes::QuantumPublicKey&) {}

  virtual std::optional<Bits> encryption_query(bool /*before_challenge*/) {
    return std::nullopt;
  }
  virtual void receive_ciphertext(const schemes::Ciphertext&) {}

  virtual ChallengePair choose_challenge() = 0;
  virtual void receive_challenge(const schemes::Ciphertext&) {}

  // Multi-challenge game only.
  virtual bool another_round() { return false; }
  virtual bool another_chain() { return false; }

  virtual bool guess() = 0;

 protected:
  const AdversaryContext& context() const { return ctx_; }
  const schemes::Scheme& scheme() const { return *ctx_.scheme; }
  Rng& rng() { return rng_; }

 private:
  AdversaryContext ctx_{GameKind::kCpa, nullptr, {}};
  Rng rng_{0};
};

using AdversaryFactory = std::function<std::unique_ptr<Adversary>()>;

// Width of the default challenge messages: single bits for the PRFS scheme,
// at most lambda bits under a one-time pad, one byte otherwise.
inline int default_message_width(const schemes::Scheme& s) {
  if (s.kind() == schemes::SchemeKind::kPrfs) return 1;
  if (s.config().ske == primitives::SkeMode::kOneTimePad) {
    return std::min(8, s.lambda());
  }
  return 8;
}

inline ChallengePair default_challenge(const schemes::Scheme& s) {
  const int w = default_message_width(s);
  return {Bits::zeros(w), Bits::ones(w)};
}

}  // namespace qpke::games

#endif  // QPKE_GAMES_ADVERSARY_HPP_
