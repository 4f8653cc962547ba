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

#ifndef QPKE_GAMES_TRANSCRIPT_HPP_
#define QPKE_GAMES_TRANSCRIPT_HPP_

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qpke/bits.hpp"
#include "qpke/games/adversary.hpp"
#include "qpke/schemes.hpp"

namespace qpke::games {

// One line of a transcript.
struct TranscriptEvent {
  int chain = 0;
  int round = 0;
  std::string phase;  // setup | keys | query | challenge | post-query | guess |
                      // output | verify
  std::string actor;  // challenger | adversary
  std::string kind;
  std::string payload_hex;
  friend bool operator==(const TranscriptEvent&,
                         const TranscriptEvent&) = default;
};

// An encryption-oracle call. `step` is the index i of qpk_i that encrypted it
// within its key chain, counting the challenges.
struct QueryRecord {
  int chain = 0;
  int round = 0;
  int step = 0;
  bool before_challenge = true;
  Bits message;
  std::string ciphertext_hex;
};

struct ChallengeRecord {
  int chain = 0;
  int round = 0;
  int step = 0;
  Bits m0;
  Bits m1;
  std::string ciphertext_hex;
};

// Full record of one game run. For the cloning game `b` and `guess` are
// unused and `win` is the game's output bit.
struct GameTranscript {
  GameKind game = GameKind::kCpa;
  std::string scheme;
  std::string adversary;
  int lambda = 0;
  std::uint64_t seed = 0;
  Bits dk;
  bool b = false;
  bool guess = false;
  bool win = false;
  bool valid = true;
  std::string violation;
  int key_copies = 0;
  std::vector<QueryRecord> queries;
  std::vector<ChallengeRecord> challenges;
  std::vector<TranscriptEvent> events;

  void add(int chain, int round, std::string phase, std::string actor,
           std::string kind, std::string payload_hex) {
    events.push_back({chain, round, std::move(phase), std::move(actor),
                      std::move(kind), std::move(payload_hex)});
  }

  // Marks the run as lost through a protocol violation.
  void invalidate(std::string why) {
    valid = false;
    win = false;
    violation = std::move(why);
  }

  // Line format:
  //   qpke-transcript game=<g> scheme=<s> adversary=<a> lambda=<l> seed=<n>
  //   event chain=<c> round=<r> phase=<p> actor=<a> kind=<k> payload=<hex>
  //   ...
  //   result valid=<0|1> win=<0|1> b=<0|1> guess=<0|1> copies=<n> queries=<n>
  //   violation=<text>          (only when invalid)
  std::string serialize() const {
    std::ostringstream os;
    os << "qpke-transcript game=" << to_string(game) << " scheme=" << scheme
       << " adversary=" << adversary << " lambda=" << lambda << " seed=" << seed
       << '\n';
    for (const auto& e : events) {
      os << "event chain=" << e.chain << " round=" << e.round
         << " phase=" << e.phase << " actor=" << e.actor << " kind=" << e.kind
         << " payload=" << (e.payload_hex.empty() ? "-" : e.payload_hex)
         << '\n';
    }
    os << "result valid=" << valid << " win=" << win << " b=" << b
       << " guess=" << guess << " copies=" << key_copies
       << " queries=" << queries.size() << '\n';
    if (!valid) os << "violation=" << violation << '\n';
    return os.str();
  }
};

inline std::string hex_bits(const Bits& b) {
  return schemes::to_hex(schemes::encode_bits(b));
}

inline std::string hex_bit(bool b) { return b ? "01" : "00"; }

inline std::string hex_u16(int v) {
  const std::uint8_t bytes[2] = {static_cast<std::uint8_t>((v >> 8) & 0xFF),
                                 static_cast<std::uint8_t>(v & 0xFF)};
  return schemes::to_hex(bytes);
}

// Classical ciphertexts use the wire format. A PRFS-scheme ciphertext is
// recorded as bits(x), the payload qubit count (u16) and one byte telling a
// pure payload (00) from a density matrix (01); the state itself is not
// recorded.
inline std::string ciphertext_hex(const schemes::Ciphertext& ct, int lambda) {
  if (schemes::is_classical(ct)) {
    return schemes::to_hex(schemes::serialize(ct, lambda));
  }
  const auto& c = std::get<schemes::PrfsCiphertext>(ct);
  return hex_bits(c.x) + hex_u16(qsim::qubit_count(c.payload)) +
         (std::holds_alternative<qsim::PureState>(c.payload) ? "00" : "01");
}

}  // namespace qpke::games

#endif  // QPKE_GAMES_TRANSCRIPT_HPP_
