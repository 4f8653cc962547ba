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

#ifndef QPKE_GAMES_CHALLENGER_HPP_
#define QPKE_GAMES_CHALLENGER_HPP_

#include <optional>
#include <string>
#include <utility>

#include "qpke/errors.hpp"
#include "qpke/games/adversary.hpp"
#include "qpke/games/transcript.hpp"
#include "qpke/rng.hpp"
#include "qpke/schemes.hpp"

namespace qpke::games {

namespace detail {

// Thrown inside a game run when the adversary breaks the protocol; the run
// ends as an invalid loss.
struct Violation {
  std::string what;
};

// Runs an adversary callback, turning its library errors into violations.
template <typename F>
auto adversary_call(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Violation{std::string("adversary error: ") + e.what()};
  }
}

inline void check_pair(const schemes::Scheme& scheme, const ChallengePair& p) {
  if (p.m0.width() != p.m1.width()) {
    throw Violation{"challenge messages differ in length"};
  }
  try {
    scheme.check_message(p.m0);
    scheme.check_message(p.m1);
  } catch (const MessageDomainError& e) {
    throw Violation{e.what()};
  }
}

inline void check_query(const schemes::Scheme& scheme, const Bits& m) {
  try {
    scheme.check_message(m);
  } catch (const MessageDomainError& e) {
    throw Violation{e.what()};
  }
}

inline GameTranscript start_transcript(GameKind game,
                                       const schemes::Scheme& scheme,
                                       const Adversary& adv, const Rng& rng) {
  GameTranscript t;
  t.game = game;
  t.scheme = std::string(schemes::to_string(scheme.kind()));
  t.adversary = adv.name();
  t.lambda = scheme.lambda();
  t.seed = rng.seed();
  return t;
}

// Step 2 of every game: the adversary's QPKGen(dk) oracle calls. Every copy
// is the same state, so it is prepared once.
inline void key_copy_phase(const schemes::Scheme& scheme,
                           const schemes::DecryptionKey& dk, Adversary& adv,
                           const Budget& budget, GameTranscript& t) {
  const int copies = adversary_call([&] { return adv.key_copies_wanted(); });
  if (copies < 0 || copies > budget.key_copies) {
    throw Violation{"key copy budget exceeded"};
  }
  if (copies == 0) return;
  const schemes::QuantumPublicKey qpk = scheme.qpk_gen(dk);
  for (int i = 0; i < copies; ++i) {
    t.add(0, 0, "keys", "challenger", "qpk-copy", hex_u16(qpk.qubit_count()));
    adversary_call([&] { adv.receive_public_key_copy(qpk); });
    ++t.key_copies;
  }
}

}  // namespace detail

// IND-CPA with a QPKGen oracle. The challenge is encrypted under a fresh key
// copy. `rng` drives the challenger; the adversary gets rng.split(1).
inline GameTranscript run_ind_cpa(const schemes::Scheme& scheme, Adversary& adv,
                                  Rng& rng, const Budget& budget = {}) {
  GameTranscript t = detail::start_transcript(GameKind::kCpa, scheme, adv, rng);
  const int lambda = scheme.lambda();
  try {
    const schemes::DecryptionKey dk = scheme.gen(rng);
    t.dk = dk.bits();
    t.add(0, 0, "setup", "challenger", "dk", hex_bits(dk.bits()));
    adv.start({GameKind::kCpa, &scheme, budget}, rng.split(1));
    detail::key_copy_phase(scheme, dk, adv, budget, t);

    const ChallengePair pair =
        detail::adversary_call([&] { return adv.choose_challenge(); });
    detail::check_pair(scheme, pair);
    t.add(0, 0, "challenge", "adversary", "messages",
          hex_bits(pair.m0) + hex_bits(pair.m1));
    t.b = rng.coin();
    t.add(0, 0, "challenge", "challenger", "bit", hex_bit(t.b));
    auto enc = scheme.encrypt(scheme.qpk_gen(dk), t.b ? pair.m1 : pair.m0, rng);
    const std::string ct_hex = ciphertext_hex(enc.ciphertext, lambda);
    t.challenges.push_back({0, 0, 1, pair.m0, pair.m1, ct_hex});
    t.add(0, 0, "challenge", "challenger", "ciphertext", ct_hex);
    detail::adversary_call([&] { adv.receive_challenge(enc.ciphertext); });

    t.guess = detail::adversary_call([&] { return adv.guess(); });
    t.add(0, 0, "guess", "adversary", "bit", hex_bit(t.guess));
    t.win = t.b == t.guess;
  } catch (const detail::Violation& v) {
    t.invalidate(v.what);
  }
  return t;
}

// IND-CPA-EO. The challenger keeps one key chain qpk_1, qpk_2, ... where each
// encryption returns the next key. With `multi`, the adversary may ask for
// more challenge rounds on the same chain and for more chains under the same
// dk; one hidden bit b is used for every challenge.
inline GameTranscript run_ind_cpa_eo(const schemes::Scheme& scheme,
                                     Adversary& adv, Rng& rng, bool multi,
                                     const Budget& budget = {}) {
  if (!scheme.recycles_keys()) {
    throw CapabilityError(std::string("scheme '") +
                          std::string(schemes::to_string(scheme.kind())) +
                          "' has single-use keys and cannot answer encryption "
                          "queries");
  }
  const GameKind game = multi ? GameKind::kCpaEoMulti : GameKind::kCpaEo;
  GameTranscript t = detail::start_transcript(game, scheme, adv, rng);
  const int lambda = scheme.lambda();
  try {
    const schemes::DecryptionKey dk = scheme.gen(rng);
    t.dk = dk.bits();
    t.add(0, 0, "setup", "challenger", "dk", hex_bits(dk.bits()));
    adv.start({game, &scheme, budget}, rng.split(1));
    detail::key_copy_phase(scheme, dk, adv, budget, t);
    t.b = rng.coin();
    t.add(0, 0, "setup", "challenger", "bit", hex_bit(t.b));

    for (int chain = 0;; ++chain) {
      schemes::QuantumPublicKey qpk = scheme.qpk_gen(dk);
      int step = 1;
      t.add(chain, 0, "setup", "challenger", "qpk", hex_u16(qpk.qubit_count()));

      auto query_phase = [&](int round, bool before) {
        for (int count = 0;; ++count) {
          const std::optional<Bits> m = detail::adversary_call(
              [&] { return adv.encryption_query(before); });
          if (!m) return;
          if (count >= budget.queries_per_phase) {
            throw detail::Violation{"encryption query budget exceeded"};
          }
          detail::check_query(scheme, *m);
          const char* phase = before ? "query" : "post-query";
          t.add(chain, round, phase, "adversary", "message", hex_bits(*m));
          auto enc = scheme.encrypt(std::move(qpk), *m, rng);
          qpk = std::move(enc.recycled);
          const std::string ct_hex = ciphertext_hex(enc.ciphertext, lambda);
          t.queries.push_back({chain, round, step, before, *m, ct_hex});
          t.add(chain, round, phase, "challenger", "ciphertext", ct_hex);
          ++step;
          detail::adversary_call(
              [&] { adv.receive_ciphertext(enc.ciphertext); });
        }
      };

      for (int round = 0;; ++round) {
        query_phase(round, true);
        const ChallengePair pair =
            detail::adversary_call([&] { return adv.choose_challenge(); });
        detail::check_pair(scheme, pair);
        t.add(chain, round, "challenge", "adversary", "messages",
              hex_bits(pair.m0) + hex_bits(pair.m1));
        auto enc = scheme.encrypt(std::move(qpk), t.b ? pair.m1 : pair.m0, rng);
        qpk = std::move(enc.recycled);
        const std::string ct_hex = ciphertext_hex(enc.ciphertext, lambda);
        t.challenges.push_back({chain, round, step, pair.m0, pair.m1, ct_hex});
        t.add(chain, round, "challenge", "challenger", "ciphertext", ct_hex);
        ++step;
        detail::adversary_call([&] { adv.receive_challenge(enc.ciphertext); });
        query_phase(round, false);

        if (!multi) break;
        if (!detail::adversary_call([&] { return adv.another_round(); })) break;
        if (round + 1 >= budget.rounds) {
          throw detail::Violation{"challenge round budget exceeded"};
        }
      }
      if (!multi) break;
      if (!detail::adversary_call([&] { return adv.another_chain(); })) break;
      if (chain + 1 >= budget.chains) {
        throw detail::Violation{"key chain budget exceeded"};
      }
    }

    t.guess = detail::adversary_call([&] { return adv.guess(); });
    t.add(0, 0, "guess", "adversary", "bit", hex_bit(t.guess));
    t.win = t.b == t.guess;
  } catch (const detail::Violation& v) {
    t.invalidate(v.what);
  }
  return t;
}

}  // namespace qpke::games

#endif  // QPKE_GAMES_CHALLENGER_HPP_
