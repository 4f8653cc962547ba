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

#ifndef QPKE_GAMES_ADVERSARIES_HPP_
#define QPKE_GAMES_ADVERSARIES_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpke/games/adversary.hpp"
#include "qpke/games/cloning.hpp"
#include "qpke/qsim.hpp"
#include "qpke/schemes.hpp"

namespace qpke::games {

// Shared plumbing: default challenge messages and the "which message did I
// get back" decision rule.
class MessageAdversary : public Adversary {
 public:
  void start(const AdversaryContext& ctx, Rng rng) override {
    Adversary::start(ctx, rng);
    pair_ = default_challenge(*ctx.scheme);
  }

  ChallengePair choose_challenge() override { return pair_; }

  bool guess() override { return guess_.value_or(rng().coin()); }

 protected:
  const ChallengePair& pair() const { return pair_; }

  // 0 on m0, 1 on m1, a coin flip on anything else.
  void decide(const Bits& recovered) {
    if (recovered == pair_.m0) {
      guess_ = false;
    } else if (recovered == pair_.m1) {
      guess_ = true;
    }
  }

  void set_guess(bool g) { guess_ = g; }

 private:
  ChallengePair pair_;
  std::optional<bool> guess_;
};

// Uniform guess. In the encryption-oracle games it also makes one query
// before and after each challenge, and in the multi-challenge game it plays
// two rounds on each of two chains, so the whole protocol is exercised.
class RandomGuessAdversary final : public MessageAdversary {
 public:
  std::string name() const override { return "random-guess"; }

  std::optional<Bits> encryption_query(bool before) override {
    bool& done = before ? pre_done_ : post_done_;
    if (done) return std::nullopt;
    done = true;
    return pair().m0;
  }

  void receive_challenge(const schemes::Ciphertext&) override {
    pre_done_ = false;
  }

  bool another_round() override {
    post_done_ = false;
    return ++rounds_ < 2;
  }

  bool another_chain() override {
    rounds_ = 0;
    return ++chains_ < 2;
  }

 private:
  bool pre_done_ = false;
  bool post_done_ = false;
  int rounds_ = 0;
  int chains_ = 0;
};

class AlwaysZeroAdversary final : public MessageAdversary {
 public:
  std::string name() const override { return "always-zero"; }
  bool guess() override { return false; }
};

// OWF scheme: measures its own key copies and, when one of them shows the
// challenger's x*, decrypts the challenge with the observed f(x*).
class CopyAndMeasureAdversary final : public MessageAdversary {
 public:
  explicit CopyAndMeasureAdversary(int copies = 8) : copies_(copies) {}

  std::string name() const override { return "copy-and-measure"; }
  int key_copies_wanted() override { return copies_; }

  void receive_public_key_copy(const schemes::QuantumPublicKey& qpk) override {
    if (scheme().kind() != schemes::SchemeKind::kOwf) return;
    const int l = scheme().lambda();
    const Bits outcome =
        qsim::measure_computational(qpk.single_state(), rng()).outcome;
    seen_[outcome.slice(0, l)] = outcome.slice(l, l);
  }

  void receive_challenge(const schemes::Ciphertext& ct) override {
    const auto* c = std::get_if<schemes::OwfCiphertext>(&ct);
    if (c == nullptr) return;
    auto it = seen_.find(c->x);
    if (it == seen_.end()) return;
    const auto& owf = dynamic_cast<const schemes::OwfScheme&>(scheme());
    decide(owf.cipher().decrypt(it->second, c->body));
  }

 private:
  int copies_;
  std::map<Bits, Bits> seen_;
};

// Asks for an encryption of m0 and XORs that ciphertext body into the
// challenge body: a reused pad cancels and leaves m_b ^ m0.
class PadReuseAdversary final : public MessageAdversary {
 public:
  std::string name() const override { return "pad-reuse"; }

  std::optional<Bits> encryption_query(bool before) override {
    if (!before || asked_) return std::nullopt;
    asked_ = true;
    return pair().m0;
  }

  void receive_ciphertext(const schemes::Ciphertext& ct) override {
    if (!reference_) reference_ = body(ct);
  }

  void receive_challenge(const schemes::Ciphertext& ct) override {
    const auto b = body(ct);
    if (!reference_ || !b || b->width() != reference_->width()) return;
    decide(*b ^ *reference_ ^ pair().m0);
  }

 private:
  static std::optional<Bits> body(const schemes::Ciphertext& ct) {
    if (const auto* c = std::get_if<schemes::OwfCiphertext>(&ct)) {
      return c->body.body;
    }
    if (const auto* c = std::get_if<schemes::PrfspdCiphertext>(&ct)) {
      return c->ske_part.body;
    }
    return std::nullopt;
  }

  bool asked_ = false;
  std::optional<Bits> reference_;
};

// OWF scheme: evaluates the public function description with the all-zero
// key, which is the right key exactly when f ignores its key.
class PublicPrfAdversary final : public MessageAdversary {
 public:
  std::string name() const override { return "public-prf"; }

  void receive_challenge(const schemes::Ciphertext& ct) override {
    const auto* c = std::get_if<schemes::OwfCiphertext>(&ct);
    if (c == nullptr) return;
    const auto& owf = dynamic_cast<const schemes::OwfScheme&>(scheme());
    const Bits y = owf.function()(Bits::zeros(owf.lambda()), c->x);
    decide(owf.cipher().decrypt(y, c->body));
  }
};

// PRFSPD scheme: rebuilds k' by running Ver with the all-zero key.
class PublicVerAdversary final : public MessageAdversary {
 public:
  std::string name() const override { return "public-ver"; }

  void receive_challenge(const schemes::Ciphertext& ct) override {
    const auto* c = std::get_if<schemes::PrfspdCiphertext>(&ct);
    if (c == nullptr) return;
    const auto& s = dynamic_cast<const schemes::PrfspdScheme&>(scheme());
    const Bits zero = Bits::zeros(s.prfspd().params().key_width);
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < c->slots.size(); ++i) {
      if (s.prfspd().ver(zero, c->slots[i].x,
                         primitives::PrfspdProof(c->slots[i].tag))) {
        k |= std::uint64_t{1} << i;
      }
    }
    decide(s.cipher().decrypt(Bits(k, s.lambda()), c->ske_part));
  }
};

// PRFS scheme: projects the payload onto Gen(0^lambda, x); acceptance reads
// as "this is the generator's state", hence m = 0.
class StateProjectorAdversary final : public MessageAdversary {
 public:
  std::string name() const override { return "state-projector"; }

  void receive_challenge(const schemes::Ciphertext& ct) override {
    const auto* c = std::get_if<schemes::PrfsCiphertext>(&ct);
    if (c == nullptr) return;
    const auto& s = dynamic_cast<const schemes::PrfsScheme&>(scheme());
    const bool accept = primitives::prfs_test(s.prfs(), Bits::zeros(s.lambda()),
                                              c->x, c->payload, rng());
    set_guess(!accept);
  }
};

// PRFS scheme: keeps the payload of one measured key copy and swap-tests the
// challenge payload against it.
class SwapTestAdversary final : public MessageAdversary {
 public:
  std::string name() const override { return "swap-test"; }
  int key_copies_wanted() override { return 1; }

  void receive_public_key_copy(const schemes::QuantumPublicKey& qpk) override {
    if (scheme().kind() != schemes::SchemeKind::kPrfs) return;
    auto split = qsim::measure_and_split(qpk.single_state(),
                                         {0, scheme().config().d()}, rng());
    reference_ = std::move(split.remainder);
  }

  void receive_challenge(const schemes::Ciphertext& ct) override {
    const auto* c = std::get_if<schemes::PrfsCiphertext>(&ct);
    if (c == nullptr || !reference_) return;
    const double accept =
        0.5 *
        (1.0 + qsim::fidelity(qsim::QuantumState(*reference_), c->payload));
    set_guess(!rng().bernoulli(accept));
  }

 private:
  std::optional<qsim::PureState> reference_;
};

// Names accepted by make_adversary().
inline const std::vector<std::string>& adversary_names() {
  static const std::vector<std::string> names = {
      "random-guess", "always-zero", "copy-and-measure", "pad-reuse",
      "public-prf",   "public-ver",  "state-projector",  "swap-test"};
  return names;
}

inline AdversaryFactory make_adversary(std::string_view name) {
  if (name == "random-guess") {
    return [] { return std::make_unique<RandomGuessAdversary>(); };
  }
  if (name == "always-zero") {
    return [] { return std::make_unique<AlwaysZeroAdversary>(); };
  }
  if (name == "copy-and-measure") {
    return [] { return std::make_unique<CopyAndMeasureAdversary>(); };
  }
  if (name == "pad-reuse") {
    return [] { return std::make_unique<PadReuseAdversary>(); };
  }
  if (name == "public-prf") {
    return [] { return std::make_unique<PublicPrfAdversary>(); };
  }
  if (name == "public-ver") {
    return [] { return std::make_unique<PublicVerAdversary>(); };
  }
  if (name == "state-projector") {
    return [] { return std::make_unique<StateProjectorAdversary>(); };
  }
  if (name == "swap-test") {
    return [] { return std::make_unique<SwapTestAdversary>(); };
  }
  throw ConfigError("unknown adversary '" + std::string(name) + "'");
}

// Cloning-game adversaries.

// Queries Gen(x) `copies` times, destroys each copy into a proof and appends
// one uniformly random proof different from the others.
class MeasureAndForgeAdversary final : public CloningAdversary {
 public:
  explicit MeasureAndForgeAdversary(int copies = 1) : copies_(copies) {}
  std::string name() const override { return "measure-and-forge"; }

  CloningOutput play(CloningOracles& o, Rng& rng) override {
    const auto& p = o.prfspd().params();
    CloningOutput out{Bits::zeros(p.input_width), {}};
    for (int i = 0; i < copies_; ++i) {
      out.proofs.push_back(o.prfspd().del(o.gen(out.x), rng));
    }
    for (;;) {
      primitives::PrfspdProof extra(rng.bits(p.proof_width()));
      if (std::find(out.proofs.begin(), out.proofs.end(), extra) ==
          out.proofs.end()) {
        out.proofs.push_back(extra);
        return out;
      }
    }
  }

 private:
  int copies_;
};

// Hands in the same proof twice.
class DuplicateProofAdversary final : public CloningAdversary {
 public:
  std::string name() const override { return "duplicate"; }

  CloningOutput play(CloningOracles& o, Rng& rng) override {
    CloningOutput out{Bits::zeros(o.prfspd().params().input_width), {}};
    const auto proof = o.prfspd().del(o.gen(out.x), rng);
    out.proofs = {proof, proof};
    return out;
  }
};

// No Gen queries; one uniformly random proof for a random input.
class LuckyGuessAdversary final : public CloningAdversary {
 public:
  std::string name() const override { return "lucky-guess"; }

  CloningOutput play(CloningOracles& o, Rng& rng) override {
    const auto& p = o.prfspd().params();
    return {rng.bits(p.input_width),
            {primitives::PrfspdProof(rng.bits(p.proof_width()))}};
  }
};

inline const std::vector<std::string>& cloning_adversary_names() {
  static const std::vector<std::string> names = {"measure-and-forge",
                                                 "duplicate", "lucky-guess"};
  return names;
}

inline CloningAdversaryFactory make_cloning_adversary(std::string_view name) {
  if (name == "measure-and-forge") {
    return [] { return std::make_unique<MeasureAndForgeAdversary>(); };
  }
  if (name == "duplicate") {
    return [] { return std::make_unique<DuplicateProofAdversary>(); };
  }
  if (name == "lucky-guess") {
    return [] { return std::make_unique<LuckyGuessAdversary>(); };
  }
  throw ConfigError("unknown cloning adversary '" + std::string(name) + "'");
}

}  // namespace qpke::games

#endif  // QPKE_GAMES_ADVERSARIES_HPP_
