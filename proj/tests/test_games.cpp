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

#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qpke/games.hpp"
#include "test_util.hpp"

namespace qpke::games {
namespace {

using primitives::PrimitiveConfig;
using schemes::SchemeConfig;
using schemes::SchemeKind;

std::vector<std::uint8_t> unhex(const std::string& s) {
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
    out.push_back(
        static_cast<std::uint8_t>(std::stoi(s.substr(i, 2), nullptr, 16)));
  }
  return out;
}

SchemeConfig scheme_cfg(SchemeKind kind, int lambda) {
  SchemeConfig c;
  c.kind = kind;
  c.primitives.lambda = lambda;
  return c;
}

GameSetup setup_for(GameKind g, SchemeKind kind, int lambda,
                    const std::string& adversary) {
  return {g,
          schemes::scheme_factory(scheme_cfg(kind, lambda)),
          make_adversary(adversary),
          {}};
}

EstimatorOptions keep() {
  EstimatorOptions o;
  o.keep_transcripts = true;
  return o;
}

TEST(Baselines, RandomGuessInEveryGame) {
  const int n = 2000;
  for (auto g : {GameKind::kCpa, GameKind::kCpaEo, GameKind::kCpaEoMulti}) {
    for (auto kind : {SchemeKind::kOwf, SchemeKind::kPrfspd}) {
      const auto r =
          estimate_advantage(setup_for(g, kind, 4, "random-guess"), n, 3);
      EXPECT_EQ(r.estimate.invalid, 0);
      EXPECT_TRUE(testing::within_sigmas(r.estimate.estimate, 0.5, n, 3.0))
          << to_string(g) << " " << r.estimate.estimate;
    }
  }
  const auto prfs = estimate_advantage(
      setup_for(GameKind::kCpa, SchemeKind::kPrfs, 4, "random-guess"), n, 3);
  EXPECT_TRUE(testing::within_sigmas(prfs.estimate.estimate, 0.5, n, 3.0));
}

TEST(Baselines, AlwaysZeroWinsWhenBIsZero) {
  const auto r = estimate_advantage(
      setup_for(GameKind::kCpa, SchemeKind::kOwf, 3, "always-zero"), 1000, 5,
      keep());
  for (const auto& t : r.transcripts) {
    EXPECT_FALSE(t.guess);
    EXPECT_EQ(t.win, !t.b);
  }
  EXPECT_TRUE(testing::within_sigmas(r.estimate.estimate, 0.5, 1000, 3.0));
}

TEST(Challenger, ChallengeIsFaithfulAndUniform) {
  // lambda = 2, OWF: each challenge decrypts to m_b under dk, and (x*, b) is
  // uniform over its 8 cells.
  const int n = 4000;
  const auto cfg = scheme_cfg(SchemeKind::kOwf, 2);
  const auto scheme = schemes::make_scheme(cfg);
  const auto r = estimate_advantage(
      setup_for(GameKind::kCpa, SchemeKind::kOwf, 2, "random-guess"), n, 7,
      keep());
  std::vector<double> cells(8, 0.0);
  Rng unused(0);
  for (const auto& t : r.transcripts) {
    ASSERT_EQ(t.challenges.size(), 1u);
    const auto& c = t.challenges.front();
    const auto ct = schemes::deserialize(unhex(c.ciphertext_hex));
    const auto& owf = std::get<schemes::OwfCiphertext>(ct.ciphertext);
    EXPECT_EQ(
        scheme->decrypt(schemes::DecryptionKey(t.dk), ct.ciphertext, unused),
        t.b ? c.m1 : c.m0);
    cells[owf.x.value() | (t.b ? 4u : 0u)] += 1.0;
  }
  double stat = 0.0;
  const double e = n / 8.0;
  for (double o : cells) stat += (o - e) * (o - e) / e;
  const boost::math::chi_squared dist(7.0);
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, stat)), 0.01)
      << "chi2 = " << stat;
}

TEST(Challenger, EncryptionOracleChainIntegrity) {
  const auto scheme = schemes::make_scheme(scheme_cfg(SchemeKind::kOwf, 4));
  const auto r = estimate_advantage(
      setup_for(GameKind::kCpaEoMulti, SchemeKind::kOwf, 4, "random-guess"),
      200, 11, keep());
  Rng unused(0);
  for (const auto& t : r.transcripts) {
    ASSERT_TRUE(t.valid);
    const schemes::DecryptionKey dk(t.dk);
    std::map<int, std::vector<std::pair<int, Bits>>> by_chain;  // step, x
    for (const auto& q : t.queries) {
      const auto ct = schemes::deserialize(unhex(q.ciphertext_hex)).ciphertext;
      EXPECT_EQ(scheme->decrypt(dk, ct, unused), q.message);
      by_chain[q.chain].push_back(
          {q.step, std::get<schemes::OwfCiphertext>(ct).x});
    }
    for (const auto& c : t.challenges) {
      const auto ct = schemes::deserialize(unhex(c.ciphertext_hex)).ciphertext;
      EXPECT_EQ(scheme->decrypt(dk, ct, unused), t.b ? c.m1 : c.m0);
      by_chain[c.chain].push_back(
          {c.step, std::get<schemes::OwfCiphertext>(ct).x});
    }
    ASSERT_EQ(by_chain.size(), 2u);
    for (auto& [chain, steps] : by_chain) {
      std::sort(steps.begin(), steps.end());
      // Two rounds of query, challenge, post-query on one recycled key.
      ASSERT_EQ(steps.size(), 6u);
      for (std::size_t i = 0; i < steps.size(); ++i) {
        EXPECT_EQ(steps[i].first, static_cast<int>(i) + 1);
        EXPECT_EQ(steps[i].second, steps.front().second);
      }
    }
  }
}

class WidthMismatchAdversary final : public Adversary {
 public:
  std::string name() const override { return "width-mismatch"; }
  ChallengePair choose_challenge() override { return {Bits(0, 8), Bits(0, 4)}; }
  bool guess() override { return false; }
};

class GreedyAdversary final : public Adversary {
 public:
  std::string name() const override { return "greedy"; }
  std::optional<Bits> encryption_query(bool) override { return Bits(0, 8); }
  ChallengePair choose_challenge() override { return {Bits(0, 8), Bits(1, 8)}; }
  bool guess() override { return false; }
};

TEST(Challenger, ProtocolViolationsAreInvalidLosses) {
  GameSetup s = setup_for(GameKind::kCpa, SchemeKind::kOwf, 3, "random-guess");
  s.adversary = [] { return std::make_unique<WidthMismatchAdversary>(); };
  const auto r = estimate_advantage(s, 100, 1, keep());
  EXPECT_EQ(r.estimate.invalid, 100);
  EXPECT_EQ(r.estimate.wins, 0);
  EXPECT_NE(r.transcripts.front().serialize().find("violation="),
            std::string::npos);

  s.game = GameKind::kCpaEo;
  s.adversary = [] { return std::make_unique<GreedyAdversary>(); };
  const auto g = estimate_advantage(s, 100, 1, keep());
  EXPECT_EQ(g.estimate.invalid, 100);
  EXPECT_EQ(g.transcripts.front().queries.size(), 16u);
}

TEST(Challenger, SingleUseKeysCannotAnswerQueries) {
  EXPECT_THROW(estimate_advantage(setup_for(GameKind::kCpaEo, SchemeKind::kPrfs,
                                            3, "random-guess"),
                                  100, 1),
               CapabilityError);
  const auto prfs = schemes::make_scheme(scheme_cfg(SchemeKind::kPrfs, 3));
  RandomGuessAdversary adv;
  Rng rng(1);
  EXPECT_THROW(run_ind_cpa_eo(*prfs, adv, rng, false), CapabilityError);
}

TEST(Adversaries, HonestCopyAndMeasureStaysNearHalf) {
  const int l = 6;
  const int n = 2000;
  const auto r = estimate_advantage(
      setup_for(GameKind::kCpa, SchemeKind::kOwf, l, "copy-and-measure"), n,
      13);
  const double limit =
      0.5 + std::pow(2.0, -l / 2.0) + 3.0 * testing::binomial_sigma(0.5, n);
  EXPECT_LE(r.estimate.estimate, limit);
}

TEST(Adversaries, UnknownNames) {
  EXPECT_THROW(make_adversary("oracle"), ConfigError);
  EXPECT_THROW(make_cloning_adversary("oracle"), ConfigError);
  for (const auto& name : adversary_names()) {
    EXPECT_EQ(make_adversary(name)()->name(), name);
  }
}

CloningSetup cloning(const std::string& adversary, int m, int w) {
  PrimitiveConfig c;
  c.lambda = 4;
  c.pd_measured = m;
  c.pd_tag = w;
  auto scheme = std::make_shared<schemes::PrfspdScheme>(c);
  std::shared_ptr<const primitives::Prfspd> pd(scheme, &scheme->prfspd());
  return {pd, make_cloning_adversary(adversary), {}};
}

TEST(Cloning, MeasureAndForgeBoundedByAcceptingDensity) {
  const int n = 4000;
  const auto s = cloning("measure-and-forge", 1, 6);
  const auto r = estimate_advantage(s, n, 17);
  const double density = s.prfspd->params().accepting_density();
  EXPECT_EQ(r.estimate.invalid, 0);
  EXPECT_LE(r.estimate.estimate,
            density + 3.0 * testing::binomial_sigma(density, n));
}

TEST(Cloning, DuplicateProofsNeverWin) {
  const auto r =
      estimate_advantage(cloning("duplicate", 1, 6), 500, 19, keep());
  EXPECT_EQ(r.estimate.wins, 0);
  EXPECT_EQ(r.estimate.invalid, 0);
  EXPECT_EQ(r.transcripts.front().events.back().kind, "reject-duplicate");
}

TEST(Cloning, LuckyGuessMatchesAcceptingDensity) {
  const int n = 10000;
  const auto s = cloning("lucky-guess", 1, 4);
  const auto r = estimate_advantage(s, n, 23);
  EXPECT_TRUE(testing::within_sigmas(r.estimate.estimate, 1.0 / 16, n, 3.0))
      << r.estimate.estimate;
}

TEST(Estimator, IndependentOfThreadCount) {
  const auto s = setup_for(GameKind::kCpaEo, SchemeKind::kOwf, 4, "pad-reuse");
  EstimatorOptions one = keep();
  one.threads = 1;
  EstimatorOptions four = keep();
  four.threads = 4;
  const auto a = estimate_advantage(s, 300, 29, one);
  const auto b = estimate_advantage(s, 300, 29, four);
  EXPECT_EQ(a.estimate.wins, b.estimate.wins);
  EXPECT_EQ(a.estimate.estimate, b.estimate.estimate);
  ASSERT_EQ(a.transcripts.size(), b.transcripts.size());
  for (std::size_t i = 0; i < a.transcripts.size(); ++i) {
    EXPECT_EQ(a.transcripts[i].serialize(), b.transcripts[i].serialize());
  }
  const auto c = estimate_advantage(s, 300, 30, one);
  EXPECT_NE(a.transcripts.front().serialize(),
            c.transcripts.front().serialize());
}

TEST(Estimator, DeterministicWinHasZeroWidth) {
  const auto r = estimate_advantage(
      [](std::uint64_t) {
        GameTranscript t;
        t.win = true;
        return t;
      },
      100, 1);
  EXPECT_EQ(r.estimate.estimate, 1.0);
  EXPECT_EQ(r.estimate.lower, 1.0);
  EXPECT_EQ(r.estimate.upper, 1.0);
  EXPECT_EQ(r.estimate.advantage(), 1.0);
}

TEST(Estimator, TrialFloorAndIntervals) {
  const TrialRunner lose = [](std::uint64_t) { return GameTranscript{}; };
  EXPECT_THROW(estimate_advantage(lose, 99, 1), RangeError);
  EXPECT_NO_THROW(estimate_advantage(lose, 100, 1));
  const auto e = make_estimate(400, 100);
  EXPECT_DOUBLE_EQ(e.estimate, 0.25);
  EXPECT_NEAR(e.upper - e.estimate, 1.96 * std::sqrt(0.25 * 0.75 / 400), 1e-15);
  EXPECT_TRUE(e.contains(0.25));
  EXPECT_THROW(make_estimate(0, 0), RangeError);
}

TEST(Estimator, TrialSeedsFollowSplitLayout) {
  std::vector<std::uint64_t> seen(100);
  EstimatorOptions o;
  o.threads = 3;
  estimate_advantage(
      [&seen](std::uint64_t seed) {
        GameTranscript t;
        for (std::uint64_t i = 0; i < 100; ++i) {
          if (Rng(42).split(i).seed() == seed) seen[i] = seed;
        }
        return t;
      },
      100, 42, o);
  for (std::uint64_t i = 0; i < 100; ++i) {
    EXPECT_EQ(seen[i], Rng(42).split(i).seed());
  }
}

TEST(Transcript, SerializedForm) {
  const auto r = estimate_advantage(
      setup_for(GameKind::kCpa, SchemeKind::kOwf, 3, "random-guess"), 100, 31,
      keep());
  const auto& t = r.transcripts.front();
  const std::string s = t.serialize();
  EXPECT_EQ(
      s.rfind("qpke-transcript game=cpa scheme=owf adversary=random-guess "
              "lambda=3 seed=" +
                  std::to_string(t.seed) + "\n",
              0),
      0u);
  EXPECT_NE(s.find("event chain=0 round=0 phase=setup actor=challenger kind=dk "
                   "payload=" +
                   hex_bits(t.dk)),
            std::string::npos);
  EXPECT_NE(s.find("\nresult valid=1 win=" + std::to_string(t.win)),
            std::string::npos);
  EXPECT_EQ(hex_bits(Bits(5, 3)), "000305");
}

TEST(Mutations, BrokenSchemesAreDetected) {
  PrimitiveConfig base;
  base.lambda = 6;
  const auto results = run_mutation_suite(base, 400, 37);
  ASSERT_EQ(results.size(), mutation_cases().size());
  for (const auto& r : results) {
    EXPECT_GE(r.broken.estimate, 0.9) << r.c.adversary;
    EXPECT_LE(r.honest.estimate, r.honest_limit) << r.c.adversary;
    EXPECT_TRUE(r.passed());
  }
}

}  // namespace
}  // namespace qpke::games
