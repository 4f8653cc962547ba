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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qpke/schemes.hpp"
#include "test_util.hpp"

namespace qpke::schemes {
namespace {

using primitives::Mutation;
using primitives::PrimitiveConfig;
using primitives::SkeMode;

constexpr double kExact = 1e-12;

PrimitiveConfig cfg(int lambda) {
  PrimitiveConfig c;
  c.lambda = lambda;
  return c;
}

TEST(Gen, WidthDeterminismAndSpread) {
  const OwfScheme s(cfg(6));
  Rng a(5);
  Rng b(5);
  const auto k1 = s.gen(a);
  EXPECT_EQ(k1.width(), 6);
  EXPECT_EQ(k1, s.gen(b));

  const int n = 10000;
  int differ = 0;
  for (int i = 0; i < n; ++i) {
    Rng r1(2 * i + 100);
    Rng r2(2 * i + 101);
    differ += s.gen(r1) != s.gen(r2) ? 1 : 0;
  }
  const double p = 1.0 - std::ldexp(1.0, -6);
  EXPECT_TRUE(testing::within_sigmas(differ / double(n), p, n, 3.0));
}

TEST(OwfScheme, PublicKeyAmplitudes) {
  const int l = 3;
  const OwfScheme s(cfg(l));
  const DecryptionKey dk(Bits(5, l));
  const auto qpk = s.qpk_gen(dk).single_state();
  std::vector<double> expected(64, 0.0);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const auto y = s.function()(dk.bits(), Bits(x, l));
    expected[x | (y.value() << l)] = std::pow(2.0, -1.5);
  }
  for (std::uint64_t i = 0; i < 64; ++i) {
    EXPECT_NEAR(std::abs(qpk.amplitude(i) - expected[i]), 0.0, kExact) << i;
  }
}

TEST(Schemes, FreshCopiesAreTheSameState) {
  for (auto kind : {SchemeKind::kOwf, SchemeKind::kPrfspd, SchemeKind::kPrfs}) {
    const auto s = make_scheme({kind, cfg(3), {}});
    Rng rng(7);
    const auto dk = s->gen(rng);
    const auto a = s->qpk_gen(dk);
    const auto b = s->qpk_gen(dk);
    ASSERT_EQ(a.factors().size(), b.factors().size());
    for (std::size_t i = 0; i < a.factors().size(); ++i) {
      EXPECT_NEAR(qsim::fidelity(a.factors()[i], b.factors()[i]), 1.0, kExact);
    }
  }
}

TEST(OwfScheme, PerfectCorrectnessExhaustive) {
  // Every dk, measurement outcome x, 8-bit message and nonce at lambda = 3.
  const int l = 3;
  const OwfScheme s(cfg(l));
  Rng unused(0);
  for (std::uint64_t dk = 0; dk < 8; ++dk) {
    const DecryptionKey key(Bits(dk, l));
    for (std::uint64_t x = 0; x < 8; ++x) {
      const OwfResidue r{Bits(x, l), s.function()(key.bits(), Bits(x, l))};
      for (std::uint64_t m = 0; m < 256; ++m) {
        for (std::uint64_t nonce = 0; nonce < 8; ++nonce) {
          ASSERT_EQ(
              s.decrypt(key, s.seal(r, Bits(m, 8), Bits(nonce, l)), unused),
              Bits(m, 8));
        }
      }
    }
  }
}

TEST(OwfScheme, RecycledKeyReusesMeasurement) {
  const OwfScheme s(cfg(5));
  Rng rng(11);
  const auto dk = s.gen(rng);
  auto qpk = s.qpk_gen(dk);
  EXPECT_FALSE(qpk.has_residue());
  auto first = s.encrypt(qpk, Bits(1, 8), rng);
  ASSERT_TRUE(first.recycled.has_residue());
  const auto residue = std::get<OwfResidue>(first.recycled.recycle_slot());
  EXPECT_EQ(residue.y, s.function()(dk.bits(), residue.x));
  auto key = first.recycled;
  for (int i = 0; i < 10; ++i) {
    const Bits m = rng.bits(8);
    auto next = s.encrypt(key, m, rng);
    const auto& c = std::get<OwfCiphertext>(next.ciphertext);
    EXPECT_EQ(c.x, residue.x);
    EXPECT_EQ(s.decrypt(dk, next.ciphertext, rng), m);
    key = next.recycled;
  }
}

TEST(OwfScheme, MeasurementOutcomeIsUniform) {
  const int l = 2;
  const OwfScheme s(cfg(l));
  Rng rng(13);
  const auto dk = s.gen(rng);
  const int n = 10000;
  std::vector<int> count(4, 0);
  for (int i = 0; i < n; ++i) {
    const auto r = s.encrypt(s.qpk_gen(dk), Bits(0, 8), rng);
    ++count[std::get<OwfCiphertext>(r.ciphertext).x.value()];
  }
  for (int x = 0; x < 4; ++x) {
    EXPECT_TRUE(testing::within_sigmas(count[x] / double(n), 0.25, n, 4.0));
  }
}

TEST(OwfScheme, MessageDomain) {
  PrimitiveConfig c = cfg(4);
  c.ske = SkeMode::kOneTimePad;
  const OwfScheme otp(c);
  Rng rng(17);
  const auto dk = otp.gen(rng);
  EXPECT_THROW(otp.encrypt(otp.qpk_gen(dk), Bits(0, 5), rng),
               MessageDomainError);
  EXPECT_THROW(otp.encrypt(otp.qpk_gen(dk), Bits(), rng), MessageDomainError);
  const auto r = otp.encrypt(otp.qpk_gen(dk), Bits(9, 4), rng);
  EXPECT_EQ(otp.decrypt(dk, r.ciphertext, rng), Bits(9, 4));
}

TEST(OwfScheme, Mutations) {
  PrimitiveConfig c = cfg(4);
  c.mutation = Mutation::kCollapsedPublicKey;
  const OwfScheme collapsed(c);
  const DecryptionKey dk(Bits(6, 4));
  const auto qpk = collapsed.qpk_gen(dk);
  const auto& st = qpk.single_state();
  int nonzero = 0;
  for (std::uint64_t i = 0; i < st.dimension(); ++i) {
    nonzero += std::abs(st.amplitude(i)) > 0.0 ? 1 : 0;
  }
  EXPECT_EQ(nonzero, 1);

  c.mutation = Mutation::kPrfKeyIndependent;
  const OwfScheme keyless(c);
  EXPECT_EQ(keyless.function()(Bits(1, 4), Bits(3, 4)),
            keyless.function()(Bits(14, 4), Bits(3, 4)));

  c.mutation = Mutation::kSkeFixedNonce;
  EXPECT_EQ(OwfScheme(c).cipher().mode(), SkeMode::kFixedNonce);
}

PrimitiveConfig pd_cfg(int l, int m, int w) {
  PrimitiveConfig c = cfg(l);
  c.pd_measured = m;
  c.pd_tag = w;
  return c;
}

TEST(PrfspdScheme, RoundTripAndKeyRecovery) {
  const PrfspdScheme s(pd_cfg(4, 1, 8));
  Rng rng(19);
  int correct = 0;
  const int n = 500;
  for (int i = 0; i < n; ++i) {
    const auto dk = s.gen(rng);
    const Bits m = rng.bits(8);
    auto r = s.encrypt(s.qpk_gen(dk), m, rng);
    ASSERT_EQ(std::get<PrfspdCiphertext>(r.ciphertext).slots.size(), 4u);
    const auto& res = std::get<PrfspdResidue>(r.recycled.recycle_slot());
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_TRUE(
          s.prfspd().ver(dk.bits(), res.slots[j].x, res.slots[j].proof));
    }
    correct += s.decrypt(dk, r.ciphertext, rng) == m ? 1 : 0;
  }
  // A slot with k_i = 0 decrypts wrongly only if its random tag verifies.
  const double fail = 4.0 * std::ldexp(1.0, -8);
  EXPECT_GE(correct / double(n),
            1.0 - fail - 3.0 * testing::binomial_sigma(fail, n));
}

TEST(PrfspdScheme, ReplacingProofClearsKeyBit) {
  const PrfspdScheme s(pd_cfg(3, 1, 6));
  Rng rng(23);
  const int n = 5000;
  int cleared = 0;
  for (int i = 0; i < n; ++i) {
    const auto dk = s.gen(rng);
    auto r = s.encrypt(s.qpk_gen(dk), Bits(0, 8), rng);
    auto c = std::get<PrfspdCiphertext>(r.ciphertext);
    c.slots[0].tag = rng.bits(s.prfspd().params().proof_width());
    cleared += s.recover_key(dk, c).bit(0) ? 0 : 1;
  }
  const double p = 1.0 - std::ldexp(1.0, -6);
  EXPECT_GE(cleared / double(n), p - 3.0 * testing::binomial_sigma(p, n));
}

TEST(PrfspdScheme, FreshKPerEncryption) {
  const PrfspdScheme s(pd_cfg(8, 1, 6));
  Rng rng(29);
  const auto dk = s.gen(rng);
  auto key = s.encrypt(s.qpk_gen(dk), Bits(0, 8), rng).recycled;
  std::vector<Bits> ks;
  for (int i = 0; i < 20; ++i) {
    auto r = s.encrypt(key, Bits(0, 8), rng);
    const auto& c = std::get<PrfspdCiphertext>(r.ciphertext);
    ks.push_back(s.recover_key(dk, c));
    key = r.recycled;
  }
  std::sort(ks.begin(), ks.end());
  EXPECT_GT(std::unique(ks.begin(), ks.end()) - ks.begin(), 10);
}

PrimitiveConfig prfs_cfg(int l, int n) {
  PrimitiveConfig c = cfg(l);
  c.prfs_qubits = n;
  return c;
}

TEST(PrfsScheme, PublicKeyIsIsometryImage) {
  const PrfsScheme s(prfs_cfg(3, 2));
  const DecryptionKey dk(Bits(3, 3));
  const auto expected = primitives::prfs_oracle_isometry(
      s.prfs(), dk.bits(), qsim::uniform_superposition(3));
  EXPECT_NEAR(qsim::fidelity(s.qpk_gen(dk).single_state(), expected), 1.0,
              kExact);
}

TEST(PrfsScheme, ExactDecryptionErrorForOne) {
  for (int n : {2, 3, 4}) {
    const PrfsScheme s(prfs_cfg(4, n), 0, MixedPayload::kDensityMatrix);
    Rng rng(31);
    for (int t = 0; t < 10; ++t) {
      const auto dk = s.gen(rng);
      auto one = s.encrypt(s.qpk_gen(dk), Bits(1, 1), rng);
      EXPECT_NEAR(s.zero_probability(dk, one.ciphertext), std::ldexp(1.0, -n),
                  kExact);
      auto zero = s.encrypt(s.qpk_gen(dk), Bits(0, 1), rng);
      EXPECT_NEAR(s.zero_probability(dk, zero.ciphertext), 1.0, kExact);
      EXPECT_EQ(s.decrypt(dk, zero.ciphertext, rng), Bits(0, 1));
    }
  }
}

TEST(PrfsScheme, SampledPayloadMatchesMixedRate) {
  const int n = 4;
  const PrfsScheme s(prfs_cfg(4, n));
  Rng rng(37);
  const int trials = 10000;
  int correct = 0;
  for (int i = 0; i < trials; ++i) {
    const auto dk = s.gen(rng);
    auto r = s.encrypt(s.qpk_gen(dk), Bits(1, 1), rng);
    correct += s.decrypt(dk, r.ciphertext, rng) == Bits(1, 1) ? 1 : 0;
  }
  EXPECT_TRUE(testing::within_sigmas(correct / double(trials), 1.0 - 1.0 / 16,
                                     trials, 3.0));
}

TEST(PrfsScheme, SingleShot) {
  const PrfsScheme s(prfs_cfg(3, 2));
  Rng rng(41);
  const auto dk = s.gen(rng);
  auto r = s.encrypt(s.qpk_gen(dk), Bits(0, 1), rng);
  EXPECT_TRUE(r.recycled.consumed());
  EXPECT_FALSE(s.recycles_keys());
  for (int i = 0; i < 3; ++i) {
    EXPECT_THROW(s.encrypt(r.recycled, Bits(0, 1), rng), KeyConsumedError);
  }
  EXPECT_THROW(s.encrypt(s.qpk_gen(dk), Bits(0, 2), rng), MessageDomainError);
}

TEST(Schemes, WrongSchemeInputs) {
  const OwfScheme owf(cfg(3));
  const PrfsScheme prfs(prfs_cfg(3, 2));
  Rng rng(43);
  const auto dk = owf.gen(rng);
  EXPECT_THROW(owf.encrypt(prfs.qpk_gen(dk), Bits(0, 8), rng),
               MalformedCiphertextError);
  const auto ct = prfs.encrypt(prfs.qpk_gen(dk), Bits(0, 1), rng).ciphertext;
  EXPECT_THROW(owf.decrypt(dk, ct, rng), MalformedCiphertextError);
  EXPECT_THROW(owf.qpk_gen(DecryptionKey(Bits(0, 4))), WidthError);
}

TEST(Wire, KnownEncoding) {
  const Ciphertext ct = OwfCiphertext{
      Bits(10, 4), primitives::SkeCiphertext{Bits(3, 4), Bits(0xA5, 8)}};
  EXPECT_EQ(to_hex(serialize(ct, 4)), "010400040a0004030008a5");
  const Ciphertext pd =
      PrfspdCiphertext{primitives::SkeCiphertext{Bits(1, 2), Bits(0x1FF, 9)},
                       {PrfspdSlot{Bits(2, 2), Bits(5, 3)}}};
  EXPECT_EQ(to_hex(serialize(pd, 2)), "02020002010009ff010001000202000305");
}

TEST(Wire, RoundTripDecryptsBitExactly) {
  Rng rng(47);
  for (auto kind : {SchemeKind::kOwf, SchemeKind::kPrfspd}) {
    const auto s = make_scheme({kind, cfg(5), {}});
    for (int i = 0; i < 50; ++i) {
      const auto dk = s->gen(rng);
      const Bits m = rng.bits(8);
      const auto ct = s->encrypt(s->qpk_gen(dk), m, rng).ciphertext;
      const auto bytes = serialize(ct, 5);
      const auto back = deserialize(bytes);
      EXPECT_EQ(back.lambda, 5);
      EXPECT_EQ(back.ciphertext.index(), ct.index());
      EXPECT_EQ(serialize(back.ciphertext, 5), bytes);
      EXPECT_EQ(s->decrypt(dk, back.ciphertext, rng), s->decrypt(dk, ct, rng));
    }
  }
}

TEST(Wire, StrictParsing) {
  const Ciphertext ct = OwfCiphertext{
      Bits(10, 4), primitives::SkeCiphertext{Bits(3, 4), Bits(0xA5, 8)}};
  auto bytes = serialize(ct, 4);
  auto truncated = bytes;
  truncated.pop_back();
  EXPECT_THROW(deserialize(truncated), MalformedCiphertextError);
  auto trailing = bytes;
  trailing.push_back(0);
  EXPECT_THROW(deserialize(trailing), MalformedCiphertextError);
  auto badtag = bytes;
  badtag[0] = 0x7F;
  EXPECT_THROW(deserialize(badtag), MalformedCiphertextError);
  auto padding = bytes;
  padding[4] = 0x1A;  // x is 4 bits wide; bit 4 set
  EXPECT_THROW(deserialize(padding), MalformedCiphertextError);
  const std::vector<std::uint8_t> toolong = {0x01, 0x04, 0x00, 0x41};
  EXPECT_THROW(deserialize(toolong), MalformedCiphertextError);
  EXPECT_THROW(deserialize(std::vector<std::uint8_t>{}),
               MalformedCiphertextError);

  const PrfsScheme prfs(prfs_cfg(3, 2));
  Rng rng(53);
  const auto q = prfs.encrypt(prfs.qpk_gen(prfs.gen(rng)), Bits(0, 1), rng);
  EXPECT_FALSE(is_classical(q.ciphertext));
  EXPECT_THROW(serialize(q.ciphertext, 3), MalformedCiphertextError);
}

TEST(Factory, RandomModeDrawsFreshFunctions) {
  PrimitiveConfig c = cfg(4);
  c.function = primitives::FunctionMode::kRandomFunction;
  const auto f = scheme_factory({SchemeKind::kOwf, c, {}});
  Rng r1(1);
  Rng r2(2);
  const auto a = std::dynamic_pointer_cast<const OwfScheme>(f(r1));
  const auto b = std::dynamic_pointer_cast<const OwfScheme>(f(r2));
  ASSERT_TRUE(a && b);
  int same = 0;
  for (std::uint64_t x = 0; x < 16; ++x) {
    same += a->function()(Bits(0, 4), Bits(x, 4)) ==
                    b->function()(Bits(0, 4), Bits(x, 4))
                ? 1
                : 0;
  }
  EXPECT_LT(same, 16);

  const auto shared = scheme_factory({SchemeKind::kOwf, cfg(4), {}});
  EXPECT_EQ(shared(r1).get(), shared(r2).get());
}

}  // namespace
}  // namespace qpke::schemes
