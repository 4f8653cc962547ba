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

#ifndef QPKE_GAMES_MUTATIONS_HPP_
#define QPKE_GAMES_MUTATIONS_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qpke/games/estimator.hpp"
#include "qpke/schemes.hpp"

namespace qpke::games {

// A deliberately broken primitive together with the attack that exploits it.
struct MutationCase {
  primitives::Mutation mutation = primitives::Mutation::kNone;
  schemes::SchemeKind scheme = schemes::SchemeKind::kOwf;
  GameKind game = GameKind::kCpa;
  std::string adversary;
};

inline const std::vector<MutationCase>& mutation_cases() {
  using primitives::Mutation;
  using schemes::SchemeKind;
  static const std::vector<MutationCase> cases = {
      {Mutation::kSkeFixedNonce, SchemeKind::kOwf, GameKind::kCpaEo,
       "pad-reuse"},
      {Mutation::kPrfKeyIndependent, SchemeKind::kOwf, GameKind::kCpa,
       "public-prf"},
      {Mutation::kPrfspdKeyIndependent, SchemeKind::kPrfspd, GameKind::kCpa,
       "public-ver"},
      {Mutation::kPrfsConstant, SchemeKind::kPrfs, GameKind::kCpa,
       "state-projector"},
      {Mutation::kCollapsedPublicKey, SchemeKind::kOwf, GameKind::kCpa,
       "copy-and-measure"},
  };
  return cases;
}

struct MutationResult {
  MutationCase c;
  int lambda = 0;
  AdvantageEstimate broken;
  AdvantageEstimate honest;
  double honest_limit = 0.0;  // 0.5 + 5 * 2^{-lambda/2} + 3 sigma

  bool detected() const { return broken.estimate >= 0.9; }
  bool honest_ok() const { return honest.estimate <= honest_limit; }
  bool passed() const { return detected() && honest_ok(); }
};

inline GameSetup mutation_setup(const MutationCase& c,
                                const primitives::PrimitiveConfig& base,
                                bool broken) {
  schemes::SchemeConfig sc;
  sc.kind = c.scheme;
  sc.primitives = base;
  sc.primitives.mutation = broken ? c.mutation : primitives::Mutation::kNone;
  return {c.game, schemes::scheme_factory(sc), make_adversary(c.adversary), {}};
}

// Plays every case against its broken scheme and against the honest one.
// `base` supplies the widths; its mutation field is ignored.
inline std::vector<MutationResult> run_mutation_suite(
    const primitives::PrimitiveConfig& base, std::int64_t trials,
    std::uint64_t seed, const EstimatorOptions& opt = {}) {
  std::vector<MutationResult> out;
  for (const auto& c : mutation_cases()) {
    MutationResult r;
    r.c = c;
    r.lambda = base.lambda;
    r.broken =
        estimate_advantage(mutation_setup(c, base, true), trials, seed, opt)
            .estimate;
    r.honest =
        estimate_advantage(mutation_setup(c, base, false), trials, seed, opt)
            .estimate;
    const double sigma = std::sqrt(0.25 / static_cast<double>(trials));
    r.honest_limit =
        0.5 + 5.0 * std::pow(2.0, -base.lambda / 2.0) + 3.0 * sigma;
    out.push_back(r);
  }
  return out;
}

}  // namespace qpke::games

#endif  // QPKE_GAMES_MUTATIONS_HPP_
