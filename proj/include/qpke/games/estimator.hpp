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

#ifndef QPKE_GAMES_ESTIMATOR_HPP_
#define QPKE_GAMES_ESTIMATOR_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

#include "qpke/errors.hpp"
#include "qpke/games/adversaries.hpp"
#include "qpke/games/challenger.hpp"
#include "qpke/games/cloning.hpp"
#include "qpke/rng.hpp"
#include "qpke/schemes.hpp"

namespace qpke::games {

// Win fraction with a Wald interval p +- z sqrt(p (1 - p) / N), clipped to
// [0, 1].
struct AdvantageEstimate {
  std::int64_t trials = 0;
  std::int64_t wins = 0;
  std::int64_t invalid = 0;
  double z = 1.96;
  double estimate = 0.0;
  double std_error = 0.0;
  double lower = 0.0;
  double upper = 0.0;

  // 2 p - 1, the distinguishing advantage; its standard error is 2 std_error.
  double advantage() const { return 2.0 * estimate - 1.0; }

  bool contains(double p) const { return lower <= p && p <= upper; }
};

inline AdvantageEstimate make_estimate(std::int64_t trials, std::int64_t wins,
                                       std::int64_t invalid = 0,
                                       double z = 1.96) {
  if (trials <= 0) throw RangeError("an estimate needs at least one trial");
  AdvantageEstimate e;
  e.trials = trials;
  e.wins = wins;
  e.invalid = invalid;
  e.z = z;
  e.estimate = static_cast<double>(wins) / static_cast<double>(trials);
  e.std_error =
      std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(trials));
  e.lower = std::max(0.0, e.estimate - z * e.std_error);
  e.upper = std::min(1.0, e.estimate + z * e.std_error);
  return e;
}

struct EstimatorOptions {
  double z = 1.96;
  int threads = 0;  // 0: hardware concurrency
  bool keep_transcripts = false;
  std::int64_t min_trials = 100;
};

struct EstimateResult {
  AdvantageEstimate estimate;
  std::vector<GameTranscript> transcripts;  // by trial index, when kept
};

// Plays one trial from its seed.
using TrialRunner = std::function<GameTranscript(std::uint64_t seed)>;

// Trial i runs with seed Rng(master_seed).split(i).seed(), so results do not
// depend on the thread count or scheduling.
inline EstimateResult estimate_advantage(const TrialRunner& run,
                                         std::int64_t trials,
                                         std::uint64_t master_seed,
                                         const EstimatorOptions& opt = {}) {
  if (trials < opt.min_trials) {
    throw RangeError("at least " + std::to_string(opt.min_trials) +
                     " trials are required");
  }
  const Rng master(master_seed);
  std::vector<std::uint8_t> win(static_cast<std::size_t>(trials), 0);
  std::vector<std::uint8_t> bad(static_cast<std::size_t>(trials), 0);
  std::vector<GameTranscript> kept;
  if (opt.keep_transcripts) kept.resize(static_cast<std::size_t>(trials));

  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= trials) return;
      try {
        GameTranscript t =
            run(master.split(static_cast<std::uint64_t>(i)).seed());
        const auto k = static_cast<std::size_t>(i);
        win[k] = t.win ? 1 : 0;
        bad[k] = t.valid ? 0 : 1;
        if (opt.keep_transcripts) kept[k] = std::move(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(trials);
        return;
      }
    }
  };

  int threads = opt.threads > 0
                    ? opt.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = static_cast<int>(
      std::clamp<std::int64_t>(threads, 1, std::max<std::int64_t>(1, trials)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::int64_t wins = 0;
  std::int64_t invalid = 0;
  for (std::size_t i = 0; i < win.size(); ++i) {
    wins += win[i];
    invalid += bad[i];
  }
  return {make_estimate(trials, wins, invalid, opt.z), std::move(kept)};
}

// A complete IND-CPA style game: which game, which scheme (possibly a fresh
// instance per trial) and which adversary.
struct GameSetup {
  GameKind game = GameKind::kCpa;
  schemes::SchemeFactory scheme;
  AdversaryFactory adversary;
  Budget budget;
};

// Trial layout: the scheme factory draws from split(2), the challenger from
// split(0) (the adversary from split(0).split(1)).
inline GameTranscript run_game(const GameSetup& setup, std::uint64_t seed) {
  const Rng trial(seed);
  Rng scheme_rng = trial.split(2);
  const auto scheme = setup.scheme(scheme_rng);
  auto adv = setup.adversary();
  Rng rng = trial.split(0);
  GameTranscript t;
  switch (setup.game) {
    case GameKind::kCpa:
      t = run_ind_cpa(*scheme, *adv, rng, setup.budget);
      break;
    case GameKind::kCpaEo:
      t = run_ind_cpa_eo(*scheme, *adv, rng, false, setup.budget);
      break;
    case GameKind::kCpaEoMulti:
      t = run_ind_cpa_eo(*scheme, *adv, rng, true, setup.budget);
      break;
    case GameKind::kCloning:
      throw CapabilityError("the cloning game takes a PRFSPD, not a scheme");
  }
  t.seed = seed;
  return t;
}

inline EstimateResult estimate_advantage(const GameSetup& setup,
                                         std::int64_t trials,
                                         std::uint64_t master_seed,
                                         const EstimatorOptions& opt = {}) {
  if (setup.game != GameKind::kCpa) {
    Rng probe(master_seed);
    if (!setup.scheme(probe)->recycles_keys()) {
      throw CapabilityError("encryption-oracle games need recycled keys");
    }
  }
  return estimate_advantage(
      [&setup](std::uint64_t seed) { return run_game(setup, seed); }, trials,
      master_seed, opt);
}

struct CloningSetup {
  std::shared_ptr<const primitives::Prfspd> prfspd;
  CloningAdversaryFactory adversary;
  CloningBudget budget;
};

inline GameTranscript run_cloning(const CloningSetup& setup,
                                  std::uint64_t seed) {
  Rng rng = Rng(seed).split(0);
  auto adv = setup.adversary();
  GameTranscript t = run_prfspd_cloning(*setup.prfspd, *adv, rng, setup.budget);
  t.seed = seed;
  return t;
}

inline EstimateResult estimate_advantage(const CloningSetup& setup,
                                         std::int64_t trials,
                                         std::uint64_t master_seed,
                                         const EstimatorOptions& opt = {}) {
  return estimate_advantage(
      [&setup](std::uint64_t seed) { return run_cloning(setup, seed); }, trials,
      master_seed, opt);
}

}  // namespace qpke::games

#endif  // QPKE_GAMES_ESTIMATOR_HPP_
