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

#ifndef QPKE_GAMES_CLONING_HPP_
#define QPKE_GAMES_CLONING_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qpke/games/challenger.hpp"
#include "qpke/games/transcript.hpp"
#include "qpke/primitives/prfspd.hpp"

namespace qpke::games {

struct CloningBudget {
  int gen_queries = 16;
  int ver_queries = 16;
};

struct CloningOutput {
  Bits x;
  std::vector<primitives::PrfspdProof> proofs;
};

// Gen(k, .) and Ver(k, ., .) oracles with the challenger's per-input counters.
class CloningOracles {
 public:
  CloningOracles(const primitives::Prfspd& prfspd, Bits key,
                 CloningBudget budget, GameTranscript& t)
      : prfspd_(prfspd), key_(key), budget_(budget), t_(t) {}

  const primitives::Prfspd& prfspd() const { return prfspd_; }

  qsim::PureState gen(const Bits& x) {
    if (gen_calls_ >= budget_.gen_queries) {
      throw detail::Violation{"Gen query budget exceeded"};
    }
    ++gen_calls_;
    ++counters_[x];
    t_.add(0, 0, "query", "adversary", "gen", hex_bits(x));
    return prfspd_.gen(key_, x);
  }

  bool ver(const Bits& x, const primitives::PrfspdProof& p) {
    if (ver_calls_ >= budget_.ver_queries) {
      throw detail::Violation{"Ver query budget exceeded"};
    }
    ++ver_calls_;
    const bool ok = prfspd_.ver(key_, x, p);
    t_.add(0, 0, "query", "adversary", "ver", hex_bits(x) + hex_bits(p.bits()));
    t_.add(0, 0, "query", "challenger", "ver-result", hex_bit(ok));
    return ok;
  }

  // t_x, zero for inputs never queried.
  int count(const Bits& x) const {
    auto it = counters_.find(x);
    return it == counters_.end() ? 0 : it->second;
  }

 private:
  const primitives::Prfspd& prfspd_;
  Bits key_;
  CloningBudget budget_;
  GameTranscript& t_;
  std::map<Bits, int> counters_;
  int gen_calls_ = 0;
  int ver_calls_ = 0;
};

class CloningAdversary {
 public:
  virtual ~CloningAdversary() = default;
  virtual std::string name() const = 0;
  virtual CloningOutput play(CloningOracles& oracles, Rng& rng) = 0;
};

using CloningAdversaryFactory =
    std::function<std::unique_ptr<CloningAdversary>()>;

// The cloning game: the adversary wins when it hands in t_x + 1 distinct
// proofs for one input x and all of them verify.
inline GameTranscript run_prfspd_cloning(const primitives::Prfspd& prfspd,
                                         CloningAdversary& adv, Rng& rng,
                                         const CloningBudget& budget = {}) {
  GameTranscript t;
  t.game = GameKind::kCloning;
  t.scheme = prfspd.name();
  t.adversary = adv.name();
  t.lambda = prfspd.params().key_width;
  t.seed = rng.seed();
  try {
    const Bits key = rng.bits(prfspd.params().key_width);
    t.dk = key;
    t.add(0, 0, "setup", "challenger", "key", hex_bits(key));
    CloningOracles oracles(prfspd, key, budget, t);
    Rng adv_rng = rng.split(1);
    const CloningOutput out =
        detail::adversary_call([&] { return adv.play(oracles, adv_rng); });
    std::string payload = hex_bits(out.x);
    for (const auto& p : out.proofs) payload += hex_bits(p.bits());
    t.add(0, 0, "output", "adversary", "proofs", payload);

    const std::size_t need = static_cast<std::size_t>(oracles.count(out.x)) + 1;
    if (out.proofs.size() != need) {
      throw detail::Violation{"expected t_x + 1 = " + std::to_string(need) +
                              " proofs"};
    }
    auto sorted = out.proofs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      t.add(0, 0, "verify", "challenger", "reject-duplicate", "");
      t.win = false;
      return t;
    }
    bool all = true;
    for (const auto& p : out.proofs) {
      if (p.bits().width() != prfspd.params().proof_width() ||
          out.x.width() != prfspd.params().input_width) {
        throw detail::Violation{"proof or input has the wrong width"};
      }
      const bool ok = prfspd.ver(key, out.x, p);
      t.add(0, 0, "verify", "challenger", "ver-result", hex_bit(ok));
      all = all && ok;
    }
    t.win = all;
  } catch (const detail::Violation& v) {
    t.invalidate(v.what);
  }
  return t;
}

}  // namespace qpke::games

#endif  // QPKE_GAMES_CLONING_HPP_
