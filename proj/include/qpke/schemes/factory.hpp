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

#ifndef QPKE_SCHEMES_FACTORY_HPP_
#define QPKE_SCHEMES_FACTORY_HPP_

#include <functional>
#include <memory>

#include "qpke/rng.hpp"
#include "qpke/schemes/owf_scheme.hpp"
#include "qpke/schemes/prfs_scheme.hpp"
#include "qpke/schemes/prfspd_scheme.hpp"

namespace qpke::schemes {

struct SchemeConfig {
  SchemeKind kind = SchemeKind::kOwf;
  primitives::PrimitiveConfig primitives;
  MixedPayload mixed = MixedPayload::kSampledBasisState;
};

inline std::shared_ptr<const Scheme> make_scheme(
    const SchemeConfig& c, std::uint64_t function_seed = 0) {
  switch (c.kind) {
    case SchemeKind::kOwf:
      return std::make_shared<OwfScheme>(c.primitives, function_seed);
    case SchemeKind::kPrfspd:
      return std::make_shared<PrfspdScheme>(c.primitives, function_seed);
    case SchemeKind::kPrfs:
      return std::make_shared<PrfsScheme>(c.primitives, function_seed, c.mixed);
  }
  throw ConfigError("unknown scheme");
}

// Produces the scheme instance for one game run. With counter PRFs every run
// shares one instance; in random-function mode each run gets a freshly
// sampled function seeded from the run's generator.
using SchemeFactory = std::function<std::shared_ptr<const Scheme>(Rng&)>;

inline SchemeFactory scheme_factory(const SchemeConfig& c) {
  if (c.primitives.function == primitives::FunctionMode::kRandomFunction) {
    return [c](Rng& rng) { return make_scheme(c, rng.next()); };
  }
  auto shared = make_scheme(c);
  return [shared](Rng&) { return shared; };
}

}  // namespace qpke::schemes

#endif  // QPKE_SCHEMES_FACTORY_HPP_
