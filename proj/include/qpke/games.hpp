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

#ifndef QPKE_GAMES_HPP_
#define QPKE_GAMES_HPP_

// Security games, built-in adversaries and the advantage estimator.

#include "qpke/games/adversaries.hpp"
#include "qpke/games/adversary.hpp"
#include "qpke/games/challenger.hpp"
#include "qpke/games/cloning.hpp"
#include "qpke/games/estimator.hpp"
#include "qpke/games/mutations.hpp"
#include "qpke/games/transcript.hpp"

#endif  // QPKE_GAMES_HPP_
