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

#ifndef QPKE_PRIMITIVES_HPP_
#define QPKE_PRIMITIVES_HPP_

// Toy PRF, symmetric encryption, PRFS and PRFSPD instantiations.

#include "qpke/primitives/config.hpp"
#include "qpke/primitives/prf.hpp"
#include "qpke/primitives/prfs.hpp"
#include "qpke/primitives/prfspd.hpp"
#include "qpke/primitives/ske.hpp"

#endif  // QPKE_PRIMITIVES_HPP_
