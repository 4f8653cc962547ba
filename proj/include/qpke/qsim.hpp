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

#ifndef QPKE_QSIM_HPP_
#define QPKE_QSIM_HPP_

// Dense pure-state / density-matrix simulator.

#include "qpke/qsim/density.hpp"
#include "qpke/qsim/dump.hpp"
#include "qpke/qsim/metrics.hpp"
#include "qpke/qsim/ops.hpp"
#include "qpke/qsim/state.hpp"

#endif  // QPKE_QSIM_HPP_
